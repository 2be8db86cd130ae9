#pragma once

#include "wdrange/special.hpp"

#include <string>

namespace wdr {

// %.*g with enough digits to round-trip when digits >= 17.
std::string format_double(double x, int digits = 17);

// "a", "bi", or "a+bi"/"a-bi"; exact zeros of either part are dropped.
std::string format_complex(cplx z, int digits = 17);

// Inverse of format_complex; also accepts plain reals and "i"/"-i".
cplx parse_complex(const std::string& text);

} // namespace wdr
