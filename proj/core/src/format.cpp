#include "wdrange/format.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace wdr {

std::string format_double(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

std::string format_complex(cplx z, int digits) {
    if (z.imag() == 0.0)
        return format_double(z.real(), digits);
    if (z.real() == 0.0)
        return format_double(z.imag(), digits) + "i";
    std::string out = format_double(z.real(), digits);
    if (z.imag() > 0.0)
        out += "+";
    out += format_double(z.imag(), digits) + "i";
    return out;
}

cplx parse_complex(const std::string& text) {
    const char* p = text.c_str();
    char* end = nullptr;

    auto fail = [&]() -> cplx {
        throw std::invalid_argument("parse_complex: cannot parse '" + text + "'");
    };

    while (*p == ' ')
        ++p;
    if (*p == '\0')
        fail();

    // leading "i" / "+i" / "-i"
    auto bare_imag_unit = [](const char* q, double& sign) -> const char* {
        sign = 1.0;
        if (*q == '+')
            ++q;
        else if (*q == '-') {
            sign = -1.0;
            ++q;
        }
        return (*q == 'i') ? q + 1 : nullptr;
    };

    double sign;
    if (const char* q = bare_imag_unit(p, sign)) {
        if (*q == '\0')
            return cplx(0.0, sign);
    }

    const double first = std::strtod(p, &end);
    if (end == p)
        fail();
    p = end;
    if (*p == 'i') {
        ++p;
        if (*p != '\0')
            fail();
        return cplx(0.0, first);
    }
    if (*p == '\0')
        return cplx(first, 0.0);

    // second component: "+bi", "-bi", "+i", "-i"
    if (const char* q = bare_imag_unit(p, sign)) {
        if (*q == '\0')
            return cplx(first, sign);
    }
    const double second = std::strtod(p, &end);
    if (end == p || *end != 'i' || *(end + 1) != '\0')
        fail();
    return cplx(first, second);
}

} // namespace wdr
