#pragma once

#include "wdrange/series.hpp"

namespace wdr {

/// An element of D_s: a truncated series together with the space it lives in.
struct SpaceElement {
    PowerSeries series;
    SpaceParam space;
};

// <f,g> = sum w_n a_n conj(b_n); requires matching s.
cplx inner_product(const SpaceElement& f, const SpaceElement& g);

double norm(const SpaceElement& f);

// e_n = z^n / sqrt(w_n), represented at truncation `order`; requires n <= order.
SpaceElement basis_element(int n, SpaceParam s, int order);

// <f, k_gamma> with the kernel truncated at f's order. Exact f(gamma) for
// polynomials; within kernel_tail_bound of it for truncated kernels.
cplx reproduce(const SpaceElement& f, cplx gamma);

// Bound on sum_{n>order} |gamma z|^n / w_n:
// |gamma z|^{order+1} / ((1-|gamma z|) w_{order+1}) * (order+2).
double kernel_tail_bound(double gamma_abs, double z_abs, SpaceParam s, int order);

} // namespace wdr
