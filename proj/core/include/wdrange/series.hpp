#pragma once

#include "wdrange/special.hpp"

#include <span>
#include <vector>

namespace wdr {

/// Truncated power series about 0: coefficients c_0..c_N, immutable after
/// construction. All symbols and space elements are represented this way.
class PowerSeries {
public:
    explicit PowerSeries(std::vector<cplx> coeffs);

    static PowerSeries zero(int order);
    static PowerSeries one(int order);
    // scale * z^degree, truncated at `order`.
    static PowerSeries monomial(int degree, int order, cplx scale = 1.0);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    cplx coeff(int n) const {
        return (n >= 0 && n <= order()) ? coeffs_[static_cast<size_t>(n)] : cplx(0.0);
    }
    std::span<const cplx> coeffs() const { return coeffs_; }

    // Pad with zeros or drop high-degree terms.
    PowerSeries truncated(int order) const;

    PowerSeries scaled(cplx factor) const;

    // Cauchy product, keeping degrees <= trunc_order.
    PowerSeries mul(const PowerSeries& g, int trunc_order) const;

    // f^r truncated at trunc_order, by repeated squaring; f^0 = 1.
    PowerSeries pow(int r, int trunc_order) const;

    // Horner evaluation; requires |z| < 1.
    cplx eval(cplx z) const;

private:
    std::vector<cplx> coeffs_;
};

// Coefficientwise sum; shorter operand is zero-padded.
PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
// Exact Cauchy product (order = sum of orders).
PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);

// Taylor coefficients of the disc automorphism alpha (z-gamma)/(1-conj(gamma) z):
// c_0 = -alpha gamma, c_n = alpha conj(gamma)^{n-1}(1-|gamma|^2) for n >= 1.
PowerSeries mobius_series(cplx gamma, cplx alpha, int order);

// Taylor coefficients of (1 - conj(gamma) z)^{-s}: c_n = conj(gamma)^n / w_n,
// scaled by (1-|gamma|^2)^{s/2} when normalized.
PowerSeries kernel_series(cplx gamma, SpaceParam s, int order, bool normalized = false);

} // namespace wdr
