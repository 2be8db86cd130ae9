#include "wdrange/series.hpp"

#include <cmath>

namespace wdr {

PowerSeries::PowerSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("PowerSeries: needs at least the constant term");
    for (const cplx& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("PowerSeries: coefficients must be finite");
}

PowerSeries PowerSeries::zero(int order) {
    return PowerSeries(std::vector<cplx>(static_cast<size_t>(order) + 1, cplx(0.0)));
}

PowerSeries PowerSeries::one(int order) {
    std::vector<cplx> c(static_cast<size_t>(order) + 1, cplx(0.0));
    c[0] = 1.0;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::monomial(int degree, int order, cplx scale) {
    if (degree < 0)
        throw std::invalid_argument("PowerSeries::monomial: negative degree");
    std::vector<cplx> c(static_cast<size_t>(order) + 1, cplx(0.0));
    if (degree <= order)
        c[static_cast<size_t>(degree)] = scale;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::truncated(int order) const {
    std::vector<cplx> c(static_cast<size_t>(order) + 1, cplx(0.0));
    const int keep = std::min(order, this->order());
    for (int n = 0; n <= keep; ++n)
        c[static_cast<size_t>(n)] = coeffs_[static_cast<size_t>(n)];
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::scaled(cplx factor) const {
    std::vector<cplx> c(coeffs_);
    for (cplx& x : c)
        x *= factor;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::mul(const PowerSeries& g, int trunc_order) const {
    std::vector<cplx> c(static_cast<size_t>(trunc_order) + 1, cplx(0.0));
    const int nf = std::min(order(), trunc_order);
    for (int j = 0; j <= nf; ++j) {
        const cplx fj = coeffs_[static_cast<size_t>(j)];
        if (fj == cplx(0.0))
            continue;
        const int ng = std::min(g.order(), trunc_order - j);
        for (int k = 0; k <= ng; ++k)
            c[static_cast<size_t>(j + k)] += fj * g.coeffs_[static_cast<size_t>(k)];
    }
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::pow(int r, int trunc_order) const {
    if (r < 0)
        throw std::invalid_argument("PowerSeries::pow: negative exponent");
    PowerSeries result = PowerSeries::one(trunc_order);
    if (r == 0)
        return result;
    PowerSeries base = truncated(trunc_order);
    int e = r;
    while (e > 0) {
        if (e & 1)
            result = result.mul(base, trunc_order);
        e >>= 1;
        if (e > 0)
            base = base.mul(base, trunc_order);
    }
    return result;
}

cplx PowerSeries::eval(cplx z) const {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("PowerSeries::eval: |z| must be < 1");
    cplx acc = 0.0;
    for (int n = order(); n >= 0; --n)
        acc = acc * z + coeffs_[static_cast<size_t>(n)];
    return acc;
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    const int order = std::max(f.order(), g.order());
    std::vector<cplx> c(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
        c[static_cast<size_t>(n)] = f.coeff(n) + g.coeff(n);
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
    return f.mul(g, f.order() + g.order());
}

PowerSeries mobius_series(cplx gamma, cplx alpha, int order) {
    if (!(std::abs(gamma) < 1.0))
        throw std::domain_error("mobius_series: |gamma| must be < 1");
    if (std::abs(std::abs(alpha) - 1.0) > 1e-12)
        throw std::domain_error("mobius_series: |alpha| must be 1");
    std::vector<cplx> c(static_cast<size_t>(order) + 1, cplx(0.0));
    c[0] = -alpha * gamma;
    const cplx gbar = std::conj(gamma);
    const double head = 1.0 - std::norm(gamma);
    cplx gpow = 1.0;
    for (int n = 1; n <= order; ++n) {
        c[static_cast<size_t>(n)] = alpha * gpow * head;
        gpow *= gbar;
    }
    return PowerSeries(std::move(c));
}

PowerSeries kernel_series(cplx gamma, SpaceParam s, int order, bool normalized) {
    if (!(std::abs(gamma) < 1.0))
        throw std::domain_error("kernel_series: |gamma| must be < 1");
    std::vector<cplx> c(static_cast<size_t>(order) + 1);
    const double scale = normalized ? std::pow(1.0 - std::norm(gamma), s.s() / 2.0) : 1.0;
    const cplx gbar = std::conj(gamma);
    cplx gpow = 1.0;
    for (int n = 0; n <= order; ++n) {
        c[static_cast<size_t>(n)] = scale * gpow * std::exp(-log_monomial_norm_sq(n, s));
        gpow *= gbar;
    }
    return PowerSeries(std::move(c));
}

} // namespace wdr
