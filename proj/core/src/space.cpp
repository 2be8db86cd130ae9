#include "wdrange/space.hpp"

#include <cmath>

namespace wdr {

cplx inner_product(const SpaceElement& f, const SpaceElement& g) {
    if (f.space.s() != g.space.s())
        throw std::invalid_argument("inner_product: mismatched space parameter s");
    const int n_max = std::min(f.series.order(), g.series.order());
    cplx acc = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        const cplx a = f.series.coeff(n);
        const cplx b = g.series.coeff(n);
        if (a == cplx(0.0) || b == cplx(0.0))
            continue;
        acc += monomial_norm_sq(n, f.space) * a * std::conj(b);
    }
    return acc;
}

double norm(const SpaceElement& f) {
    return std::sqrt(std::max(0.0, inner_product(f, f).real()));
}

SpaceElement basis_element(int n, SpaceParam s, int order) {
    if (n > order)
        throw std::invalid_argument("basis_element: n exceeds truncation order");
    const double scale = std::exp(-0.5 * log_monomial_norm_sq(n, s));
    return SpaceElement{PowerSeries::monomial(n, order, scale), s};
}

cplx reproduce(const SpaceElement& f, cplx gamma) {
    if (!(std::abs(gamma) < 1.0))
        throw std::domain_error("reproduce: |gamma| must be < 1");
    const SpaceElement kernel{kernel_series(gamma, f.space, f.series.order()), f.space};
    return inner_product(f, kernel);
}

double kernel_tail_bound(double gamma_abs, double z_abs, SpaceParam s, int order) {
    const double q = gamma_abs * z_abs;
    if (!(q < 1.0))
        throw std::domain_error("kernel_tail_bound: |gamma z| must be < 1");
    const double w_next = monomial_norm_sq(order + 1, s);
    return std::pow(q, order + 1) / ((1.0 - q) * w_next) * (order + 2);
}

} // namespace wdr
