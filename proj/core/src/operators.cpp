#include "wdrange/operators.hpp"

#include "wdrange/format.hpp"
#include "wdrange/parallel.hpp"

#include <cmath>

namespace wdr {

PhiSymbol PhiSymbol::identity() { return PhiSymbol(Identity{}); }

PhiSymbol PhiSymbol::constant(cplx v) {
    if (!(std::abs(v) < 1.0))
        throw std::domain_error("PhiSymbol::constant: |v| must be < 1");
    return PhiSymbol(Constant{v});
}

PhiSymbol PhiSymbol::dilation(cplx lambda) {
    if (!(std::abs(lambda) <= 1.0 + 1e-12))
        throw std::domain_error("PhiSymbol::dilation: |lambda| must be <= 1");
    return PhiSymbol(Dilation{lambda});
}

PhiSymbol PhiSymbol::mobius(cplx gamma, cplx alpha) {
    if (!(std::abs(gamma) < 1.0))
        throw std::domain_error("PhiSymbol::mobius: |gamma| must be < 1");
    if (std::abs(std::abs(alpha) - 1.0) > 1e-12)
        throw std::domain_error("PhiSymbol::mobius: |alpha| must be 1");
    return PhiSymbol(Mobius{gamma, alpha});
}

PhiSymbol PhiSymbol::general(PowerSeries ps, bool attested_self_map) {
    if (!attested_self_map)
        throw std::invalid_argument(
            "PhiSymbol::general: caller must attest the self-map property");
    return PhiSymbol(General{std::move(ps)});
}

PowerSeries PhiSymbol::series(int order) const {
    return std::visit(
        [&](const auto& f) -> PowerSeries {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Identity>)
                return PowerSeries::monomial(1, order);
            else if constexpr (std::is_same_v<T, Constant>)
                return PowerSeries::monomial(0, order, f.v);
            else if constexpr (std::is_same_v<T, Dilation>)
                return PowerSeries::monomial(1, order, f.lambda);
            else if constexpr (std::is_same_v<T, Mobius>)
                return mobius_series(f.gamma, f.alpha, order);
            else
                return f.ps.truncated(order);
        },
        form_);
}

cplx PhiSymbol::eval(cplx z) const {
    return std::visit(
        [&](const auto& f) -> cplx {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Identity>)
                return z;
            else if constexpr (std::is_same_v<T, Constant>)
                return f.v;
            else if constexpr (std::is_same_v<T, Dilation>)
                return f.lambda * z;
            else if constexpr (std::is_same_v<T, Mobius>)
                return f.alpha * (z - f.gamma) / (1.0 - std::conj(f.gamma) * z);
            else
                return f.ps.eval(z);
        },
        form_);
}

bool PhiSymbol::is_identity() const { return std::holds_alternative<Identity>(form_); }
bool PhiSymbol::is_general() const { return std::holds_alternative<General>(form_); }

std::string PhiSymbol::describe() const {
    return std::visit(
        [&](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Identity>)
                return "identity";
            else if constexpr (std::is_same_v<T, Constant>)
                return "constant " + format_complex(f.v);
            else if constexpr (std::is_same_v<T, Dilation>)
                return "dilation " + format_complex(f.lambda);
            else if constexpr (std::is_same_v<T, Mobius>)
                return "mobius gamma=" + format_complex(f.gamma) +
                       " alpha=" + format_complex(f.alpha);
            else {
                std::string out = "series ";
                for (int n = 0; n <= f.ps.order(); ++n) {
                    if (n)
                        out += ",";
                    out += format_complex(f.ps.coeff(n));
                }
                return out;
            }
        },
        form_);
}

PsiSymbol PsiSymbol::one() { return PsiSymbol(One{}); }

PsiSymbol PsiSymbol::general(PowerSeries ps) { return PsiSymbol(General{std::move(ps)}); }

PsiSymbol PsiSymbol::normalized_kernel(cplx gamma) {
    if (!(std::abs(gamma) < 1.0))
        throw std::domain_error("PsiSymbol::normalized_kernel: |gamma| must be < 1");
    return PsiSymbol(Kernel{gamma});
}

PowerSeries PsiSymbol::series(int order, SpaceParam s) const {
    return std::visit(
        [&](const auto& f) -> PowerSeries {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, One>)
                return PowerSeries::one(order);
            else if constexpr (std::is_same_v<T, General>)
                return f.ps.truncated(order);
            else
                return kernel_series(f.gamma, s, order, /*normalized=*/true);
        },
        form_);
}

cplx PsiSymbol::eval(cplx z, SpaceParam s) const {
    return std::visit(
        [&](const auto& f) -> cplx {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, One>)
                return cplx(1.0);
            else if constexpr (std::is_same_v<T, General>)
                return f.ps.eval(z);
            else {
                const double head = std::pow(1.0 - std::norm(f.gamma), s.s() / 2.0);
                return head / principal_power(1.0 - std::conj(f.gamma) * z, s.s());
            }
        },
        form_);
}

std::string PsiSymbol::describe() const {
    return std::visit(
        [&](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, One>)
                return "one";
            else if constexpr (std::is_same_v<T, Kernel>)
                return "kernel gamma=" + format_complex(f.gamma);
            else {
                std::string out = "series ";
                for (int n = 0; n <= f.ps.order(); ++n) {
                    if (n)
                        out += ",";
                    out += format_complex(f.ps.coeff(n));
                }
                return out;
            }
        },
        form_);
}

OperatorMatrix build_matrix(const OperatorSpec& spec) {
    const int n = spec.order;
    const PowerSeries phi = spec.phi.series(n);
    const PowerSeries psi = spec.psi.series(n, spec.space);

    std::vector<double> log_w(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m)
        log_w[static_cast<size_t>(m)] = log_monomial_norm_sq(m, spec.space);

    CMatrix a(n + 1, n + 1);
    parallel_for(n + 1, [&](int r) {
        const PowerSeries col = psi.mul(phi.pow(r, n), n);
        for (int m = 0; m <= n; ++m) {
            const cplx c = col.coeff(m);
            if (c == cplx(0.0))
                continue;
            a(m, r) = c * std::exp(0.5 * (log_w[static_cast<size_t>(m)] -
                                          log_w[static_cast<size_t>(r)]));
        }
    });
    return OperatorMatrix{std::move(a), spec.space, n, spec.psi.describe(),
                          spec.phi.describe()};
}

SpaceElement adjoint_kernel_action(const OperatorSpec& spec, cplx z) {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("adjoint_kernel_action: |z| must be < 1");
    const cplx w = spec.phi.eval(z);
    if (!(std::abs(w) < 1.0))
        throw std::domain_error("adjoint_kernel_action: phi(z) left the disc");
    const cplx weight = std::conj(spec.psi.eval(z, spec.space));
    return SpaceElement{kernel_series(w, spec.space, spec.order).scaled(weight),
                        spec.space};
}

OperatorSpec weyl_operator(cplx gamma, cplx alpha, SpaceParam s, int order) {
    return OperatorSpec{PsiSymbol::normalized_kernel(gamma),
                        PhiSymbol::mobius(gamma, alpha), s, order};
}

OperatorMatrix xgamma_operator(cplx gamma, SpaceParam s, int order) {
    OperatorMatrix plus = build_matrix(weyl_operator(gamma, 1.0, s, order));
    const OperatorMatrix minus = build_matrix(weyl_operator(-gamma, 1.0, s, order));
    plus.entries = plus.entries + minus.entries;
    plus.psi_desc = "xgamma gamma=" + format_complex(gamma);
    plus.phi_desc = "xgamma";
    return plus;
}

CMatrix compression(const OperatorMatrix& matrix, std::span<const int> indices) {
    const int k = static_cast<int>(indices.size());
    for (int i = 0; i < k; ++i) {
        if (indices[i] < 0 || indices[i] > matrix.order)
            throw std::out_of_range("compression: index out of range");
        for (int j = i + 1; j < k; ++j)
            if (indices[i] == indices[j])
                throw std::invalid_argument("compression: indices must be distinct");
    }
    CMatrix sub(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub(i, j) = matrix.entries(indices[i], indices[j]);
    return sub;
}

} // namespace wdr
