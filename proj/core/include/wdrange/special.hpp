#pragma once

#include <complex>
#include <stdexcept>

namespace wdr {

using cplx = std::complex<double>;

/// Weight exponent s of the space D_s. Validated once at construction;
/// everything downstream trusts it.
class SpaceParam {
public:
    explicit SpaceParam(double s) : s_(s) {
        if (!(s > 0.0 && s < 1.0))
            throw std::domain_error("SpaceParam: s must lie in (0,1)");
    }

    // Bypasses the (0,1) check. Only for test oracles (s=1 Hardy sanity checks).
    static SpaceParam unchecked(double s) { return SpaceParam(s, 0); }

    double s() const { return s_; }

private:
    SpaceParam(double s, int) : s_(s) {}
    double s_;
};

// ln Gamma(x) for x > 0, Lanczos approximation with fixed coefficients.
// |error| <= 1e-13 * max(1, |ln Gamma(x)|) on (0, 200].
double log_gamma(double x);

// ln w_n where w_n = Gamma(n+1)Gamma(s)/Gamma(n+s) = <z^n, z^n>_{D_s}.
double log_monomial_norm_sq(int n, SpaceParam s);

// w_n itself, evaluated in log-space.
double monomial_norm_sq(int n, SpaceParam s);

// Principal branch z^s for Re z > 0 and s in (0,1]; arg of the result
// stays in (-pi/2, pi/2).
cplx principal_power(cplx z, double s);

} // namespace wdr
