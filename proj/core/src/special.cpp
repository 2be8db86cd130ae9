#include "wdrange/special.hpp"

#include <cmath>

namespace wdr {

double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive");

    // Lanczos, g = 671/128, 14 terms (Press et al. coefficient set).
    static const double cof[14] = {
        57.1562356658629235,     -59.5979603554754912,
        14.1360979747417471,     -0.491913816097620199,
        0.339946499848118887e-4,  0.465236289270485756e-4,
        -0.983744753048795646e-4, 0.158088703224912494e-3,
        -0.210264441724104883e-3, 0.217439618115212643e-3,
        -0.164318106536763890e-3, 0.844182239838527433e-4,
        -0.261908384015814087e-4, 0.368991826595316234e-5};

    double y = x;
    double tmp = x + 5.24218750000000000; // x + g + 1/2
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (double c : cof)
        ser += c / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

double log_monomial_norm_sq(int n, SpaceParam s) {
    if (n < 0)
        throw std::domain_error("monomial_norm_sq: n must be nonnegative");
    if (n == 0)
        return 0.0;
    return log_gamma(n + 1.0) + log_gamma(s.s()) - log_gamma(n + s.s());
}

double monomial_norm_sq(int n, SpaceParam s) {
    return std::exp(log_monomial_norm_sq(n, s));
}

cplx principal_power(cplx z, double s) {
    if (!(z.real() > 0.0))
        throw std::domain_error("principal_power: Re z must be positive");
    if (!(s > 0.0 && s <= 1.0))
        throw std::domain_error("principal_power: exponent must lie in (0,1]");
    return std::exp(s * std::log(z)); // arg z in (-pi/2, pi/2), so arg z^s too
}

} // namespace wdr
