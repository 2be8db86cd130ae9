#pragma once

#include "wdrange/operators.hpp"

#include <cstdint>
#include <functional>

namespace wdr {

// Closed-form Berezin transform psi(z) ((1-|z|^2)/(1 - conj(z) phi(z)))^s.
cplx berezin_transform(const OperatorSpec& spec, cplx z);

// Berezin transform of the Weyl-type operator with weight = normalized
// kernel at gamma and symbol alpha (z-gamma)/(1-conj(gamma) z), in the
// factored form (1-|g|^2)^{s/2} (1-|z|^2)^s / ((1-conj(g)z)^s (1-conj(z)phi(z))^s).
cplx weyl_berezin(cplx gamma, cplx alpha, SpaceParam s, cplx z);

// The unique disc fixed point of alpha=-1 Weyl symbol:
// z(gamma) = (1 - sqrt(1-|gamma|^2)) / conj(gamma); 0 for gamma = 0.
cplx weyl_fixed_point(cplx gamma);

/// Sampled Berezin transform over z = (j/(R+1)) e^{2 pi i k/K} plus z = 0.
struct BerezinSample {
    struct Node {
        double r = 0.0;     // radius of z
        double theta = 0.0; // angle of z
        cplx z;
        cplx value;
        int radial_index = 0;  // 0 for the origin node, else 1..R
        int angular_index = 0; // 0..K-1 (0 for the origin node)
    };

    std::vector<Node> grid;
    int radial_count = 0;
    int angular_count = 0;
    double radius_estimate = 0.0; // sup |value|, after local refinement
    cplx maximizer;
};

BerezinSample berezin_grid(const OperatorSpec& spec, int radial_count, int angular_count);

// Same sampling machinery for any transform of the disc (sums of Weyl
// transforms, etc.).
BerezinSample berezin_grid(const std::function<cplx(cplx)>& transform, int radial_count,
                           int angular_count);

/// Real/imaginary split of the Blaschke-symbol composition operator's Berezin
/// transform: value = prefactor * rho^s (cos(s theta) + i sin(s theta)).
struct BlaschkeParts {
    double re = 0.0;
    double im = 0.0;
    double rho = 0.0;
    double theta = 0.0; // in (-pi/2, pi/2); 0 exactly on the locus Im(conj(gamma) z) = 0
};

BlaschkeParts blaschke_berezin_parts(cplx gamma, SpaceParam s, cplx z);

// Berezin transform of the dilation composition operator phi(z) = xi z:
// ((1-|z|^2)/(1-xi |z|^2))^s; depends only on |z|. |xi| <= 1 allowed.
cplx dilation_berezin(cplx xi, SpaceParam s, cplx z);

/// One-sided convexity probe: midpoints of random sampled-value pairs must
/// stay close to the sampled image (points plus segments between angularly
/// adjacent samples). Can certify a violation with a witness; never certifies
/// convexity.
struct ConvexityVerdict {
    bool violated = false;
    size_t index_a = 0, index_b = 0; // witness pair (grid indices)
    cplx midpoint;
    double distance = 0.0;  // midpoint's distance to the sampled image
    double threshold = 0.0; // threshold it exceeded
};

// delta <= 0 selects the default rule: 3x the local grid mesh of sampled
// values around the nearest sample.
ConvexityVerdict convexity_probe(const BerezinSample& sample, int pair_count,
                                 double delta, std::uint64_t seed = 0x5eed5eedULL);

/// Closed forms for X_gamma = C_{weyl(gamma,1)} + C_{weyl(-gamma,1)}:
/// ber(X) = 2 (1-|g|^2)^{s/2} and ber(X^2) = 2 (((1-|g|^2)/(1+|g|^2))^s + 1).
struct XGammaQuantities {
    double ber_x = 0.0;
    double ber_x_squared = 0.0;
};

XGammaQuantities xgamma_berezin_quantities(cplx gamma, SpaceParam s);

} // namespace wdr
