#pragma once

#include "wdrange/cmatrix.hpp"
#include "wdrange/space.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>

namespace wdr {

/// Holomorphic self-map of the disc. Closed forms carry their own domain
/// guarantees; a general series needs the caller to attest the self-map
/// property (checking sup|phi| < 1 is a global optimization we do not do).
class PhiSymbol {
public:
    static PhiSymbol identity();
    static PhiSymbol constant(cplx v);               // |v| < 1
    static PhiSymbol dilation(cplx lambda);          // |lambda| <= 1
    static PhiSymbol mobius(cplx gamma, cplx alpha); // |gamma| < 1, |alpha| = 1
    static PhiSymbol general(PowerSeries ps, bool attested_self_map);

    PowerSeries series(int order) const;
    cplx eval(cplx z) const; // closed form where available
    bool is_identity() const;
    bool is_general() const;
    std::string describe() const;

private:
    struct Identity {};
    struct Constant { cplx v; };
    struct Dilation { cplx lambda; };
    struct Mobius { cplx gamma, alpha; };
    struct General { PowerSeries ps; };

    explicit PhiSymbol(std::variant<Identity, Constant, Dilation, Mobius, General> f)
        : form_(std::move(f)) {}

    std::variant<Identity, Constant, Dilation, Mobius, General> form_;
};

/// Holomorphic weight.
class PsiSymbol {
public:
    static PsiSymbol one();
    static PsiSymbol general(PowerSeries ps);
    static PsiSymbol normalized_kernel(cplx gamma); // psi = normalized kernel at gamma

    PowerSeries series(int order, SpaceParam s) const;
    cplx eval(cplx z, SpaceParam s) const;
    std::string describe() const;

private:
    struct One {};
    struct General { PowerSeries ps; };
    struct Kernel { cplx gamma; };

    explicit PsiSymbol(std::variant<One, General, Kernel> f) : form_(std::move(f)) {}

    std::variant<One, General, Kernel> form_;
};

/// The operator C_{psi,phi} f = psi * (f o phi) on D_s, truncated at order N.
/// Boundedness is assumed, not checked.
struct OperatorSpec {
    PsiSymbol psi;
    PhiSymbol phi;
    SpaceParam space;
    int order; // truncation degree N
};

/// Matrix of C_{psi,phi} in the orthonormal basis {e_n}: column r holds the
/// e-coordinates of C e_r, i.e. entries(m,r) = c_m(psi phi^r) sqrt(w_m/w_r).
struct OperatorMatrix {
    CMatrix entries;
    SpaceParam space;
    int order;
    std::string psi_desc;
    std::string phi_desc;
};

OperatorMatrix build_matrix(const OperatorSpec& spec);

// C* k_z = conj(psi(z)) k_{phi(z)}, as a truncated element of D_s.
SpaceElement adjoint_kernel_action(const OperatorSpec& spec, cplx z);

// Weyl-type operator: weight = normalized kernel at gamma, symbol the disc
// automorphism alpha (z-gamma)/(1-conj(gamma) z).
OperatorSpec weyl_operator(cplx gamma, cplx alpha, SpaceParam s, int order);

// X_gamma = C_{weyl(gamma,1)} + C_{weyl(-gamma,1)} as a matrix.
OperatorMatrix xgamma_operator(cplx gamma, SpaceParam s, int order);

// Principal submatrix at the given distinct basis indices.
CMatrix compression(const OperatorMatrix& matrix, std::span<const int> indices);

} // namespace wdr
