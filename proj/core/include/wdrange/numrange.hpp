#pragma once

#include "wdrange/cmatrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace wdr {

/// Full eigensystem of a Hermitian matrix; values[i] pairs with column i of
/// vectors. Values are unsorted (diagonal order after Jacobi convergence).
struct HermitianEigen {
    std::vector<double> values;
    CMatrix vectors;
};

// Cyclic Jacobi with threshold strategy; off-diagonal Frobenius norm is
// driven below 1e-13 * ||H||_F. Throws on non-Hermitian input (1e-12 scale).
// An optional starting basis diagonalizes V0* H V0 instead and returns
// vectors = V0 * V' (used to warm-start consecutive sweep angles).
HermitianEigen hermitian_eigen(const CMatrix& h, const CMatrix* basis_hint = nullptr);

// Largest eigenvalue and a unit eigenvector.
std::pair<double, std::vector<cplx>> hermitian_top_eigenpair(const CMatrix& h);

/// Numerical-range boundary from the rotation sweep: for each angle theta,
/// the top eigenvector v of Re(e^{i theta} A) contributes <Av,v>. The hull
/// of the recorded points approximates W(A) from inside.
struct BoundaryCurve {
    enum class Kind { point, segment, polygon };

    struct Sample {
        double theta;
        cplx point;
    };

    std::vector<Sample> points;
    std::vector<cplx> hull; // CCW vertices; 1 or 2 entries when degenerate
    Kind kind = Kind::point;
};

BoundaryCurve boundary_sweep(const CMatrix& a, int angles);

// max |v| over hull vertices: a lower bound of w(A) converging as angles grow.
double numerical_radius(const CMatrix& a, int angles);

struct ContainsResult {
    bool inside = false;
    bool degenerate = false; // point/segment hull: interior is empty
};

// True iff p lies inside the hull with signed distance >= margin to every
// edge. Negative margins permit slightly-outside queries.
ContainsResult contains_point(const BoundaryCurve& curve, cplx p, double margin);

struct DiscRegion {
    cplx center;
    double radius = 0.0;

    std::vector<cplx> boundary(int count) const;
};

struct EllipseRegion {
    cplx focus1, focus2;
    double major_axis = 0.0; // full lengths
    double minor_axis = 0.0;

    cplx center() const { return 0.5 * (focus1 + focus2); }
    std::vector<cplx> boundary(int count) const;
};

// Numerical range of [[a,0],[c,b]]: ellipse with foci a,b, minor axis |c|,
// major axis sqrt(|c|^2 + |a-b|^2). Degenerates to a disc when a=b and to
// the segment [a,b] when c=0.
EllipseRegion ellipse_2x2(cplx a, cplx b, cplx c);

// Disc at 0 of radius w_r/(1+w_r) |b_r|, guaranteed inside W(C_{psi,phi})
// when phi fixes 0 and psi vanishes there to order r with r-th coefficient b_r.
DiscRegion disc_for_vanishing_weight(int r, SpaceParam s, cplx b_r);

// Disc at 0 of radius (1/2) sqrt(G(r+1)G(s+1)/G(r+s)) |mu b_{r-1}| from the
// {e_1, e_r} compression under phi(z) = mu z and psi vanishing at 0. r >= 2.
DiscRegion disc_for_dilation_shift(int r, SpaceParam s, cplx mu, cplx b_prev);

// Disc at b0 from the {e_0, e_{m r1}, e_{m r2}} compression under the
// rational rotation phi(z) = e^{2 pi i/m} z. Requires the coefficient
// product b_{m r1} b_{m r2} b_{m(r2-r1)} to vanish with at least one factor
// nonzero; refuses otherwise.
DiscRegion disc_for_rational_rotation(int m, int r1, int r2, SpaceParam s, cplx b0,
                                      cplx b_mr1, cplx b_mr2, cplx b_mdiff);

// Ellipse with foci b0, b0 e^{2 pi i (m r + k)/m} from the {e_0, e_{mr+k}}
// compression under the rational rotation; 0 < k < m, b_{mr+k} != 0.
EllipseRegion ellipse_for_rational_rotation(int m, int r, int k, SpaceParam s, cplx b0,
                                            cplx b_mrk);

// Ellipse with foci b0 e^{2 pi i p t}, b0 e^{2 pi i (p+q) t} from the
// {e_p, e_{p+q}} compression under the irrational rotation parameter t; q > 0.
EllipseRegion ellipse_for_irrational_rotation(int p, int q, double t, SpaceParam s,
                                              cplx b0, cplx b_q);

} // namespace wdr
