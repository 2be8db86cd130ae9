#include "wdrange/numrange.hpp"

#include "wdrange/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace wdr {

namespace {

double off_diagonal_norm(const CMatrix& h) {
    double acc = 0.0;
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j)
            if (i != j)
                acc += std::norm(h(i, j));
    return std::sqrt(acc);
}

void require_hermitian(const CMatrix& h) {
    if (h.rows() != h.cols())
        throw std::invalid_argument("hermitian_eigen: matrix must be square");
    const double scale = std::max(1.0, h.frobenius_norm());
    for (int i = 0; i < h.rows(); ++i)
        for (int j = i; j < h.cols(); ++j)
            if (std::abs(h(i, j) - std::conj(h(j, i))) > 1e-12 * scale)
                throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
}

// One unitary plane rotation zeroing h(p,q); accumulates into v.
void rotate(CMatrix& h, CMatrix& v, int p, int q) {
    const int n = h.rows();
    const cplx hpq = h(p, q);
    const double habs = std::abs(hpq);
    if (habs == 0.0)
        return;
    const cplx f = hpq / habs; // phase, so conj(f)*hpq = |hpq|
    const double app = h(p, p).real();
    const double aqq = h(q, q).real();

    const double theta = 0.5 * (aqq - app) / habs;
    double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
    if (theta < 0.0)
        t = -t;
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const cplx fc = f * c, fs = f * s;
    const cplx fbc = std::conj(f) * c, fbs = std::conj(f) * s;

    // columns (right-multiply by U)
    for (int k = 0; k < n; ++k) {
        const cplx hp = h(k, p), hq = h(k, q);
        h(k, p) = hp * fc - hq * s;
        h(k, q) = hp * fs + hq * c;
    }
    // rows (left-multiply by U*)
    for (int k = 0; k < n; ++k) {
        const cplx rp = h(p, k), rq = h(q, k);
        h(p, k) = fbc * rp - s * rq;
        h(q, k) = fbs * rp + c * rq;
    }
    // eigenvector accumulation
    for (int k = 0; k < n; ++k) {
        const cplx vp = v(k, p), vq = v(k, q);
        v(k, p) = vp * fc - vq * s;
        v(k, q) = vp * fs + vq * c;
    }
    h(p, q) = 0.0;
    h(q, p) = 0.0;
    h(p, p) = cplx(h(p, p).real(), 0.0);
    h(q, q) = cplx(h(q, q).real(), 0.0);
}

} // namespace

HermitianEigen hermitian_eigen(const CMatrix& h_in, const CMatrix* basis_hint) {
    require_hermitian(h_in);
    const int n = h_in.rows();

    CMatrix h = h_in;
    CMatrix v = CMatrix::identity(n);
    if (basis_hint != nullptr) {
        h = basis_hint->adjoint() * h_in * (*basis_hint);
        v = *basis_hint;
        // re-symmetrize the rounding noise of the basis change
        for (int i = 0; i < n; ++i) {
            h(i, i) = cplx(h(i, i).real(), 0.0);
            for (int j = i + 1; j < n; ++j) {
                const cplx m = 0.5 * (h(i, j) + std::conj(h(j, i)));
                h(i, j) = m;
                h(j, i) = std::conj(m);
            }
        }
    }

    const double fro = std::max(h.frobenius_norm(), 1e-300);
    const double target = 1e-13 * fro;

    for (int sweep = 0; sweep < 100; ++sweep) {
        const double off = off_diagonal_norm(h);
        if (off <= target)
            break;
        // threshold strategy: skip entries that cannot matter this sweep
        const double thresh =
            (sweep < 3) ? 0.1 * off / n : target / std::max(1, n);
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(h(p, q)) > thresh)
                    rotate(h, v, p, q);
        if (sweep == 99)
            throw std::runtime_error("hermitian_eigen: Jacobi failed to converge");
    }

    HermitianEigen result;
    result.values.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        result.values[static_cast<size_t>(i)] = h(i, i).real();
    result.vectors = std::move(v);
    return result;
}

std::pair<double, std::vector<cplx>> hermitian_top_eigenpair(const CMatrix& h) {
    const HermitianEigen eig = hermitian_eigen(h);
    const int n = h.rows();
    int best = 0;
    for (int i = 1; i < n; ++i)
        if (eig.values[static_cast<size_t>(i)] > eig.values[static_cast<size_t>(best)])
            best = i;
    std::vector<cplx> vec(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        vec[static_cast<size_t>(k)] = eig.vectors(k, best);
    const double nrm = vec_norm(vec);
    for (cplx& x : vec)
        x /= nrm;
    return {eig.values[static_cast<size_t>(best)], std::move(vec)};
}

namespace {

double cross(cplx o, cplx a, cplx b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

std::vector<cplx> convex_hull(std::vector<cplx> pts) {
    std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2)
        return pts;
    std::vector<cplx> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) { // lower
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0)
            --k;
        hull[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) { // upper
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1); // last point repeats the first
    return hull;        // counter-clockwise
}

double point_segment_distance(cplx p, cplx a, cplx b) {
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0)
        return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

// Classify the hull: within 1e-10 of a line -> segment (or point).
void classify(BoundaryCurve& curve) {
    const std::vector<cplx>& h = curve.hull;
    if (h.empty()) {
        curve.kind = BoundaryCurve::Kind::point;
        return;
    }
    // farthest pair among hull vertices
    size_t ia = 0, ib = 0;
    double best = -1.0;
    for (size_t i = 0; i < h.size(); ++i)
        for (size_t j = i; j < h.size(); ++j) {
            const double d = std::abs(h[i] - h[j]);
            if (d > best) {
                best = d;
                ia = i;
                ib = j;
            }
        }
    if (best < 1e-12) {
        curve.hull = {h[ia]};
        curve.kind = BoundaryCurve::Kind::point;
        return;
    }
    const cplx a = h[ia], b = h[ib];
    const cplx dir = (b - a) / std::abs(b - a);
    double max_perp = 0.0;
    for (const cplx& p : h)
        max_perp = std::max(max_perp, std::abs(cross(a, a + dir, p)));
    if (max_perp < 1e-10) {
        curve.hull = {a, b};
        curve.kind = BoundaryCurve::Kind::segment;
        return;
    }
    curve.kind = BoundaryCurve::Kind::polygon;
}

} // namespace

BoundaryCurve boundary_sweep(const CMatrix& a, int angles) {
    if (angles < 16)
        throw std::invalid_argument("boundary_sweep: need at least 16 angles");
    if (a.rows() != a.cols())
        throw std::invalid_argument("boundary_sweep: matrix must be square");
    const int n = a.rows();

    // Re(e^{i theta} A) = cos(theta) P + sin(theta) Q, both Hermitian.
    const CMatrix adj = a.adjoint();
    CMatrix p_part(n, n), q_part(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            p_part(i, j) = 0.5 * (a(i, j) + adj(i, j));
            q_part(i, j) = cplx(0.0, 0.5) * (a(i, j) - adj(i, j));
        }

    struct AngleRecord {
        std::vector<cplx> pts;
    };
    std::vector<AngleRecord> records(static_cast<size_t>(angles));

    auto quad_form = [&](const std::vector<cplx>& v) { return dot(a.apply(v), v); };
    auto column = [](const CMatrix& m, int j) {
        std::vector<cplx> v(static_cast<size_t>(m.rows()));
        for (int k = 0; k < m.rows(); ++k)
            v[static_cast<size_t>(k)] = m(k, j);
        return v;
    };

    // Consecutive angles share eigenstructure, so each chunk warm-starts from
    // the previous angle's basis. Chunk layout is fixed (independent of thread
    // count) to keep results bit-reproducible.
    parallel_chunks(angles, 16, [&](int begin, int end) {
        CMatrix basis;
        bool have_basis = false;
        for (int k = begin; k < end; ++k) {
            const double theta =
                2.0 * std::numbers::pi * static_cast<double>(k) / angles;
            const double ct = std::cos(theta), st = std::sin(theta);
            CMatrix h(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    h(i, j) = ct * p_part(i, j) + st * q_part(i, j);

            const HermitianEigen eig =
                hermitian_eigen(h, have_basis ? &basis : nullptr);
            basis = eig.vectors;
            have_basis = true;

            int i1 = 0, i2 = -1;
            for (int i = 1; i < n; ++i)
                if (eig.values[static_cast<size_t>(i)] >
                    eig.values[static_cast<size_t>(i1)])
                    i1 = i;
            for (int i = 0; i < n; ++i)
                if (i != i1 &&
                    (i2 < 0 || eig.values[static_cast<size_t>(i)] >
                                   eig.values[static_cast<size_t>(i2)]))
                    i2 = i;

            std::vector<cplx> v1 = column(eig.vectors, i1);
            records[static_cast<size_t>(k)].pts.push_back(quad_form(v1));

            // Degenerate face: record the second eigenvector and a mixture, so
            // segment endpoints are not missed.
            if (n > 1 && i2 >= 0) {
                const double gap = eig.values[static_cast<size_t>(i1)] -
                                   eig.values[static_cast<size_t>(i2)];
                const double lim =
                    1e-10 * std::max(1.0, std::abs(eig.values[static_cast<size_t>(i1)]));
                if (gap < lim) {
                    std::vector<cplx> v2 = column(eig.vectors, i2);
                    records[static_cast<size_t>(k)].pts.push_back(quad_form(v2));
                    std::vector<cplx> mix(v1.size());
                    for (size_t t = 0; t < v1.size(); ++t)
                        mix[t] = v1[t] + v2[t];
                    double nrm = vec_norm(mix);
                    if (nrm < 1e-8) {
                        for (size_t t = 0; t < v1.size(); ++t)
                            mix[t] = v1[t] - v2[t];
                        nrm = vec_norm(mix);
                    }
                    if (nrm > 1e-8) {
                        for (cplx& x : mix)
                            x /= nrm;
                        records[static_cast<size_t>(k)].pts.push_back(quad_form(mix));
                    }
                }
            }
        }
    });

    BoundaryCurve curve;
    std::vector<cplx> all;
    for (int k = 0; k < angles; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / angles;
        for (const cplx& pt : records[static_cast<size_t>(k)].pts) {
            curve.points.push_back({theta, pt});
            all.push_back(pt);
        }
    }
    curve.hull = convex_hull(std::move(all));
    classify(curve);
    return curve;
}

double numerical_radius(const CMatrix& a, int angles) {
    const BoundaryCurve curve = boundary_sweep(a, angles);
    double best = 0.0;
    for (const cplx& v : curve.hull)
        best = std::max(best, std::abs(v));
    return best;
}

ContainsResult contains_point(const BoundaryCurve& curve, cplx p, double margin) {
    ContainsResult result;
    if (curve.kind != BoundaryCurve::Kind::polygon || curve.hull.size() < 3) {
        result.degenerate = true;
        return result;
    }
    const std::vector<cplx>& h = curve.hull;
    double min_signed = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < h.size(); ++i) {
        const cplx a = h[i];
        const cplx b = h[(i + 1) % h.size()];
        const double len = std::abs(b - a);
        if (len == 0.0)
            continue;
        min_signed = std::min(min_signed, cross(a, b, p) / len); // left of edge > 0
    }
    result.inside = min_signed >= margin;
    return result;
}

std::vector<cplx> DiscRegion::boundary(int count) const {
    std::vector<cplx> pts(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / count;
        pts[static_cast<size_t>(k)] = center + radius * cplx(std::cos(t), std::sin(t));
    }
    return pts;
}

std::vector<cplx> EllipseRegion::boundary(int count) const {
    const cplx mid = center();
    const cplx delta = focus2 - focus1;
    const cplx axis = (std::abs(delta) > 0.0) ? delta / std::abs(delta) : cplx(1.0);
    const cplx perp = axis * cplx(0.0, 1.0);
    const double a = 0.5 * major_axis;
    const double b = 0.5 * minor_axis;
    std::vector<cplx> pts(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / count;
        pts[static_cast<size_t>(k)] = mid + a * std::cos(t) * axis + b * std::sin(t) * perp;
    }
    return pts;
}

EllipseRegion ellipse_2x2(cplx a, cplx b, cplx c) {
    EllipseRegion e;
    e.focus1 = a;
    e.focus2 = b;
    e.minor_axis = std::abs(c);
    e.major_axis = std::sqrt(std::norm(c) + std::norm(a - b));
    return e;
}

DiscRegion disc_for_vanishing_weight(int r, SpaceParam s, cplx b_r) {
    if (r < 1)
        throw std::invalid_argument("disc_for_vanishing_weight: r must be >= 1");
    const double log_w = log_monomial_norm_sq(r, s);
    const double radius = std::abs(b_r) / (1.0 + std::exp(-log_w));
    return DiscRegion{cplx(0.0), radius};
}

DiscRegion disc_for_dilation_shift(int r, SpaceParam s, cplx mu, cplx b_prev) {
    if (r < 2)
        throw std::invalid_argument("disc_for_dilation_shift: r must be >= 2");
    if (mu == cplx(0.0))
        throw std::invalid_argument("disc_for_dilation_shift: mu must be nonzero");
    const double factor = std::exp(
        0.5 * (log_gamma(r + 1.0) + log_gamma(s.s() + 1.0) - log_gamma(r + s.s())));
    return DiscRegion{cplx(0.0), 0.5 * factor * std::abs(mu * b_prev)};
}

DiscRegion disc_for_rational_rotation(int m, int r1, int r2, SpaceParam s, cplx b0,
                                      cplx b_mr1, cplx b_mr2, cplx b_mdiff) {
    if (m < 1 || r1 < 1 || r2 <= r1)
        throw std::invalid_argument("disc_for_rational_rotation: need m>=1, 0<r1<r2");
    const double p1 = std::abs(b_mr1), p2 = std::abs(b_mr2), p3 = std::abs(b_mdiff);
    if (p1 * p2 * p3 > 1e-15)
        throw std::invalid_argument(
            "disc_for_rational_rotation: coefficient product must vanish "
            "(b_{m r1} * b_{m r2} * b_{m(r2-r1)} = 0)");
    if (std::max({p1, p2, p3}) <= 1e-15)
        throw std::invalid_argument(
            "disc_for_rational_rotation: at least one of the coefficients must be nonzero");
    const double w1 = monomial_norm_sq(m * r1, s);
    const double w2 = monomial_norm_sq(m * r2, s);
    const double radius =
        0.5 * std::sqrt(w1 * p1 * p1 + w2 * p2 * p2 + (w2 / w1) * p3 * p3);
    return DiscRegion{b0, radius};
}

EllipseRegion ellipse_for_rational_rotation(int m, int r, int k, SpaceParam s, cplx b0,
                                            cplx b_mrk) {
    if (!(k > 0 && k < m))
        throw std::invalid_argument("ellipse_for_rational_rotation: need 0 < k < m");
    if (b_mrk == cplx(0.0))
        throw std::invalid_argument("ellipse_for_rational_rotation: b_{mr+k} must be nonzero");
    const int idx = m * r + k;
    const double phase = 2.0 * std::numbers::pi * static_cast<double>(idx) / m;
    EllipseRegion e;
    e.focus1 = b0;
    e.focus2 = b0 * std::polar(1.0, phase);
    e.minor_axis = std::sqrt(monomial_norm_sq(idx, s)) * std::abs(b_mrk);
    e.major_axis = std::sqrt(e.minor_axis * e.minor_axis + std::norm(e.focus1 - e.focus2));
    return e;
}

EllipseRegion ellipse_for_irrational_rotation(int p, int q, double t, SpaceParam s,
                                              cplx b0, cplx b_q) {
    if (q <= 0 || p < 0)
        throw std::invalid_argument("ellipse_for_irrational_rotation: need p >= 0, q > 0");
    const double factor =
        std::exp(0.5 * (log_gamma(p + q + 1.0) + log_gamma(p + s.s()) -
                        log_gamma(p + q + s.s()) - log_gamma(p + 1.0)));
    EllipseRegion e;
    e.focus1 = b0 * std::polar(1.0, 2.0 * std::numbers::pi * p * t);
    e.focus2 = b0 * std::polar(1.0, 2.0 * std::numbers::pi * (p + q) * t);
    e.minor_axis = factor * std::abs(b_q);
    e.major_axis = std::sqrt(e.minor_axis * e.minor_axis + std::norm(e.focus1 - e.focus2));
    return e;
}

} // namespace wdr
