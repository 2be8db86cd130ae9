#include "wdrange/berezin.hpp"

#include "wdrange/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace wdr {

cplx berezin_transform(const OperatorSpec& spec, cplx z) {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("berezin_transform: |z| must be < 1");
    const cplx w = spec.phi.eval(z);
    const cplx denom = 1.0 - std::conj(z) * w; // Re > 0 since |conj(z) w| < 1
    const double head = 1.0 - std::norm(z);
    return spec.psi.eval(z, spec.space) *
           principal_power(head / denom, spec.space.s());
}

cplx weyl_berezin(cplx gamma, cplx alpha, SpaceParam s, cplx z) {
    if (!(std::abs(gamma) < 1.0))
        throw std::domain_error("weyl_berezin: |gamma| must be < 1");
    if (std::abs(std::abs(alpha) - 1.0) > 1e-12)
        throw std::domain_error("weyl_berezin: |alpha| must be 1");
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("weyl_berezin: |z| must be < 1");

    const cplx phi_z = alpha * (z - gamma) / (1.0 - std::conj(gamma) * z);
    const double head = std::pow(1.0 - std::norm(gamma), s.s() / 2.0) *
                        std::pow(1.0 - std::norm(z), s.s());
    return head / (principal_power(1.0 - std::conj(gamma) * z, s.s()) *
                   principal_power(1.0 - std::conj(z) * phi_z, s.s()));
}

cplx weyl_fixed_point(cplx gamma) {
    const double g = std::abs(gamma);
    if (!(g < 1.0))
        throw std::domain_error("weyl_fixed_point: |gamma| must be < 1");
    if (g == 0.0)
        return cplx(0.0);
    return (1.0 - std::sqrt(1.0 - g * g)) / std::conj(gamma);
}

BerezinSample berezin_grid(const std::function<cplx(cplx)>& transform, int radial_count,
                           int angular_count) {
    if (radial_count < 4)
        throw std::invalid_argument("berezin_grid: radial_count must be >= 4");
    if (angular_count < 8)
        throw std::invalid_argument("berezin_grid: angular_count must be >= 8");

    BerezinSample sample;
    sample.radial_count = radial_count;
    sample.angular_count = angular_count;
    sample.grid.resize(1 + static_cast<size_t>(radial_count) *
                               static_cast<size_t>(angular_count));

    // z = 0 first: several suprema are attained there and ties must resolve
    // to the origin.
    sample.grid[0] = BerezinSample::Node{0.0, 0.0, cplx(0.0), transform(cplx(0.0)), 0, 0};

    const int total = radial_count * angular_count;
    parallel_for(total, [&](int idx) {
        const int j = idx / angular_count + 1;
        const int k = idx % angular_count;
        const double r = static_cast<double>(j) / (radial_count + 1);
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(k) / angular_count;
        const cplx z = std::polar(r, theta);
        sample.grid[static_cast<size_t>(idx) + 1] =
            BerezinSample::Node{r, theta, z, transform(z), j, k};
    });

    size_t best = 0;
    double best_mod = std::abs(sample.grid[0].value);
    for (size_t i = 1; i < sample.grid.size(); ++i) {
        const double mod = std::abs(sample.grid[i].value);
        if (mod > best_mod * (1.0 + 1e-14)) {
            best_mod = mod;
            best = i;
        }
    }

    // Local refinement: two rounds of mesh halving around the incumbent.
    cplx z_best = sample.grid[best].z;
    double mesh_r = 1.0 / (radial_count + 1);
    double mesh_t = 2.0 * std::numbers::pi / angular_count;
    for (int round = 0; round < 2; ++round) {
        mesh_r *= 0.5;
        mesh_t *= 0.5;
        const double r0 = std::abs(z_best);
        const double t0 = std::arg(z_best);
        for (int dj = -1; dj <= 1; ++dj) {
            for (int dk = -1; dk <= 1; ++dk) {
                if (dj == 0 && dk == 0)
                    continue;
                const double r = r0 + dj * mesh_r;
                if (r < 0.0 || r >= 1.0 - 1e-12)
                    continue;
                const cplx z = std::polar(r, t0 + dk * mesh_t);
                const double mod = std::abs(transform(z));
                if (mod > best_mod * (1.0 + 1e-14)) {
                    best_mod = mod;
                    z_best = z;
                }
            }
        }
    }

    sample.radius_estimate = best_mod;
    sample.maximizer = z_best;
    return sample;
}

BerezinSample berezin_grid(const OperatorSpec& spec, int radial_count, int angular_count) {
    return berezin_grid([&spec](cplx z) { return berezin_transform(spec, z); },
                        radial_count, angular_count);
}

BlaschkeParts blaschke_berezin_parts(cplx gamma, SpaceParam s, cplx z) {
    if (!(std::abs(gamma) < 1.0) || !(std::abs(z) < 1.0))
        throw std::domain_error("blaschke_berezin_parts: gamma and z must be in the disc");

    const cplx gz = std::conj(gamma) * z;
    const double u = gz.real();
    const double v = gz.imag();
    const double zz = std::norm(z);

    const double big_a = (1.0 - zz) * (1.0 - u) + 2.0 * v * v;
    const double big_b = v * (1.0 + zz - 2.0 * u);
    const double rho = std::hypot(big_a, big_b);
    const double theta = std::atan2(big_b, big_a); // big_a > 0, so |theta| < pi/2

    const double denom = (1.0 - zz) * (1.0 - zz) + 4.0 * v * v;
    const double prefactor = std::pow((1.0 - zz) / denom, s.s());
    const double mod = prefactor * std::pow(rho, s.s());

    BlaschkeParts parts;
    parts.rho = rho;
    parts.theta = theta;
    parts.re = mod * std::cos(s.s() * theta);
    parts.im = mod * std::sin(s.s() * theta);
    return parts;
}

cplx dilation_berezin(cplx xi, SpaceParam s, cplx z) {
    if (!(std::abs(xi) <= 1.0 + 1e-12))
        throw std::domain_error("dilation_berezin: |xi| must be <= 1");
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("dilation_berezin: |z| must be < 1");
    const double zz = std::norm(z);
    return principal_power((1.0 - zz) / (1.0 - xi * zz), s.s());
}

namespace {

// Uniform bucket grid over value space for nearest-distance queries.
class ValueIndex {
public:
    ValueIndex(const std::vector<cplx>& points,
               const std::vector<std::pair<cplx, cplx>>& segments)
        : points_(points), segments_(segments) {
        double lo_re = 0.0, hi_re = 0.0, lo_im = 0.0, hi_im = 0.0;
        bool first = true;
        auto feed = [&](cplx p) {
            if (first) {
                lo_re = hi_re = p.real();
                lo_im = hi_im = p.imag();
                first = false;
            } else {
                lo_re = std::min(lo_re, p.real());
                hi_re = std::max(hi_re, p.real());
                lo_im = std::min(lo_im, p.imag());
                hi_im = std::max(hi_im, p.imag());
            }
        };
        for (cplx p : points_)
            feed(p);
        for (const auto& s : segments_) {
            feed(s.first);
            feed(s.second);
        }
        origin_ = cplx(lo_re, lo_im);
        const double extent = std::max({hi_re - lo_re, hi_im - lo_im, 1e-12});
        cells_ = 128;
        cell_ = extent / cells_;
        point_buckets_.resize(static_cast<size_t>(cells_) * cells_);
        segment_buckets_.resize(static_cast<size_t>(cells_) * cells_);
        for (size_t i = 0; i < points_.size(); ++i)
            point_buckets_[bucket_of(points_[i])].push_back(i);
        for (size_t i = 0; i < segments_.size(); ++i) {
            const auto [a, b] = segments_[i];
            const int ca = col(a.real()), cb = col(b.real());
            const int ra = row(a.imag()), rb = row(b.imag());
            for (int c = std::min(ca, cb); c <= std::max(ca, cb); ++c)
                for (int r = std::min(ra, rb); r <= std::max(ra, rb); ++r)
                    segment_buckets_[static_cast<size_t>(r) * cells_ + c].push_back(i);
        }
    }

    struct Query {
        double distance;      // min distance to points and segments
        size_t nearest_point; // index of the closest sample point
    };

    // Exact min distance to the union of points and segments, walking bucket
    // rings outward; anything in a ring is at least (ring-1)*cell_ away.
    Query query(cplx p) const {
        double best = std::numeric_limits<double>::infinity();
        double best_pt = std::numeric_limits<double>::infinity();
        size_t best_pt_idx = 0;
        const int c0 = col(p.real());
        const int r0 = row(p.imag());
        for (int ring = 0; ring < cells_; ++ring) {
            const double reachable = (ring - 1) * cell_;
            if (best < reachable && best_pt < reachable)
                break;
            for (int c = c0 - ring; c <= c0 + ring; ++c) {
                if (c < 0 || c >= cells_)
                    continue;
                for (int r = r0 - ring; r <= r0 + ring; ++r) {
                    if (r < 0 || r >= cells_)
                        continue;
                    if (std::max(std::abs(c - c0), std::abs(r - r0)) != ring)
                        continue;
                    const size_t b = static_cast<size_t>(r) * cells_ + c;
                    for (size_t i : point_buckets_[b]) {
                        const double d = std::abs(p - points_[i]);
                        best = std::min(best, d);
                        if (d < best_pt) {
                            best_pt = d;
                            best_pt_idx = i;
                        }
                    }
                    for (size_t i : segment_buckets_[b])
                        best = std::min(best, seg_dist(p, segments_[i]));
                }
            }
        }
        return Query{best, best_pt_idx};
    }

private:
    static double seg_dist(cplx p, const std::pair<cplx, cplx>& s) {
        const cplx ab = s.second - s.first;
        const double len2 = std::norm(ab);
        if (len2 == 0.0)
            return std::abs(p - s.first);
        double t = ((p.real() - s.first.real()) * ab.real() +
                    (p.imag() - s.first.imag()) * ab.imag()) /
                   len2;
        t = std::clamp(t, 0.0, 1.0);
        return std::abs(p - (s.first + t * ab));
    }

    size_t bucket_of(cplx p) const {
        return static_cast<size_t>(row(p.imag())) * cells_ + col(p.real());
    }
    int col(double x) const {
        return std::clamp(static_cast<int>((x - origin_.real()) / cell_), 0, cells_ - 1);
    }
    int row(double y) const {
        return std::clamp(static_cast<int>((y - origin_.imag()) / cell_), 0, cells_ - 1);
    }

    const std::vector<cplx>& points_;
    const std::vector<std::pair<cplx, cplx>>& segments_;
    cplx origin_;
    double cell_ = 1.0;
    int cells_ = 1;
    std::vector<std::vector<size_t>> point_buckets_;
    std::vector<std::vector<size_t>> segment_buckets_;
};

} // namespace

ConvexityVerdict convexity_probe(const BerezinSample& sample, int pair_count,
                                 double delta, std::uint64_t seed) {
    const size_t n = sample.grid.size();
    if (n == 0)
        throw std::invalid_argument("convexity_probe: empty sample");

    const int radial = sample.radial_count;
    const int angular = sample.angular_count;
    auto node_index = [&](int j, int k) -> size_t {
        // j in 1..R, k in 0..K-1; origin is index 0
        return 1 + static_cast<size_t>(j - 1) * angular +
               static_cast<size_t>((k % angular + angular) % angular);
    };

    std::vector<cplx> values(n);
    for (size_t i = 0; i < n; ++i)
        values[i] = sample.grid[i].value;

    // segments between angularly adjacent samples
    std::vector<std::pair<cplx, cplx>> segments;
    segments.reserve(static_cast<size_t>(radial) * angular);
    for (int j = 1; j <= radial; ++j)
        for (int k = 0; k < angular; ++k)
            segments.emplace_back(values[node_index(j, k)], values[node_index(j, k + 1)]);

    // local mesh: largest value-space gap from a sample to its grid neighbours
    auto local_mesh = [&](size_t idx) {
        const BerezinSample::Node& node = sample.grid[idx];
        double mesh = 0.0;
        auto probe = [&](size_t other) {
            mesh = std::max(mesh, std::abs(values[idx] - values[other]));
        };
        if (node.radial_index == 0) {
            for (int k = 0; k < angular; ++k)
                probe(node_index(1, k));
        } else {
            const int j = node.radial_index, k = node.angular_index;
            probe(node_index(j, k + 1));
            probe(node_index(j, k - 1));
            if (j > 1)
                probe(node_index(j - 1, k));
            else
                probe(0);
            if (j < radial)
                probe(node_index(j + 1, k));
        }
        return mesh;
    };

    const ValueIndex index(values, segments);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, n - 1);

    ConvexityVerdict verdict;
    for (int trial = 0; trial < pair_count; ++trial) {
        const size_t ia = pick(rng);
        const size_t ib = pick(rng);
        const cplx mid = 0.5 * (values[ia] + values[ib]);
        const auto [dist, nearest] = index.query(mid);
        const double threshold =
            delta > 0.0 ? delta : std::max(3.0 * local_mesh(nearest), 1e-9);
        if (dist > threshold) {
            verdict.violated = true;
            verdict.index_a = ia;
            verdict.index_b = ib;
            verdict.midpoint = mid;
            verdict.distance = dist;
            verdict.threshold = threshold;
            return verdict;
        }
    }
    return verdict;
}

XGammaQuantities xgamma_berezin_quantities(cplx gamma, SpaceParam s) {
    const double g2 = std::norm(gamma);
    if (!(g2 < 1.0))
        throw std::domain_error("xgamma_berezin_quantities: |gamma| must be < 1");
    XGammaQuantities q;
    q.ber_x = 2.0 * std::pow(1.0 - g2, s.s() / 2.0);
    q.ber_x_squared = 2.0 * (std::pow((1.0 - g2) / (1.0 + g2), s.s()) + 1.0);
    return q;
}

} // namespace wdr
