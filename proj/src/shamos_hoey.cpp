#include "medisk/shamos_hoey.hpp"

#include "medisk/bisector.hpp"
#include "medisk/detail/parallel.hpp"
#include "medisk/errors.hpp"
#include "medisk/io.hpp"
#include "medisk/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>

namespace medisk {

namespace {

constexpr double near_ray_factor = 8.0;
constexpr double far_ray_factor = 64.0;
constexpr int refine_points = 16;

struct TripleResult {
    bool no_center = false;
    std::optional<VoronoiVertex> vertex;
};

struct Critical {
    double mu;
    std::size_t vertex;
};

struct PairResult {
    std::vector<VoronoiEdge> edges;
    std::size_t recovered = 0;
};

bool contains_sorted(const std::vector<std::size_t>& v, std::size_t x) {
    return std::binary_search(v.begin(), v.end(), x);
}

class PairProber {
public:
    PairProber(const Norm& n, const FarthestVoronoiDiagram& d, const VoronoiParams& params, double diam, std::size_t a,
               std::size_t b)
        : n_(n), d_(d), params_(params), diam_(diam), a_(a), b_(b), sa_(d.sites[a]), sb_(d.sites[b]),
          mu0_(0.5 * n(d.sites[a] - d.sites[b])) {}

    PairResult run() {
        PairResult out;
        std::array<std::vector<Critical>, 2> crit;
        std::array<std::vector<bool>, 2> accepted;
        for (int h = 0; h < 2; ++h) {
            crit[h] = criticals(half(h));
            accepted[h] = probe_intervals(half(h), crit[h]);
            if (params_.grid > 0) out.recovered += scan(half(h), crit[h], accepted[h]);
        }

        // The first intervals of both halves meet at the midpoint of the pair.
        const bool through_mid = accepted[0][0] && accepted[1][0];
        if (through_mid) {
            VoronoiEdge e{{a_, b_}, {}};
            for (int h = 0; h < 2; ++h) {
                if (!crit[h].empty()) e.endpoints.push_back(crit[h][0].vertex);
            }
            out.edges.push_back(std::move(e));
        }
        for (int h = 0; h < 2; ++h) {
            for (std::size_t k = through_mid ? 1 : 0; k < accepted[h].size(); ++k) {
                if (!accepted[h][k]) continue;
                VoronoiEdge e{{a_, b_}, {}};
                if (k > 0) e.endpoints.push_back(crit[h][k - 1].vertex);
                if (k < crit[h].size()) e.endpoints.push_back(crit[h][k].vertex);
                out.edges.push_back(std::move(e));
            }
        }
        return out;
    }

private:
    static HalfPlane half(int h) { return h == 0 ? HalfPlane::plus : HalfPlane::minus; }

    std::vector<Critical> criticals(HalfPlane h) const {
        std::vector<Critical> out;
        const Side want = h == HalfPlane::plus ? Side::left : Side::right;
        for (std::size_t v = 0; v < d_.vertices.size(); ++v) {
            const auto& vx = d_.vertices[v];
            if (!contains_sorted(vx.defining, a_) || !contains_sorted(vx.defining, b_)) continue;
            const Side s = half_plane_side(sa_, sb_, vx.location, 1e-9);
            if (s == want || s == Side::on) out.push_back({std::max(vx.distance, mu0_), v});
        }
        std::sort(out.begin(), out.end(), [](const Critical& x, const Critical& y) { return x.mu < y.mu; });
        return out;
    }

    double bound(const std::vector<Critical>& crit, std::size_t k) const {
        if (k == 0) return mu0_;
        if (k - 1 < crit.size()) return crit[k - 1].mu;
        return std::numeric_limits<double>::infinity();
    }

    /// (mu - farthest rival distance) / mu at the bisector point of radius mu.
    double margin(HalfPlane h, double mu) const {
        const Vec2 x = bisector_point(n_, {sa_, sb_, mu, h}, 1e-12 * mu);
        double rival = 0.0;
        for (std::size_t s = 0; s < d_.sites.size(); ++s) {
            if (s == a_ || s == b_) continue;
            rival = std::max(rival, n_(x - d_.sites[s]));
        }
        return (mu - rival) / mu;
    }

    bool passes(HalfPlane h, double mu) const { return margin(h, mu) >= -params_.tol; }

    std::vector<bool> probe_intervals(HalfPlane h, const std::vector<Critical>& crit) const {
        const std::size_t count = crit.size() + 1;
        std::vector<bool> acc(count, false);
        for (std::size_t k = 0; k < count; ++k) {
            const double lo = bound(crit, k);
            const double hi = bound(crit, k + 1);
            if (std::isinf(hi)) {
                const double near = std::max(near_ray_factor * diam_, 2.0 * lo);
                const double far = std::max(far_ray_factor * diam_, 16.0 * lo);
                acc[k] = passes(h, near) || passes(h, far);
            } else if (hi - lo > 1e-12 * hi) {
                acc[k] = passes(h, 0.5 * (lo + hi));
            }
        }
        return acc;
    }

    std::size_t interval_of(const std::vector<Critical>& crit, double mu) const {
        std::size_t k = 0;
        while (k < crit.size() && crit[k].mu <= mu) ++k;
        return k;
    }

    bool near_bound(const std::vector<Critical>& crit, double mu) const {
        if (std::abs(mu - mu0_) <= 1e-6 * mu) return true;
        for (const auto& c : crit) {
            if (std::abs(mu - c.mu) <= 1e-6 * mu) return true;
        }
        return false;
    }

    // Geometric scan of the half-bisector up to 64 * diam with one refinement
    // around the best grid point. Accepts intervals the probes rejected but
    // where the pair is nonetheless farthest.
    std::size_t scan(HalfPlane h, const std::vector<Critical>& crit, std::vector<bool>& acc) const {
        const int grid = params_.grid;
        const double cap = far_ray_factor * diam_;
        const double ratio = cap / mu0_;
        std::size_t recovered = 0;
        auto check = [&](double mu) -> double {
            if (near_bound(crit, mu)) return -std::numeric_limits<double>::infinity();
            const double m = margin(h, mu);
            const std::size_t k = interval_of(crit, mu);
            if (m >= -params_.tol && !acc[k]) {
                acc[k] = true;
                ++recovered;
            }
            return m;
        };

        std::vector<double> mus(static_cast<std::size_t>(grid) + 1);
        int best = -1;
        double best_m = -std::numeric_limits<double>::infinity();
        mus[0] = mu0_;
        for (int i = 1; i <= grid; ++i) {
            mus[i] = mu0_ * std::pow(ratio, static_cast<double>(i) / grid);
            const double m = check(mus[i]);
            if (m > best_m) {
                best_m = m;
                best = i;
            }
        }
        if (best > 0 && best_m < -params_.tol) {
            const double lo = mus[best - 1];
            const double hi = best < grid ? mus[best + 1] : mus[best];
            for (int j = 1; j < refine_points; ++j) {
                check(lo * std::pow(hi / lo, static_cast<double>(j) / refine_points));
            }
        }
        return recovered;
    }

    const Norm& n_;
    const FarthestVoronoiDiagram& d_;
    const VoronoiParams& params_;
    double diam_;
    std::size_t a_, b_;
    Vec2 sa_, sb_;
    double mu0_;
};

} // namespace

FarthestVoronoiDiagram farthest_voronoi(const Norm& n, const PointSet& points, const VoronoiParams& params) {
    if (points.empty()) throw EmptyInput("farthest_voronoi: empty point set");
    FarthestVoronoiDiagram d;
    d.site_indices = convex_hull_indices(points.points());
    if (d.site_indices.size() > voronoi_site_limit) {
        throw SizeLimit("farthest_voronoi: " + std::to_string(d.site_indices.size()) +
                        " hull sites exceed the limit of " + std::to_string(voronoi_site_limit));
    }
    for (std::size_t i : d.site_indices) d.sites.push_back(points[i]);
    const std::size_t m = d.sites.size();
    if (m < 2) return d;

    const auto [da, db] = diameter_pair(n, d.sites);
    const double diam = n(d.sites[da] - d.sites[db]);
    const double scale = bounding_scale(points.points());
    const double tol = params.tol;

    // Vertices.
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) triples.push_back({i, j, k});

    std::vector<TripleResult> found(triples.size());
    detail::parallel_for(triples.size(), params.threads, [&](std::size_t t) {
        const auto [i, j, k] = triples[t];
        const Triangle tri{d.sites[i], d.sites[j], d.sites[k]};
        if (detail::is_degenerate(tri)) {
            found[t].no_center = true;
            return;
        }
        const auto c = circumcenter(n, tri);
        if (!c) {
            found[t].no_center = true;
            return;
        }
        const double r = n(*c - tri[0]);
        for (const Vec2& q : points.points()) {
            if (n(*c - q) > r * (1.0 + tol)) return;
        }
        VoronoiVertex v{*c, {}, r};
        for (std::size_t s = 0; s < m; ++s) {
            if (std::abs(n(*c - d.sites[s]) - r) <= tol * r) v.defining.push_back(s);
        }
        found[t].vertex = std::move(v);
    });

    for (auto& f : found) {
        if (f.no_center) ++d.triples_without_circumcenter;
        if (!f.vertex) continue;
        const bool seen = std::any_of(d.vertices.begin(), d.vertices.end(), [&](const VoronoiVertex& v) {
            return v.defining == f.vertex->defining && euclid(v.location - f.vertex->location) <= 1e-6 * scale;
        });
        if (!seen) d.vertices.push_back(std::move(*f.vertex));
    }

    // Edges.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    std::vector<PairResult> per_pair(pairs.size());
    detail::parallel_for(pairs.size(), params.threads, [&](std::size_t p) {
        per_pair[p] = PairProber(n, d, params, diam, pairs[p].first, pairs[p].second).run();
    });
    for (auto& r : per_pair) {
        d.scan_recovered_intervals += r.recovered;
        for (auto& e : r.edges) d.edges.push_back(std::move(e));
    }
    return d;
}

SolveReport solve_sh(const Norm& n, const PointSet& points, double tol, const VoronoiParams& params) {
    if (points.empty()) throw EmptyInput("solve_sh: empty point set");
    SolveReport r;
    r.algorithm = Algorithm::shamos_hoey;
    if (points.size() == 1) {
        r.disk = Disk{points[0], 0.0, n};
        r.support = {points[0]};
        r.support_indices = {0};
        return r;
    }

    const FarthestVoronoiDiagram d = farthest_voronoi(n, points, params);
    r.triples_without_circumcenter = d.triples_without_circumcenter;
    if (d.edges.empty()) throw InternalInconsistency("solve_sh: diagram has no edges");

    const VoronoiEdge* widest = nullptr;
    double widest_d = -1.0;
    for (const auto& e : d.edges) {
        const double len = n(d.sites[e.pair[0]] - d.sites[e.pair[1]]);
        if (len > widest_d) {
            widest_d = len;
            widest = &e;
        }
    }
    const Disk pair_disk = two_point_disk(n, d.sites[widest->pair[0]], d.sites[widest->pair[1]]);
    Iteration it;
    if (encloses(pair_disk, points, tol)) {
        r.disk = pair_disk;
        it.kind = StepKind::two_point;
        for (std::size_t s : widest->pair) {
            it.active.push_back(d.site_indices[s]);
            it.active_points.push_back(d.sites[s]);
        }
    } else {
        const VoronoiVertex* best = nullptr;
        for (const auto& v : d.vertices) {
            if (!best || v.distance < best->distance) best = &v;
        }
        if (!best) {
            throw InternalInconsistency("solve_sh: widest edge pair does not cover P and the diagram has no vertex");
        }
        double radius = 0.0;
        for (const Vec2& q : points.points()) radius = std::max(radius, n(best->location - q));
        if (radius > best->distance * (1.0 + std::max(tol, params.tol))) {
            throw InternalInconsistency("solve_sh: closest vertex disk does not cover P");
        }
        r.disk = Disk{best->location, radius, n};
        it.kind = StepKind::circumdisk;
        for (std::size_t s : best->defining) {
            it.active.push_back(d.site_indices[s]);
            it.active_points.push_back(d.sites[s]);
        }
    }
    it.center = r.disk.center;
    it.radius = r.disk.radius;
    r.iterations.push_back(std::move(it));
    fill_support(r, points, tol);
    return r;
}

void write_diagram(std::ostream& os, const FarthestVoronoiDiagram& d) {
    os << "sites " << d.sites.size() << '\n';
    for (std::size_t s = 0; s < d.sites.size(); ++s) {
        os << "site " << s << ' ' << format_double(d.sites[s].x) << ' ' << format_double(d.sites[s].y) << " point "
           << d.site_indices[s] << '\n';
    }
    os << "vertices " << d.vertices.size() << '\n';
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        const auto& vx = d.vertices[v];
        os << "vertex " << v << ' ' << format_double(vx.location.x) << ' ' << format_double(vx.location.y)
           << " distance " << format_double(vx.distance) << " defining";
        for (std::size_t s : vx.defining) os << ' ' << s;
        os << '\n';
    }
    os << "edges " << d.edges.size() << '\n';
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
        os << "edge " << e << " pair " << d.edges[e].pair[0] << ' ' << d.edges[e].pair[1] << " endpoints";
        for (std::size_t v : d.edges[e].endpoints) os << ' ' << v;
        os << '\n';
    }
}

} // namespace medisk
