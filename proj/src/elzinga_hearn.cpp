#include "medisk/elzinga_hearn.hpp"

#include "medisk/errors.hpp"
#include "medisk/triangle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <random>

namespace medisk {

namespace {

constexpr std::size_t full_scan_limit = 64;
constexpr std::size_t sample_size = 16;
constexpr double on_line_band = 1e-9;

std::pair<std::size_t, std::size_t> initial_pair(const Norm& n, const PointSet& points, InitialPair rule) {
    if (rule == InitialPair::first_two) return {0, 1};
    if (points.size() <= full_scan_limit) return diameter_pair(n, points.points());

    std::vector<std::size_t> idx(points.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::mt19937 rng(0x5eedu);
    std::vector<std::size_t> sample;
    std::sample(idx.begin(), idx.end(), std::back_inserter(sample), sample_size, rng);
    std::vector<Vec2> pts;
    for (std::size_t i : sample) pts.push_back(points[i]);
    const auto [a, b] = diameter_pair(n, pts);
    return {sample[a], sample[b]};
}

std::optional<std::size_t> find_violator(const Disk& d, const PointSet& points, double tol, ViolatorRule rule) {
    const double limit = d.radius * (1.0 + tol);
    std::optional<std::size_t> best;
    double best_excess = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double dist = d.norm(points[i] - d.center);
        if (dist <= limit) continue;
        if (rule == ViolatorRule::first_found) return i;
        const double excess = dist - d.radius;
        if (!best || excess > best_excess) {
            best = i;
            best_excess = excess;
        }
    }
    return best;
}

class Walker {
public:
    Walker(const Norm& n, const PointSet& points, const EhOptions& opt) : n_(n), points_(points), opt_(opt) {
        report_.algorithm = Algorithm::elzinga_hearn;
        budget_ = opt.max_iterations ? opt.max_iterations : 100 * points.size() + 1000;
    }

    SolveReport run() {
        auto [a, b] = initial_pair(n_, points_, opt_.initial);
        std::array<std::size_t, 3> triple{};
        // Alternates between the two-point step and the triangle step.
        for (;;) {
            const Disk pair_disk = two_point_disk(n_, points_[a], points_[b]);
            record(StepKind::two_point, {a, b}, pair_disk);
            const auto p3 = find_violator(pair_disk, points_, opt_.tol, opt_.violator);
            if (!p3) return finish(pair_disk);
            triple = {a, b, *p3};

            for (;;) {
                const auto drop = non_acute_vertex(triple);
                if (drop) {
                    std::vector<std::size_t> keep;
                    for (std::size_t v = 0; v < 3; ++v) {
                        if (v != *drop) keep.push_back(triple[v]);
                    }
                    a = keep[0];
                    b = keep[1];
                    break;
                }
                const Triangle tri{points_[triple[0]], points_[triple[1]], points_[triple[2]]};
                const auto center = circumcenter(n_, tri);
                if (!center) throw ConvergenceFailure("elzinga_hearn: norm-acute triangle without circumcenter");
                const Disk disk{*center, n_(*center - tri[0]), n_};
                record(StepKind::circumdisk, {triple[0], triple[1], triple[2]}, disk);

                const auto p4 = find_violator(disk, points_, opt_.tol, opt_.violator);
                if (!p4) return finish(disk);
                triple = next_triple(triple, *p4, disk.center);
            }
        }
    }

private:
    // Vertex at which the triangle is norm-obtuse or norm-right (the most
    // obtuse one if the tolerance band admits several), or nullopt if acute.
    // Collinear triples are handled too: their middle vertex is obtuse.
    std::optional<std::size_t> non_acute_vertex(const std::array<std::size_t, 3>& t) const {
        const Triangle tri{points_[t[0]], points_[t[1]], points_[t[2]]};
        std::size_t worst = 0;
        double worst_margin = 0.0;
        for (std::size_t v = 0; v < 3; ++v) {
            const double m = detail::acuteness_margin(n_, tri, v);
            if (v == 0 || m < worst_margin) {
                worst = v;
                worst_margin = m;
            }
        }
        if (detail::verdict_from_margin(worst_margin, default_classify_eps) == Verdict::acute) return std::nullopt;
        return worst;
    }

    std::array<std::size_t, 3> next_triple(const std::array<std::size_t, 3>& t, std::size_t p4, Vec2 center) const {
        const Vec2 q4 = points_[p4];

        // p5: farthest vertex from p4, lowest input index on ties.
        std::array<std::size_t, 3> sorted = t;
        std::sort(sorted.begin(), sorted.end());
        std::size_t p5 = sorted[0];
        double far = -1.0;
        for (std::size_t v : sorted) {
            const double d = n_(q4 - points_[v]);
            if (d > far) {
                far = d;
                p5 = v;
            }
        }
        std::vector<std::size_t> others;
        for (std::size_t v : sorted) {
            if (v != p5) others.push_back(v);
        }

        // p6: the remaining vertex across the line <p5, center> from p4.
        const Vec2 q5 = points_[p5];
        std::size_t p6 = others[0];
        if (half_plane_side(q5, center, q4, on_line_band) != Side::on) {
            const double s4 = cross(center - q5, q4 - q5);
            double best = 0.0;
            for (std::size_t k = 0; k < others.size(); ++k) {
                const double s = cross(center - q5, points_[others[k]] - q5) * (s4 > 0 ? 1.0 : -1.0);
                if (k == 0 || s < best) {
                    best = s;
                    p6 = others[k];
                }
            }
        }
        return {p4, p5, p6};
    }

    void record(StepKind kind, std::vector<std::size_t> active, const Disk& d) {
        if (report_.iterations.size() >= budget_) {
            throw InternalInconsistency("elzinga_hearn: iteration budget exhausted; radii stopped increasing");
        }
        Iteration it;
        it.kind = kind;
        for (std::size_t i : active) it.active_points.push_back(points_[i]);
        it.active = std::move(active);
        it.center = d.center;
        it.radius = d.radius;
        report_.iterations.push_back(std::move(it));
    }

    SolveReport finish(const Disk& d) {
        report_.disk = d;
        fill_support(report_, points_, opt_.tol);
        return std::move(report_);
    }

    const Norm& n_;
    const PointSet& points_;
    const EhOptions& opt_;
    std::size_t budget_ = 0;
    SolveReport report_;
};

} // namespace

SolveReport solve_eh(const Norm& n, const PointSet& points, const EhOptions& options) {
    if (points.empty()) throw EmptyInput("solve_eh: empty point set");
    if (points.size() == 1) {
        SolveReport r;
        r.algorithm = Algorithm::elzinga_hearn;
        r.disk = Disk{points[0], 0.0, n};
        r.support = {points[0]};
        r.support_indices = {0};
        return r;
    }
    return Walker(n, points, options).run();
}

SolveReport solve_eh(const Norm& n, const PointSet& points, double tol) {
    EhOptions opt;
    opt.tol = tol;
    return solve_eh(n, points, opt);
}

} // namespace medisk
