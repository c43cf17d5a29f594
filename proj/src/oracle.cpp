#include "medisk/oracle.hpp"

#include "medisk/errors.hpp"
#include "medisk/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace medisk {

std::vector<CandidateDisk> enumerate_candidates(const Norm& n, const PointSet& points, double tol,
                                                std::size_t* skipped) {
    std::vector<CandidateDisk> out;
    std::size_t none = 0;
    double best = std::numeric_limits<double>::infinity();
    const std::size_t m = points.size();

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            CandidateDisk c;
            c.kind = CandidateDisk::Kind::pair;
            c.indices = {i, j, j};
            c.disk = two_point_disk(n, points[i], points[j]);
            c.feasible = encloses(c.disk, points, tol);
            if (c.feasible) best = std::min(best, c.disk.radius);
            out.push_back(std::move(c));
        }
    }
    if (m == 1) {
        out.push_back({CandidateDisk::Kind::pair, {0, 0, 0}, Disk{points[0], 0.0, n}, true});
    }

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) {
                const Triangle tri{points[i], points[j], points[k]};
                const double half_diam = 0.5 * std::max({n(tri[0] - tri[1]), n(tri[1] - tri[2]), n(tri[0] - tri[2])});
                if (half_diam > best) continue;
                if (detail::is_degenerate(tri)) {
                    ++none;
                    continue;
                }
                const auto disk = circumdisk(n, tri);
                if (!disk) {
                    ++none;
                    continue;
                }
                CandidateDisk c;
                c.kind = CandidateDisk::Kind::triple;
                c.indices = {i, j, k};
                c.disk = *disk;
                c.feasible = encloses(c.disk, points, tol);
                if (c.feasible) best = std::min(best, c.disk.radius);
                out.push_back(std::move(c));
            }
        }
    }
    if (skipped) *skipped = none;
    return out;
}

SolveReport solve_enumeration(const Norm& n, const PointSet& points, double tol) {
    if (points.empty()) throw EmptyInput("solve_enumeration: empty point set");
    if (points.size() > enumeration_size_limit) {
        throw SizeLimit("solve_enumeration: at most 400 points are supported, got " + std::to_string(points.size()));
    }

    std::size_t skipped = 0;
    const auto candidates = enumerate_candidates(n, points, tol, &skipped);
    const CandidateDisk* best = nullptr;
    for (const auto& c : candidates) {
        if (c.feasible && (!best || c.disk.radius < best->disk.radius)) best = &c;
    }
    if (!best) throw InternalInconsistency("solve_enumeration: no feasible candidate");

    // Second pass over the same set.
    for (const auto& c : candidates) {
        if (c.feasible && c.disk.radius < best->disk.radius) {
            throw InternalInconsistency("solve_enumeration: selection is not minimal");
        }
    }
    if (!encloses(best->disk, points, tol)) throw InternalInconsistency("solve_enumeration: selection infeasible");

    SolveReport r;
    r.algorithm = Algorithm::enumeration;
    r.disk = best->disk;
    r.triples_without_circumcenter = skipped;
    Iteration it;
    it.kind = best->kind == CandidateDisk::Kind::pair ? StepKind::two_point : StepKind::circumdisk;
    const std::size_t count = best->kind == CandidateDisk::Kind::pair ? 2 : 3;
    for (std::size_t v = 0; v < count && v < points.size(); ++v) {
        it.active.push_back(best->indices[v]);
        it.active_points.push_back(points[best->indices[v]]);
    }
    it.center = best->disk.center;
    it.radius = best->disk.radius;
    r.iterations.push_back(std::move(it));
    fill_support(r, points, tol);
    return r;
}

Disk solve_minimax_descent(const Norm& n, const PointSet& points, double tol) {
    if (points.empty()) throw EmptyInput("solve_minimax_descent: empty point set");
    const auto pts = points.points();

    auto farthest = [&](Vec2 x) {
        double f = 0.0;
        for (const Vec2& p : pts) f = std::max(f, n(x - p));
        return f;
    };

    Vec2 x{};
    for (const Vec2& p : pts) x += p;
    x *= 1.0 / static_cast<double>(pts.size());
    double f = farthest(x);

    constexpr int fan = 32;
    constexpr double golden = 2.399963229728653;  // pi * (3 - sqrt 5)
    double step = 0.5 * bounding_scale(pts);
    std::vector<Vec2> dirs;
    for (std::size_t iter = 0; step > tol; ++iter) {
        dirs.clear();
        Vec2 centroid{};
        int active = 0;
        for (const Vec2& p : pts) {
            if (n(x - p) >= f - step) {
                centroid += p;
                ++active;
                const Vec2 to = p - x;
                if (const double len = euclid(to); len > 0) dirs.push_back((1.0 / len) * to);
            }
        }
        centroid *= 1.0 / active;
        if (const double len = euclid(centroid - x); len > 0) {
            dirs.insert(dirs.begin(), (1.0 / len) * (centroid - x));
        }
        const double offset = golden * static_cast<double>(iter);
        for (int k = 0; k < fan; ++k) {
            const double a = offset + 2.0 * std::numbers::pi * k / fan;
            dirs.push_back({std::cos(a), std::sin(a)});
        }

        bool moved = false;
        for (const Vec2& d : dirs) {
            const Vec2 y = x + step * d;
            const double fy = farthest(y);
            if (fy < f) {
                x = y;
                f = fy;
                moved = true;
                break;
            }
        }
        if (!moved) step *= 0.5;
    }
    return Disk{x, f, n};
}

} // namespace medisk
