#include "medisk/primitives.hpp"

#include "medisk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace medisk {

PointSet::PointSet(std::vector<Vec2> points) {
    for (const Vec2& p : points) {
        if (!p.is_finite()) throw ParseError("point set contains a non-finite coordinate");
    }
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const Vec2 a = points[i], b = points[j];
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    std::vector<bool> keep(points.size(), true);
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (points[order[k]] == points[order[k - 1]]) keep[order[k]] = false;
    }
    points_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (keep[i]) {
            points_.push_back(points[i]);
        } else {
            ++duplicates_removed_;
        }
    }
}

Disk two_point_disk(const Norm& n, Vec2 p, Vec2 q) {
    return Disk{midpoint(p, q), 0.5 * n(p - q), n};
}

bool disk_contains(const Disk& d, Vec2 x, double tol) {
    return d.norm(x - d.center) <= d.radius + tol;
}

Side half_plane_side(Vec2 a, Vec2 b, Vec2 x, double tol) {
    if (a == b) throw DegenerateLine("half_plane_side: line through coincident points");
    const Vec2 ab = b - a;
    const Vec2 ax = x - a;
    const double c = cross(ab, ax);
    if (std::abs(c) <= tol * euclid(ab) * euclid(ax)) return Side::on;
    return c > 0 ? Side::left : Side::right;
}

std::vector<std::size_t> convex_hull_indices(std::span<const Vec2> points) {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const Vec2 a = points[i], b = points[j];
        return a.x != b.x ? a.x < b.x : (a.y != b.y ? a.y < b.y : i < j);
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](std::size_t i, std::size_t j) { return points[i] == points[j]; }),
                order.end());
    if (order.size() <= 2) return order;

    // Andrew's monotone chain; pops on non-left turns so collinear points are dropped.
    std::vector<std::size_t> hull(2 * order.size());
    std::size_t k = 0;
    auto turn = [&](std::size_t o, std::size_t a, std::size_t b) {
        return cross(points[a] - points[o], points[b] - points[o]);
    };
    for (std::size_t i : order) {
        while (k >= 2 && turn(hull[k - 2], hull[k - 1], i) <= 0) --k;
        hull[k++] = i;
    }
    const std::size_t lower = k + 1;
    for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
        while (k >= lower && turn(hull[k - 2], hull[k - 1], *it) <= 0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<Vec2> convex_hull(std::span<const Vec2> points) {
    std::vector<Vec2> out;
    for (std::size_t i : convex_hull_indices(points)) out.push_back(points[i]);
    return out;
}

std::pair<std::size_t, std::size_t> diameter_pair(const Norm& n, std::span<const Vec2> points) {
    std::pair<std::size_t, std::size_t> best{0, points.size() > 1 ? 1 : 0};
    double best_d = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double d = n(points[i] - points[j]);
            if (d > best_d) {
                best_d = d;
                best = {i, j};
            }
        }
    }
    return best;
}

double bounding_scale(std::span<const Vec2> points) {
    if (points.empty()) return 0.0;
    Vec2 lo = points[0], hi = points[0];
    for (const Vec2& p : points) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    return euclid(hi - lo);
}

} // namespace medisk
