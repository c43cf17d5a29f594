#pragma once

// Test-only reference computations and instance generators.

#include "medisk/primitives.hpp"
#include "medisk/vec2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace medisk::testing {

/// Classical circumcenter from the perpendicular-bisector linear system.
inline Vec2 euclidean_circumcenter(Vec2 a, Vec2 b, Vec2 c) {
    const Vec2 ab = b - a, ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    const double ab2 = dot(ab, ab), ac2 = dot(ac, ac);
    return a + Vec2{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
}

/// Smallest interior angle in degrees.
inline double min_angle_deg(Vec2 a, Vec2 b, Vec2 c) {
    auto angle = [](Vec2 at, Vec2 u, Vec2 v) {
        const Vec2 x = u - at, y = v - at;
        return std::atan2(std::abs(cross(x, y)), dot(x, y));
    };
    const double m = std::min({angle(a, b, c), angle(b, c, a), angle(c, a, b)});
    return m * 180.0 / std::numbers::pi;
}

inline std::vector<Vec2> uniform_points(std::mt19937_64& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<Vec2> out(n);
    for (auto& p : out) {
        p.x = u(rng);
        p.y = u(rng);
    }
    return out;
}

/// max over points of n(x - p).
inline double spread(const Norm& n, std::span<const Vec2> points, Vec2 x) {
    double f = 0.0;
    for (const Vec2& p : points) f = std::max(f, n(x - p));
    return f;
}

/// Euclidean distance from x to co(support); 0 inside. Uses the hull of the
/// support, so any support size >= 1 works.
inline double distance_to_hull(std::span<const Vec2> support, Vec2 x) {
    auto seg_dist = [](Vec2 a, Vec2 b, Vec2 p) {
        const Vec2 ab = b - a;
        const double len2 = dot(ab, ab);
        const double t = len2 > 0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
        return euclid(p - (a + t * ab));
    };
    const auto hull = convex_hull(support);
    if (hull.size() == 1) return euclid(x - hull[0]);
    if (hull.size() == 2) return seg_dist(hull[0], hull[1], x);
    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Vec2 a = hull[i], b = hull[(i + 1) % hull.size()];
        if (cross(b - a, x - a) < 0) inside = false;
        best = std::min(best, seg_dist(a, b, x));
    }
    return inside ? 0.0 : best;
}

/// Solves w = lambda * u + nu * v for (lambda, nu).
inline std::pair<double, double> solve2(Vec2 u, Vec2 v, Vec2 w) {
    const double det = cross(u, v);
    return {cross(w, v) / det, cross(u, w) / det};
}

} // namespace medisk::testing
