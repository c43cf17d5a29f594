#pragma once

#include "medisk/norm.hpp"
#include "medisk/vec2.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace medisk {

/// B(center, radius) measured in `norm`.
struct Disk {
    Vec2 center;
    double radius = 0.0;
    Norm norm;

    double diameter() const { return 2.0 * radius; }
};

/// Finite point set with exact duplicates removed (first occurrence kept).
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Vec2> points);

    std::span<const Vec2> points() const { return points_; }
    const Vec2& operator[](std::size_t i) const { return points_[i]; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool deduplicated() const { return true; }
    /// Number of input points dropped as duplicates.
    std::size_t duplicates_removed() const { return duplicates_removed_; }

private:
    std::vector<Vec2> points_;
    std::size_t duplicates_removed_ = 0;
};

enum class Side { left, right, on };

/// Smallest disk containing p and q: centered at the midpoint.
Disk two_point_disk(const Norm& n, Vec2 p, Vec2 q);

/// norm(x - center) <= radius + tol.
bool disk_contains(const Disk& d, Vec2 x, double tol);

/// Orientation of x relative to the directed line a -> b. Values of the cross
/// product within tol * |b - a| * |x - a| (Euclidean lengths) count as `on`.
/// Throws DegenerateLine if a == b.
Side half_plane_side(Vec2 a, Vec2 b, Vec2 x, double tol);

/// Indices of the extreme points of co(points), counterclockwise, starting at
/// the lowest-leftmost point. Collinear hull points are dropped.
std::vector<std::size_t> convex_hull_indices(std::span<const Vec2> points);
std::vector<Vec2> convex_hull(std::span<const Vec2> points);

/// Pair of indices with the largest norm distance (ties: lexicographically first).
std::pair<std::size_t, std::size_t> diameter_pair(const Norm& n, std::span<const Vec2> points);

/// Euclidean diagonal of the bounding box; the length scale used for tolerances.
double bounding_scale(std::span<const Vec2> points);

} // namespace medisk
