#pragma once

#include "medisk/norm.hpp"
#include "medisk/primitives.hpp"

#include <optional>

namespace medisk {

/// Which closed half-plane bounded by the line p1 -> p2 to search:
/// `plus` is the left side, `minus` the right side.
enum class HalfPlane { plus, minus };

constexpr HalfPlane opposite(HalfPlane h) { return h == HalfPlane::plus ? HalfPlane::minus : HalfPlane::plus; }

struct BisectorQuery {
    Vec2 p1;
    Vec2 p2;
    double mu = 0.0;  ///< common distance to p1 and p2
    HalfPlane side = HalfPlane::plus;
};

/// 1e-10 * max(1, mu).
double default_bisector_tol(double mu);

/// The unique point x of bisec(p1, p2) in the requested half-plane with
/// norm(x - p1) = norm(x - p2) = mu.
///
/// Walks the circle S(p1, mu) over the half of its parametrization lying in
/// the half-plane, locates the sign change of norm(x - p2) - mu with a
/// 64-sample scan and refines it with Brent's method. At mu = ||p1 - p2|| / 2
/// (relative band 1e-12) the answer is the midpoint.
///
/// Throws NoIntersection if mu < ||p1 - p2|| / 2 - tol, ConvergenceFailure if
/// the refinement misses tol within its 200-step budget, std::invalid_argument
/// if p1 == p2.
Vec2 bisector_point(const Norm& n, const BisectorQuery& q, std::optional<double> tol = std::nullopt);

} // namespace medisk
