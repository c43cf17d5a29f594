#pragma once

#include "medisk/norm.hpp"
#include "medisk/primitives.hpp"

#include <array>
#include <cstddef>
#include <optional>

namespace medisk {

using Triangle = std::array<Vec2, 3>;

enum class Verdict { acute, right, obtuse };

enum class TriangleType { norm_obtuse, norm_right, norm_acute, degenerate };

struct TriangleClassification {
    std::array<Verdict, 3> per_vertex{};
    TriangleType aggregate = TriangleType::degenerate;
};

inline constexpr double default_classify_eps = 1e-9;

/// Thales-style test at vertex k: compares L = ||p_k - (p_i + p_j)/2|| with
/// R = ||p_i - p_j|| / 2. `right` when |L - R| <= eps * max(1, R).
/// Throws DegenerateTriangle for coincident or collinear vertices.
Verdict classify_vertex(const Norm& n, const Triangle& tri, std::size_t k, double eps = default_classify_eps);

/// Per-vertex verdicts and the aggregate type. Throws DegenerateTriangle, and
/// StrictConvexityViolation if two vertices come out right.
TriangleClassification classify_triangle(const Norm& n, const Triangle& tri, double eps = default_classify_eps);

/// 1e-11 times the largest side length.
double default_circumcenter_tol(const Norm& n, const Triangle& tri);

/// The point equidistant from all three vertices, if one exists with radius
/// at most 64 times the triangle's diameter.
///
/// The search runs along the bisector of the longest side, parametrized by
/// the common distance mu, first in the half-plane containing the third
/// vertex and then in the opposite one. A missing circumcenter of a
/// norm-acute triangle is a ConvergenceFailure; for other triangles it is
/// reported as nullopt.
std::optional<Vec2> circumcenter(const Norm& n, const Triangle& tri, std::optional<double> tol = std::nullopt);

std::optional<Disk> circumdisk(const Norm& n, const Triangle& tri, std::optional<double> tol = std::nullopt);

namespace detail {

/// (L - R) / max(1, R) at vertex k, without any degeneracy check. Positive
/// means acute. For a collinear triple the middle vertex is negative.
double acuteness_margin(const Norm& n, const Triangle& tri, std::size_t k);

Verdict verdict_from_margin(double margin, double eps);

bool is_degenerate(const Triangle& tri);

} // namespace detail

} // namespace medisk
