#pragma once

#include "medisk/primitives.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace medisk {

enum class Algorithm { elzinga_hearn, shamos_hoey, enumeration, descent };

std::string_view to_string(Algorithm a);

enum class StepKind { two_point, circumdisk };

std::string_view to_string(StepKind k);

/// One candidate disk visited by a solver.
struct Iteration {
    StepKind kind = StepKind::two_point;
    std::vector<std::size_t> active;  ///< indices into the solved PointSet (2 or 3)
    std::vector<Vec2> active_points;
    Vec2 center;
    double radius = 0.0;
};

struct SolveReport {
    Disk disk;
    std::vector<Vec2> support;
    std::vector<std::size_t> support_indices;
    std::vector<Iteration> iterations;
    Algorithm algorithm = Algorithm::elzinga_hearn;
    /// Triples whose circumcenter search came back empty (enumeration and
    /// Voronoi construction only). These are best-effort negatives.
    std::size_t triples_without_circumcenter = 0;
};

/// Points of `points` at distance radius * (1 +- rel_tol) from the center.
void fill_support(SolveReport& report, const PointSet& points, double rel_tol);

/// max over points of norm(p - center) <= radius * (1 + rel_tol).
bool encloses(const Disk& d, const PointSet& points, double rel_tol);

} // namespace medisk
