#pragma once

#include "medisk/norm.hpp"
#include "medisk/primitives.hpp"
#include "medisk/report.hpp"

#include <cstddef>

namespace medisk {

enum class InitialPair {
    sampled_diameter,  ///< farthest pair of a 16-point sample (exact diameter when n <= 64)
    first_two,         ///< points 0 and 1
};

enum class ViolatorRule {
    max_violation,  ///< largest norm(x - p) - radius, lowest index on ties
    first_found,    ///< lowest index among all violators
};

struct EhOptions {
    double tol = 1e-9;  ///< feasibility tolerance, relative to the radius
    InitialPair initial = InitialPair::sampled_diameter;
    ViolatorRule violator = ViolatorRule::max_violation;
    /// Hard cap on visited disks; 0 selects 100 * n + 1000. Hitting it raises
    /// InternalInconsistency since the radii must increase strictly.
    std::size_t max_iterations = 0;
};

/// Elzinga-Hearn: walks two-point disks and circumdisks of norm-acute
/// triangles with strictly increasing radius until the disk covers P.
/// A single point yields a radius-0 disk. Throws EmptyInput for empty P.
SolveReport solve_eh(const Norm& n, const PointSet& points, const EhOptions& options);
SolveReport solve_eh(const Norm& n, const PointSet& points, double tol = 1e-9);

} // namespace medisk
