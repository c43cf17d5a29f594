#pragma once

#include "medisk/norm.hpp"
#include "medisk/primitives.hpp"
#include "medisk/report.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace medisk {

inline constexpr std::size_t enumeration_size_limit = 400;

struct CandidateDisk {
    enum class Kind { pair, triple };
    Kind kind = Kind::pair;
    std::array<std::size_t, 3> indices{};  ///< third entry unused for pairs
    Disk disk;
    bool feasible = false;
};

/// Every two-point disk and every triple circumdisk (triples without a
/// circumcenter are skipped and counted). Triples whose half-diameter already
/// exceeds the best feasible radius are pruned, since no disk containing them
/// can be smaller.
std::vector<CandidateDisk> enumerate_candidates(const Norm& n, const PointSet& points, double tol,
                                                std::size_t* skipped = nullptr);

/// Reference solver: the smallest feasible candidate. Minimal enclosing disks
/// are two-point disks or circumdisks of three points, so the enumeration is
/// complete. Throws EmptyInput, or SizeLimit above 400 points.
SolveReport solve_enumeration(const Norm& n, const PointSet& points, double tol = 1e-9);

/// Derivative-free check of min_x max_p norm(x - p): step halving along the
/// direction to the centroid of the nearly-farthest points, backed by a fan
/// of probe directions. Starts at the coordinate mean and stops once the step
/// drops below tol. Throws EmptyInput.
Disk solve_minimax_descent(const Norm& n, const PointSet& points, double tol = 1e-9);

} // namespace medisk
