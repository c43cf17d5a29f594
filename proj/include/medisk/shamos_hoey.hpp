#pragma once

#include "medisk/norm.hpp"
#include "medisk/primitives.hpp"
#include "medisk/report.hpp"

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

namespace medisk {

inline constexpr std::size_t voronoi_site_limit = 60;

struct VoronoiVertex {
    Vec2 location;
    std::vector<std::size_t> defining;  ///< site indices, ascending, at least 3
    double distance = 0.0;              ///< common distance to the defining sites
};

struct VoronoiEdge {
    std::array<std::size_t, 2> pair{};  ///< site indices, ascending
    std::vector<std::size_t> endpoints;  ///< 0-2 vertex indices; fewer than 2 means unbounded
};

/// Farthest-point Voronoi diagram. Sites are the extreme points of co(P) in
/// counterclockwise order; every other point has an empty region.
struct FarthestVoronoiDiagram {
    std::vector<Vec2> sites;
    std::vector<std::size_t> site_indices;  ///< index of each site in the input PointSet
    std::vector<VoronoiVertex> vertices;
    std::vector<VoronoiEdge> edges;
    std::size_t triples_without_circumcenter = 0;
    /// Intervals accepted only by the grid scan, not by the vertex structure.
    /// Non-zero values point at a missed vertex.
    std::size_t scan_recovered_intervals = 0;
};

struct VoronoiParams {
    /// Geometric grid size for the per-half safety scan of each site pair; 0 disables it.
    int grid = 128;
    /// Relative tolerance for "equally farthest".
    double tol = 1e-8;
    /// Worker threads for the per-triple and per-pair loops; 0 picks automatically.
    unsigned threads = 0;
};

/// Naive construction: vertices from all site triples with a circumcenter
/// that no point of P lies beyond; edges from probing each site pair's
/// bisector between consecutive vertices (and far out on both rays).
/// Throws EmptyInput, or SizeLimit above 60 sites.
FarthestVoronoiDiagram farthest_voronoi(const Norm& n, const PointSet& points, const VoronoiParams& params = {});

/// Shamos-Hoey: the two-point disk of the farthest-apart edge pair if it
/// covers P, else the diagram vertex closest to its defining sites. Throws
/// EmptyInput, SizeLimit, or InternalInconsistency if neither branch gives a
/// covering disk.
SolveReport solve_sh(const Norm& n, const PointSet& points, double tol = 1e-9, const VoronoiParams& params = {});

/// Plain-text dump: sites, vertices with defining site indices, edges with
/// site pairs and endpoint vertex indices.
void write_diagram(std::ostream& os, const FarthestVoronoiDiagram& diagram);

} // namespace medisk
