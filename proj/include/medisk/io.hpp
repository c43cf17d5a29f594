#pragma once

#include "medisk/primitives.hpp"
#include "medisk/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace medisk {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

/// One point per line, two numbers separated by a comma and/or whitespace.
/// Blank lines and lines starting with '#' are skipped. Throws ParseError
/// naming the offending line.
std::vector<Vec2> read_points(std::istream& in);
std::vector<Vec2> read_points_file(const std::string& path);

/// n points uniform in [-1, 1]^2 from mt19937_64 seeded with `seed`.
std::vector<Vec2> generate_points(std::size_t n, std::uint64_t seed);

/// Flat key=value document:
///   algorithm, center_x, center_y, radius, support_count,
///   support_<i>_x, support_<i>_y, support_<i>_index, iterations
/// Numbers are written with format_double, so parsing is exact.
void write_structured(std::ostream& os, const SolveReport& report);

struct StructuredResult {
    std::string algorithm;
    Vec2 center;
    double radius = 0.0;
    std::vector<Vec2> support;
    std::vector<std::size_t> support_indices;
    std::size_t iterations = 0;
    std::map<std::string, std::string> extra;  ///< keys not listed above
};

/// Inverse of write_structured. Throws ParseError.
StructuredResult read_structured(std::istream& in);

/// Points, the disk boundary as a 256-vertex polyline, and the unit ball
/// translated next to the data for scale. Padding is 10% of the bounding box.
void write_svg(std::ostream& os, const PointSet& points, const Disk& disk);

} // namespace medisk
