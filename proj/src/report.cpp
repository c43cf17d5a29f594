#include "medisk/report.hpp"

#include <cmath>

namespace medisk {

std::string_view to_string(Algorithm a) {
    switch (a) {
    case Algorithm::elzinga_hearn: return "elzinga_hearn";
    case Algorithm::shamos_hoey: return "shamos_hoey";
    case Algorithm::enumeration: return "enumeration";
    case Algorithm::descent: return "descent";
    }
    return "unknown";
}

std::string_view to_string(StepKind k) {
    return k == StepKind::two_point ? "two_point" : "circumdisk";
}

void fill_support(SolveReport& report, const PointSet& points, double rel_tol) {
    report.support.clear();
    report.support_indices.clear();
    const Disk& d = report.disk;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (std::abs(d.norm(points[i] - d.center) - d.radius) <= rel_tol * d.radius) {
            report.support.push_back(points[i]);
            report.support_indices.push_back(i);
        }
    }
}

bool encloses(const Disk& d, const PointSet& points, double rel_tol) {
    for (const Vec2& p : points.points()) {
        if (!disk_contains(d, p, rel_tol * d.radius)) return false;
    }
    return true;
}

} // namespace medisk
