#include "medisk/bisector.hpp"

#include "medisk/detail/root_finding.hpp"
#include "medisk/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace medisk {

namespace {

constexpr int scan_samples = 64;
constexpr std::size_t refine_budget = 200;
constexpr double boundary_band = 1e-12;
constexpr double param_xtol = 4.0 * std::numeric_limits<double>::epsilon();

// Root of h between the circle points p1 + a and p1 + b, refined in the polar
// angle of x - p1. The unit-circle parametrization has unbounded speed at the
// axes for p > 2, so refining in its parameter can stall short of tol; the
// polar angle moves the point at bounded speed for every p. The refinement
// runs to angular resolution: near the midpoint the two circles cross at a
// shallow angle, and stopping at |h| <= tol would leave x far from the true
// intersection along the bisector.
Vec2 refine(const Norm& n, const BisectorQuery& q, Vec2 a, Vec2 b, double ha, double hb, double tol) {
    const double phi_a = std::atan2(a.y, a.x);
    const double phi_b = phi_a + std::atan2(cross(a, b), dot(a, b));  // signed turn, |turn| < pi
    auto point_at = [&](double phi) {
        const Vec2 dir{std::cos(phi), std::sin(phi)};
        return q.p1 + (q.mu / n(dir)) * dir;
    };
    auto h = [&](double phi) { return n(point_at(phi) - q.p2) - q.mu; };
    const auto root = detail::brent_root(h, phi_a, phi_b, ha, hb, param_xtol, 0.0, refine_budget);
    if (!root.converged || std::abs(root.fx) > tol) {
        throw ConvergenceFailure("bisector_point: refinement did not converge to the requested tolerance");
    }
    return point_at(root.x);
}

} // namespace

double default_bisector_tol(double mu) { return 1e-10 * std::max(1.0, mu); }

Vec2 bisector_point(const Norm& n, const BisectorQuery& q, std::optional<double> tol_opt) {
    if (q.p1 == q.p2) throw std::invalid_argument("bisector_point: p1 and p2 coincide");
    const double tol = tol_opt.value_or(default_bisector_tol(q.mu));
    const Vec2 d = q.p2 - q.p1;
    const double half = 0.5 * n(d);

    if (q.mu < half - tol) {
        std::ostringstream msg;
        msg << "bisector_point: radius " << q.mu << " is below half the distance " << half;
        throw NoIntersection(msg.str());
    }
    if (q.mu <= half * (1.0 + boundary_band)) return midpoint(q.p1, q.p2);

    // The half of S(p1, mu) in the requested half-plane runs between the
    // parameters pointing along +d (x inside the segment side, h < 0) and
    // along -d (x behind p1, h = ||d|| > 0).
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double start = n.parameter_of(d);
    const double back = n.parameter_of(-d);
    double ccw_span = std::fmod(back - start, two_pi);
    if (ccw_span <= 0) ccw_span += two_pi;
    const bool ccw_is_left = cross(d, n.unit_circle_point(start + 0.5 * ccw_span)) > 0;
    const bool want_left = q.side == HalfPlane::plus;
    const double span = (ccw_is_left == want_left) ? ccw_span : ccw_span - two_pi;

    auto point_at = [&](double t) { return q.p1 + q.mu * n.unit_circle_point(start + t * span); };
    auto h = [&](double t) { return n(point_at(t) - q.p2) - q.mu; };

    double t0 = 0.0;
    double h0 = h(t0);
    for (int i = 1; i <= scan_samples; ++i) {
        const double t1 = static_cast<double>(i) / scan_samples;
        const double h1 = h(t1);
        if (h0 <= 0 && h1 > 0) {
            if (h0 == 0.0) return point_at(t0);
            return refine(n, q, point_at(t0) - q.p1, point_at(t1) - q.p1, h0, h1, tol);
        }
        t0 = t1;
        h0 = h1;
    }
    throw ConvergenceFailure("bisector_point: no sign change on the half circle");
}

} // namespace medisk
