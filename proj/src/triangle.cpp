#include "medisk/triangle.hpp"

#include "medisk/bisector.hpp"
#include "medisk/detail/root_finding.hpp"
#include "medisk/errors.hpp"

#include <algorithm>
#include <cmath>

namespace medisk {

namespace detail {

double acuteness_margin(const Norm& n, const Triangle& tri, std::size_t k) {
    const Vec2 pi = tri[(k + 1) % 3];
    const Vec2 pj = tri[(k + 2) % 3];
    const double l = n(tri[k] - midpoint(pi, pj));
    const double r = 0.5 * n(pi - pj);
    return (l - r) / std::max(1.0, r);
}

Verdict verdict_from_margin(double margin, double eps) {
    if (std::abs(margin) <= eps) return Verdict::right;
    return margin > 0 ? Verdict::acute : Verdict::obtuse;
}

bool is_degenerate(const Triangle& tri) {
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) return true;
    return half_plane_side(tri[0], tri[1], tri[2], 1e-12) == Side::on;
}

} // namespace detail

namespace {

void require_proper(const Triangle& tri) {
    if (detail::is_degenerate(tri)) {
        throw DegenerateTriangle("triangle has coincident or collinear vertices");
    }
}

constexpr double cap_factor = 64.0;
constexpr std::size_t refine_budget = 200;

} // namespace

Verdict classify_vertex(const Norm& n, const Triangle& tri, std::size_t k, double eps) {
    require_proper(tri);
    return detail::verdict_from_margin(detail::acuteness_margin(n, tri, k), eps);
}

TriangleClassification classify_triangle(const Norm& n, const Triangle& tri, double eps) {
    require_proper(tri);
    TriangleClassification c;
    int rights = 0, obtuses = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        c.per_vertex[k] = detail::verdict_from_margin(detail::acuteness_margin(n, tri, k), eps);
        rights += c.per_vertex[k] == Verdict::right;
        obtuses += c.per_vertex[k] == Verdict::obtuse;
    }
    if (rights >= 2) {
        throw StrictConvexityViolation("triangle is norm-right at two vertices; the norm is not strictly convex");
    }
    if (obtuses > 0) {
        c.aggregate = TriangleType::norm_obtuse;
    } else if (rights == 1) {
        c.aggregate = TriangleType::norm_right;
    } else {
        c.aggregate = TriangleType::norm_acute;
    }
    return c;
}

double default_circumcenter_tol(const Norm& n, const Triangle& tri) {
    const double d = std::max({n(tri[0] - tri[1]), n(tri[1] - tri[2]), n(tri[0] - tri[2])});
    return 1e-11 * d;
}

std::optional<Vec2> circumcenter(const Norm& n, const Triangle& tri, std::optional<double> tol_opt) {
    require_proper(tri);
    const double tol = tol_opt.value_or(default_circumcenter_tol(n, tri));

    // Base pair: the longest side.
    std::size_t k = 0;
    double longest = -1.0;
    for (std::size_t v = 0; v < 3; ++v) {
        const double side = n(tri[(v + 1) % 3] - tri[(v + 2) % 3]);
        if (side > longest) {
            longest = side;
            k = v;
        }
    }
    const Vec2 pi = tri[(k + 1) % 3];
    const Vec2 pj = tri[(k + 2) % 3];
    const Vec2 pk = tri[k];
    const double mu0 = 0.5 * longest;
    const double mu_cap = cap_factor * longest;
    const double inner_tol = 0.125 * tol;

    const double g0 = n(pk - midpoint(pi, pj)) - mu0;
    if (std::abs(g0) <= tol) return midpoint(pi, pj);

    const HalfPlane near_side =
        half_plane_side(pi, pj, pk, 0.0) == Side::left ? HalfPlane::plus : HalfPlane::minus;

    for (const HalfPlane side : {near_side, opposite(near_side)}) {
        auto point = [&](double mu) { return bisector_point(n, {pi, pj, mu, side}, inner_tol); };
        auto g = [&](double mu) { return n(pk - point(mu)) - mu; };

        double lo = mu0;
        double glo = g0;
        while (lo < mu_cap) {
            const double hi = std::min(2.0 * lo, mu_cap);
            const double ghi = g(hi);
            if (std::abs(ghi) <= tol) return point(hi);
            if ((ghi > 0) != (glo > 0)) {
                // Near mu0 the bisector point moves like sqrt(mu - mu0), so
                // refine in u = sqrt(mu - mu0) where g is smooth.
                auto gu = [&](double u) { return g(mu0 + u * u); };
                const auto root = detail::brent_root(gu, std::sqrt(lo - mu0), std::sqrt(hi - mu0), glo, ghi, 0.0,
                                                     tol, refine_budget);
                if (!root.converged) {
                    throw ConvergenceFailure("circumcenter: radius refinement exceeded its iteration budget");
                }
                return point(mu0 + root.x * root.x);
            }
            lo = hi;
            glo = ghi;
        }
    }

    const bool acute = detail::acuteness_margin(n, tri, 0) > 0 && detail::acuteness_margin(n, tri, 1) > 0 &&
                       detail::acuteness_margin(n, tri, 2) > 0;
    if (acute) throw ConvergenceFailure("circumcenter: no circumcenter found for a norm-acute triangle");
    return std::nullopt;
}

std::optional<Disk> circumdisk(const Norm& n, const Triangle& tri, std::optional<double> tol) {
    const auto c = circumcenter(n, tri, tol);
    if (!c) return std::nullopt;
    return Disk{*c, n(*c - tri[0]), n};
}

} // namespace medisk
