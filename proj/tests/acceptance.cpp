// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include "cli.hpp"
#include "support.hpp"

#include "medisk/bisector.hpp"
#include "medisk/elzinga_hearn.hpp"
#include "medisk/errors.hpp"
#include "medisk/oracle.hpp"
#include "medisk/shamos_hoey.hpp"
#include "medisk/triangle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace medisk;
using namespace medisk::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Shared by criteria 3, 4 and 5.
struct AgreementRun {
    std::size_t instances = 0;
    double max_radius_rel = 0.0;
    double max_center_abs = 0.0;
    double seconds = 0.0;
    std::vector<SolveReport> reports;  // every solve, for the invariant checks
    std::string first_error;
};

AgreementRun run_agreement() {
    AgreementRun run;
    const auto t0 = Clock::now();
    const double ps[] = {1.5, 2.0, 3.0, 4.0};
    for (std::size_t pi = 0; pi < 4; ++pi) {
        const Norm n = Norm::lp(ps[pi]);
        for (std::size_t size = 3; size <= 12; ++size) {
            for (std::size_t k = 0; k < 50; ++k) {
                std::mt19937_64 rng(1'000'000 * (pi + 1) + 1000 * size + k);
                const PointSet pts(uniform_points(rng, size));
                ++run.instances;
                try {
                    SolveReport eh = solve_eh(n, pts);
                    SolveReport sh = solve_sh(n, pts);
                    SolveReport en = solve_enumeration(n, pts);
                    for (const SolveReport* r : {&eh, &sh}) {
                        const double rel = std::abs(r->disk.radius - en.disk.radius) / en.disk.radius;
                        const double cen = std::max(std::abs(r->disk.center.x - en.disk.center.x),
                                                    std::abs(r->disk.center.y - en.disk.center.y));
                        run.max_radius_rel = std::max(run.max_radius_rel, rel);
                        run.max_center_abs = std::max(run.max_center_abs, cen);
                        if ((rel > 1e-7 || cen > 1e-6) && run.first_error.empty()) {
                            std::ostringstream os;
                            os << to_string(r->algorithm) << " disagrees on p=" << ps[pi] << " n=" << size
                               << " k=" << k << " (radius rel " << rel << ", center " << cen << ")";
                            run.first_error = os.str();
                        }
                    }
                    run.reports.push_back(std::move(eh));
                    run.reports.push_back(std::move(sh));
                    run.reports.push_back(std::move(en));
                } catch (const std::exception& e) {
                    if (run.first_error.empty()) {
                        std::ostringstream os;
                        os << "p=" << ps[pi] << " n=" << size << " k=" << k << ": " << e.what();
                        run.first_error = os.str();
                    }
                    run.max_radius_rel = std::numeric_limits<double>::infinity();
                }
            }
        }
    }
    run.seconds = seconds_since(t0);
    return run;
}

Outcome criterion1() {
    const Norm l4 = Norm::lp(4.0);
    const Verdict obtuse = classify_vertex(l4, {{{-1, 0}, {1, 0}, {0.2, 0.5}}}, 2, 1e-9);
    const Verdict acute = classify_vertex(l4, {{{7, 0}, {9, 0}, {8.2, 1.5}}}, 2, 1e-9);
    // Third vertex on the l4 unit circle about the midpoint (0, 0).
    const double y = std::pow(1.0 - std::pow(0.2, 4), 0.25);
    const Verdict right = classify_vertex(l4, {{{-1, 0}, {1, 0}, {0.2, y}}}, 2, 1e-9);
    Outcome o;
    o.pass = obtuse == Verdict::obtuse && acute == Verdict::acute && right == Verdict::right;
    o.detail = "l4 angle at vertex p3 is obtuse, acute and right as expected";
    if (!o.pass) o.detail = "unexpected verdicts";
    return o;
}

Outcome criterion2() {
    const auto t0 = Clock::now();
    const Norm l2 = Norm::lp(2.0);
    std::mt19937_64 rng(20240607);
    double worst = 0.0;
    std::size_t count = 0;
    Outcome o;
    while (count < 1000) {
        const auto v = uniform_points(rng, 3);
        if (min_angle_deg(v[0], v[1], v[2]) < 2.0) continue;
        ++count;
        const auto c = circumcenter(l2, {{v[0], v[1], v[2]}});
        if (!c) {
            o.pass = false;
            o.detail = "no circumcenter found";
            return o;
        }
        const Vec2 ref = euclidean_circumcenter(v[0], v[1], v[2]);
        worst = std::max({worst, std::abs(c->x - ref.x), std::abs(c->y - ref.y)});
    }
    const double secs = seconds_since(t0);
    o.pass = worst <= 1e-8 && secs < 5.0;
    std::ostringstream os;
    os << "max coordinate error " << worst << " over 1000 triangles in " << secs << " s";
    o.detail = os.str();
    return o;
}

Outcome criterion3(const AgreementRun& run) {
    Outcome o;
    o.pass = run.first_error.empty() && run.max_radius_rel <= 1e-7 && run.max_center_abs <= 1e-6 &&
             run.seconds < 120.0;
    std::ostringstream os;
    os << run.instances << " instances, max radius rel " << run.max_radius_rel << ", max center "
       << run.max_center_abs << ", " << run.seconds << " s";
    if (!run.first_error.empty()) os << "; " << run.first_error;
    o.detail = os.str();
    return o;
}

Outcome criterion4(const AgreementRun& run) {
    Outcome o;
    double worst_hull = 0.0, worst_mid = 0.0;
    std::size_t min_support = std::numeric_limits<std::size_t>::max();
    for (const auto& r : run.reports) {
        min_support = std::min(min_support, r.support.size());
        worst_hull = std::max(worst_hull, distance_to_hull(r.support, r.disk.center));
        if (r.support.size() == 2) {
            const Vec2 m = midpoint(r.support[0], r.support[1]);
            worst_mid = std::max({worst_mid, std::abs(m.x - r.disk.center.x), std::abs(m.y - r.disk.center.y)});
        }
    }
    o.pass = !run.reports.empty() && min_support >= 2 && worst_hull <= 1e-7 && worst_mid <= 1e-8;
    std::ostringstream os;
    os << run.reports.size() << " solves, min support " << min_support << ", max hull distance " << worst_hull
       << ", max midpoint error " << worst_mid;
    o.detail = os.str();
    return o;
}

Outcome criterion5(const AgreementRun& run) {
    Outcome o;
    std::size_t traces = 0, steps = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& r : run.reports) {
        if (r.algorithm != Algorithm::elzinga_hearn) continue;
        ++traces;
        for (std::size_t i = 1; i < r.iterations.size(); ++i) {
            ++steps;
            worst = std::min(worst, r.iterations[i].radius - r.iterations[i - 1].radius);
        }
    }
    bool random_ok = traces > 0 && worst > -1e-12;

    // Constructed cases: starting from the first two points forces several
    // steps, each of which must grow the radius by at least 1e-12 * r.
    const std::vector<std::pair<double, std::vector<Vec2>>> cases{
        {2.0, {{0, 0}, {2, 0}, {1, 5}}},
        {4.0, {{-1, 0}, {1, 0}, {0.2, 0.5}, {0, 2}, {-3, 1}}},
        {3.0, {{0, 0}, {1, 0}, {0.5, 0.1}, {3, 3}, {-2, 4}, {1, -3}}},
        {1.5, {{0, 0}, {0.5, 0}, {1, 2}, {-1, 2}, {0, -2}, {2.5, 0.3}}},
        {4.0, {{0, 0}, {0.1, 0}, {0, 1}, {1, 1}, {2, -1}, {-2, -1}, {0, 3}}},
    };
    std::size_t constructed_steps = 0;
    bool constructed_ok = true;
    for (const auto& [p, pts] : cases) {
        EhOptions opt;
        opt.initial = InitialPair::first_two;
        const SolveReport r = solve_eh(Norm::lp(p), PointSet(pts), opt);
        for (std::size_t i = 1; i < r.iterations.size(); ++i) {
            ++constructed_steps;
            const double prev = r.iterations[i - 1].radius;
            if (r.iterations[i].radius - prev < 1e-12 * prev) constructed_ok = false;
        }
    }
    o.pass = random_ok && constructed_ok && constructed_steps > 0;
    std::ostringstream os;
    os << traces << " traces, " << steps << " steps, smallest increment " << (steps ? worst : 0.0) << "; "
       << constructed_steps << " constructed steps " << (constructed_ok ? "strictly increasing" : "NOT increasing");
    o.detail = os.str();
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(606);
    double worst_radius = 0.0, worst_cone = std::numeric_limits<double>::infinity();
    double min_sep = std::numeric_limits<double>::infinity();
    std::size_t pairs = 0;
    for (double p : {1.5, 4.0}) {
        const Norm n = Norm::lp(p);
        for (int k = 0; k < 100; ++k) {
            const auto v = uniform_points(rng, 2);
            const Vec2 p1 = v[0], p2 = v[1];
            const double mu0 = 0.5 * n(p1 - p2);
            if (mu0 < 1e-3) {
                --k;
                continue;
            }
            ++pairs;
            std::vector<Vec2> xs;
            for (int i = 1; i <= 20; ++i) {
                const double mu = mu0 * (1.0 + 7.0 * i / 20.0);
                const Vec2 x = bisector_point(n, {p1, p2, mu, HalfPlane::plus}, 1e-11);
                worst_radius = std::max({worst_radius, std::abs(n(x - p1) - mu), std::abs(n(x - p2) - mu)});
                xs.push_back(x);
            }
            for (std::size_t i = 0; i < xs.size(); ++i) {
                for (std::size_t j = 0; j < xs.size(); ++j) {
                    if (i == j) continue;
                    min_sep = std::min(min_sep, euclid(xs[i] - xs[j]));
                    const auto [lambda, nu] = solve2(xs[i] - p1, xs[i] - p2, xs[j] - xs[i]);
                    worst_cone = std::min(worst_cone, lambda * nu);
                }
            }
        }
    }
    o.pass = worst_radius <= 1e-9 && min_sep > 0.0 && worst_cone > -1e-9;
    std::ostringstream os;
    os << pairs << " pairs x 20 radii, max radius error " << worst_radius << ", min separation " << min_sep
       << ", min lambda*nu " << worst_cone;
    o.detail = os.str();
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::vector<std::string> failures;
    const Norm l3 = Norm::lp(3.0);

    const SolveReport single = solve_eh(l3, PointSet({{0.3, -0.7}}));
    if (single.disk.radius != 0.0) failures.push_back("n=1 radius");

    const std::vector<Vec2> line{{0, 0}, {1, 1}, {3, 3}, {-2, -2}, {0.5, 0.5}};
    const Disk expect = two_point_disk(l3, {-2, -2}, {3, 3});
    for (const SolveReport& r : {solve_eh(l3, PointSet(line)), solve_sh(l3, PointSet(line)),
                                 solve_enumeration(l3, PointSet(line))}) {
        if (std::abs(r.disk.radius - expect.radius) > 1e-12 * expect.radius ||
            euclid(r.disk.center - expect.center) > 1e-12) {
            failures.push_back(std::string("collinear ") + std::string(to_string(r.algorithm)));
        }
    }

    std::mt19937_64 rng(77);
    auto pts = uniform_points(rng, 9);
    auto with_dups = pts;
    with_dups.push_back(pts[2]);
    with_dups.push_back(pts[5]);
    with_dups.push_back(pts[2]);
    const PointSet clean(pts), dup(with_dups);
    if (dup.size() != clean.size() || dup.duplicates_removed() != 3) failures.push_back("dedup count");
    const SolveReport a = solve_eh(l3, clean), b = solve_eh(l3, dup);
    if (a.disk.radius != b.disk.radius || !(a.disk.center == b.disk.center)) failures.push_back("dedup result");

    for (const char* spec : {"p:1", "p:inf"}) {
        cli::RunConfig c;
        c.norm_spec = spec;
        c.generate = 5;
        std::ostringstream out, err;
        const int code = cli::run(c, out, err);
        if (code != 4 || err.str().find("strictly convex") == std::string::npos) {
            failures.push_back(std::string(spec) + " exit " + std::to_string(code));
        }
    }

    o.pass = failures.empty();
    o.detail = "n=1, collinear, duplicates, p:1 and p:inf";
    for (const auto& f : failures) o.detail += "; failed " + f;
    return o;
}

Outcome criterion8() {
    Outcome o;
    const Norm l3 = Norm::lp(3.0);
    std::mt19937_64 rng(8);
    const PointSet big(uniform_points(rng, 500));
    auto t0 = Clock::now();
    const SolveReport eh = solve_eh(l3, big);
    const double eh_s = seconds_since(t0);

    // 60 points in convex position on an ellipse.
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<Vec2> ring;
    while (ring.size() < 60) {
        const double t = angle(rng);
        ring.push_back({std::cos(t), 0.6 * std::sin(t)});
    }
    const PointSet hull(ring);
    t0 = Clock::now();
    const SolveReport sh = solve_sh(l3, hull);
    const double sh_s = seconds_since(t0);
    const std::size_t sites = convex_hull_indices(hull.points()).size();
    const double ref = solve_eh(l3, hull).disk.radius;

    o.pass = eh_s < 2.0 && sites == 60 && sh_s < 30.0 && std::abs(sh.disk.radius - ref) <= 1e-7 * ref &&
             eh.disk.radius > 0.0;
    std::ostringstream os;
    os << "solve_eh n=500 in " << eh_s << " s; solve_sh with " << sites << " sites in " << sh_s << " s";
    o.detail = os.str();
    return o;
}

} // namespace

int main() {
    bool all = true;
    auto report = [&](int id, const char* name, const std::function<Outcome()>& check) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        all = all && o.pass;
        std::printf("[%s] criterion %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
        std::fflush(stdout);
    };

    report(1, "triangle classification figure", criterion1);
    report(2, "euclidean circumcenter cross-validation", criterion2);
    AgreementRun run;
    report(3, "cross-algorithm agreement", [&] {
        run = run_agreement();
        return criterion3(run);
    });
    report(4, "support invariants", [&] { return criterion4(run); });
    report(5, "elzinga-hearn monotonicity", [&] { return criterion5(run); });
    report(6, "bisector parametrization", criterion6);
    report(7, "degenerate handling", criterion7);
    report(8, "performance", criterion8);
    return all ? 0 : 1;
}
