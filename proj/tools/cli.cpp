#include "cli.hpp"

#include "medisk/elzinga_hearn.hpp"
#include "medisk/errors.hpp"
#include "medisk/io.hpp"
#include "medisk/oracle.hpp"
#include "medisk/shamos_hoey.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <vector>

namespace medisk::cli {

namespace {

std::string plain(double v) {
    if (v == 0.0) v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

SolveReport descent_report(const Norm& n, const PointSet& points, double tol) {
    SolveReport r;
    r.algorithm = Algorithm::descent;
    r.disk = solve_minimax_descent(n, points, tol);
    // The descent stops at a step below tol, so its radius carries O(tol) error.
    fill_support(r, points, std::max(1e-6, 100.0 * tol));
    return r;
}

SolveReport solve(const std::string& algo, const Norm& n, const PointSet& points, double tol) {
    if (algo == "eh") return solve_eh(n, points, tol);
    if (algo == "sh") return solve_sh(n, points, tol);
    if (algo == "oracle") return solve_enumeration(n, points, tol);
    return descent_report(n, points, tol);
}

void print_plain(std::ostream& out, const SolveReport& r) {
    out << "center " << plain(r.disk.center.x) << ' ' << plain(r.disk.center.y) << " radius " << plain(r.disk.radius)
        << '\n';
    out << "algorithm " << to_string(r.algorithm) << '\n';
    out << "support " << r.support.size() << '\n';
    for (std::size_t i = 0; i < r.support.size(); ++i) {
        out << "  " << plain(r.support[i].x) << ' ' << plain(r.support[i].y);
        if (i < r.support_indices.size()) out << " (point " << r.support_indices[i] << ')';
        out << '\n';
    }
    out << "iterations " << r.iterations.size() << '\n';
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
    static const std::vector<std::string> algos{"eh", "sh", "oracle", "descent", "all"};
    if (std::find(algos.begin(), algos.end(), c.algorithm) == algos.end()) {
        err << "error: unknown algorithm '" << c.algorithm << "'\n";
        return exit_usage;
    }
    if (c.output != "plain" && c.output != "structured") {
        err << "error: unknown format '" << c.output << "'\n";
        return exit_usage;
    }
    if (!(c.tol > 0.0) || !std::isfinite(c.tol)) {
        err << "error: --tol must be positive\n";
        return exit_usage;
    }
    if (c.input_path.has_value() == c.generate.has_value()) {
        err << "error: give exactly one of --input and --generate\n";
        return exit_usage;
    }

    Norm n;
    try {
        n = parse_norm_spec(c.norm_spec);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    std::vector<Vec2> raw = c.input_path ? read_points_file(*c.input_path) : generate_points(*c.generate, c.seed);
    if (raw.empty()) throw EmptyInput("no points");
    const PointSet points(std::move(raw));

    SolveReport shown;
    if (c.algorithm == "all") {
        std::vector<SolveReport> reports;
        for (const char* a : {"eh", "sh", "oracle", "descent"}) reports.push_back(solve(a, n, points, c.tol));
        double disc = 0.0;
        for (const auto& a : reports)
            for (const auto& b : reports) disc = std::max(disc, std::abs(a.disk.radius - b.disk.radius));
        shown = reports.front();
        if (c.output == "structured") {
            write_structured(out, shown);
            for (const auto& r : reports) out << "radius_" << to_string(r.algorithm) << '=' << format_double(r.disk.radius) << '\n';
            out << "max_discrepancy=" << format_double(disc) << '\n';
        } else {
            print_plain(out, shown);
            for (const auto& r : reports) out << "radius " << to_string(r.algorithm) << ' ' << plain(r.disk.radius) << '\n';
            out << "max_discrepancy " << plain(disc) << '\n';
        }
        if (disc > 1e-7 * (1.0 + shown.disk.radius)) {
            err << "error: solvers disagree by " << plain(disc) << '\n';
            return exit_internal;
        }
    } else {
        shown = solve(c.algorithm, n, points, c.tol);
        if (c.output == "structured") {
            write_structured(out, shown);
        } else {
            print_plain(out, shown);
        }
    }

    if (c.svg_path) {
        std::ofstream svg(*c.svg_path);
        if (!svg) {
            err << "error: cannot write '" << *c.svg_path << "'\n";
            return exit_usage;
        }
        write_svg(svg, points, shown.disk);
    }
    if (c.diagram_path) {
        std::ofstream dia(*c.diagram_path);
        if (!dia) {
            err << "error: cannot write '" << *c.diagram_path << "'\n";
            return exit_usage;
        }
        write_diagram(dia, farthest_voronoi(n, points));
    }
    return exit_ok;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        return execute(config, out, err);
    } catch (const NotStrictlyConvex& e) {
        err << "error: " << e.what() << '\n';
        return exit_not_strictly_convex;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const EmptyInput& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const SizeLimit& e) {
        err << "error: " << e.what() << '\n';
        return exit_size_limit;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_internal;
    }
}

} // namespace medisk::cli
