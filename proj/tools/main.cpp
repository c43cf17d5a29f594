#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    medisk::cli::RunConfig c;
    CLI::App app{"Minimal enclosing disk under strictly convex l^p norms", "medisk"};

    std::string input, svg, diagram;
    std::size_t generate = 0;
    auto* in_opt = app.add_option("--input", input, "Points file: one 'x y' or 'x,y' per line, '#' comments");
    app.add_option("--norm", c.norm_spec, "Norm as p:<value> with 1 < value < inf")->capture_default_str();
    app.add_option("--algo", c.algorithm, "eh | sh | oracle | descent | all")->capture_default_str();
    app.add_option("--tol", c.tol, "Relative feasibility tolerance")->capture_default_str();
    auto* svg_opt = app.add_option("--svg", svg, "Write an SVG plot to this path");
    auto* dia_opt = app.add_option("--diagram", diagram, "Write the farthest-point Voronoi diagram to this path");
    auto* gen_opt = app.add_option("--generate", generate, "Use N uniform random points in [-1,1]^2");
    app.add_option("--seed", c.seed, "Seed for --generate")->capture_default_str();
    app.add_option("--format", c.output, "plain | structured")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return medisk::cli::exit_usage;
    }
    if (*in_opt) c.input_path = input;
    if (*svg_opt) c.svg_path = svg;
    if (*dia_opt) c.diagram_path = diagram;
    if (*gen_opt) c.generate = generate;
    return medisk::cli::run(c, std::cout, std::cerr);
}
