#pragma once

#include "medisk/vec2.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace medisk {

/// A strictly convex norm on the plane.
///
/// Either a member of the l^p family (1 < p < inf), evaluated in closed form,
/// or a custom gauge given by an evaluator together with a parametrization of
/// its unit circle. Norms are immutable and cheap to copy; copies share the
/// custom callables.
class Norm {
public:
    using Evaluator = std::function<double(Vec2)>;
    using Parametrizer = std::function<Vec2(double)>;

    /// The Euclidean norm.
    Norm() = default;

    /// Throws NotStrictlyConvex unless 1 < p < inf.
    static Norm lp(double p);

    /// `unit_circle` must be continuous, 2*pi periodic and traverse the unit
    /// circle of `evaluator` exactly once. Strict convexity is not checked
    /// here; see validate_strict_convexity().
    static Norm custom(Evaluator evaluator, Parametrizer unit_circle, std::string name = "custom");

    double operator()(Vec2 v) const { return value(v); }
    double value(Vec2 v) const;

    /// Point on the unit circle for angle parameter theta (any real; periodic).
    Vec2 unit_circle_point(double theta) const;

    /// Parameter theta in [0, 2*pi) with unit_circle_point(theta) a positive
    /// multiple of `direction`. Requires direction != 0.
    double parameter_of(Vec2 direction) const;

    bool is_lp() const { return !custom_; }
    /// Exponent for l^p norms, nullopt for custom norms.
    std::optional<double> exponent() const;
    const std::string& name() const { return name_; }

private:
    enum class Kind { euclidean, quartic, general, custom };
    struct Custom;

    Kind kind_ = Kind::euclidean;
    double p_ = 2.0;
    double inv_p_ = 0.5;
    std::shared_ptr<const Custom> custom_;
    std::string name_ = "l2";
};

struct ConvexityViolation {
    Vec2 u;
    Vec2 v;
    double sum_norm;  ///< norm(u + v), at least 2 - 1e-9
};

/// Sampling check of ||u + v|| < 2 for distinct unit vectors u, v taken from a
/// grid of `sample_count` parameters. Heuristic; a clean result is not a proof.
/// Returns the first offending pair, or nullopt.
std::optional<ConvexityViolation> validate_strict_convexity(const Norm& n, int sample_count = 720);

/// Parses "p:<value>". Throws ParseError on malformed text and NotStrictlyConvex
/// for exponents outside (1, inf).
Norm parse_norm_spec(const std::string& spec);

} // namespace medisk
