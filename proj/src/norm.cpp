#include "medisk/norm.hpp"

#include "medisk/detail/root_finding.hpp"
#include "medisk/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace medisk {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
    double t = std::fmod(theta, two_pi);
    if (t < 0) t += two_pi;
    return t;
}

double signed_pow(double v, double e) {
    const double m = std::pow(std::abs(v), e);
    return v < 0 ? -m : m;
}

} // namespace

struct Norm::Custom {
    Evaluator evaluate;
    Parametrizer unit_circle;
};

Norm Norm::lp(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        std::ostringstream msg;
        msg << "l^p norm with p = " << p
            << " is not strictly convex; an exponent with 1 < p < inf is required";
        throw NotStrictlyConvex(msg.str());
    }
    Norm n;
    n.p_ = p;
    n.inv_p_ = 1.0 / p;
    n.kind_ = p == 2.0 ? Kind::euclidean : p == 4.0 ? Kind::quartic : Kind::general;
    std::ostringstream name;
    name << "l" << p;
    n.name_ = name.str();
    return n;
}

Norm Norm::custom(Evaluator evaluator, Parametrizer unit_circle, std::string name) {
    if (!evaluator || !unit_circle) {
        throw std::invalid_argument("custom norm needs both an evaluator and a unit-circle parametrization");
    }
    Norm n;
    n.kind_ = Kind::custom;
    n.custom_ = std::make_shared<const Custom>(Custom{std::move(evaluator), std::move(unit_circle)});
    n.name_ = std::move(name);
    return n;
}

std::optional<double> Norm::exponent() const {
    if (custom_) return std::nullopt;
    return p_;
}

double Norm::value(Vec2 v) const {
    if (kind_ == Kind::custom) return custom_->evaluate(v);

    // Scale out the larger coordinate so that r^p never overflows.
    const double ax = std::abs(v.x);
    const double ay = std::abs(v.y);
    const double big = ax > ay ? ax : ay;
    if (big == 0.0) return 0.0;
    const double r = (ax > ay ? ay : ax) / big;
    switch (kind_) {
    case Kind::euclidean:
        return big * std::sqrt(1.0 + r * r);
    case Kind::quartic: {
        const double r2 = r * r;
        return big * std::sqrt(std::sqrt(1.0 + r2 * r2));
    }
    default:
        return big * std::pow(1.0 + std::pow(r, p_), inv_p_);
    }
}

Vec2 Norm::unit_circle_point(double theta) const {
    if (kind_ == Kind::custom) return custom_->unit_circle(wrap_angle(theta));
    // Reduce to [-pi/4, pi/4] so the axis directions come out exact.
    const double quarter = 0.5 * std::numbers::pi;
    const double k = std::nearbyint(theta / quarter);
    const double r = theta - k * quarter;
    const double cr = std::cos(r), sr = std::sin(r);
    double c = cr, s = sr;
    switch (static_cast<int>(std::fmod(std::fmod(k, 4.0) + 4.0, 4.0))) {
    case 1: c = -sr; s = cr; break;
    case 2: c = -cr; s = -sr; break;
    case 3: c = sr; s = -cr; break;
    default: break;
    }
    if (kind_ == Kind::euclidean) return {c, s};
    const double e = 2.0 * inv_p_;
    return {signed_pow(c, e), signed_pow(s, e)};
}

double Norm::parameter_of(Vec2 direction) const {
    const double big = std::max(std::abs(direction.x), std::abs(direction.y));
    if (big == 0.0) throw std::invalid_argument("parameter_of: zero direction");
    const Vec2 d{direction.x / big, direction.y / big};

    if (kind_ != Kind::custom) {
        const double e = 0.5 * p_;
        return wrap_angle(std::atan2(signed_pow(d.y, e), signed_pow(d.x, e)));
    }

    // Invert the custom parametrization: find theta on the positive side of
    // `d` where cross(d, u(theta)) changes sign.
    constexpr int samples = 720;
    auto side = [&](double t) { return cross(d, unit_circle_point(t)); };
    double t0 = 0.0;
    double f0 = side(t0);
    for (int i = 1; i <= samples; ++i) {
        const double t1 = two_pi * i / samples;
        const double f1 = side(t1);
        const bool ahead = dot(d, unit_circle_point(t0)) > 0 && dot(d, unit_circle_point(t1)) > 0;
        if (ahead && (f0 == 0.0 || (f0 > 0) != (f1 > 0))) {
            if (f0 == 0.0) return wrap_angle(t0);
            const auto root = detail::brent_root(side, t0, t1, f0, f1, 1e-15, 0.0, 200);
            return wrap_angle(root.x);
        }
        t0 = t1;
        f0 = f1;
    }
    throw ConvergenceFailure("parameter_of: unit-circle parametrization never points along the direction");
}

std::optional<ConvexityViolation> validate_strict_convexity(const Norm& n, int sample_count) {
    if (sample_count < 2) throw std::invalid_argument("validate_strict_convexity: need at least 2 samples");
    std::vector<Vec2> unit(static_cast<std::size_t>(sample_count));
    for (int i = 0; i < sample_count; ++i) unit[i] = n.unit_circle_point(two_pi * i / sample_count);

    for (std::size_t i = 0; i < unit.size(); ++i) {
        for (std::size_t j = i + 1; j < unit.size(); ++j) {
            if (unit[i] == unit[j]) continue;
            const double s = n(unit[i] + unit[j]);
            if (s >= 2.0 - 1e-9) return ConvexityViolation{unit[i], unit[j], s};
        }
    }
    return std::nullopt;
}

Norm parse_norm_spec(const std::string& spec) {
    if (spec.size() < 3 || spec[0] != 'p' || spec[1] != ':') {
        throw ParseError("norm spec must look like \"p:<value>\", got \"" + spec + "\"");
    }
    const char* first = spec.data() + 2;
    const char* last = spec.data() + spec.size();
    double p = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last || std::isnan(p)) {
        throw ParseError("norm spec has a malformed exponent: \"" + spec + "\"");
    }
    return Norm::lp(p);
}

} // namespace medisk
