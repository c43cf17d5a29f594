#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

namespace medisk::detail {

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Brent's bracketing root finder on [a, b] with f(a), f(b) of opposite sign
/// (or one of them zero). Stops when |f| <= ftol or the bracket shrinks below
/// xtol plus a few ulps. Never leaves the bracket.
template <class F>
RootResult brent_root(F&& f, double a, double b, double fa, double fb, double xtol, double ftol,
                      std::size_t max_iter) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    RootResult r;
    if (std::abs(fa) <= ftol) return {a, fa, 0, true};
    if (std::abs(fb) <= ftol) return {b, fb, 0, true};
    if ((fa > 0) == (fb > 0)) return {b, fb, 0, false};

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (std::size_t it = 1; it <= max_iter; ++it) {
        if ((fb > 0) == (fc > 0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || std::abs(fb) <= ftol) {
            return {b, fb, it, true};
        }
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // inverse quadratic interpolation, or secant when only two points differ
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double rb = fb / fc;
                p = s * (2.0 * xm * qa * (qa - rb) - (b - a) * (rb - 1.0));
                q = (qa - 1.0) * (rb - 1.0) * (s - 1.0);
            }
            if (p > 0) q = -q;
            p = std::abs(p);
            const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
            const double min2 = std::abs(e * q);
            if (2.0 * p < (min1 < min2 ? min1 : min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if (std::abs(d) > tol1) {
            b += d;
        } else {
            b += (xm > 0 ? tol1 : -tol1);
        }
        fb = f(b);
        r = {b, fb, it, false};
    }
    return r;
}

} // namespace medisk::detail
