#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pairwell/errors.hpp"

namespace pairwell {

struct RootResult {
    double x = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Bracketed bisection/secant hybrid (Brent-style with inverse quadratic
/// acceleration). Requires f(a) f(b) <= 0; refines until the bracket is
/// narrower than xtol and |f| < ftol (or machine limits are hit).
inline RootResult brent(const std::function<double(double)>& f, double a, double b,
                        double fa, double fb, double xtol = 1e-6, double ftol = 1e-12,
                        int max_iter = 200) {
    if (fa == 0.0) return {a, 0.0, 0};
    if (fb == 0.0) return {b, 0.0, 0};
    if (fa * fb > 0.0) throw NoSignChange(a, b);

    double c = a, fc = fa;
    double d = b - a, e = d;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) +
                            0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if ((std::abs(xm) <= tol1 && std::abs(fb) <= ftol) || fb == 0.0) break;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // secant / inverse quadratic step
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
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
        b += std::abs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    return {b, std::abs(fb), iter};
}

/// Sign-change subintervals of f on [lo, hi] from an n-point uniform scan.
inline std::vector<std::pair<double, double>> scan_brackets(
    const std::function<double(double)>& f, double lo, double hi, int n = 400) {
    std::vector<std::pair<double, double>> brackets;
    double x_prev = lo;
    double f_prev = f(lo);
    for (int j = 1; j <= n; ++j) {
        const double x = lo + (hi - lo) * static_cast<double>(j) / n;
        const double fx = f(x);
        if (f_prev == 0.0 || (f_prev < 0.0) != (fx < 0.0)) brackets.emplace_back(x_prev, x);
        x_prev = x;
        f_prev = fx;
    }
    return brackets;
}

}  // namespace pairwell
