#include "catphase/optimizer.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "catphase/analytic.hpp"

namespace catphase::opt {

namespace {

// Proportional to -dP/ddelta: positive while the parity still decreases.
double stationarity(double alpha, double delta) {
    const double e = std::exp(-2.0 * alpha * alpha);
    return delta * (std::cos(4.0 * alpha * delta) + e) + alpha * std::sin(4.0 * alpha * delta);
}

// Brent's zeroin; requires f(a) and f(b) of opposite sign. Returns a root
// within 4 eps |x| + tol and accumulates evaluations into evals.
template <class F>
double brent_root(F f, double ax, double bx, double tol, int& evals) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double a = ax;
    double b = bx;
    double c = a;
    double fa = f(a);
    double fb = f(b);
    double fc = fa;
    evals += 2;
    double d = b - a;
    double e = d;
    while (true) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) {
            return b;
        }
        if (std::abs(e) < tol1 || std::abs(fa) <= std::abs(fb)) {
            d = xm;
            e = d;
        } else {
            double p;
            double q;
            const double s = fb / fa;
            if (a != c) {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            } else {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            }
            if (p > 0.0) {
                q = -q;
            }
            p = std::abs(p);
            if (2.0 * p >= 3.0 * xm * q - std::abs(tol1 * q) || p >= std::abs(0.5 * e * q)) {
                d = xm;
                e = d;
            } else {
                e = d;
                d = p / q;
            }
        }
        a = b;
        fa = fb;
        if (std::abs(d) > tol1) {
            b += d;
        } else {
            b += (xm > 0.0 ? tol1 : -tol1);
        }
        fb = f(b);
        ++evals;
        // Keep b and c on opposite sides of the root.
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
}

double parity_of(double alpha, double delta) {
    return analytic::parity(analytic::CatParams(alpha, delta));
}

// Grid search of the parity itself over (0, pi/alpha], refined by a local
// root solve when the surrounding grid points straddle the stationarity
// sign change. Handles small alpha, where the main bracket fails.
Optimum dense_scan(double alpha, double tolerance) {
    constexpr int n = 10000;
    const double hi = std::numbers::pi / alpha;
    const double h = hi / n;
    int best = 1;
    double best_p = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= n; ++j) {
        const double p = parity_of(alpha, j * h);
        if (p < best_p) {
            best_p = p;
            best = j;
        }
    }
    Optimum out;
    out.iterations = n;
    out.bracket_lo = (best - 1) * h;
    out.bracket_hi = (best + 1) * h;
    out.delta_star = best * h;
    const double glo = stationarity(alpha, out.bracket_lo);
    const double ghi = stationarity(alpha, out.bracket_hi);
    if (glo > 0.0 && ghi < 0.0) {
        out.delta_star = brent_root([alpha](double x) { return stationarity(alpha, x); },
                                    out.bracket_lo, out.bracket_hi, tolerance,
                                    out.iterations);
    }
    out.parity_at_min = parity_of(alpha, out.delta_star);
    out.p_even_at_min = 0.5 * (1.0 + out.parity_at_min);
    return out;
}

} // namespace

Optimum minimize_parity(double alpha, double tolerance) {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw std::invalid_argument("opt: alpha must be positive and finite");
    }
    if (!std::isfinite(tolerance) || tolerance <= 0.0) {
        throw std::invalid_argument("opt: tolerance must be positive");
    }
    Optimum out;
    out.iterations = 0;
    out.bracket_lo = std::numbers::pi / (8.0 * alpha);
    out.bracket_hi = 1.05 * std::numbers::pi / (4.0 * alpha);
    const double glo = stationarity(alpha, out.bracket_lo);
    const double ghi = stationarity(alpha, out.bracket_hi);
    if (!(glo > 0.0 && ghi < 0.0)) {
        out = dense_scan(alpha, tolerance);
    } else {
        out.delta_star = brent_root([alpha](double x) { return stationarity(alpha, x); },
                                    out.bracket_lo, out.bracket_hi, tolerance,
                                    out.iterations);
        out.parity_at_min = parity_of(alpha, out.delta_star);
        out.p_even_at_min = 0.5 * (1.0 + out.parity_at_min);
    }
    // The root must sit in a genuine parity valley, not an inflection.
    const double h = 1e-3 / alpha;
    if (out.parity_at_min >= parity_of(alpha, out.delta_star - h) ||
        out.parity_at_min >= parity_of(alpha, out.delta_star + h)) {
        throw bracketing_error("opt: stationary point is not a strict local minimum");
    }
    return out;
}

double parity_min_series(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw std::invalid_argument("opt: alpha must be positive and finite");
    }
    const double a2 = alpha * alpha;
    return std::numbers::pi / (4.0 * alpha) * (1.0 - 1.0 / (4.0 * a2) + 1.0 / (16.0 * a2 * a2));
}

std::vector<ErrorCurvePoint> false_negative_curve(double alpha_min, double alpha_max,
                                                  int steps, double tolerance) {
    if (!(alpha_min > 0.0) || !(alpha_max > alpha_min)) {
        throw std::invalid_argument("opt: need 0 < alpha_min < alpha_max");
    }
    if (steps < 2) {
        throw std::invalid_argument("opt: need at least two grid points");
    }
    std::vector<ErrorCurvePoint> curve;
    curve.reserve(static_cast<size_t>(steps));
    const double h = (alpha_max - alpha_min) / (steps - 1);
    for (int j = 0; j < steps; ++j) {
        const double alpha = (j == steps - 1) ? alpha_max : alpha_min + j * h;
        const Optimum opt = minimize_parity(alpha, tolerance);
        curve.push_back({alpha, opt.delta_star, opt.p_even_at_min, 1.0 - opt.p_even_at_min});
    }
    return curve;
}

} // namespace catphase::opt
