#ifndef CHAOS_QUADRATURE_HPP
#define CHAOS_QUADRATURE_HPP

/* Small quadrature toolbox shared by the oracle and the series tail logic:
 *  - tanh-sinh rule on a finite interval (robust to endpoint singularities)
 *  - adaptive Gauss-Kronrod 15(7) on smooth pieces
 *  - a certified upper bound for integrals of decreasing positive functions
 */

#include <cmath>
#include <functional>
#include <stdexcept>

namespace chaos {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
};

// tanh-sinh on (a, b); f may blow up integrably at either endpoint.
// Nodes near the ends are placed by their distance to the endpoint,
// 1 - |tanh(s)| = 2 e^{-2|s|} / (1 + e^{-2|s|}), computed without
// cancellation, so strong integrable singularities (u^{-p}, p close to 1)
// still get sampled at distances far below machine epsilon times (b - a).
inline QuadResult tanh_sinh(const std::function<double(double)>& f, double a,
                            double b, double tol = 1e-12, int max_level = 12) {
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    const double tmax = 5.0;
    double h = 1.0;
    double prev = 0.0, integral = 0.0;

    // level 0: trapezoid on the transformed axis
    auto eval = [&](double t) {
        const double s = std::sinh(t) * (M_PI / 2.0);
        const double e = std::exp(-2.0 * std::abs(s));
        const double dm = 2.0 * e / (1.0 + e);  // 1 - |tanh(s)|
        const double off = hw * dm;             // distance to the near endpoint
        if (off == 0.0) return 0.0;
        const double w = (M_PI / 2.0) * std::cosh(t) / (std::cosh(s) * std::cosh(s));
        const double xx = (t >= 0.0) ? b - off : a + off;
        if (xx <= a || xx >= b) return 0.0;  // node collapsed onto the endpoint
        const double v = f(xx);
        return std::isfinite(v) ? v * w : 0.0;
    };

    double sum = eval(0.0);
    for (double t = h; t <= tmax; t += h) sum += eval(t) + eval(-t);
    integral = sum * h;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) add += eval(t) + eval(-t);
        prev = integral;
        integral = 0.5 * integral + add * h;
        const double err = std::abs(integral - prev);
        if (level >= 3 && err <= tol * (std::abs(integral) + 1e-300))
            return {integral * hw, err * hw};
    }
    return {integral * hw, std::abs(integral - prev) * hw};
}

namespace detail {
// Gauss-Kronrod 15-point nodes/weights (Kronrod) and embedded 7-point Gauss
inline constexpr double gk_x[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
inline constexpr double gk_wk[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double gk_wg[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

inline QuadResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    double k = 0.0, g = 0.0;
    const double f0 = f(c);
    k += gk_wk[0] * f0;
    g += gk_wg[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double fp = f(c + hw * gk_x[i]);
        const double fm = f(c - hw * gk_x[i]);
        k += gk_wk[i] * (fp + fm);
        if (i % 2 == 0) g += gk_wg[i / 2] * (fp + fm);
    }
    const double ik = k * hw, ig = g * hw;
    const double err = std::pow(200.0 * std::abs(ik - ig), 1.5);
    return {ik, std::min(std::abs(ik - ig), err)};
}
}  // namespace detail

// adaptive GK15 with simple interval bisection
inline QuadResult adaptive_gk(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, int max_depth = 40) {
    std::function<QuadResult(double, double, double, int)> rec =
        [&](double lo, double hi, double tol, int depth) -> QuadResult {
        const QuadResult r = detail::gk15(f, lo, hi);
        if (r.error <= tol || depth >= max_depth) return r;
        const double mid = 0.5 * (lo + hi);
        const QuadResult l2 = rec(lo, mid, tol * 0.5, depth + 1);
        const QuadResult r2 = rec(mid, hi, tol * 0.5, depth + 1);
        return {l2.value + r2.value, l2.error + r2.error};
    };
    return rec(a, b, abs_tol, 0);
}

// Upper bound on int_a^inf f for positive decreasing f with a power-law tail
// dominated by C (g0+t)^{expo} (expo < -1): left-endpoint Riemann sum on a
// geometric mesh plus the closed-form tail majorant.
inline double integral_upper_decreasing(const std::function<double(double)>& f,
                                        double a, double tail_c, double tail_g0,
                                        double tail_expo, double t_switch = 1e12) {
    if (tail_expo >= -1.0) throw std::invalid_argument("tail exponent must be < -1");
    double total = 0.0;
    double t = a;
    while (t < t_switch) {
        const double next = std::min(std::max(t * 1.02, t + 0.5), t_switch);
        total += f(t) * (next - t);  // f decreasing: left endpoint majorizes
        t = next;
    }
    total += tail_c * std::pow(tail_g0 + t_switch, tail_expo + 1.0) / (-(tail_expo + 1.0));
    return total;
}

}  // namespace chaos

#endif
