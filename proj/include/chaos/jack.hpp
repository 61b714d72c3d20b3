#ifndef CHAOS_JACK_HPP
#define CHAOS_JACK_HPP

/* Scalar Jack-polynomial quantities: hook products c, c', generalized
 * Pochhammer symbols, the Gamma ratio F, norms, values at 1 = (1,...,1),
 * Pieri coefficients psi' and the large-gap ratio quantities.
 *
 * Everything is evaluated in log space.  Hook products are computed by a
 * row-pair telescoping of the cell product,
 *     c_la  = prod_{i<=r} Gamma(la_i - la_{r+1} + g(r-i) + g)
 *                       / Gamma(la_i - la_r   + g(r-i) + g),
 * (g = gamma; c' has +1 in place of the trailing +g), which costs O(N^2)
 * lgamma calls independently of part sizes; parts reach 10^6 in the series.
 */

#include <cmath>
#include <stdexcept>

#include "numeric.hpp"
#include "partitions.hpp"

namespace chaos {

struct ChaosParams {
    double beta;
    double gamma;  // beta^2 / 2, always derived
    int N;

    // public API entry: beta in (0,1) so gamma in (0, 1/2)
    static ChaosParams from_beta(double beta, int N) {
        if (!(beta > 0.0 && beta < 1.0))
            throw std::invalid_argument("beta outside (0,1)");
        if (N < 1) throw std::invalid_argument("N < 1");
        return {beta, beta * beta / 2.0, N};
    }

    // test/oracle entry: the Jack algebra itself is fine for gamma up to 1
    // (Schur case), only the chaos series needs gamma < 1/2
    static ChaosParams from_gamma(double gamma, int N) {
        if (!(gamma > 0.0 && gamma <= 1.0))
            throw std::invalid_argument("gamma outside (0,1]");
        if (N < 1) throw std::invalid_argument("N < 1");
        return {std::sqrt(2.0 * gamma), gamma, N};
    }

    bool subcritical() const { return gamma < 0.5; }
};

struct LogValue {
    double log = 0.0;
    double value() const { return std::exp(log); }
    LogValue operator*(const LogValue& o) const { return {log + o.log}; }
    LogValue operator/(const LogValue& o) const { return {log - o.log}; }
};

namespace detail {

// shared hook-product kernel; tail = gamma for c, tail = 1 for c'
inline double log_hook_product(const Partition& la, double g, double tail) {
    const int N = la.capacity();
    double acc = 0.0;
    for (int i = 1; i <= N; ++i) {
        if (la.part(i) == 0) break;
        for (int r = i; r <= N; ++r) {
            const double off = g * (r - i) + tail;
            const Part hi = la.part(i) - (r < N ? la.part(r + 1) : 0);
            const Part lo = la.part(i) - la.part(r);
            if (hi == lo) continue;
            acc += lgamma_pos(static_cast<double>(hi) + off) -
                   lgamma_pos(static_cast<double>(lo) + off);
        }
    }
    return acc;
}

}  // namespace detail

inline LogValue c_product(const Partition& la, const ChaosParams& p) {
    return {detail::log_hook_product(la, p.gamma, p.gamma)};
}

inline LogValue c_prime_product(const Partition& la, const ChaosParams& p) {
    return {detail::log_hook_product(la, p.gamma, 1.0)};
}

// literal cell walk, O(|la|); kept as an in-tree cross-check for the
// telescoped kernel above
inline LogValue c_product_direct(const Partition& la, const ChaosParams& p,
                                 double tail) {
    double acc = 0.0;
    for (int i = 1; i <= la.length(); ++i)
        for (Part j = 1; j <= la.part(i); ++j) {
            const Cell s{i, static_cast<int>(j)};
            acc += std::log(static_cast<double>(arm(la, s)) +
                            p.gamma * static_cast<double>(leg(la, s)) + tail);
        }
    return {acc};
}

// [b]_la = prod_i Gamma(b - (i-1)g + la_i) / Gamma(b - (i-1)g)
inline LogValue pochhammer_general(double b, const Partition& la,
                                   const ChaosParams& p) {
    double acc = 0.0;
    for (int i = 1; i <= la.capacity(); ++i) {
        const double base = b - (i - 1) * p.gamma;
        if (base <= 0.0 || base + static_cast<double>(la.part(i)) <= 0.0)
            throw std::invalid_argument("nonpositive Gamma argument in [b]_lambda");
        if (la.part(i) == 0) continue;
        acc += lgamma_pos(base + static_cast<double>(la.part(i))) - lgamma_pos(base);
    }
    return {acc};
}

// F(x) = Gamma(x) / Gamma(x + 1 - gamma)
inline LogValue F_ratio(double x, const ChaosParams& p) {
    if (!(x > 0.0)) throw std::invalid_argument("F requires x > 0");
    return {lgamma_pos(x) - lgamma_pos(x + 1.0 - p.gamma)};
}

// K(N,g) = Gamma(1 + N g) / Gamma(1 + g)^N
inline LogValue K_constant(const ChaosParams& p) {
    return {lgamma_pos(1.0 + p.N * p.gamma) - p.N * lgamma_pos(1.0 + p.gamma)};
}

// C(N,g) = g^{N-1} (N-1)! / Gamma(N g)
inline LogValue C_constant(const ChaosParams& p) {
    return {(p.N - 1) * std::log(p.gamma) + lgamma_pos(static_cast<double>(p.N)) -
            lgamma_pos(p.N * p.gamma)};
}

// P_la(1^N) = [N g]_la / c_la
inline LogValue value_at_one(const Partition& la, const ChaosParams& p) {
    return pochhammer_general(p.N * p.gamma, la, p) / c_product(la, p);
}

namespace detail {

inline double log_norm_sq_via_norm_eq(const Partition& la, const ChaosParams& p) {
    // Gamma(1+Ng)/Gamma(1+g)^N * c'_la / [1+(N-1)g]_la * P_la(1^N)
    return K_constant(p).log + c_prime_product(la, p).log -
           pochhammer_general(1.0 + (p.N - 1) * p.gamma, la, p).log +
           value_at_one(la, p).log;
}

inline double log_norm_sq_via_product_form(const Partition& la, const ChaosParams& p) {
    // K * C * (c'_la / c_la) * prod_i F((N-i+1) g + la_i)
    double acc = K_constant(p).log + C_constant(p).log +
                 c_prime_product(la, p).log - c_product(la, p).log;
    for (int i = 1; i <= p.N; ++i)
        acc += F_ratio((p.N - i + 1) * p.gamma + static_cast<double>(la.part(i)), p).log;
    return acc;
}

}  // namespace detail

// ||P_la||^2, evaluated through both closed forms; they must agree to 1e-10
// relative (precision canary for the whole log-Gamma layer)
inline LogValue norm_sq(const Partition& la, const ChaosParams& p) {
    const double a = detail::log_norm_sq_via_norm_eq(la, p);
    const double b = detail::log_norm_sq_via_product_form(la, p);
    if (std::abs(a - b) > 1e-10 * (1.0 + std::abs(b)))
        throw std::runtime_error("norm_sq cross-check failed: formulas disagree");
    return {b};
}

// c_{la+n} / c_la = prod_i Gamma(g(N-i+1) + la_i + n) / Gamma(g(N-i+1) + la_i)
inline LogValue rectangle_ratio_c(const Partition& la, Part n, const ChaosParams& p) {
    if (n < 0) throw std::invalid_argument("negative rectangle width");
    double acc = 0.0;
    for (int i = 1; i <= p.N; ++i) {
        const double base = p.gamma * (p.N - i + 1) + static_cast<double>(la.part(i));
        acc += lgamma_pos(base + static_cast<double>(n)) - lgamma_pos(base);
    }
    return {acc};
}

inline LogValue rectangle_ratio_cprime(const Partition& la, Part n, const ChaosParams& p) {
    if (n < 0) throw std::invalid_argument("negative rectangle width");
    double acc = 0.0;
    for (int i = 1; i <= p.N; ++i) {
        const double base =
            p.gamma * (p.N - i + 1) + static_cast<double>(la.part(i)) + 1.0 - p.gamma;
        acc += lgamma_pos(base + static_cast<double>(n)) - lgamma_pos(base);
    }
    return {acc};
}

// b_la(s) = (a + g l + g) / (a + g l + 1), in (0,1) for g < 1
inline double b_cell(const Partition& la, const Cell& s, const ChaosParams& p) {
    const double a = static_cast<double>(arm(la, s));
    const double l = static_cast<double>(leg(la, s));
    return (a + p.gamma * l + p.gamma) / (a + p.gamma * l + 1.0);
}

// psi'_{tau/mu} = prod over C_{tau/mu} - R_{tau/mu} of b_tau(s) / b_mu(s)
inline double pieri_psi_prime(const Partition& tau, const Partition& mu,
                              const ChaosParams& p) {
    double v = 1.0;
    for (const Cell& s : cells_C_minus_R(tau, mu))
        v *= b_cell(tau, s, p) / b_cell(mu, s, p);
    return v;
}

// (c'_{la+sigma} / c'_la) * (c_la / c_{la+sigma}); tends to 1 at large gap
inline double ratio_lemma_value(const Partition& la, const ShapeVector& sigma,
                                const ChaosParams& p) {
    const Partition nu = add_shape(la, sigma);
    const double lg = c_prime_product(nu, p).log - c_prime_product(la, p).log +
                      c_product(la, p).log - c_product(nu, p).log;
    return std::exp(lg);
}

// W = sup_{x >= x_min} F(x) x^{1-g}: geometric scan to 10^8 with a local
// variation guard, then the Stirling regime where the sup is 1 + o(1).
// Tests verify the majorant property on a dense grid.
inline double wendel_envelope_constant(const ChaosParams& p, double x_min) {
    if (x_min < p.gamma)
        throw std::invalid_argument("x_min below gamma: envelope not valid there");
    const double ratio = 1.0009;
    double w = 1.0;            // Stirling tail: F(x) x^{1-g} -> 1 from below/above
    double prev = -1.0, var = 0.0;
    for (double x = x_min; x <= 1e8; x *= ratio) {
        const double h = std::exp(F_ratio(x, p).log + (1.0 - p.gamma) * std::log(x));
        if (h > w) w = h;
        if (prev > 0.0) var = std::max(var, std::abs(h - prev) / prev);
        prev = h;
    }
    return w * (1.0 + 4.0 * var);
}

}  // namespace chaos

#endif
