#ifndef CHAOS_ORACLE_HPP
#define CHAOS_ORACLE_HPP

/* Independent ground truth: quadrature of the Coulomb-gas integrals for
 * N <= 2, the Dyson normalization, and a small symbolic Jack-polynomial
 * constructor (eigen-recursion in the monomial basis).  Nothing here reuses
 * the series evaluation path, so the two routes do not share failure modes.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "jack.hpp"
#include "partitions.hpp"
#include "quadrature.hpp"

namespace chaos {

// ---------------------------------------------------------------------------
// Coulomb-gas quadrature, N = 1:
//   E|c_n|^2 = 2pi int_0^{2pi} e^{inu} (2 sin(u/2))^{-2g} du
//            = 4pi int_0^pi cos(nu) (2 sin(u/2))^{-2g} du.
// The endpoint singularity u^{-2g} is handled by tanh-sinh; for n >= 1 the
// integral is split at the zeros of cos(nu) and the smooth pieces go through
// adaptive Gauss-Kronrod.
inline double quadrature_moment_N1(Part n, double gamma, double tol = 1e-9) {
    if (!(gamma > 0.0 && gamma < 0.5))
        throw std::invalid_argument("gamma outside (0,1/2)");
    if (tol < 1e-10) throw std::invalid_argument("tol below supported floor");
    if (n < 0) n = -n;  // even in n
    auto w = [&](double u) {
        return std::pow(2.0 * std::sin(0.5 * u), -2.0 * gamma);
    };
    double value = 0.0, err = 0.0;
    if (n == 0) {
        const QuadResult q = tanh_sinh(w, 0.0, M_PI, 1e-13, 14);
        value = q.value;
        err = q.error;
    } else {
        auto f = [&](double u) { return std::cos(n * u) * w(u); };
        // first piece, up to the first zero of the phase: singular endpoint
        const double u0 = M_PI / (2.0 * static_cast<double>(n));
        const QuadResult head = tanh_sinh(f, 0.0, u0, 1e-13, 14);
        value = head.value;
        err = head.error;
        // remaining pieces between consecutive zeros (j+1/2) pi / n
        for (Part j = 0;; ++j) {
            const double a = (2.0 * j + 1.0) * M_PI / (2.0 * n);
            if (a >= M_PI) break;
            const double b = std::min(M_PI, (2.0 * j + 3.0) * M_PI / (2.0 * n));
            const QuadResult q = adaptive_gk(f, a, b, tol * 1e-2 / std::max<Part>(n, 1));
            value += q.value;
            err += q.error;
        }
    }
    const double result = 4.0 * M_PI * value;
    if (err * 4.0 * M_PI > tol * std::abs(result))
        throw std::runtime_error("quadrature_moment_N1: failed to converge");
    return result;
}

// ---------------------------------------------------------------------------
// Coulomb-gas quadrature, N = 2, reduced from 4-D to 3-D by rotation
// invariance (theta'_2 fixed, factor 2pi):
//   E|c_n|^4 = 2pi Re int_{[0,2pi]^3} e^{in(u1+u2-u3)}
//              [ d(u1-u2) d(u3) ]^{2g} / [ d(u1-u3) d(u2-u3) d(u1) d(u2) ]^{2g}
//              du1 du2 du3,           d(u) = |2 sin(u/2)|.
// Iterated tanh-sinh panels split at every coincidence point.
namespace detail {

inline double d_circ(double u) {
    return std::abs(2.0 * std::sin(0.5 * u));
}

// tanh-sinh for complex-valued integrands (same node scheme as the real one)
template <typename Fn>
std::complex<double> tanh_sinh_cplx(const Fn& f, double a, double b, double tol,
                                    int max_level) {
    const double hw = 0.5 * (b - a);
    const double tmax = 5.0;
    auto eval = [&](double t) -> std::complex<double> {
        const double s = std::sinh(t) * (M_PI / 2.0);
        const double e = std::exp(-2.0 * std::abs(s));
        const double dm = 2.0 * e / (1.0 + e);  // 1 - |tanh(s)|, no cancellation
        const double off = hw * dm;
        if (off == 0.0) return {0.0, 0.0};
        const double w = (M_PI / 2.0) * std::cosh(t) / (std::cosh(s) * std::cosh(s));
        const double xx = (t >= 0.0) ? b - off : a + off;
        if (xx <= a || xx >= b) return {0.0, 0.0};
        const std::complex<double> v = f(xx);
        return std::isfinite(v.real()) && std::isfinite(v.imag()) ? v * w
                                                                  : std::complex<double>{};
    };
    double h = 1.0;
    std::complex<double> integral = eval(0.0);
    for (double t = h; t <= tmax; t += h) integral += eval(t) + eval(-t);
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        std::complex<double> add{};
        for (double t = h; t <= tmax; t += 2.0 * h) add += eval(t) + eval(-t);
        const std::complex<double> next = 0.5 * integral + add * h;
        const double diff = std::abs(next - integral);
        integral = next;
        if (level >= 3 && diff <= tol * (std::abs(integral) + 1e-300)) break;
    }
    return integral * hw;
}

// integrate f over [0, 2pi] with integrable singularities at the given
// points; panels between consecutive singular points, tanh-sinh on each
template <typename Fn>
std::complex<double> panel_integrate(const Fn& f, std::vector<double> sing, double tol,
                                     int max_level) {
    sing.push_back(0.0);
    sing.push_back(2.0 * M_PI);
    for (auto& s : sing) s = std::fmod(std::fmod(s, 2.0 * M_PI) + 2.0 * M_PI, 2.0 * M_PI);
    std::sort(sing.begin(), sing.end());
    sing.erase(std::unique(sing.begin(), sing.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-13; }),
               sing.end());
    if (sing.back() < 2.0 * M_PI - 1e-13) sing.push_back(2.0 * M_PI);
    std::complex<double> total{};
    for (size_t i = 0; i + 1 < sing.size(); ++i)
        total += tanh_sinh_cplx(f, sing[i], sing[i + 1], tol, max_level);
    return total;
}

}  // namespace detail

inline double quadrature_moment_N2(Part n, double gamma, double tol = 1e-3) {
    if (!(gamma > 0.0 && gamma < 0.5))
        throw std::invalid_argument("gamma outside (0,1/2)");
    if (tol < 1e-3) throw std::invalid_argument("tol below supported floor for N=2");
    if (std::abs(n) > 8) throw std::invalid_argument("N=2 quadrature limited to |n| <= 8");
    const double na = static_cast<double>(std::abs(n));  // invariant under n -> -n
    const double tg = 2.0 * gamma;
    using detail::d_circ;

    auto inner = [&](double u1, double u2) {
        return detail::panel_integrate(
            [&](double u3) {
                return std::polar(std::pow(d_circ(u3), tg) *
                                      std::pow(d_circ(u1 - u3) * d_circ(u2 - u3), -tg),
                                  -na * u3);
            },
            {u1, u2}, 1e-7, 6);
    };
    auto mid = [&](double u1) {
        return detail::panel_integrate(
            [&](double u2) {
                const double amp = std::pow(d_circ(u1 - u2), tg) * std::pow(d_circ(u2), -tg);
                return inner(u1, u2) * std::polar(amp, na * u2);
            },
            {0.0, u1}, 3e-7, 6);
    };
    const std::complex<double> val = detail::panel_integrate(
        [&](double u1) {
            return mid(u1) * std::polar(std::pow(d_circ(u1), -tg), na * u1);
        },
        {0.0}, 1e-6, 6);
    return 2.0 * M_PI * val.real();
}

// ---------------------------------------------------------------------------
// Dyson normalization: (1/(2pi)^2) intint |e^{i t1} - e^{i t2}|^{2g} dt
//                    = (1/2pi) int_0^{2pi} (2 sin(u/2))^{2g} du.
inline double dyson_norm_check(double gamma, double tol = 1e-10) {
    if (!(gamma > 0.0 && gamma < 0.5))
        throw std::invalid_argument("gamma outside (0,1/2)");
    auto f = [&](double u) { return std::pow(2.0 * std::sin(0.5 * u), 2.0 * gamma); };
    const QuadResult q = tanh_sinh(f, 0.0, M_PI, tol * 1e-2, 13);
    return q.value / M_PI;
}

// ---------------------------------------------------------------------------
// symbolic Jack polynomials in the monomial basis

// coefficients over monomial symmetric functions, keyed by the (padded)
// weakly decreasing exponent vector; the m_lambda coefficient is exactly 1
struct SymmetricPolynomial {
    int N = 0;
    int degree = 0;
    std::map<std::vector<int>, double> coeffs;  // key length N, sorted desc
};

namespace detail {

inline std::vector<std::vector<int>> partitions_of(int d, int max_len, int max_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int x = std::min(left, cap); x >= 1; --x) {
            cur.push_back(x);
            rec(left - x, x);
            cur.pop_back();
        }
    };
    rec(d, max_part);
    return out;
}

// dominance order on same-weight partitions
inline bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
    int pa = 0, pb = 0;
    const size_t L = std::max(a.size(), b.size());
    for (size_t i = 0; i < L; ++i) {
        pa += i < a.size() ? a[i] : 0;
        pb += i < b.size() ? b[i] : 0;
        if (pa < pb) return false;
    }
    return true;
}

// rho_kappa(alpha) = sum_i kappa_i (kappa_i - 1 - (2/alpha)(i-1))
inline double rho_alpha(const std::vector<int>& k, double alpha) {
    double r = 0.0;
    for (size_t i = 0; i < k.size(); ++i)
        r += k[i] * (k[i] - 1.0 - (2.0 / alpha) * static_cast<double>(i));
    return r;
}

}  // namespace detail

// P_lambda^{(alpha)} with alpha = 1/gamma, by the dominance-triangular
// eigen-recursion for the Laplace-Beltrami-type operator: for mu < lambda,
//   c_mu = (2/alpha) / (rho_lambda - rho_mu)
//          * sum_{i<j, t>=1} ((mu_i + t) - (mu_j - t)) c_{sort(mu + t e_i - t e_j)}.
inline SymmetricPolynomial jack_monomial_coeffs(const Partition& la, double gamma,
                                                int N) {
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
    if (la.weight() > 8 || N > 4)
        throw std::invalid_argument("symbolic Jack limited to |lambda| <= 8, N <= 4");
    if (la.length() > N) throw std::invalid_argument("lambda longer than N");
    const double alpha = 1.0 / gamma;
    const int d = static_cast<int>(la.weight());

    std::vector<int> lam;
    for (int i = 1; i <= la.length(); ++i) lam.push_back(static_cast<int>(la.part(i)));

    auto all_mu = detail::partitions_of(d, N, d == 0 ? 0 : d);
    if (d == 0) all_mu = {{}};
    // process in an order extending dominance downward: descending lex works
    std::sort(all_mu.begin(), all_mu.end(), std::greater<>());

    std::map<std::vector<int>, double> c;
    const double rho_l = detail::rho_alpha(lam, alpha);
    for (const auto& mu : all_mu) {
        if (mu == lam) {
            c[mu] = 1.0;
            continue;
        }
        if (!detail::dominates(lam, mu)) continue;
        const double rho_m = detail::rho_alpha(mu, alpha);
        if (std::abs(rho_l - rho_m) < 1e-9)
            throw std::runtime_error("jack_monomial_coeffs: eigenvalue collision");
        double acc = 0.0;
        for (size_t i = 0; i < mu.size(); ++i)
            for (size_t j = i + 1; j < mu.size(); ++j) {
                const int mj = mu[j];
                for (int t = 1; t <= mj; ++t) {
                    std::vector<int> nu = mu;
                    nu[i] += t;
                    nu[j] -= t;
                    std::sort(nu.begin(), nu.end(), std::greater<>());
                    while (!nu.empty() && nu.back() == 0) nu.pop_back();
                    if (static_cast<int>(nu.size()) > N) continue;
                    auto it = c.find(nu);
                    if (it == c.end()) continue;  // nu not <= lambda: coefficient 0
                    acc += ((mu[i] + t) - (mj - t)) * it->second;
                }
            }
        c[mu] = (2.0 / alpha) * acc / (rho_l - rho_m);
    }

    SymmetricPolynomial P;
    P.N = N;
    P.degree = d;
    for (auto& [mu, v] : c) {
        if (std::abs(v) < 1e-14 && !(mu == lam)) continue;
        std::vector<int> key = mu;
        key.resize(static_cast<size_t>(N), 0);
        P.coeffs[key] = v;
    }
    return P;
}

namespace detail {

// expand an m-basis polynomial into a full exponent-vector dictionary
inline std::map<std::vector<int>, double> expand_monomials(const SymmetricPolynomial& P) {
    std::map<std::vector<int>, double> full;
    for (const auto& [mu, v] : P.coeffs) {
        std::vector<int> perm = mu;
        std::sort(perm.begin(), perm.end());
        do {
            full[perm] = v;  // every distinct permutation carries coeff v
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return full;
}

}  // namespace detail

// e_p * P_mu re-expanded in the Jack basis via dominance back-substitution.
// Support must be exactly the vertical strips of size p over mu.
inline std::map<std::vector<int>, double> pieri_expand_oracle(int p, const Partition& mu,
                                                              double gamma, int N) {
    if (mu.weight() + p > 8 || N > 4)
        throw std::invalid_argument("pieri oracle limited to |mu| + p <= 8, N <= 4");
    if (p < 0 || p > N) throw std::invalid_argument("p outside [0, N]");
    const auto Pmu = jack_monomial_coeffs(mu, gamma, N);
    const auto full_mu = detail::expand_monomials(Pmu);

    // e_p as a full exponent dictionary: all 0/1 vectors with p ones
    std::vector<std::vector<int>> ep;
    {
        std::vector<int> v(static_cast<size_t>(N), 0);
        std::fill(v.begin(), v.begin() + p, 1);
        std::sort(v.begin(), v.end());
        do {
            ep.push_back(v);
        } while (std::next_permutation(v.begin(), v.end()));
    }

    // product in exponent space
    std::map<std::vector<int>, double> prod;
    for (const auto& [a, va] : full_mu)
        for (const auto& b : ep) {
            std::vector<int> s(a);
            for (int i = 0; i < N; ++i) s[static_cast<size_t>(i)] += b[static_cast<size_t>(i)];
            prod[s] += va;
        }

    // back-substitution: repeatedly peel the lex-largest partition key
    std::map<std::vector<int>, double> result;  // Jack coefficients, key = partition
    for (;;) {
        std::vector<int> top;
        double coeff = 0.0;
        for (auto it = prod.rbegin(); it != prod.rend(); ++it) {
            std::vector<int> sorted = it->first;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            if (sorted != it->first) continue;  // not the dominant representative
            if (std::abs(it->second) > 1e-9) {
                top = it->first;
                coeff = it->second;
                break;
            }
        }
        if (coeff == 0.0) break;
        std::vector<Part> parts(top.begin(), top.end());
        const Partition tau(parts, N);
        result[top] = coeff;
        const auto Ptau = jack_monomial_coeffs(tau, gamma, N);
        for (const auto& [e, v] : detail::expand_monomials(Ptau)) prod[e] -= coeff * v;
    }
    // residual check
    for (const auto& [e, v] : prod)
        if (std::abs(v) > 1e-9)
            throw std::runtime_error("pieri_expand_oracle: nonzero residual");
    return result;
}

// ---------------------------------------------------------------------------
// orthogonality spot check, N = 2:
//   (1/(2pi)^2) intint P_la(e^{i t}) P_nu(e^{-i t}) |e^{i t1}-e^{i t2}|^{2g} dt.
// Expanding both polynomials in exponent vectors reduces this to Fourier
// coefficients W_hat(k) = (1/2pi) int (2 sin(u/2))^{2g} e^{iku} du of the
// weight, each computed by 1-D quadrature.
inline double orthogonality_spot_check(const Partition& la, const Partition& nu,
                                       double gamma, int N = 2, double tol = 1e-8) {
    if (N != 2) throw std::invalid_argument("spot check implemented for N = 2");
    if (la.weight() > 4 || nu.weight() > 4)
        throw std::invalid_argument("spot check limited to weight <= 4");
    const auto A = detail::expand_monomials(jack_monomial_coeffs(la, gamma, N));
    const auto B = detail::expand_monomials(jack_monomial_coeffs(nu, gamma, N));

    std::map<int, double> what;
    auto W_hat = [&](int k) {
        auto it = what.find(std::abs(k));
        if (it != what.end()) return it->second;
        auto f = [&](double u) {
            return std::pow(2.0 * std::sin(0.5 * u), 2.0 * gamma) * std::cos(std::abs(k) * u);
        };
        const double v = tanh_sinh(f, 0.0, M_PI, tol * 1e-3, 13).value / M_PI;
        what[std::abs(k)] = v;
        return v;
    };

    double total = 0.0;
    for (const auto& [a, va] : A)
        for (const auto& [b, vb] : B) {
            const int k1 = a[0] - b[0], k2 = a[1] - b[1];
            if (k1 + k2 != 0) continue;  // angular integral vanishes
            total += va * vb * W_hat(k1);
        }
    return total;
}

}  // namespace chaos

#endif
