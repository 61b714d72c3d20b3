#ifndef CHAOS_SIM_HPP
#define CHAOS_SIM_HPP

/* Monte Carlo simulation of imaginary chaos on the circle.
 *
 * The field is the spectral truncation
 *     X^(K)(theta) = sum_{k=1}^K sqrt(w_k/k) (A_k cos k theta + B_k sin k theta),
 * band-limited, so an 8x-oversampled grid represents the density to rounding
 * accuracy.  The weights are w_k = 1 except on the top octave k > K/2, where
 * w_k = 1 + alpha with alpha calibrated at construction: a sharp cutoff
 * (alpha = 0) is short of the limit kernel |2 sin(t/2)|^{-beta^2} by a spike
 * concentrated at |t| <~ 1/K, whose Fourier transform is flat across n << K,
 * so every low-frequency moment of the chaos inherits the same relative
 * deficit, about (n/K)^{1-beta^2} (5% at n = K/32, beta^2 = 1/2).  Restoring
 * the kernel's total mass with the one scalar alpha removes the spike and
 * with it the bias at every n << K at once; the calibration target is the
 * classical zeroth coefficient Gamma(1-beta^2)/Gamma(1-beta^2/2)^2 and never
 * looks at n > 0.
 *
 * Randomness is counter-based (Philox4x32-10), one substream per sample
 * index: sample streams are identical regardless of evaluation order or
 * worker count.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <fftw3.h>
#include <json.hpp>

#include "numeric.hpp"

namespace chaos {

// ---------------------------------------------------------------------------
// Philox4x32-10 (Salmon et al. constants)

struct Philox4x32 {
    std::uint32_t key[2];

    explicit Philox4x32(std::uint64_t seed)
        : key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

    static void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                        std::uint32_t& lo) {
        const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
        hi = static_cast<std::uint32_t>(p >> 32);
        lo = static_cast<std::uint32_t>(p);
    }

    // one 128-bit block: counter = (sample_lo, sample_hi, block_lo, block_hi)
    void block(std::uint64_t sample, std::uint64_t idx, std::uint32_t out[4]) const {
        std::uint32_t c0 = static_cast<std::uint32_t>(sample);
        std::uint32_t c1 = static_cast<std::uint32_t>(sample >> 32);
        std::uint32_t c2 = static_cast<std::uint32_t>(idx);
        std::uint32_t c3 = static_cast<std::uint32_t>(idx >> 32);
        std::uint32_t k0 = key[0], k1 = key[1];
        for (int round = 0; round < 10; ++round) {
            std::uint32_t hi0, lo0, hi1, lo1;
            mulhilo(0xD2511F53u, c0, hi0, lo0);
            mulhilo(0xCD9E8D57u, c2, hi1, lo1);
            const std::uint32_t n0 = hi1 ^ c1 ^ k0;
            const std::uint32_t n1 = lo1;
            const std::uint32_t n2 = hi0 ^ c3 ^ k1;
            const std::uint32_t n3 = lo0;
            c0 = n0; c1 = n1; c2 = n2; c3 = n3;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        out[0] = c0; out[1] = c1; out[2] = c2; out[3] = c3;
    }
};

// standard normals for one sample substream, Box-Muller on 64-bit uniforms
class NormalStream {
  public:
    NormalStream(const Philox4x32& gen, std::uint64_t sample)
        : gen_(gen), sample_(sample) {}

    double next() {
        if (have_) {
            have_ = false;
            return spare_;
        }
        std::uint32_t b[4];
        gen_.block(sample_, idx_++, b);
        const double u1 = u64_to_unit((static_cast<std::uint64_t>(b[0]) << 32) | b[1]);
        const double u2 = u64_to_unit((static_cast<std::uint64_t>(b[2]) << 32) | b[3]);
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

  private:
    static double u64_to_unit(std::uint64_t x) {
        return (static_cast<double>(x >> 11) + 0.5) * 0x1p-53;  // in (0,1)
    }
    Philox4x32 gen_;
    std::uint64_t sample_;
    std::uint64_t idx_ = 0;
    double spare_ = 0.0;
    bool have_ = false;
};

// ---------------------------------------------------------------------------

struct SimConfig {
    double beta;
    int K;               // number of Fourier modes (mollification 1/epsilon)
    int G;               // grid size, power of two, G >= 8K
    int M;               // independent samples
    std::uint64_t seed;
    std::vector<Part> n_list;  // each n <= K/16

    void validate() const {
        if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("beta outside (0,1)");
        if (K < 1 || M < 1) throw std::invalid_argument("K, M must be positive");
        if (G < 8 * K || (G & (G - 1)) != 0)
            throw std::invalid_argument("G must be a power of two with G >= 8K");
        for (Part n : n_list)
            if (n < 0 || 16 * n > K)
                throw std::invalid_argument("recorded n must satisfy n <= K/16");
    }

    double H_K() const {
        KahanSum h;
        for (int k = K; k >= 1; --k) h.add(1.0 / k);
        return h.value();
    }
};

struct FieldSample {
    std::vector<double> values;  // X at theta_j = 2 pi j / G
    double H_K;
};

struct MomentEstimate {
    std::complex<double> estimate;
    double se_re = 0.0;  // batch-means standard errors per component
    double se_im = 0.0;
    int M_effective = 0;
    double se() const { return std::hypot(se_re, se_im); }
};

inline constexpr int kBatchCount = 32;

// ---------------------------------------------------------------------------
// one-config simulation engine; owns the FFTW plans and scratch buffers

class Simulator {
  public:
    explicit Simulator(SimConfig cfg) : cfg_(std::move(cfg)), gen_(cfg_.seed) {
        cfg_.validate();
        buf_ = fftw_alloc_complex(static_cast<size_t>(cfg_.G));
        out_ = fftw_alloc_complex(static_cast<size_t>(cfg_.G));
        plan_ = fftw_plan_dft_1d(cfg_.G, buf_, out_, FFTW_BACKWARD, FFTW_ESTIMATE);
        calibrate();
        h_k_ = 0.0;
        {
            KahanSum h;
            for (int k = cfg_.K; k >= 1; --k) h.add(mode_weight(k) / k);
            h_k_ = h.value();  // E[X^2] of the calibrated field
        }
        renorm_ = 0.5 * cfg_.beta * cfg_.beta * h_k_;
        if (renorm_ > 700.0)
            throw std::invalid_argument("renormalization exp((beta^2/2) E X^2) overflows");
    }
    ~Simulator() {
        fftw_destroy_plan(plan_);
        fftw_free(buf_);
        fftw_free(out_);
    }
    Simulator(const Simulator&) = delete;
    Simulator& operator=(const Simulator&) = delete;

    const SimConfig& config() const { return cfg_; }
    double H_K() const { return h_k_; }
    double top_octave_boost() const { return alpha_; }

    // X^(K) on the grid via one inverse FFT of the spectral coefficients
    FieldSample sample_field(std::uint64_t sample_id) {
        NormalStream rng(gen_, sample_id);
        for (int j = 0; j < cfg_.G; ++j) buf_[j][0] = buf_[j][1] = 0.0;
        for (int k = 1; k <= cfg_.K; ++k) {
            const double s = std::sqrt(mode_weight(k) / k);
            const double A = rng.next(), B = rng.next();
            buf_[k][0] = s * A;   // X = Re sum (A_k - i B_k) e^{ik theta}
            buf_[k][1] = -s * B;
        }
        fftw_execute(plan_);
        FieldSample f;
        f.H_K = h_k_;
        f.values.resize(static_cast<size_t>(cfg_.G));
        for (int j = 0; j < cfg_.G; ++j) f.values[static_cast<size_t>(j)] = out_[j][0];
        return f;
    }

    // exp(i beta X + (beta^2/2) H_K) on the grid
    std::vector<std::complex<double>> measure_density(const FieldSample& f) const {
        const double amp = std::exp(renorm_);
        std::vector<std::complex<double>> rho(f.values.size());
        for (size_t j = 0; j < f.values.size(); ++j)
            rho[j] = std::polar(amp, cfg_.beta * f.values[j]);
        return rho;
    }

    // c_n = (2 pi / G) sum_j rho_j e^{i n theta_j}, from one FFT of the grid
    std::vector<std::complex<double>> fourier_coeffs(
        const std::vector<std::complex<double>>& rho, const std::vector<Part>& n_list) {
        for (int j = 0; j < cfg_.G; ++j) {
            buf_[j][0] = rho[static_cast<size_t>(j)].real();
            buf_[j][1] = rho[static_cast<size_t>(j)].imag();
        }
        fftw_execute(plan_);
        const double scale = 2.0 * M_PI / cfg_.G;
        std::vector<std::complex<double>> c;
        c.reserve(n_list.size());
        for (Part n : n_list) {
            const int idx = static_cast<int>(((n % cfg_.G) + cfg_.G) % cfg_.G);
            c.emplace_back(scale * out_[idx][0], scale * out_[idx][1]);
        }
        return c;
    }

    // c_n for every sample and every n in cfg.n_list, indexed [sample][n_pos].
    // The sample loop is sequential here; per-sample substreams make any
    // parallel schedule produce the identical table.
    std::vector<std::vector<std::complex<double>>> run() {
        std::vector<std::vector<std::complex<double>>> table(
            static_cast<size_t>(cfg_.M));
        for (int s = 0; s < cfg_.M; ++s) {
            const FieldSample f = sample_field(static_cast<std::uint64_t>(s));
            table[static_cast<size_t>(s)] =
                fourier_coeffs(measure_density(f), cfg_.n_list);
        }
        return table;
    }

  private:
    double mode_weight(int k) const { return k > cfg_.K / 2 ? 1.0 + alpha_ : 1.0; }

    // Solve for the top-octave boost: the grid mean of the field's chaos
    // kernel exp(beta^2 C_w(t)) must equal the limit kernel's zeroth Fourier
    // coefficient.  C_w depends on alpha affinely, so two FFTs give the
    // kernel for every alpha and the rest is a scalar bisection.
    void calibrate() {
        const double b2 = cfg_.beta * cfg_.beta;
        const double target =
            std::exp(std::lgamma(1.0 - b2) - 2.0 * std::lgamma(1.0 - 0.5 * b2));
        const int K = cfg_.K, G = cfg_.G;
        std::vector<double> base(static_cast<size_t>(G)), top(static_cast<size_t>(G));
        auto cosine_sum = [&](int k_lo, int k_hi, std::vector<double>& dst) {
            for (int j = 0; j < G; ++j) buf_[j][0] = buf_[j][1] = 0.0;
            for (int k = k_lo; k <= k_hi; ++k) buf_[k][0] = 1.0 / k;
            fftw_execute(plan_);
            for (int j = 0; j < G; ++j) dst[static_cast<size_t>(j)] = out_[j][0];
        };
        cosine_sum(1, K, base);         // sum_{k<=K} cos(k theta_j)/k
        cosine_sum(K / 2 + 1, K, top);  // top-octave part of the same sum
        auto kernel_mean = [&](double a) {
            KahanSum s;
            for (int j = 0; j < G; ++j)
                s.add(std::exp(b2 * (base[static_cast<size_t>(j)] +
                                     a * top[static_cast<size_t>(j)])));
            return s.value() / G;
        };
        if (kernel_mean(0.0) >= target) {
            alpha_ = 0.0;
            return;
        }
        double lo = 0.0, hi = 1.0;
        while (kernel_mean(hi) < target && hi < 64.0) hi *= 2.0;
        for (int it = 0; it < 50; ++it) {
            const double mid = 0.5 * (lo + hi);
            (kernel_mean(mid) < target ? lo : hi) = mid;
        }
        alpha_ = 0.5 * (lo + hi);
    }

    SimConfig cfg_;
    Philox4x32 gen_;
    double h_k_ = 0.0, renorm_ = 0.0, alpha_ = 0.0;
    fftw_complex* buf_ = nullptr;
    fftw_complex* out_ = nullptr;
    fftw_plan plan_ = nullptr;
};

// ---------------------------------------------------------------------------
// estimators over a sample table

// one factor of a mixed-moment pattern: Z_{n}^{(conj)} with CLT rescaling
struct PatternFactor {
    Part n;
    bool conjugated;
};

// batch-means estimate of E[prod_f n_f^{(1-beta^2)/2} c_{n_f}^{(*)}]
inline MomentEstimate estimate_pattern(
    const std::vector<std::vector<std::complex<double>>>& table,
    const std::vector<Part>& n_list, const std::vector<PatternFactor>& pattern,
    double beta, bool rescale = true) {
    const int M = static_cast<int>(table.size());
    if (M < 2) throw std::invalid_argument("need at least two samples");
    auto n_pos = [&](Part n) {
        for (size_t i = 0; i < n_list.size(); ++i)
            if (n_list[i] == n) return i;
        throw std::invalid_argument("pattern index not recorded in n_list");
    };
    double logscale = 0.0;
    if (rescale)
        for (const auto& f : pattern)
            logscale += 0.5 * (1.0 - beta * beta) * std::log(static_cast<double>(f.n));
    const double scale = std::exp(logscale);

    std::vector<std::complex<double>> per_sample(static_cast<size_t>(M));
    for (int s = 0; s < M; ++s) {
        std::complex<double> v = scale;
        for (const auto& f : pattern) {
            const std::complex<double> z = table[static_cast<size_t>(s)][n_pos(f.n)];
            v *= f.conjugated ? std::conj(z) : z;
        }
        per_sample[static_cast<size_t>(s)] = v;
    }

    // batch means over kBatchCount contiguous batches
    const int B = std::min(kBatchCount, M);
    std::vector<std::complex<double>> bm(static_cast<size_t>(B));
    KahanSum tot_re, tot_im;
    for (int b = 0; b < B; ++b) {
        const int lo = static_cast<int>((static_cast<std::int64_t>(b) * M) / B);
        const int hi = static_cast<int>((static_cast<std::int64_t>(b + 1) * M) / B);
        KahanSum re, im;
        for (int s = lo; s < hi; ++s) {
            re.add(per_sample[static_cast<size_t>(s)].real());
            im.add(per_sample[static_cast<size_t>(s)].imag());
        }
        bm[static_cast<size_t>(b)] = {re.value() / (hi - lo), im.value() / (hi - lo)};
        tot_re.add(re.value());
        tot_im.add(im.value());
    }
    const std::complex<double> mean{tot_re.value() / M, tot_im.value() / M};
    double vr = 0.0, vi = 0.0;
    for (const auto& z : bm) {
        vr += (z.real() - mean.real()) * (z.real() - mean.real());
        vi += (z.imag() - mean.imag()) * (z.imag() - mean.imag());
    }
    MomentEstimate e;
    e.estimate = mean;
    e.se_re = std::sqrt(vr / (B * (B - 1.0)));
    e.se_im = std::sqrt(vi / (B * (B - 1.0)));
    e.M_effective = M;
    return e;
}

// E|c_n|^{2N} with rescaling n^{N(1-beta^2)}
inline MomentEstimate estimate_abs_moment(
    const std::vector<std::vector<std::complex<double>>>& table,
    const std::vector<Part>& n_list, Part n, int N, double beta) {
    std::vector<PatternFactor> pat;
    for (int i = 0; i < N; ++i) {
        pat.push_back({n, false});
        pat.push_back({n, true});
    }
    return estimate_pattern(table, n_list, pat, beta);
}

// least-squares slope of log E_emp|c_n|^2 against log n; stderr by jackknife
// over the batch index
inline std::pair<double, double> fourier_dimension_estimate(
    const std::vector<std::vector<std::complex<double>>>& table,
    const std::vector<Part>& n_list, const std::vector<Part>& n_range) {
    if (n_range.size() < 5)
        throw std::invalid_argument("need at least 5 dyadic points");
    const int M = static_cast<int>(table.size());
    const int B = std::min(kBatchCount, M);
    auto n_pos = [&](Part n) {
        for (size_t i = 0; i < n_list.size(); ++i)
            if (n_list[i] == n) return i;
        throw std::invalid_argument("n not recorded");
    };
    // per-batch mean of |c_n|^2
    std::vector<std::vector<double>> batch_mean(
        static_cast<size_t>(B), std::vector<double>(n_range.size(), 0.0));
    std::vector<int> batch_size(static_cast<size_t>(B), 0);
    for (int b = 0; b < B; ++b) {
        const int lo = static_cast<int>((static_cast<std::int64_t>(b) * M) / B);
        const int hi = static_cast<int>((static_cast<std::int64_t>(b + 1) * M) / B);
        batch_size[static_cast<size_t>(b)] = hi - lo;
        for (size_t q = 0; q < n_range.size(); ++q) {
            KahanSum acc;
            for (int s = lo; s < hi; ++s)
                acc.add(std::norm(table[static_cast<size_t>(s)][n_pos(n_range[q])]));
            batch_mean[static_cast<size_t>(b)][q] = acc.value() / (hi - lo);
        }
    }
    auto slope_of = [&](int skip) {
        std::vector<double> mean(n_range.size(), 0.0);
        int tot = 0;
        for (int b = 0; b < B; ++b) {
            if (b == skip) continue;
            for (size_t q = 0; q < n_range.size(); ++q)
                mean[q] += batch_mean[static_cast<size_t>(b)][q] *
                           batch_size[static_cast<size_t>(b)];
            tot += batch_size[static_cast<size_t>(b)];
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const int P = static_cast<int>(n_range.size());
        for (size_t q = 0; q < n_range.size(); ++q) {
            const double x = std::log(static_cast<double>(n_range[q]));
            const double y = std::log(mean[q] / tot);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
        }
        return (P * sxy - sx * sy) / (P * sxx - sx * sx);
    };
    const double full = slope_of(-1);
    double var = 0.0;
    for (int b = 0; b < B; ++b) {
        const double s = slope_of(b);
        var += (s - full) * (s - full);
    }
    var *= (B - 1.0) / B;
    return {full, std::sqrt(var)};
}

// empirical covariance / pseudo-covariance report for (Z_n, ..., Z_{n+k})
struct WhiteNoiseReport {
    std::vector<std::vector<MomentEstimate>> cov;     // E[Z_a conj(Z_b)]
    std::vector<std::vector<MomentEstimate>> pseudo;  // E[Z_a Z_b]
    double kappa_target = 0.0;
    // |z| scores: diagonal against kappa, everything else against 0
    double max_offdiag_z = 0.0;
    double max_diag_z = 0.0;
    double max_pseudo_z = 0.0;
};

inline WhiteNoiseReport white_noise_marginals_test(
    const std::vector<std::vector<std::complex<double>>>& table,
    const std::vector<Part>& n_list, Part n0, int k, double beta,
    double kappa_value) {
    if (k > 8) throw std::invalid_argument("k <= 8");
    WhiteNoiseReport rep;
    rep.kappa_target = kappa_value;
    rep.cov.resize(static_cast<size_t>(k) + 1);
    rep.pseudo.resize(static_cast<size_t>(k) + 1);
    for (int a = 0; a <= k; ++a) {
        for (int b = 0; b <= k; ++b) {
            const auto cab = estimate_pattern(
                table, n_list, {{n0 + a, false}, {n0 + b, true}}, beta);
            const auto pab = estimate_pattern(
                table, n_list, {{n0 + a, false}, {n0 + b, false}}, beta);
            rep.cov[static_cast<size_t>(a)].push_back(cab);
            rep.pseudo[static_cast<size_t>(a)].push_back(pab);
            const double zc =
                (a == b)
                    ? std::abs(cab.estimate.real() - kappa_value) /
                          std::max(cab.se_re, 1e-300)
                    : std::abs(cab.estimate) / std::max(cab.se(), 1e-300);
            const double zp = std::abs(pab.estimate) / std::max(pab.se(), 1e-300);
            if (a == b)
                rep.max_diag_z = std::max(rep.max_diag_z, zc);
            else
                rep.max_offdiag_z = std::max(rep.max_offdiag_z, zc);
            rep.max_pseudo_z = std::max(rep.max_pseudo_z, zp);
        }
    }
    return rep;
}

}  // namespace chaos

#endif
