#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chaos/jack.hpp"
#include "chaos/partitions.hpp"

using namespace chaos;
using Catch::Matchers::WithinRel;

static Partition P(std::vector<Part> parts, int N) { return Partition(std::move(parts), N); }

TEST_CASE("ChaosParams") {
    const auto p = ChaosParams::from_beta(0.5, 2);
    CHECK(p.gamma == 0.125);
    CHECK(p.subcritical());
    CHECK_THROWS_AS(ChaosParams::from_beta(1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(ChaosParams::from_beta(0.5, 0), std::invalid_argument);
    CHECK(ChaosParams::from_gamma(1.0, 2).gamma == 1.0);  // Schur case allowed here
    CHECK_FALSE(ChaosParams::from_gamma(0.5, 2).subcritical());
}

TEST_CASE("hook products c and c'") {
    const auto p = ChaosParams::from_gamma(0.25, 2);
    CHECK(c_product(P({}, 2), p).value() == 1.0);
    CHECK(c_prime_product(P({}, 2), p).value() == 1.0);

    // la = (2): cells have (arm, leg) = (1,0), (0,0)
    CHECK_THAT(c_product(P({2}, 1), p).value(), WithinRel(0.25 * 1.25, 1e-13));
    CHECK_THAT(c_prime_product(P({2}, 1), p).value(), WithinRel(2.0, 1e-13));

    // la = (1,1): legs (1,0)
    CHECK_THAT(c_product(P({1, 1}, 2), p).value(), WithinRel(0.125, 1e-13));
    CHECK_THAT(c_prime_product(P({1, 1}, 2), p).value(), WithinRel(1.25, 1e-13));
}

TEST_CASE("telescoped hook product equals the literal cell walk") {
    for (double g : {0.05, 0.125, 0.25, 0.45})
        for (int N = 1; N <= 4; ++N) {
            const auto p = ChaosParams::from_gamma(g, N);
            enumerate_partitions(N, 4, [&](const Partition& la) {
                CHECK_THAT(c_product(la, p).log,
                           Catch::Matchers::WithinAbs(c_product_direct(la, p, g).log, 1e-11));
                CHECK_THAT(c_prime_product(la, p).log,
                           Catch::Matchers::WithinAbs(c_product_direct(la, p, 1.0).log, 1e-11));
            });
        }
}

TEST_CASE("generalized Pochhammer symbol") {
    const auto p = ChaosParams::from_gamma(0.25, 2);
    CHECK_THAT(pochhammer_general(0.7, P({1}, 2), p).value(), WithinRel(0.7, 1e-13));
    CHECK(pochhammer_general(0.7, P({}, 2), p).value() == 1.0);
    // b = N g = 0.5, la = (2,1): (0.5)_2 (0.25)_1
    CHECK_THAT(pochhammer_general(0.5, P({2, 1}, 2), p).value(),
               WithinRel(0.75 * 0.25, 1e-13));
    CHECK_THROWS_AS(pochhammer_general(0.1, P({1, 1}, 2), p), std::invalid_argument);
}

TEST_CASE("F ratio and Wendel sandwich") {
    const auto p = ChaosParams::from_gamma(0.25, 1);
    CHECK_THAT(F_ratio(1.0, p).value(), WithinRel(1.0 / std::tgamma(1.75), 1e-13));
    CHECK_THROWS_AS(F_ratio(0.0, p), std::invalid_argument);

    // Stirling limit F(x) x^{1-g} -> 1
    CHECK_THAT(std::exp(F_ratio(1e6, p).log + 0.75 * std::log(1e6)), WithinRel(1.0, 1e-6));

    for (double g : {0.1, 0.25, 0.4}) {
        const auto q = ChaosParams::from_gamma(g, 1);
        const double W = wendel_envelope_constant(q, g);
        CHECK(W >= 1.0);
        for (double x = g; x <= 1e6; x *= 1.37) {
            const double fx = std::exp(F_ratio(x, q).log);
            CHECK(fx > std::pow(x, g - 1.0));           // Wendel lower bound
            CHECK(fx <= W * std::pow(x, g - 1.0));      // scanned envelope
        }
    }
    // far-out x_min: envelope collapses to the Stirling value
    CHECK_THAT(wendel_envelope_constant(p, 1e7), WithinRel(1.0, 1e-3));
    CHECK_THROWS_AS(wendel_envelope_constant(p, 0.1), std::invalid_argument);
}

TEST_CASE("norm_sq closed forms agree on the full panel") {
    for (double g : {0.05, 0.125, 0.25, 0.45})
        for (int N = 1; N <= 4; ++N) {
            const auto p = ChaosParams::from_gamma(g, N);
            enumerate_partitions(N, 8, [&](const Partition& la) {
                if (la.weight() > 8) return;
                CHECK_NOTHROW(norm_sq(la, p));  // throws if the two forms split
            });
        }

    // empty partition, N=2: Gamma(1+2g)/Gamma(1+g)^2
    const auto p = ChaosParams::from_gamma(0.25, 2);
    CHECK_THAT(norm_sq(P({}, 2), p).value(),
               WithinRel(std::tgamma(1.5) / (std::tgamma(1.25) * std::tgamma(1.25)), 1e-12));
    CHECK_THAT(norm_sq(P({}, 1), ChaosParams::from_gamma(0.25, 1)).value(),
               WithinRel(1.0, 1e-12));
}

TEST_CASE("value at one") {
    const auto p2 = ChaosParams::from_gamma(0.25, 2);
    CHECK(value_at_one(P({}, 2), p2).value() == 1.0);
    // la = (1): [Ng]_la / c_la = Ng / g = N (= e_1(1^N))
    for (int N = 1; N <= 4; ++N) {
        const auto p = ChaosParams::from_gamma(0.3, N);
        CHECK_THAT(value_at_one(P({1}, N), p).value(),
                   WithinRel(static_cast<double>(N), 1e-12));
    }
    CHECK_THAT(value_at_one(P({1}, 2), p2).value(), WithinRel(2.0, 1e-12));
}

TEST_CASE("rectangle ratios match direct recomputation") {
    for (double g : {0.125, 0.25, 0.45})
        for (int N = 1; N <= 3; ++N) {
            const auto p = ChaosParams::from_gamma(g, N);
            enumerate_partitions(N, 6, [&](const Partition& la) {
                if (la.weight() > 6) return;
                for (Part n : {Part{0}, Part{1}, Part{3}, Part{50}}) {
                    const Partition shifted = add_scalar(la, n);
                    const double want_c =
                        c_product(shifted, p).log - c_product(la, p).log;
                    const double want_cp =
                        c_prime_product(shifted, p).log - c_prime_product(la, p).log;
                    CHECK_THAT(rectangle_ratio_c(la, n, p).log,
                               Catch::Matchers::WithinAbs(want_c, 1e-9));
                    CHECK_THAT(rectangle_ratio_cprime(la, n, p).log,
                               Catch::Matchers::WithinAbs(want_cp, 1e-9));
                }
            });
        }
    // N=1, la=(), n=1: ratio = Gamma(g+1)/Gamma(g) = g
    const auto p1 = ChaosParams::from_gamma(0.25, 1);
    CHECK_THAT(rectangle_ratio_c(P({}, 1), 1, p1).value(), WithinRel(0.25, 1e-13));
    CHECK_THAT(rectangle_ratio_c(P({2, 1}, 2), 0, ChaosParams::from_gamma(0.25, 2)).value(),
               WithinRel(1.0, 1e-13));
    CHECK_THROWS_AS(rectangle_ratio_c(P({}, 1), -1, p1), std::invalid_argument);
}

TEST_CASE("b_cell") {
    const auto p = ChaosParams::from_gamma(0.25, 2);
    CHECK_THAT(b_cell(P({1}, 1), {1, 1}, p), WithinRel(0.25, 1e-13));
    CHECK_THAT(b_cell(P({1, 1}, 2), {1, 1}, p), WithinRel(0.4, 1e-13));  // (2g)/(g+1)
    enumerate_partitions(3, 4, [&](const Partition& la) {
        const auto q = ChaosParams::from_gamma(0.45, 3);
        for (int i = 1; i <= la.length(); ++i)
            for (Part j = 1; j <= la.part(i); ++j) {
                const double b = b_cell(la, {i, static_cast<int>(j)}, q);
                REQUIRE(b > 0.0);
                REQUIRE(b < 1.0);
            }
    });
}

TEST_CASE("Pieri coefficient psi'") {
    const auto p = ChaosParams::from_gamma(0.25, 2);
    CHECK(pieri_psi_prime(P({1}, 1), P({}, 1), ChaosParams::from_gamma(0.25, 1)) == 1.0);
    CHECK_THAT(pieri_psi_prime(P({1, 1}, 2), P({1, 0}, 2), p), WithinRel(1.6, 1e-13));
    // 2/(1+g) at a second gamma
    CHECK_THAT(pieri_psi_prime(P({1, 1}, 2), P({1, 0}, 2), ChaosParams::from_gamma(0.5, 2)),
               WithinRel(2.0 / 1.5, 1e-13));
    CHECK_THROWS_AS(pieri_psi_prime(P({3, 0}, 2), P({1, 0}, 2), p), std::invalid_argument);
}

TEST_CASE("psi' shift invariance to 1e-12") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> part(0, 6);
    const auto p = ChaosParams::from_gamma(0.3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Part> v = {part(rng), part(rng), part(rng)};
        std::sort(v.rbegin(), v.rend());
        const Partition mu(v, 3);
        for (int q = 0; q <= 3; ++q)
            for (const Partition& tau : enumerate_vertical_strips(mu, q)) {
                const double base = pieri_psi_prime(tau, mu, p);
                for (Part n : {Part{1}, Part{10}, Part{10000}}) {
                    const double shifted =
                        pieri_psi_prime(add_scalar(tau, n), add_scalar(mu, n), p);
                    REQUIRE_THAT(shifted, Catch::Matchers::WithinAbs(base, 1e-12));
                }
            }
    }
}

TEST_CASE("ratio lemma value") {
    const auto p3 = ChaosParams::from_gamma(0.25, 3);
    CHECK(ratio_lemma_value(P({4, 2, 0}, 3), ShapeVector{{0, 0, 0}}, p3) == 1.0);

    // N=1: four-Gamma ratio by hand, c'_{(g+1)} c_{(g)} / (c'_{(g)} c_{(g+1)})
    const auto p1 = ChaosParams::from_gamma(0.25, 1);
    for (Part g : {Part{4}, Part{32}, Part{256}}) {
        const Partition la({g}, 1);
        const double direct = std::exp(
            c_prime_product(P({g + 1}, 1), p1).log - c_prime_product(la, p1).log +
            c_product(la, p1).log - c_product(P({g + 1}, 1), p1).log);
        CHECK_THAT(ratio_lemma_value(la, ShapeVector{{1}}, p1), WithinRel(direct, 1e-12));
    }

    // large-gap decay when every row separation scales with the gap
    double prev = 1e9;
    for (Part g = 8; g <= 1024; g *= 2) {
        const double v =
            ratio_lemma_value(P({3 * g, 2 * g, g}, 3), ShapeVector{{1, 1, 0}}, p3);
        const double dev = std::abs(v - 1.0);
        CHECK(dev <= prev + 1e-15);
        CHECK(dev * static_cast<double>(g) < 2.0);
        prev = dev;
    }
    CHECK_THROWS_AS(ratio_lemma_value(P({1, 1, 0}, 3), ShapeVector{{1, 1, 1}}, p3),
                    std::invalid_argument);
}

TEST_CASE("K and C constants") {
    const auto p = ChaosParams::from_gamma(0.25, 3);
    CHECK_THAT(K_constant(p).value(),
               WithinRel(std::tgamma(1.75) / std::pow(std::tgamma(1.25), 3.0), 1e-12));
    CHECK_THAT(C_constant(p).value(),
               WithinRel(0.25 * 0.25 * 2.0 / std::tgamma(0.75), 1e-12));
}
