#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "chaos/partitions.hpp"

using namespace chaos;

static Partition P(std::vector<Part> parts, int N) { return Partition(std::move(parts), N); }

TEST_CASE("partition construction and accessors") {
    Partition la({5, 3, 1}, 4);
    CHECK(la.capacity() == 4);
    CHECK(la.length() == 3);
    CHECK(la.weight() == 9);
    CHECK(la.part(1) == 5);
    CHECK(la.part(4) == 0);
    CHECK(la.str() == "(5,3,1,0)");

    CHECK_THROWS_AS(P({1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(P({-1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(P({1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("conjugate parts and arm/leg") {
    Partition la({4, 2, 1}, 3);
    // conjugate is (3,2,1,1)
    CHECK(la.conjugate_part(1) == 3);
    CHECK(la.conjugate_part(2) == 2);
    CHECK(la.conjugate_part(3) == 1);
    CHECK(la.conjugate_part(4) == 1);
    CHECK(la.conjugate_part(5) == 0);

    CHECK(arm(la, {1, 1}) == 3);
    CHECK(leg(la, {1, 1}) == 2);
    CHECK(arm(la, {2, 2}) == 0);
    CHECK(leg(la, {2, 2}) == 0);
    CHECK_THROWS_AS(arm(la, Cell{1, 5}), std::invalid_argument);
}

TEST_CASE("conjugation is an involution") {
    for (int N = 1; N <= 30; N += 7)
        for (Part l1 : {Part{1}, Part{7}, Part{30}}) {
            int checked = 0;
            enumerate_partitions(std::min(N, 4), std::min<Part>(l1, 6),
                                 [&](const Partition& la) {
                                     if (la.weight() == 0) return;
                                     const Partition cc = conjugate(conjugate(la));
                                     // involution up to trailing-zero capacity
                                     REQUIRE(cc.length() == la.length());
                                     for (int i = 1; i <= cc.length(); ++i)
                                         REQUIRE(cc.part(i) == la.part(i));
                                     ++checked;
                                 });
            CHECK(checked > 0);
        }
    // a large, irregular one
    Partition la({30, 30, 19, 7, 7, 7, 1}, 30);
    const Partition cc = conjugate(conjugate(la));
    for (int i = 1; i <= la.length(); ++i) CHECK(cc.part(i) == la.part(i));
}

TEST_CASE("gap and shape addition") {
    CHECK(gap(P({4, 2, 0}, 3)) == 0);
    CHECK(gap(P({6, 4, 2}, 3)) == 2);
    CHECK(gap(P({}, 3)) == 0);

    const Partition r = add_shape(P({4, 3, 1}, 3), ShapeVector{{1, 1, 1}});
    CHECK(r == P({5, 4, 2}, 3));
    // gap((4,2,0)) = 0 (the gap includes the last part), so the admissibility
    // condition gap >= max entry rejects even an order-preserving shape
    CHECK_THROWS_AS(add_shape(P({4, 2, 0}, 3), ShapeVector{{1, 1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(add_shape(P({1, 1}, 2), ShapeVector{{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(add_shape(P({3, 1}, 2), ShapeVector{{1}}), std::invalid_argument);

    // shape with entries up to 2 needs gap >= 2
    const Partition ok = add_shape(P({6, 4, 2}, 3), ShapeVector{{2, 1, 2}});
    CHECK(ok == P({8, 5, 4}, 3));
}

TEST_CASE("shape addition decomposes into chained vertical strips (k <= 2)") {
    // nu = la + sigma with sigma in {0,1,2}^N must be reachable from la by
    // first adding the sigma>=1 rows, then the sigma=2 rows
    const Partition la({7, 5, 2}, 3);
    for (const ShapeVector& s : enumerate_shapes(3, {1, 1})) {
        const Partition nu = add_shape(la, s);
        std::vector<Part> step(la.parts());
        for (int i = 0; i < 3; ++i) step[i] += s.entries[i] >= 1 ? 1 : 0;
        const Partition mid1(step, 3);
        CHECK(is_vertical_strip(mid1, la));
        CHECK(is_vertical_strip(nu, mid1));
    }
}

TEST_CASE("enumerate_partitions counts and order") {
    // spec: N=2, Lmax=2 -> the six partitions below
    std::vector<std::string> seen;
    enumerate_partitions(2, 2, [&](const Partition& la) { seen.push_back(la.str()); });
    const std::vector<std::string> want = {"(0,0)", "(1,0)", "(1,1)",
                                           "(2,0)", "(2,1)", "(2,2)"};
    CHECK(seen == want);

    for (int N = 1; N <= 6; ++N)
        for (Part L = 0; L <= 12; L += 3) {
            long long count = 0;
            std::set<std::vector<Part>> uniq;
            enumerate_partitions(N, L, [&](const Partition& la) {
                ++count;
                uniq.insert(la.parts());
                REQUIRE(la.capacity() == N);
                REQUIRE(la[0] <= L);
            });
            // binomial(L + N, N)
            long long b = 1;
            for (int i = 1; i <= N; ++i) b = b * (L + i) / i;
            CHECK(count == b);
            CHECK(static_cast<long long>(uniq.size()) == count);
        }

    long long c35 = 0;
    enumerate_partitions(3, 4, [&](const Partition&) { ++c35; });
    CHECK(c35 == 35);

    long long c1 = 0;
    enumerate_partitions(1, 0, [&](const Partition& la) {
        ++c1;
        CHECK(la.weight() == 0);
    });
    CHECK(c1 == 1);
}

TEST_CASE("arm and leg are nonnegative on every enumerated cell") {
    enumerate_partitions(4, 5, [&](const Partition& la) {
        for (int i = 1; i <= la.length(); ++i)
            for (Part j = 1; j <= la.part(i); ++j) {
                const Cell s{i, static_cast<int>(j)};
                REQUIRE(arm(la, s) >= 0);
                REQUIRE(leg(la, s) >= 0);
            }
    });
}

TEST_CASE("vertical strips") {
    CHECK(is_vertical_strip(P({2, 2}, 2), P({1, 1}, 2)));
    CHECK_FALSE(is_vertical_strip(P({3, 0}, 2), P({1, 0}, 2)));
    CHECK(is_vertical_strip(P({1, 0}, 2), P({1, 0}, 2)));  // empty strip
    CHECK_FALSE(is_vertical_strip(P({0, 0}, 2), P({1, 0}, 2)));

    auto strips = enumerate_vertical_strips(P({0, 0}, 2), 1);
    REQUIRE(strips.size() == 1);
    CHECK(strips[0] == P({1, 0}, 2));

    strips = enumerate_vertical_strips(P({1, 0}, 2), 1);
    REQUIRE(strips.size() == 2);
    CHECK(strips[0] == P({1, 1}, 2));
    CHECK(strips[1] == P({2, 0}, 2));

    strips = enumerate_vertical_strips(P({1, 1}, 2), 2);
    REQUIRE(strips.size() == 1);
    CHECK(strips[0] == P({2, 2}, 2));

    // weight bookkeeping and strip property on a bigger panel
    const Partition mu({4, 3, 3, 1}, 5);
    for (int p = 0; p <= 5; ++p)
        for (const Partition& nu : enumerate_vertical_strips(mu, p)) {
            CHECK(nu.weight() == mu.weight() + p);
            CHECK(is_vertical_strip(nu, mu));
        }
}

TEST_CASE("cells_C_minus_R") {
    CHECK(cells_C_minus_R(P({1}, 1), P({}, 1)).empty());

    auto c = cells_C_minus_R(P({1, 1}, 2), P({1, 0}, 2));
    REQUIRE(c.size() == 1);
    CHECK(c[0] == Cell{1, 1});

    c = cells_C_minus_R(P({2, 2}, 2), P({2, 1}, 2));
    REQUIRE(c.size() == 1);
    CHECK(c[0] == Cell{1, 2});

    CHECK_THROWS_AS(cells_C_minus_R(P({3, 0}, 2), P({1, 0}, 2)), std::invalid_argument);
}

TEST_CASE("enumerate_shapes multiplicities and count") {
    auto shapes = enumerate_shapes(2, {1, 1});
    REQUIRE(shapes.size() == 2);  // (1,2) and (2,1)
    std::set<std::vector<int>> got;
    for (const auto& s : shapes) got.insert(s.entries);
    CHECK(got.count({1, 2}) == 1);
    CHECK(got.count({2, 1}) == 1);

    // multinomial N! / (N_0! N_1! ... N_k!)
    shapes = enumerate_shapes(4, {2, 1});
    CHECK(shapes.size() == 12);  // 4!/(1! 2! 1!)
    for (const auto& s : shapes) {
        auto m = s.multiplicities();
        REQUIRE(m == std::vector<int>{2, 1});
    }

    CHECK_THROWS_AS(enumerate_shapes(2, {2, 1}), std::invalid_argument);
}

TEST_CASE("json round trip") {
    const Partition la({5, 3, 1, 0}, 4);
    nlohmann::json j = la;
    CHECK(j.dump() == "[5,3,1,0]");
    CHECK(partition_from_json(j) == la);
}
