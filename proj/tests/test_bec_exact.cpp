#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wfc/bec.hpp"
#include "wfc/constructions.hpp"

using namespace wfc;

TEST_CASE("closed-form error probabilities") {
    for (int n = 1; n <= 6; ++n) {
        TypeVector t(2);
        t.t(1) = n;
        CHECK(error_probability(t, {0.4}).p_error == Catch::Approx(std::pow(0.4, n) / 2).margin(1e-15));
    }
    TypeVector t3(3);
    t3.t(1) = t3.t(2) = t3.t(3) = 1;
    CHECK(error_probability(t3, {0.5}).p_error == Catch::Approx((3 * 0.25 - 0.125) / 3).margin(1e-15));

    TypeVector t4(4);
    t4.t(3) = t4.t(5) = t4.t(6) = 1;
    CHECK(error_probability(t4, {0.5}).p_error == Catch::Approx(0.28125).margin(1e-15));

    // duplicate codewords: d = 0 terms survive via delta^0 = 1
    TypeVector dup(2);
    dup.zero_columns = 4;
    CHECK(error_probability(dup, {0.2}).p_error == Catch::Approx(0.5).margin(1e-15));
    CHECK(error_probability(dup, {0.0}).p_error == Catch::Approx(0.5).margin(1e-15));
}

TEST_CASE("oracle agrees with the type-vector formula") {
    std::mt19937_64 rng(314);
    for (int m = 2; m <= 5; ++m)
        for (int rep = 0; rep < 20; ++rep) {
            TypeVector t(m);
            const int n = 1 + int(rng() % 6);
            for (int i = 0; i < n; ++i) ++t.t(1 + rng() % candidate_count(m));
            const Codebook cb = codebook_from_type(t);
            for (double d : {0.1, 0.3, 0.5, 0.9}) {
                const double exact = error_probability(t, {d}).p_error;
                const EvalResult o = oracle_error_probability(cb, {d});
                CHECK(std::fabs(exact - o.p_error) <= 1e-12);
                REQUIRE(o.per_message.has_value());
                double mean = 0;
                for (double l : *o.per_message) mean += l;
                CHECK(mean / m == Catch::Approx(o.p_error).margin(1e-15));
            }
        }
}

TEST_CASE("oracle tie-break invariance and basics") {
    Codebook bit;
    bit.m = 2;
    bit.n = 1;
    bit.rows = {{0}, {1}};
    for (double d : {0.0, 0.2, 0.7})
        CHECK(oracle_error_probability(bit, {d}).p_error == Catch::Approx(d / 2).margin(1e-15));

    Codebook dup;
    dup.m = 2;
    dup.n = 3;
    dup.rows = {{0, 1, 0}, {0, 1, 0}};
    CHECK(oracle_error_probability(dup, {0.3}).p_error == Catch::Approx(0.5).margin(1e-15));

    std::mt19937_64 rng(555);
    for (int rep = 0; rep < 15; ++rep) {
        const int m = 2 + int(rng() % 4);
        TypeVector t(m);
        for (int i = 0; i < 5; ++i) ++t.t(1 + rng() % candidate_count(m));
        const Codebook cb = codebook_from_type(t);
        const double lo = oracle_error_probability(cb, {0.4}, TieBreak::LowestIndex).p_error;
        const double hi = oracle_error_probability(cb, {0.4}, TieBreak::HighestIndex).p_error;
        const double rr = oracle_error_probability(cb, {0.4}, TieBreak::RoundRobin).p_error;
        CHECK(std::fabs(lo - hi) <= 1e-15);
        CHECK(std::fabs(lo - rr) <= 1e-15);
    }

    Codebook big;
    big.m = 2;
    big.n = 15;
    big.rows.assign(2, std::vector<std::uint8_t>(15, 0));
    CHECK_THROWS(oracle_error_probability(big, {0.1}));
}

TEST_CASE("complement invariance") {
    std::mt19937_64 rng(808);
    for (int rep = 0; rep < 10; ++rep) {
        const int m = 3 + int(rng() % 3);
        TypeVector t(m);
        for (int i = 0; i < 6; ++i) ++t.t(1 + rng() % candidate_count(m));
        Codebook cb = codebook_from_type(t);
        Codebook flipped = cb;
        for (int p = 0; p < cb.n; p += 2)
            for (int i = 0; i < cb.m; ++i) flipped.rows[i][p] ^= 1;
        CHECK(oracle_error_probability(cb, {0.35}).p_error ==
              Catch::Approx(oracle_error_probability(flipped, {0.35}).p_error).margin(1e-15));
    }
}

TEST_CASE("monotonicity in delta and under appends") {
    const TypeVector t = optimal_m3m4(4, 5);
    double prev = 0;
    for (double d = 0.0; d < 1.0; d += 0.05) {
        const double pe = error_probability(t, {d}).p_error;
        CHECK(pe >= prev - 1e-15);
        prev = pe;
    }
    std::mt19937_64 rng(22);
    for (int rep = 0; rep < 30; ++rep) {
        const int m = 3 + int(rng() % 3);
        TypeVector u(m);
        for (int i = 0; i < 4; ++i) ++u.t(1 + rng() % candidate_count(m));
        const std::uint32_t j = 1 + rng() % candidate_count(m);
        CHECK(append_gain(u, j, {0.4}) >= -1e-15);
    }
}

TEST_CASE("append gain matches direct evaluation and test vectors") {
    TypeVector seed(4);
    seed.t(3) = 1;
    seed.t(5) = 1;
    CHECK(append_gain(seed, 6, {0.5}) == Catch::Approx(0.625).margin(1e-15));
    CHECK(append_gain(seed, 7, {0.5}) == Catch::Approx(0.375).margin(1e-15));
    CHECK(append_gain(seed, 6, {1e-9}) == Catch::Approx(0.0).margin(1e-8));

    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 30; ++rep) {
        const int m = 3 + int(rng() % 3);
        TypeVector u(m);
        for (int i = 0; i < 5; ++i) ++u.t(1 + rng() % candidate_count(m));
        const std::uint32_t j = 1 + rng() % candidate_count(m);
        TypeVector v = u;
        ++v.t(j);
        const double direct =
            m * (error_probability(u, {0.4}).p_error - error_probability(v, {0.4}).p_error);
        CHECK(append_gain(u, j, {0.4}) == Catch::Approx(direct).margin(1e-13));
    }
}
