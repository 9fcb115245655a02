// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "wfc/bec.hpp"
#include "wfc/bounds.hpp"
#include "wfc/constructions.hpp"
#include "wfc/search.hpp"

using namespace wfc;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail,
            Clock::time_point start) {
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    printf("[%2d] %-34s %s  (%s, %.1fs)\n", idx, name.c_str(), pass ? "PASS" : "FAIL",
           detail.c_str(), s);
    fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* f, double x) {
    char buf[64];
    snprintf(buf, sizeof buf, f, x);
    return buf;
}

void criterion1_oracle_equivalence() {
    const auto start = Clock::now();
    std::mt19937_64 rng(1001);
    double maxdiff = 0;
    for (int m = 2; m <= 5; ++m)
        for (int rep = 0; rep < 100; ++rep) {
            TypeVector t(m);
            const int n = 1 + int(rng() % 6);
            for (int i = 0; i < n; ++i) ++t.t(1 + rng() % candidate_count(m));
            const Codebook cb = codebook_from_type(t);
            for (double d : {0.1, 0.3, 0.5, 0.9})
                maxdiff = std::max(maxdiff, std::fabs(error_probability(t, {d}).p_error -
                                                      oracle_error_probability(cb, {d}).p_error));
        }
    report(1, "oracle equivalence", maxdiff <= 1e-12, "max diff " + fmt("%.2e", maxdiff), start);
}

void criterion2_m34_optimality() {
    const auto start = Clock::now();
    bool pass = true;
    for (double d : {0.1, 0.3, 0.5, 0.9}) {
        const Channel ch{d};
        for (std::uint64_t n = 1; n <= 20; ++n)
            if (error_probability(optimal_m3m4(3, n), ch).p_error >
                exhaustive_search(3, n, ch).best_p_error + 1e-14)
                pass = false;
        for (std::uint64_t n = 1; n <= 9; ++n)
            if (error_probability(optimal_m3m4(4, n), ch).p_error >
                exhaustive_search(4, n, ch).best_p_error + 1e-14)
                pass = false;
    }
    report(2, "M=3,4 exhaustive optimality", pass, "M=3 n<=20, M=4 n<=9, 4 deltas", start);
}

void criterion3_m56_conjecture() {
    const auto start = Clock::now();
    bool pass = true;
    for (double d : {0.1, 0.3, 0.5, 0.9}) {
        const Channel ch{d};
        for (std::uint64_t n = 3; n <= 6; ++n)
            if (error_probability(conjectured_m5m6(5, n), ch).p_error >
                exhaustive_search(5, n, ch).best_p_error + 1e-14)
                pass = false;
        for (std::uint64_t n = 3; n <= 5; ++n)
            if (error_probability(conjectured_m5m6(6, n), ch).p_error >
                exhaustive_search(6, n, ch).best_p_error + 1e-14)
                pass = false;
    }
    report(3, "M=5,6 conjecture desk check", pass, "full enumeration, 4 deltas", start);
}

void criterion4_plotkin() {
    const auto start = Clock::now();
    bool pass = true;
    std::mt19937_64 rng(4004);
    for (int m = 2; m <= 8; ++m)
        for (int r = 2; r <= (m + 1) / 2; ++r)
            for (int rep = 0; rep < 1000; ++rep) {
                TypeVector t(m);
                const int n = 1 + int(rng() % 30);
                for (int i = 0; i < n; ++i) ++t.t(1 + rng() % candidate_count(m));
                if (double(min_rwise_distance(t, r)) > plotkin_bound(m, n, r).exact + 1e-9)
                    pass = false;
            }
    for (int m = 3; m <= 8; ++m) {
        const std::uint64_t L = weak_flip_count(m);
        const TypeVector t = fair_weak_flip(m, L);
        for (int r = 2; r <= (m + 1) / 2; ++r)
            if (std::fabs(double(min_rwise_distance(t, r)) - plotkin_bound(m, L, r).exact) > 1e-9)
                pass = false;
    }
    report(4, "generalized Plotkin program", pass, "1000 random codes per (M,r) + equality", start);
}

void criterion5_table1() {
    const auto start = Clock::now();
    bool pass = true;
    std::string detail;
    const Channel ch{0.3};
    const std::uint64_t ns[] = {8, 10, 12, 14, 21, 35};
    const std::uint64_t want[][3] = {{4, 6, 6},   {5, 8, 8},    {6, 10, 10},
                                     {8, 12, 12}, {12, 18, 18}, {20, 30, 30}};
    double lin_pe[6];
    for (int i = 0; i < 6; ++i) {
        const SearchReport r = exhaustive_linear_search(3, ns[i], ch);
        lin_pe[i] = r.best_p_error;
        for (int k = 0; k < 3; ++k)
            if (r.profile.min_rwise[k] != want[i][k]) pass = false;
    }
    SearchConfig cfg;
    cfg.seed = 2026;
    for (int i = 0; i < 4; ++i) {
        const SearchReport r = simulated_annealing(8, ns[i], ch, cfg);
        if (r.profile.min_rwise[2] != ns[i] - 1) pass = false;  // d_min;4 = n - 1
        if (!(r.best_p_error < lin_pe[i])) pass = false;
    }
    report(5, "M=8 search benchmarks", pass, "6 linear rows, 4 SA rows, 8 restarts", start);
}

void criterion6_table2a() {
    const auto start = Clock::now();
    const Channel ch{0.3};
    SearchConfig cfg;
    cfg.seed = 2026;
    cfg.max_iterations = 200;
    const SearchReport r = permuted_concatenation_search(2, ch, cfg);
    const std::uint64_t d8 = min_rwise_distance(r.best_type, 8);
    const double lin = error_probability(canonicalize(fair_linear(4, 30)), ch).p_error;
    const bool pass = d8 == 29 && r.best_p_error < lin;
    report(6, "M=16 concatenation spot check", pass,
           "d_min;8 = " + std::to_string(d8) + ", beats fair linear: " +
               (r.best_p_error < lin ? "yes" : "no"),
           start);
}

void criterion7_gap_identities() {
    const auto start = Clock::now();
    bool pass = true;
    const TypeVector lin35 = canonicalize(fair_linear(3, 35));
    const TypeVector fwf35 = fair_weak_flip(8, 35);
    double maxdiff = 0;
    for (double d = 0.05; d < 0.96; d += 0.05) {
        const double gap = error_probability(lin35, {d}).p_error -
                           error_probability(fwf35, {d}).p_error;
        const double closed =
            (14.0 / 8.0) * (std::pow(d, 30) + 4 * std::pow(d, 35) - 5 * std::pow(d, 34));
        maxdiff = std::max(maxdiff, std::fabs(gap - closed));
        if (!(gap > 0)) pass = false;
    }
    if (maxdiff > 1e-12) pass = false;
    for (std::uint64_t n : {14ull, 21ull, 28ull, 42ull}) {
        const TypeVector g = generalized_fair_weak_flip_m8(n);
        const TypeVector l = canonicalize(fair_linear(3, n));
        for (double d = 0.1; d < 0.91; d += 0.1)
            if (!(error_probability(g, {d}).p_error < error_probability(l, {d}).p_error))
                pass = false;
    }
    report(7, "linear-vs-nonlinear gaps", pass, "closed-form diff " + fmt("%.2e", maxdiff), start);
}

void criterion8_append_gains() {
    const auto start = Clock::now();
    bool pass = true;
    double maxdiff = 0;
    for (int k = 1; k <= 3; ++k)
        for (double d : {0.2, 0.4, 0.5, 0.6, 0.8}) {
            TypeVector t(4);
            t.t(3) = k;
            t.t(5) = k;
            t.t(6) = k - 1;
            const double n = 3.0 * k;
            double best = -1;
            int argmax = 0;
            for (int j = 1; j <= 7; ++j) {
                const double a = std::pow(d, 2 * k - 1), b = std::pow(d, 2 * k),
                             z = std::pow(d, n - 1);
                double closed;
                if (j == 6) closed = (4 * a - 3 * z) * (1 - d);
                else if (j == 3 || j == 5) closed = (2 * a + 2 * b - 3 * z) * (1 - d);
                else closed = (2 * a + b - 2 * z) * (1 - d);
                const double g = append_gain(t, std::uint32_t(j), {d});
                maxdiff = std::max(maxdiff, std::fabs(g - closed));
                if (g > best) {
                    best = g;
                    argmax = j;
                }
            }
            if (argmax != 6) pass = false;
        }
    if (maxdiff > 1e-12) pass = false;
    report(8, "append-gain test vectors", pass, "max diff " + fmt("%.2e", maxdiff), start);
}

void criterion9_bounds_sandwich() {
    const auto start = Clock::now();
    bool pass = true;
    const Channel ch{0.3};
    for (int m : {3, 4})
        for (std::uint64_t n = 2; n <= 40; ++n) {
            const double pe = error_probability(optimal_m3m4(m, n), ch).p_error;
            auto [lo, hi] = sgb_bounds(m, n, ch);
            if (!(ppv_lower(m, n, ch) <= pe + 1e-15)) pass = false;
            if (!(pe <= std::min(ppv_upper(m, n, ch), hi) + 1e-15)) pass = false;
            if (!(lo <= pe + 1e-15)) pass = false;
        }
    report(9, "bounds sandwich", pass, "M=3,4, delta=0.3, n=2..40", start);
}

void criterion10_quasi_linearity() {
    const auto start = Clock::now();
    bool pass = true;
    for (int m : {4, 5, 6, 8}) {
        const TypeVector fair = fair_weak_flip(m, weak_flip_count(m));
        const Codebook cb = codebook_from_type(fair);
        for (int row = 1; row <= m; ++row)
            if (!(canonicalize(translate(cb, row)) == fair)) pass = false;
    }
    std::mt19937_64 rng(1010);
    for (int rep = 0; rep < 100; ++rep) {
        const int ms[] = {4, 5, 6, 8};
        const int m = ms[rng() % 4];
        const auto weak = weak_flip_columns(m).indices;
        TypeVector t(m);
        const int n = 1 + int(rng() % 12);
        for (int i = 0; i < n; ++i) ++t.t(weak[rng() % weak.size()]);
        const Codebook cb = codebook_from_type(t);
        for (int row = 1; row <= m; ++row)
            if (!is_weak_flip(canonicalize(translate(cb, row)))) pass = false;
    }
    report(10, "quasi-linearity", pass, "translations at n=L + 100 random weak codes", start);
}

}  // namespace

int main() {
    criterion1_oracle_equivalence();
    criterion2_m34_optimality();
    criterion3_m56_conjecture();
    criterion4_plotkin();
    criterion5_table1();
    criterion6_table2a();
    criterion7_gap_identities();
    criterion8_append_gains();
    criterion9_bounds_sandwich();
    criterion10_quasi_linearity();
    printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
