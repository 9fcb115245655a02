#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "wfc/bec.hpp"
#include "wfc/code.hpp"
#include "wfc/constructions.hpp"
#include "wfc/distance.hpp"

namespace wfc {

struct SearchConfig {
    std::uint64_t seed = 1;
    double t_start = 1.0;
    double t_freeze = 1e-4;
    double alpha = 0.95;
    std::uint64_t moves_per_temp = 0;  // 0 -> 200 * n
    std::uint64_t max_iterations = 500;
    int restarts = 8;
};

struct SearchReport {
    TypeVector best_type;
    std::optional<Codebook> best_codebook;  // concatenation search only
    double best_p_error = 1.0;
    DistanceProfile profile;
    std::uint64_t iterations = 0;
    std::uint64_t seed = 0;
};

enum class SearchRestrict { All, WeakFlip };

namespace detail {

// Precomputed inclusion-exclusion sweep for one M: all subset masks of size
// >= 2 with their signs, and for each candidate column the positions of the
// masks it is constant on. Shared by every incremental evaluation below.
struct SubsetSweep {
    int m = 0;
    std::vector<std::uint32_t> masks;
    std::vector<double> sign;
    std::vector<std::vector<std::uint32_t>> matched;  // [j-1] -> mask positions

    explicit SubsetSweep(int m_) : m(m_) {
        const std::uint32_t limit = 1u << m;
        for (std::uint32_t mask = 3; mask < limit; ++mask) {
            const int r = std::popcount(mask);
            if (r < 2) continue;
            masks.push_back(mask);
            sign.push_back((r & 1) ? -1.0 : 1.0);
        }
        matched.resize(candidate_count(m));
        for (std::uint32_t j = 1; j <= candidate_count(m); ++j)
            for (std::uint32_t p = 0; p < masks.size(); ++p) {
                const std::uint32_t x = j & masks[p];
                if (x == 0 || x == masks[p]) matched[j - 1].push_back(p);
            }
    }

    // a[p] = r-wise match of the current column multiset on masks[p]
    void apply(std::vector<std::int64_t>& a, std::uint32_t j, std::int64_t c) const {
        for (std::uint32_t p : matched[j - 1]) a[p] += c;
    }

    double p_error(const std::vector<std::int64_t>& a, std::uint64_t n,
                   const std::vector<double>& dpow) const {
        Kahan acc;
        for (std::uint32_t p = 0; p < masks.size(); ++p)
            acc.add(sign[p] * dpow[n - static_cast<std::uint64_t>(a[p])]);
        return acc.sum / m;
    }
};

inline double composition_count(std::uint64_t n, std::uint64_t parts) {
    // C(n + parts - 1, parts - 1) in floating point (overflow-safe guard)
    double r = 1.0;
    for (std::uint64_t i = 1; i < parts; ++i) r *= double(n + i) / double(i);
    return r;
}

inline TypeVector type_from_multiset(int m, const std::vector<std::uint32_t>& cols) {
    TypeVector t(m);
    for (std::uint32_t j : cols) ++t.t(j);
    return t;
}

}  // namespace detail

// Enumerate every type vector over the allowed columns summing to n and
// return a global minimizer of the exact error probability. Enumeration is
// lexicographic in the type vector, and only strict improvements replace the
// incumbent, so ties resolve to the lexicographically smallest type.
inline SearchReport exhaustive_search_columns(int m, std::uint64_t n, const Channel& ch,
                                              const std::vector<std::uint32_t>& columns) {
    if (columns.empty()) throw std::invalid_argument("exhaustive_search: no columns");
    if (detail::composition_count(n, columns.size()) > 1e7)
        throw std::invalid_argument("exhaustive_search: search space too large");
    check_channel(ch);

    const detail::SubsetSweep sweep(m);
    const auto dpow = detail::delta_powers(ch.delta, n);
    std::vector<std::int64_t> a(sweep.masks.size(), 0);

    SearchReport rep;
    rep.best_p_error = std::numeric_limits<double>::infinity();

    std::uint64_t leaves = 0;
    std::vector<std::uint32_t> cnt(columns.size(), 0);
    auto rec = [&](auto&& self, std::size_t level, std::uint64_t remaining) -> void {
        if (level + 1 == columns.size()) {
            cnt[level] = static_cast<std::uint32_t>(remaining);
            sweep.apply(a, columns[level], static_cast<std::int64_t>(remaining));
            const double p = sweep.p_error(a, n, dpow);
            ++leaves;
            if (p < rep.best_p_error) {
                rep.best_p_error = p;
                TypeVector t(m);
                for (std::size_t i = 0; i < columns.size(); ++i) t.t(columns[i]) = cnt[i];
                rep.best_type = std::move(t);
            }
            sweep.apply(a, columns[level], -static_cast<std::int64_t>(remaining));
            cnt[level] = 0;
            return;
        }
        for (std::uint64_t c = 0; c <= remaining; ++c) {
            cnt[level] = static_cast<std::uint32_t>(c);
            self(self, level + 1, remaining - c);
            sweep.apply(a, columns[level], 1);  // prepare count c+1
        }
        sweep.apply(a, columns[level], -static_cast<std::int64_t>(remaining + 1));
        cnt[level] = 0;
    };
    rec(rec, 0, n);

    rep.iterations = leaves;
    rep.profile = distance_profile(rep.best_type);
    return rep;
}

inline SearchReport exhaustive_search(int m, std::uint64_t n, const Channel& ch,
                                      SearchRestrict restrict = SearchRestrict::All) {
    std::vector<std::uint32_t> cols;
    if (restrict == SearchRestrict::All) {
        for (std::uint32_t j = 1; j <= candidate_count(m); ++j) cols.push_back(j);
    } else {
        cols = weak_flip_columns(m).indices;
    }
    return exhaustive_search_columns(m, n, ch, cols);
}

// Exhaustive minimization over all linear types: the candidate columns are
// the 2^k - 1 parity columns of the simplex code, embedded in M = 2^k rows.
inline std::vector<std::uint32_t> linear_candidate_columns(int k) {
    const int M = 1 << k;
    std::vector<std::uint32_t> cols;
    for (std::uint32_t u = 1; u < (1u << k); ++u) {
        std::uint32_t c = 0;
        for (int i = 0; i < M; ++i)
            c = (c << 1) | (std::popcount(static_cast<unsigned>(i) & u) & 1u);
        cols.push_back(c);
    }
    std::sort(cols.begin(), cols.end());
    return cols;
}

inline SearchReport exhaustive_linear_search(int k, std::uint64_t n, const Channel& ch) {
    return exhaustive_search_columns(1 << k, n, ch, linear_candidate_columns(k));
}

// Simulated annealing over weak flip columns: random start of n weak columns,
// single-column replacement moves, geometric cooling. The acceptance test
// uses the relative difference (P_new - P_cur) / P_cur as the energy delta so
// the schedule is meaningful across blocklengths. Deterministic given seed;
// best of cfg.restarts runs is reported.
inline SearchReport simulated_annealing(int m, std::uint64_t n, const Channel& ch,
                                        const SearchConfig& cfg = {}) {
    check_channel(ch);
    const auto weak = weak_flip_columns(m).indices;
    const detail::SubsetSweep sweep(m);
    const auto dpow = detail::delta_powers(ch.delta, n);
    const std::uint64_t moves = cfg.moves_per_temp ? cfg.moves_per_temp : 200 * n;

    SearchReport rep;
    rep.seed = cfg.seed;
    rep.best_p_error = std::numeric_limits<double>::infinity();
    std::uint64_t iters = 0;

    for (int run = 0; run < cfg.restarts; ++run) {
        std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(run) * 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<std::size_t> pick_col(0, weak.size() - 1);
        std::uniform_int_distribution<std::uint64_t> pick_pos(0, n - 1);
        std::uniform_real_distribution<double> unif(0.0, 1.0);

        std::vector<std::uint32_t> state(n);
        std::vector<std::int64_t> a(sweep.masks.size(), 0);
        for (auto& c : state) {
            c = weak[pick_col(rng)];
            sweep.apply(a, c, 1);
        }
        double cur = sweep.p_error(a, n, dpow);

        auto consider_best = [&]() {
            if (cur < rep.best_p_error) {
                rep.best_p_error = cur;
                rep.best_type = detail::type_from_multiset(m, state);
            }
        };
        consider_best();

        for (double T = cfg.t_start; T >= cfg.t_freeze; T *= cfg.alpha) {
            for (std::uint64_t mv = 0; mv < moves; ++mv, ++iters) {
                const std::uint64_t pos = pick_pos(rng);
                const std::uint32_t old_col = state[pos];
                std::uint32_t new_col = weak[pick_col(rng)];
                if (new_col == old_col) continue;
                sweep.apply(a, old_col, -1);
                sweep.apply(a, new_col, 1);
                const double cand = sweep.p_error(a, n, dpow);
                const double dE = (cand - cur) / (cur > 0 ? cur : 1.0);
                if (dE < 0 || unif(rng) < std::exp(-dE / T)) {
                    state[pos] = new_col;
                    cur = cand;
                    consider_best();
                } else {
                    sweep.apply(a, new_col, -1);
                    sweep.apply(a, old_col, 1);
                }
            }
        }
    }
    rep.iterations = iters;
    rep.profile = distance_profile(rep.best_type);
    // re-evaluate through the reference path for the reported value
    rep.best_p_error = error_probability(rep.best_type, ch).p_error;
    return rep;
}

// Permuted concatenation search for M = 16: first block is the fair linear
// (16,15) code; each further block is the same code with its nonzero
// codewords randomly permuted (the all-zero row stays pinned to message 1).
// Keeps the concatenation with the smallest exact error probability over
// cfg.max_iterations random trials.
inline SearchReport permuted_concatenation_search(std::uint64_t kappa, const Channel& ch,
                                                  const SearchConfig& cfg = {}) {
    if (kappa < 2) throw std::invalid_argument("permuted_concatenation_search: kappa < 2");
    check_channel(ch);
    const int M = 16;
    const std::uint64_t n = 15 * kappa;
    const auto base = linear_candidate_columns(4);  // 15 column values
    const detail::SubsetSweep sweep(M);
    const auto dpow = detail::delta_powers(ch.delta, n);

    std::mt19937_64 rng(cfg.seed);
    std::array<int, 16> perm{};

    SearchReport rep;
    rep.seed = cfg.seed;
    rep.best_p_error = std::numeric_limits<double>::infinity();

    std::vector<std::uint32_t> cols;
    std::vector<std::int64_t> a(sweep.masks.size(), 0);
    for (std::uint64_t trial = 0; trial < cfg.max_iterations; ++trial) {
        cols.assign(base.begin(), base.end());
        for (std::uint64_t b = 1; b < kappa; ++b) {
            for (int i = 0; i < 16; ++i) perm[i] = i;
            for (int i = 15; i > 1; --i) {  // shuffle rows 1..15, row 0 pinned
                std::uniform_int_distribution<int> d(1, i);
                std::swap(perm[i], perm[d(rng)]);
            }
            for (std::uint32_t c : base) {
                std::uint32_t pc = 0;
                for (int i = 0; i < 16; ++i) pc = (pc << 1) | ((c >> (15 - perm[i])) & 1u);
                cols.push_back(pc);
            }
        }
        std::fill(a.begin(), a.end(), 0);
        for (std::uint32_t c : cols) sweep.apply(a, c, 1);
        const double p = sweep.p_error(a, n, dpow);
        if (p < rep.best_p_error) {
            rep.best_p_error = p;
            rep.best_type = detail::type_from_multiset(M, cols);
        }
    }
    rep.iterations = cfg.max_iterations;
    rep.profile = distance_profile(rep.best_type);
    rep.best_codebook = codebook_from_type(rep.best_type);
    rep.best_p_error = error_probability(rep.best_type, ch).p_error;
    return rep;
}

}  // namespace wfc
