#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wfc/code.hpp"
#include "wfc/distance.hpp"

namespace wfc {

struct WeakFlipColumnSet {
    int m = 0;
    std::vector<std::uint32_t> indices;  // ascending
};

inline WeakFlipColumnSet weak_flip_columns(int m) {
    WeakFlipColumnSet s;
    s.m = m;
    for (std::uint32_t j = 1; j <= candidate_count(m); ++j)
        if (is_weak_flip_weight(m, std::popcount(j))) s.indices.push_back(j);
    return s;
}

inline TypeVector repetition_code(int m, std::uint64_t n) {
    if (m != 2) throw std::invalid_argument("repetition_code: m must be 2");
    TypeVector t(2);
    t.t(1) = static_cast<std::uint32_t>(n);
    return t;
}

inline TypeVector fair_weak_flip(int m, std::uint64_t n) {
    const std::uint64_t L = weak_flip_count(m);
    if (n % L != 0) throw std::invalid_argument("fair_weak_flip: n not a multiple of L");
    TypeVector t(m);
    for (std::uint32_t j : weak_flip_columns(m).indices) t.t(j) = static_cast<std::uint32_t>(n / L);
    return t;
}

// BEC-optimal types for M = 3, 4: multiplicities
// (floor((n+2)/3), floor((n+1)/3), floor(n/3)) on the three weak flip columns.
inline TypeVector optimal_m3m4(int m, std::uint64_t n) {
    if (m != 3 && m != 4) throw std::invalid_argument("optimal_m3m4: m must be 3 or 4");
    if (n < 1) throw std::invalid_argument("optimal_m3m4: n < 1");
    TypeVector t(m);
    const auto cols = (m == 3) ? std::array<std::uint32_t, 3>{1, 2, 3} : std::array<std::uint32_t, 3>{3, 5, 6};
    t.t(cols[0]) = static_cast<std::uint32_t>((n + 2) / 3);
    t.t(cols[1]) = static_cast<std::uint32_t>((n + 1) / 3);
    t.t(cols[2]) = static_cast<std::uint32_t>(n / 3);
    return t;
}

// Same codes built by the greedy column-append recursion: a two-column seed
// plus a period-3 append schedule.
inline TypeVector recursive_m3m4(int m, std::uint64_t n) {
    if (m != 3 && m != 4) throw std::invalid_argument("recursive_m3m4: m must be 3 or 4");
    if (n < 2) throw std::invalid_argument("recursive_m3m4: n < 2");
    const auto cols = (m == 3) ? std::array<std::uint32_t, 3>{1, 2, 3} : std::array<std::uint32_t, 3>{3, 5, 6};
    TypeVector t(m);
    t.t(cols[0]) = 1;
    t.t(cols[1]) = 1;
    for (std::uint64_t len = 3; len <= n; ++len) {
        switch (len % 3) {
            case 0: ++t.t(cols[2]); break;
            case 1: ++t.t(cols[0]); break;
            case 2: ++t.t(cols[1]); break;
        }
    }
    return t;
}

namespace detail {

// Residue-indexed conjectured types for M = 5, 6: per weak flip column (in
// ascending index order) the multiplicity at tau = floor(n/10) = 1; the type
// for general n adds tau - 1 to every entry. Frozen from exhaustive searches
// (global over all candidate columns for n < 10, over the weak flip columns
// for n = 1x and n = 2x); see the construction tests. The M = 6, n mod 10 = 7
// case carries one extra non weak flip column and is special-cased below.
inline const std::array<std::array<std::uint32_t, 10>, 10>& conjectured_rows(int m) {
    static const std::array<std::array<std::uint32_t, 10>, 10> m5 = {{
        {},                                // rho = 0: fair weak flip
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 2},
        {0, 1, 1, 2, 1, 1, 2, 2, 1, 1},
        {1, 1, 1, 1, 1, 1, 2, 1, 2, 2},
        {1, 1, 1, 2, 1, 1, 2, 1, 2, 2},
        {1, 1, 1, 2, 1, 2, 2, 1, 2, 2},
        {1, 1, 2, 2, 1, 2, 2, 2, 2, 1},
        {2, 2, 1, 2, 2, 2, 1, 2, 1, 2},
        {2, 1, 2, 2, 1, 2, 2, 1, 3, 2},
        {1, 2, 2, 2, 2, 2, 2, 2, 2, 2},
    }};
    static const std::array<std::array<std::uint32_t, 10>, 10> m6 = {{
        {},
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 2},
        {1, 1, 1, 1, 1, 1, 1, 1, 2, 2},
        {1, 1, 1, 1, 1, 2, 2, 2, 1, 1},
        {1, 1, 1, 1, 1, 2, 2, 2, 2, 1},
        {1, 1, 1, 1, 1, 2, 2, 2, 2, 2},
        {1, 1, 1, 1, 2, 2, 2, 2, 2, 2},
        {},                                // rho = 7: special-cased
        {1, 1, 2, 2, 2, 2, 2, 2, 2, 2},
        {1, 2, 2, 2, 2, 2, 2, 2, 2, 2},
    }};
    return (m == 5) ? m5 : m6;
}

}  // namespace detail

inline TypeVector conjectured_m5m6(int m, std::uint64_t n) {
    if (m != 5 && m != 6) throw std::invalid_argument("conjectured_m5m6: m must be 5 or 6");
    if (n < 3) throw std::invalid_argument("conjectured_m5m6: n < 3");
    const std::uint64_t tau = n / 10;
    const std::uint64_t rho = n % 10;
    if (rho == 0) return fair_weak_flip(m, n);

    const auto weak = weak_flip_columns(m);
    if (m == 6 && rho == 7) {
        TypeVector t(6);
        for (std::uint32_t j : {14u, 22u, 26u, 28u}) t.t(j) = static_cast<std::uint32_t>(tau);
        for (std::uint32_t j : {7u, 11u, 13u, 19u, 21u, 25u}) t.t(j) = static_cast<std::uint32_t>(tau + 1);
        t.t(30) = 1;  // the single non weak flip column
        if (t.n() != n) throw std::logic_error("conjectured_m5m6: bad residue-7 row");
        return t;
    }

    const auto& row = detail::conjectured_rows(m)[rho];
    TypeVector t(m);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < weak.indices.size(); ++i) {
        const std::uint64_t c = row[i] + tau;
        if (c < 1) throw std::invalid_argument("conjectured_m5m6: n too small for this residue");
        t.t(weak.indices[i]) = static_cast<std::uint32_t>(c - 1);
        sum += c - 1;
    }
    if (sum != n) throw std::logic_error("conjectured_m5m6: row does not sum to n");
    return t;
}

// Simplex-style fair linear code: all 2^k - 1 nonzero parity columns, each
// used n / (2^k - 1) times; row for message i has bit parity(i & u) in the
// columns built from u.
inline Codebook fair_linear(int k, std::uint64_t n) {
    if (k < 2 || k > 4) throw std::invalid_argument("fair_linear: k out of range");
    const std::uint64_t K = (1ull << k) - 1;
    if (n == 0 || n % K != 0) throw std::invalid_argument("fair_linear: n not a multiple of 2^k - 1");
    const int M = 1 << k;
    Codebook cb;
    cb.m = M;
    cb.n = static_cast<int>(n);
    cb.rows.assign(M, std::vector<std::uint8_t>(cb.n, 0));
    int pos = 0;
    for (std::uint64_t u = 1; u <= K; ++u)
        for (std::uint64_t rep = 0; rep < n / K; ++rep, ++pos)
            for (int i = 0; i < M; ++i)
                cb.rows[i][pos] = static_cast<std::uint8_t>(std::popcount(static_cast<unsigned>(i) & u) & 1);
    return cb;
}

enum class HadamardVariant { H1, H1p, H2, H3 };

// Sylvester-type Hadamard codes. A_order[i][j] = parity(popcount(i & j)).
//   H1  : rows of A with the first (all-zero) column removed -> (m, m-1)
//   H1' : rows of H1 starting with 0, that initial 0 deleted  -> (m/2, m-2)
//   H2  : H1 plus the complements of its rows                 -> (2m, m-1)
//   H3  : rows of A and their complements                     -> (2m, m)
inline Codebook hadamard_code(HadamardVariant v, int order) {
    if (order < 4 || (order & (order - 1)) != 0) throw std::invalid_argument("hadamard_code: order must be a power of two >= 4");
    auto entry = [](int i, int j) {
        return static_cast<std::uint8_t>(std::popcount(static_cast<unsigned>(i & j)) & 1);
    };
    Codebook cb;
    switch (v) {
        case HadamardVariant::H1:
            cb.m = order;
            cb.n = order - 1;
            cb.rows.assign(cb.m, std::vector<std::uint8_t>(cb.n));
            for (int i = 0; i < order; ++i)
                for (int j = 1; j < order; ++j) cb.rows[i][j - 1] = entry(i, j);
            break;
        case HadamardVariant::H1p: {
            cb.m = 0;
            cb.n = order - 2;
            for (int i = 0; i < order; ++i) {
                if (entry(i, 1) != 0) continue;  // keep rows whose first H1 bit is 0
                std::vector<std::uint8_t> row(cb.n);
                for (int j = 2; j < order; ++j) row[j - 2] = entry(i, j);
                cb.rows.push_back(std::move(row));
                ++cb.m;
            }
            break;
        }
        case HadamardVariant::H2:
            cb.m = 2 * order;
            cb.n = order - 1;
            cb.rows.assign(cb.m, std::vector<std::uint8_t>(cb.n));
            for (int i = 0; i < order; ++i)
                for (int j = 1; j < order; ++j) {
                    cb.rows[i][j - 1] = entry(i, j);
                    cb.rows[order + i][j - 1] = static_cast<std::uint8_t>(1 - entry(i, j));
                }
            break;
        case HadamardVariant::H3:
            cb.m = 2 * order;
            cb.n = order;
            cb.rows.assign(cb.m, std::vector<std::uint8_t>(cb.n));
            for (int i = 0; i < order; ++i)
                for (int j = 0; j < order; ++j) {
                    cb.rows[i][j] = entry(i, j);
                    cb.rows[order + i][j] = static_cast<std::uint8_t>(1 - entry(i, j));
                }
            break;
    }
    return cb;
}

namespace detail {

// The canonical column indices of the fair linear (8,7) code, and a second
// heptad disjoint from it with the same pairwise/triple match structure
// (both are 2-(7,4,2) block designs on the rows 2..8). Frozen from a small
// backtracking search; verified in the construction tests.
inline const std::array<std::uint32_t, 7>& linear_heptad_m8() {
    static const std::array<std::uint32_t, 7> h = {15, 51, 60, 85, 90, 102, 105};
    return h;
}
inline const std::array<std::uint32_t, 7>& second_heptad_m8() {
    static const std::array<std::uint32_t, 7> h = {23, 45, 58, 78, 89, 99, 116};
    return h;
}

}  // namespace detail

// Generalized fair weak flip code for M = 8, n = 7*kappa (kappa >= 2):
// decompose n = 35*tau + 7*eta; every weight-4 candidate column is used tau
// times and 7*eta selected columns get one extra. The extra sets are chosen
// as unions/complements of two disjoint design heptads so the pairwise and
// triple matches stay uniform (3*kappa resp. kappa) and the four-wise matches
// stay as small as possible; repeating one heptad eta times would collide its
// four-wise matches (and for tau = 0 reproduce the fair linear code itself).
inline TypeVector generalized_fair_weak_flip_m8(std::uint64_t n) {
    if (n == 0 || n % 7 != 0 || n == 7) throw std::invalid_argument("generalized_fair_weak_flip_m8: need n = 7*kappa, kappa >= 2");
    const std::uint64_t tau = n / 35;
    const std::uint64_t eta = (n % 35) / 7;

    TypeVector t(8);
    const auto weak = weak_flip_columns(8);
    for (std::uint32_t j : weak.indices) t.t(j) = static_cast<std::uint32_t>(tau);

    const auto& h0 = detail::linear_heptad_m8();
    const auto& h1 = detail::second_heptad_m8();
    auto in = [](const std::array<std::uint32_t, 7>& h, std::uint32_t j) {
        return std::find(h.begin(), h.end(), j) != h.end();
    };
    for (std::uint32_t j : weak.indices) {
        bool extra = false;
        switch (eta) {
            case 0: break;
            case 1: extra = in(h0, j); break;
            case 2: extra = in(h0, j) || in(h1, j); break;
            case 3: extra = !(in(h0, j) || in(h1, j)); break;
            case 4: extra = !in(h0, j); break;
        }
        if (extra) ++t.t(j);
    }
    if (t.n() != n) throw std::logic_error("generalized_fair_weak_flip_m8: bad decomposition");
    return t;
}

// BSC-optimal types for M = 3, 4 (combinatorial data only): the residue
// schedule [k+1, k, k-1] / [k+1, k, k] / [k+1, k+1, k] on the weak columns.
inline TypeVector bsc_optimal_type(int m, std::uint64_t n) {
    if (m != 3 && m != 4) throw std::invalid_argument("bsc_optimal_type: m must be 3 or 4");
    if (n < 2) throw std::invalid_argument("bsc_optimal_type: n < 2");
    const std::uint64_t k = n / 3;
    std::array<std::uint64_t, 3> v{};
    switch (n % 3) {
        case 0:
            if (k < 1) throw std::invalid_argument("bsc_optimal_type: n too small");
            v = {k + 1, k, k - 1};
            break;
        case 1: v = {k + 1, k, k}; break;
        case 2: v = {k + 1, k + 1, k}; break;
    }
    const auto cols = (m == 3) ? std::array<std::uint32_t, 3>{1, 2, 3} : std::array<std::uint32_t, 3>{3, 5, 6};
    TypeVector t(m);
    for (int i = 0; i < 3; ++i) t.t(cols[i]) = static_cast<std::uint32_t>(v[i]);
    return t;
}

}  // namespace wfc
