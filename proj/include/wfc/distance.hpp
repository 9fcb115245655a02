#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wfc/code.hpp"

namespace wfc {

inline std::uint64_t binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / i;
    return r;
}

// Size of the weak flip candidate column set, L = C(2*ceil(M/2) - 1, ceil(M/2)).
inline std::uint64_t weak_flip_count(int m) {
    const int lbar = (m + 1) / 2;
    return binomial(2 * lbar - 1, lbar);
}

// Build the subset mask for a list of 1-based message indices, using the same
// bit convention as Column (row i at position m - i).
inline std::uint32_t subset_mask(int m, const std::vector<int>& rows) {
    std::uint32_t mask = 0;
    for (int r : rows) {
        if (r < 1 || r > m) throw std::out_of_range("subset_mask: bad row");
        mask |= 1u << (m - r);
    }
    return mask;
}

// r-wise Hamming match a_I: number of columns constant on the subset.
inline std::uint64_t rwise_match_mask(const TypeVector& t, std::uint32_t mask) {
    const int r = std::popcount(mask);
    if (r < 2 || r > t.m) throw std::invalid_argument("rwise_match: subset size out of range");
    std::uint64_t a = t.zero_columns;
    for (std::uint32_t j = 1; j <= candidate_count(t.m); ++j) {
        if (t.counts[j - 1] == 0) continue;
        const std::uint32_t x = j & mask;
        if (x == 0 || x == mask) a += t.counts[j - 1];
    }
    return a;
}

inline std::uint64_t rwise_match(const TypeVector& t, const std::vector<int>& subset) {
    return rwise_match_mask(t, subset_mask(t.m, subset));
}

inline std::uint64_t rwise_distance_mask(const TypeVector& t, std::uint32_t mask) {
    return t.n() - rwise_match_mask(t, mask);
}

inline std::uint64_t rwise_distance(const TypeVector& t, const std::vector<int>& subset) {
    return t.n() - rwise_match(t, subset);
}

// Iterate all m-bit masks of popcount r (Gosper's hack), ascending.
template <typename F>
inline void for_each_subset_mask(int m, int r, F&& f) {
    std::uint32_t mask = (1u << r) - 1;
    const std::uint32_t limit = 1u << m;
    while (mask < limit) {
        f(mask);
        const std::uint32_t c = mask & -mask;
        const std::uint32_t rip = mask + c;
        mask = (((rip ^ mask) >> 2) / c) | rip;
    }
}

inline std::uint64_t min_rwise_distance(const TypeVector& t, int r) {
    if (r < 2 || r > t.m) throw std::invalid_argument("min_rwise_distance: bad r");
    const std::uint64_t n = t.n();
    std::uint64_t best = n;
    for_each_subset_mask(t.m, r, [&](std::uint32_t mask) {
        const std::uint64_t d = n - rwise_match_mask(t, mask);
        if (d < best) best = d;
    });
    return best;
}

// Minimum r-wise distances for r = 2..ceil(M/2) plus the pairwise distance
// vector ordered (d_12, d_13, d_23, d_14, d_24, d_34, ...).
struct DistanceProfile {
    int m = 0;
    std::uint64_t n = 0;
    std::vector<std::uint64_t> min_rwise;  // index 0 <-> r = 2
    std::vector<std::uint64_t> pairwise;

    std::uint64_t d_min(int r) const { return min_rwise.at(r - 2); }
};

inline DistanceProfile distance_profile(const TypeVector& t) {
    DistanceProfile p;
    p.m = t.m;
    p.n = t.n();
    const int lbar = (t.m + 1) / 2;
    for (int r = 2; r <= lbar; ++r) p.min_rwise.push_back(min_rwise_distance(t, r));
    for (int hi = 2; hi <= t.m; ++hi)
        for (int lo = 1; lo < hi; ++lo) p.pairwise.push_back(rwise_distance(t, {lo, hi}));
    return p;
}

// Plotkin-type bound on the minimum r-wise Hamming distance. The exact
// (possibly fractional) value is kept alongside its floor so equality tests at
// n mod L = 0 can avoid rounding ambiguity.
struct PlotkinBound {
    double exact = 0.0;
    std::uint64_t floor_value = 0;
};

inline PlotkinBound plotkin_bound(int m, std::uint64_t n, int r) {
    if (r < 2 || r > m) throw std::invalid_argument("plotkin_bound: bad r");
    const int lbar = (m + 1) / 2;
    if (r > lbar) return {static_cast<double>(n), n};
    const std::uint64_t num = binomial(lbar - 1, r - 1);
    const std::uint64_t den = binomial(2 * lbar - 1, r - 1);
    const double exact = static_cast<double>(n) * (1.0 - static_cast<double>(num) / static_cast<double>(den));
    return {exact, n * (den - num) / den};
}

// Common r-wise distance of a fair weak flip code (all subsets identical).
inline std::uint64_t fair_weak_flip_distance(int m, std::uint64_t n, int r) {
    if (r < 2 || r > m) throw std::invalid_argument("fair_weak_flip_distance: bad r");
    const int lbar = (m + 1) / 2;
    const std::uint64_t L = weak_flip_count(m);
    if (n % L != 0) throw std::invalid_argument("fair_weak_flip_distance: n not a multiple of L");
    return (n / L) * (L - binomial(2 * lbar - r, lbar));
}

}  // namespace wfc
