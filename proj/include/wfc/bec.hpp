#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wfc/code.hpp"
#include "wfc/distance.hpp"

namespace wfc {

struct Channel {
    double delta = 0.0;  // erasure probability, 0 <= delta < 1
};

inline void check_channel(const Channel& ch) {
    if (!(ch.delta >= 0.0 && ch.delta < 1.0)) throw std::invalid_argument("channel: delta out of [0,1)");
}

struct EvalResult {
    double p_error = 0.0;
    double p_success = 1.0;
    double delta = 0.0;
    std::optional<std::vector<double>> per_message;  // lambda_m, oracle only
};

namespace detail {

inline std::vector<double> delta_powers(double delta, std::uint64_t n) {
    std::vector<double> p(n + 1);
    p[0] = 1.0;
    for (std::uint64_t i = 1; i <= n; ++i) p[i] = p[i - 1] * delta;
    return p;
}

struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

}  // namespace detail

// Exact average error probability:
//   P_e = (1/M) sum_{r=2}^{M} (-1)^r sum_{|I|=r} delta^{d_I}
// swept over all 2^M - M - 1 subsets of size >= 2 with compensated summation.
// delta^0 = 1 covers duplicate codewords.
inline EvalResult error_probability(const TypeVector& t, const Channel& ch) {
    check_channel(ch);
    const std::uint64_t n = t.n();
    const auto dp = detail::delta_powers(ch.delta, n);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> cols;  // (index, count)
    for (std::uint32_t j = 1; j <= candidate_count(t.m); ++j)
        if (t.counts[j - 1] != 0) cols.emplace_back(j, t.counts[j - 1]);

    detail::Kahan acc;
    const std::uint32_t limit = 1u << t.m;
    for (std::uint32_t mask = 3; mask < limit; ++mask) {
        const int r = std::popcount(mask);
        if (r < 2) continue;
        std::uint64_t a = t.zero_columns;
        for (const auto& [j, cnt] : cols) {
            const std::uint32_t x = j & mask;
            if (x == 0 || x == mask) a += cnt;
        }
        const double term = dp[n - a];
        acc.add((r & 1) ? -term : term);
    }
    EvalResult res;
    res.delta = ch.delta;
    res.p_error = acc.sum / t.m;
    res.p_success = 1.0 - res.p_error;
    return res;
}

enum class TieBreak { LowestIndex, HighestIndex, RoundRobin };

// Brute-force ML decoding oracle. Enumerates every erasure pattern (the
// non-erased symbols are determined by the transmitted codeword, so this
// covers all channel outputs); a codeword is compatible iff it matches the
// output on all non-erased positions, and all compatible codewords are exact
// likelihood maximizers. The tie-break is a deterministic function of the
// channel output only, so the average P_e is invariant to the rule chosen.
inline EvalResult oracle_error_probability(const Codebook& cb, const Channel& ch,
                                           TieBreak tie = TieBreak::LowestIndex) {
    check_channel(ch);
    if (cb.n > 14) throw std::invalid_argument("oracle_error_probability: n > 14");
    const int n = cb.n;
    const int M = cb.m;
    const std::uint32_t full = (n == 0) ? 0 : (1u << n) - 1;

    std::vector<std::uint32_t> rows(M, 0);
    for (int i = 0; i < M; ++i)
        for (int p = 0; p < n; ++p) rows[i] = (rows[i] << 1) | cb.rows[i][p];

    std::vector<double> pe(n + 1), ps(n + 1);
    pe[0] = ps[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        pe[i] = pe[i - 1] * ch.delta;
        ps[i] = ps[i - 1] * (1.0 - ch.delta);
    }

    std::vector<double> lambda(M, 0.0);
    std::vector<int> compat;
    for (std::uint32_t e = 0; e <= full; ++e) {  // e = erased positions
        const int ne = std::popcount(e);
        const double w = pe[ne] * ps[n - ne];
        for (int m = 0; m < M; ++m) {
            compat.clear();
            for (int r = 0; r < M; ++r)
                if (((rows[r] ^ rows[m]) & full & ~e) == 0) compat.push_back(r);
            int decoded;
            switch (tie) {
                case TieBreak::LowestIndex: decoded = compat.front(); break;
                case TieBreak::HighestIndex: decoded = compat.back(); break;
                case TieBreak::RoundRobin: {
                    // hash of the channel output y = (unerased content, erasure set)
                    std::uint64_t h = (std::uint64_t(rows[m] & full & ~e) << 20) ^ e;
                    h ^= h >> 33;
                    h *= 0xff51afd7ed558ccdULL;
                    h ^= h >> 33;
                    decoded = compat[h % compat.size()];
                    break;
                }
            }
            if (decoded != m) lambda[m] += w;
        }
        if (e == full) break;  // avoid wrap when n == 0 is impossible but n bits full
    }

    EvalResult res;
    res.delta = ch.delta;
    double s = 0.0;
    for (double l : lambda) s += l;
    res.p_error = s / M;
    res.p_success = 1.0 - res.p_error;
    res.per_message = std::move(lambda);
    return res;
}

// Unnormalized success gain M * (P_c(t + e_j) - P_c(t)) from appending one
// column. Evaluated as a direct sum over the subsets the new column does not
// match, which avoids cancellation between the two full sweeps:
//   delta-Psi = sum_{|I|>=2, j not constant on I} (-1)^{|I|} delta^{d_I} (1 - delta)
inline double append_gain(const TypeVector& t, std::uint32_t j, const Channel& ch) {
    check_channel(ch);
    if (j < 1 || j > candidate_count(t.m)) throw std::out_of_range("append_gain: bad column index");
    const std::uint64_t n = t.n();
    const auto dp = detail::delta_powers(ch.delta, n);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> cols;
    for (std::uint32_t jj = 1; jj <= candidate_count(t.m); ++jj)
        if (t.counts[jj - 1] != 0) cols.emplace_back(jj, t.counts[jj - 1]);

    detail::Kahan acc;
    const std::uint32_t limit = 1u << t.m;
    for (std::uint32_t mask = 3; mask < limit; ++mask) {
        const int r = std::popcount(mask);
        if (r < 2) continue;
        const std::uint32_t xj = j & mask;
        if (xj == 0 || xj == mask) continue;  // column j matches I; d_I unchanged
        std::uint64_t a = t.zero_columns;
        for (const auto& [jj, cnt] : cols) {
            const std::uint32_t x = jj & mask;
            if (x == 0 || x == mask) a += cnt;
        }
        const double term = dp[n - a];
        acc.add((r & 1) ? -term : term);
    }
    return acc.sum * (1.0 - ch.delta);
}

}  // namespace wfc
