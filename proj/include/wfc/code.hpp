#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfc/column.hpp"

namespace wfc {

// Multiplicity vector t of length J = 2^(M-1) - 1; the canonical code
// representation. counts[j - 1] is the multiplicity of candidate column j.
// All-zero columns of a user-supplied codebook are tallied separately so the
// stated blocklength is preserved.
struct TypeVector {
    int m = 0;
    std::vector<std::uint32_t> counts;
    std::uint64_t zero_columns = 0;

    TypeVector() = default;
    explicit TypeVector(int m_) : m(m_), counts(candidate_count(m_), 0u) {}

    std::uint32_t t(std::uint32_t j) const { return counts.at(j - 1); }
    std::uint32_t& t(std::uint32_t j) { return counts.at(j - 1); }

    std::uint64_t n() const {
        return zero_columns + std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    }

    bool operator==(const TypeVector&) const = default;
};

// Explicit M x n binary matrix; rows are the codewords.
struct Codebook {
    int m = 0;
    int n = 0;
    std::vector<std::vector<std::uint8_t>> rows;  // m rows of n bits

    std::uint32_t column_bits(int pos) const {
        std::uint32_t c = 0;
        for (int i = 0; i < m; ++i) c = (c << 1) | rows[i][pos];
        return c;
    }
};

enum class FamilyTag { WeakFlip, FairWeakFlip, Linear, FairLinear, Hadamard, General };

// Bin every column by candidate index, complementing columns whose first bit
// is 1 and tallying all-zero columns. Codebooks equal up to column permutation
// and per-column complementation yield identical type vectors.
inline TypeVector canonicalize(const Codebook& cb) {
    TypeVector t(cb.m);
    const std::uint32_t full = (cb.m == 32) ? ~0u : (1u << cb.m) - 1;
    for (int p = 0; p < cb.n; ++p) {
        std::uint32_t c = cb.column_bits(p);
        if (c >> (cb.m - 1)) c ^= full;
        if (c == 0)
            ++t.zero_columns;
        else
            ++t.t(c);
    }
    return t;
}

// Deterministic layout: columns emitted in ascending index, zero columns last.
inline Codebook codebook_from_type(const TypeVector& t) {
    Codebook cb;
    cb.m = t.m;
    cb.n = static_cast<int>(t.n());
    cb.rows.assign(t.m, std::vector<std::uint8_t>(cb.n, 0));
    int pos = 0;
    for (std::uint32_t j = 1; j <= candidate_count(t.m); ++j) {
        for (std::uint32_t rep = 0; rep < t.t(j); ++rep, ++pos) {
            for (int i = 0; i < t.m; ++i)
                cb.rows[i][pos] = static_cast<std::uint8_t>((j >> (t.m - 1 - i)) & 1u);
        }
    }
    // all-zero columns occupy the tail, already zero-initialized
    return cb;
}

inline bool is_weak_flip_weight(int m, int w) { return w == m / 2 || w == (m + 1) / 2; }

inline bool is_weak_flip(const TypeVector& t) {
    if (t.zero_columns != 0) return false;
    for (std::uint32_t j = 1; j <= candidate_count(t.m); ++j)
        if (t.t(j) != 0 && !is_weak_flip_weight(t.m, std::popcount(j))) return false;
    return true;
}

// XOR every row with row m (1-based); row m becomes the all-zero codeword.
inline Codebook translate(const Codebook& cb, int m) {
    if (m < 1 || m > cb.m) throw std::out_of_range("translate: bad row index");
    Codebook out = cb;
    const auto& pivot = cb.rows[m - 1];
    for (auto& row : out.rows)
        for (int p = 0; p < cb.n; ++p) row[p] = static_cast<std::uint8_t>(row[p] ^ pivot[p]);
    return out;
}

}  // namespace wfc
