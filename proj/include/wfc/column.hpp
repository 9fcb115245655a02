#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace wfc {

inline constexpr int kMaxM = 20;  // columns fit in one 32-bit word

// One codebook column as an M-bit word. The bit for row i (1-based) sits at
// position m - i, so row 1 is the most significant position and the integer
// value of `bits` equals the column index j.
struct Column {
    int m = 0;
    std::uint32_t bits = 0;

    int bit(int row) const { return static_cast<int>((bits >> (m - row)) & 1u); }
    int weight() const { return std::popcount(bits); }
};

// Number of candidate columns J = 2^(M-1) - 1.
inline std::uint32_t candidate_count(int m) {
    if (m < 2 || m > kMaxM) throw std::invalid_argument("candidate_count: m out of range");
    return (1u << (m - 1)) - 1;
}

inline Column column_from_index(std::uint32_t j, int m) {
    if (j < 1 || j > candidate_count(m)) throw std::out_of_range("column_from_index: bad index");
    return Column{m, j};
}

inline std::uint32_t index_from_column(const Column& col) {
    if (col.bits == 0) throw std::invalid_argument("index_from_column: all-zero column");
    if (col.bit(1) != 0) throw std::invalid_argument("index_from_column: leading bit set");
    return col.bits;
}

}  // namespace wfc
