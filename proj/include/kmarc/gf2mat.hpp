#pragma once

// Dense linear algebra over F2 with rows packed into 64-bit words
// (all ambient dimensions used here are <= 64).

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace kmarc::gf2 {

inline int parity(std::uint64_t x) { return std::popcount(x) & 1; }

// Row echelon reduction in place; returns pivot column indices (increasing).
// Zero rows are dropped.  Result is the canonical RREF.
std::vector<int> rref(std::vector<std::uint64_t>& rows, int ncols);

inline int rank(std::vector<std::uint64_t> rows, int ncols) {
    return static_cast<int>(rref(rows, ncols).size());
}

// Is v in the row space?  rows must already be in RREF with given pivots.
bool in_span(const std::vector<std::uint64_t>& rows, const std::vector<int>& pivots,
             std::uint64_t v);

// Coordinates c with v = sum c_i rows[i], if any (rows in RREF).
std::optional<std::uint64_t> express(const std::vector<std::uint64_t>& rows,
                                     const std::vector<int>& pivots, std::uint64_t v);

// Inverse of a square n x n matrix given as rows (bit j of row i = M[i][j]).
std::optional<std::vector<std::uint64_t>> invert(std::vector<std::uint64_t> rows, int n);

// y_i = parity(rows[i] & x)
inline std::uint64_t mat_vec(const std::vector<std::uint64_t>& rows, std::uint64_t x) {
    std::uint64_t y = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        y |= std::uint64_t(parity(rows[i] & x)) << i;
    return y;
}

}  // namespace kmarc::gf2
