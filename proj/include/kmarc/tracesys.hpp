#pragma once

// Systems of equations Tr(k_i x) = c_i over F_{2^m}, solved exactly by
// viewing each functional x -> Tr(k x) as an F2 row vector.

#include <cstdint>
#include <vector>

#include "kmarc/gf2field.hpp"

namespace kmarc {

struct TraceSystem {
    std::vector<fe> ks;
    std::vector<int> cs;  // bits
};

// Number of solutions: q / 2^{rank} if consistent, else 0.
std::uint64_t trace_count(const Field& F, const TraceSystem& sys);

// All solutions, ascending by bit pattern.
std::vector<fe> trace_solve(const Field& F, const TraceSystem& sys);

// Oracle: full enumeration (q <= 2^20).
std::uint64_t trace_brute_count(const Field& F, const TraceSystem& sys);

}  // namespace kmarc
