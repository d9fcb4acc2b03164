#include "kmarc/tracesys.hpp"

#include <algorithm>
#include <stdexcept>

#include "kmarc/gf2mat.hpp"

namespace kmarc {

namespace {

// Row vector of the functional x -> Tr(k x) on the polynomial basis.
std::uint64_t functional_row(const Field& F, fe k) {
    std::uint64_t row = 0;
    fe lam_j = 1;
    for (int j = 0; j < F.deg(); ++j) {
        row |= F.trace(F.mul(k, lam_j)) << j;
        lam_j = F.mul(lam_j, 2);
    }
    return row;
}

}  // namespace

std::uint64_t trace_count(const Field& F, const TraceSystem& sys) {
    if (sys.ks.size() != sys.cs.size()) throw std::invalid_argument("trace system length mismatch");
    std::vector<std::uint64_t> basis;
    std::vector<int> pivots;
    std::vector<int> basis_c;
    for (std::size_t i = 0; i < sys.ks.size(); ++i) {
        std::uint64_t row = functional_row(F, sys.ks[i]);
        // reduce against the chosen independent rows, tracking the rhs bit
        int c = sys.cs[i] & 1;
        std::uint64_t v = row;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if ((v >> pivots[j]) & 1) {
                v ^= basis[j];
                c ^= basis_c[j];
            }
        if (v == 0) {
            if (c != 0) return 0;  // inconsistent dependent equation
            continue;
        }
        int p = 0;
        while (!((v >> p) & 1)) ++p;
        // keep the stored rows mutually reduced so pivot elimination is exact
        for (std::size_t j = 0; j < basis.size(); ++j)
            if ((basis[j] >> p) & 1) {
                basis[j] ^= v;
                basis_c[j] ^= c;
            }
        basis.push_back(v);
        pivots.push_back(p);
        basis_c.push_back(c);
    }
    return F.order() >> basis.size();
}

std::vector<fe> trace_solve(const Field& F, const TraceSystem& sys) {
    std::uint64_t n = trace_count(F, sys);
    std::vector<fe> out;
    if (n == 0) return out;
    // Solve M x = c over F2 where row i is the functional of k_i.
    std::vector<std::uint64_t> rows;
    for (std::size_t i = 0; i < sys.ks.size(); ++i) {
        std::uint64_t r = functional_row(F, sys.ks[i]);
        rows.push_back(r | (std::uint64_t(sys.cs[i] & 1) << F.deg()));  // augmented
    }
    auto pivots = gf2::rref(rows, F.deg() + 1);
    int m = F.deg();
    std::uint64_t particular = 0;
    std::vector<int> is_pivot(m, 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        is_pivot[pivots[i]] = 1;
        if ((rows[i] >> m) & 1) particular |= std::uint64_t(1) << pivots[i];
    }
    std::vector<std::uint64_t> kernel;
    for (int j = 0; j < m; ++j)
        if (!is_pivot[j]) {
            std::uint64_t v = std::uint64_t(1) << j;
            for (std::size_t i = 0; i < rows.size(); ++i)
                if ((rows[i] >> j) & 1) v |= std::uint64_t(1) << pivots[i];
            kernel.push_back(v);
        }
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << kernel.size()); ++mask) {
        std::uint64_t x = particular;
        for (std::size_t j = 0; j < kernel.size(); ++j)
            if ((mask >> j) & 1) x ^= kernel[j];
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t trace_brute_count(const Field& F, const TraceSystem& sys) {
    if (F.deg() > 20) throw std::invalid_argument("TooLarge");
    std::uint64_t n = 0;
    for (fe x = 0; x < F.order(); ++x) {
        bool ok = true;
        for (std::size_t i = 0; i < sys.ks.size() && ok; ++i)
            ok = F.trace(F.mul(sys.ks[i], x)) == std::uint64_t(sys.cs[i] & 1);
        if (ok) ++n;
    }
    return n;
}

}  // namespace kmarc
