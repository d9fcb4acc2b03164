#include "kmarc/gf2mat.hpp"

namespace kmarc::gf2 {

std::vector<int> rref(std::vector<std::uint64_t>& rows, int ncols) {
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && !((rows[sel] >> c) & 1)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

bool in_span(const std::vector<std::uint64_t>& rows, const std::vector<int>& pivots,
             std::uint64_t v) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        if ((v >> pivots[i]) & 1) v ^= rows[i];
    return v == 0;
}

std::optional<std::uint64_t> express(const std::vector<std::uint64_t>& rows,
                                     const std::vector<int>& pivots, std::uint64_t v) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if ((v >> pivots[i]) & 1) {
            v ^= rows[i];
            c |= std::uint64_t(1) << i;
        }
    if (v != 0) return std::nullopt;
    return c;
}

std::optional<std::vector<std::uint64_t>> invert(std::vector<std::uint64_t> rows, int n) {
    std::vector<std::uint64_t> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = std::uint64_t(1) << i;
    for (int c = 0; c < n; ++c) {
        int sel = -1;
        for (int i = c; i < n; ++i)
            if ((rows[i] >> c) & 1) { sel = i; break; }
        if (sel < 0) return std::nullopt;
        std::swap(rows[c], rows[sel]);
        std::swap(inv[c], inv[sel]);
        for (int i = 0; i < n; ++i)
            if (i != c && ((rows[i] >> c) & 1)) {
                rows[i] ^= rows[c];
                inv[i] ^= inv[c];
            }
    }
    return inv;
}

}  // namespace kmarc::gf2
