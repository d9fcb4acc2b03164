#include "kmarc/projgeom.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace kmarc {

Point normalize(const Field& F, std::vector<fe> v) {
    std::size_t i = 0;
    while (i < v.size() && v[i] == 0) ++i;
    if (i == v.size()) throw GeomError("cannot normalize the zero vector");
    if (v[i] != 1) {
        fe s = F.inv(v[i]);
        for (auto& x : v) x = F.mul(s, x);
    }
    return Point{std::move(v)};
}

std::uint64_t point_key(const Field& F, const Point& p) {
    int m = F.deg();
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < p.c.size(); ++i) k |= p.c[i] << (i * m);
    return k;
}

Point point_from_key(const Field& F, int n, std::uint64_t key) {
    int m = F.deg();
    std::vector<fe> v(n);
    for (int i = 0; i < n; ++i) v[i] = (key >> (i * m)) & ((std::uint64_t(1) << m) - 1);
    return Point{std::move(v)};
}

std::vector<Point> all_points(const Field& F, int n) {
    std::vector<Point> out;
    std::vector<fe> v(n, 0);
    for (int lead = n - 1; lead >= 0; --lead) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        // free positions lead+1 .. n-1
        std::uint64_t q = F.order();
        std::uint64_t total = 1;
        for (int j = lead + 1; j < n; ++j) total *= q;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t rem = idx;
            for (int j = lead + 1; j < n; ++j) {
                v[j] = rem % q;
                rem /= q;
            }
            out.push_back(Point{v});
        }
    }
    std::sort(out.begin(), out.end(), [&](const Point& a, const Point& b) {
        return point_key(F, a) < point_key(F, b);
    });
    return out;
}

Point p3(const Field& F, fe x, fe y, fe z) { return normalize(F, {x, y, z}); }

Line line_through(const Field& F, const Point& P, const Point& Q) {
    if (P == Q) throw GeomError("DegenerateInput: line through equal points");
    const auto &a = P.c, &b = Q.c;
    std::vector<fe> d{F.add(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
                     F.add(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
                     F.add(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
    return normalize(F, std::move(d));
}

Point meet(const Field& F, const Line& l1, const Line& l2) { return line_through(F, l1, l2); }

bool on_line(const Field& F, const Line& l, const Point& P) {
    fe s = 0;
    for (int i = 0; i < 3; ++i) s ^= F.mul(l.c[i], P.c[i]);
    return s == 0;
}

std::vector<Point> points_on_line(const Field& F, const Line& l) {
    // kernel basis of the functional [a,b,c]
    std::vector<fe> v1, v2;
    const auto& d = l.c;
    if (d[0] != 0) {
        v1 = {F.div(d[1], d[0]), 1, 0};
        v2 = {F.div(d[2], d[0]), 0, 1};
    } else if (d[1] != 0) {
        v1 = {1, 0, 0};
        v2 = {0, F.div(d[2], d[1]), 1};
    } else {
        v1 = {1, 0, 0};
        v2 = {0, 1, 0};
    }
    std::vector<Point> out;
    out.push_back(normalize(F, v1));
    for (fe t = 0; t < F.order(); ++t) {
        std::vector<fe> w(3);
        for (int i = 0; i < 3; ++i) w[i] = F.add(v2[i], F.mul(t, v1[i]));
        out.push_back(normalize(F, std::move(w)));
    }
    std::sort(out.begin(), out.end(), [&](const Point& a, const Point& b) {
        return point_key(F, a) < point_key(F, b);
    });
    return out;
}

std::vector<Line> all_lines(const Field& F) { return all_points(F, 3); }

Subspace make_subspace(const Field& F, int n, std::vector<std::vector<fe>> gens) {
    for (const auto& g : gens)
        if (static_cast<int>(g.size()) != n) throw GeomError("generator dimension mismatch");
    std::size_t r = 0;
    for (int c = 0; c < n && r < gens.size(); ++c) {
        std::size_t sel = r;
        while (sel < gens.size() && gens[sel][c] == 0) ++sel;
        if (sel == gens.size()) continue;
        std::swap(gens[r], gens[sel]);
        if (gens[r][c] != 1) {
            fe s = F.inv(gens[r][c]);
            for (auto& x : gens[r]) x = F.mul(s, x);
        }
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (i != r && gens[i][c] != 0) {
                fe s = gens[i][c];
                for (int j = 0; j < n; ++j) gens[i][j] = F.add(gens[i][j], F.mul(s, gens[r][j]));
            }
        ++r;
    }
    gens.resize(r);
    return Subspace{n, std::move(gens)};
}

Subspace span(const Field& F, const Subspace& A, const Subspace& B) {
    if (A.n != B.n) throw GeomError("AmbientMismatch");
    auto gens = A.rows;
    gens.insert(gens.end(), B.rows.begin(), B.rows.end());
    return make_subspace(F, A.n, std::move(gens));
}

Subspace intersect(const Field& F, const Subspace& A, const Subspace& B) {
    if (A.n != B.n) throw GeomError("AmbientMismatch");
    int n = A.n;
    // Zassenhaus: rows [a|a] and [b|0]; echelonize; rows with zero left half
    // carry an intersection basis in the right half.
    std::vector<std::vector<fe>> gens;
    for (const auto& a : A.rows) {
        std::vector<fe> g(2 * n);
        std::copy(a.begin(), a.end(), g.begin());
        std::copy(a.begin(), a.end(), g.begin() + n);
        gens.push_back(std::move(g));
    }
    for (const auto& b : B.rows) {
        std::vector<fe> g(2 * n, 0);
        std::copy(b.begin(), b.end(), g.begin());
        gens.push_back(std::move(g));
    }
    Subspace Z = make_subspace(F, 2 * n, std::move(gens));
    std::vector<std::vector<fe>> inter;
    for (const auto& row : Z.rows) {
        bool left_zero = std::all_of(row.begin(), row.begin() + n, [](fe x) { return x == 0; });
        if (left_zero) inter.emplace_back(row.begin() + n, row.end());
    }
    return make_subspace(F, n, std::move(inter));
}

bool subspace_contains(const Field& F, const Subspace& S, const std::vector<fe>& v) {
    std::vector<fe> w = v;
    for (const auto& row : S.rows) {
        int p = 0;
        while (row[p] == 0) ++p;
        if (w[p] != 0) {
            fe s = w[p];
            for (int j = 0; j < S.n; ++j) w[j] = F.add(w[j], F.mul(s, row[j]));
        }
    }
    return std::all_of(w.begin(), w.end(), [](fe x) { return x == 0; });
}

std::vector<Point> subspace_points(const Field& F, const Subspace& S) {
    int k = S.rank(), n = S.n;
    std::vector<Point> out;
    std::uint64_t q = F.order();
    std::vector<fe> coeff(k, 0);
    for (int lead = 0; lead < k; ++lead) {
        std::uint64_t total = 1;
        for (int j = lead + 1; j < k; ++j) total *= q;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<fe> v(n, 0);
            for (int j = 0; j < n; ++j) v[j] = S.rows[lead][j];
            std::uint64_t rem = idx;
            for (int j = lead + 1; j < k; ++j) {
                fe c = rem % q;
                rem /= q;
                if (c)
                    for (int jj = 0; jj < n; ++jj) v[jj] = F.add(v[jj], F.mul(c, S.rows[j][jj]));
            }
            out.push_back(normalize(F, std::move(v)));
        }
    }
    std::sort(out.begin(), out.end(), [&](const Point& a, const Point& b) {
        return point_key(F, a) < point_key(F, b);
    });
    return out;
}

ReducedGeometry::ReducedGeometry(const Field& big, int small_deg, int r)
    : big_(big), map_(big_, small_deg), r_(r), t_(big.deg() / small_deg), n_(r * t_) {
    int bits = n_ * small_deg;
    if (bits > 26) throw GeomError("spread ambient too large to index");
    index_points_ = all_points(big_, r_);
    lookup_.assign(std::size_t(1) << bits, -1);
    const Field& S = map_.small();
    std::size_t filled = 0;
    for (std::size_t idx = 0; idx < index_points_.size(); ++idx) {
        const Point& P = index_points_[idx];
        for (fe c = 1; c < big_.order(); ++c) {
            std::uint64_t key = 0;
            for (int j = 0; j < r_; ++j) {
                auto cs = map_.coords(big_.mul(c, P.c[j]));
                for (int i = 0; i < t_; ++i)
                    key |= cs[i] << ((j * t_ + i) * small_deg);
            }
            if (lookup_[key] != -1) {
                if (lookup_[key] != static_cast<std::int32_t>(idx))
                    throw GeomError("spread elements overlap");
                continue;
            }
            lookup_[key] = static_cast<std::int32_t>(idx);
            ++filled;
        }
    }
    if (filled != lookup_.size() - 1) throw GeomError("spread does not cover the space");
    (void)S;
}

int ReducedGeometry::index_of(const Point& big_point) const {
    auto it = std::lower_bound(
        index_points_.begin(), index_points_.end(), big_point,
        [&](const Point& a, const Point& b) { return point_key(big_, a) < point_key(big_, b); });
    if (it == index_points_.end() || !(*it == big_point)) throw GeomError("unknown index point");
    return static_cast<int>(it - index_points_.begin());
}

std::vector<fe> ReducedGeometry::expand(const std::vector<fe>& big_vec) const {
    std::vector<fe> out;
    out.reserve(n_);
    for (fe x : big_vec) {
        auto cs = map_.coords(x);
        out.insert(out.end(), cs.begin(), cs.end());
    }
    return out;
}

int ReducedGeometry::owner(const Point& small_point) const {
    return lookup_[point_key(map_.small(), small_point)];
}

Subspace ReducedGeometry::field_reduce(const Point& big_point) const {
    std::vector<std::vector<fe>> gens;
    fe lam_i = 1;
    for (int i = 0; i < t_; ++i) {
        std::vector<fe> v(r_);
        for (int j = 0; j < r_; ++j) v[j] = big_.mul(lam_i, big_point.c[j]);
        gens.push_back(expand(v));
        lam_i = big_.mul(lam_i, 2);
    }
    return make_subspace(map_.small(), n_, std::move(gens));
}

std::vector<int> ReducedGeometry::b_operator(const Subspace& U) const {
    if (U.n != n_) throw GeomError("AmbientMismatch");
    std::vector<int> out;
    for (const Point& p : subspace_points(map_.small(), U))
        out.push_back(owner(p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const ReducedGeometry& reduced_geometry(const Field& big, int small_deg, int r) {
    static std::map<std::tuple<std::uint64_t, int, int, int>, std::unique_ptr<ReducedGeometry>> cache;
    auto key = std::make_tuple(big.modulus(), big.deg(), small_deg, r);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<ReducedGeometry>(big, small_deg, r)).first;
    return *it->second;
}

}  // namespace kmarc
