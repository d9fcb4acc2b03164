#include "kmarc/linsets.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "kmarc/gf2mat.hpp"

namespace kmarc {

bool LinearSetWitness::is_club() const {
    int heavy = 0;
    for (const auto& [p, w] : profile)
        if (w > 1) ++heavy;
    return heavy == 1;
}

int LinearSetWitness::head_weight() const {
    int w = 1;
    for (const auto& [p, pw] : profile) w = std::max(w, pw);
    return w;
}

const Point* LinearSetWitness::head() const {
    const Point* h = nullptr;
    for (const auto& [p, w] : profile)
        if (w > 1) {
            if (h) return nullptr;  // not a club
            h = &p;
        }
    return h;
}

std::vector<Point> LinearSetWitness::points() const {
    std::vector<Point> out;
    out.reserve(profile.size());
    for (const auto& [p, w] : profile) out.push_back(p);
    return out;
}

LinearSetWitness weight_profile(const ReducedGeometry& G, const Subspace& mu) {
    const Field& S = G.small();
    std::uint64_t q0 = S.order();
    std::map<int, std::uint64_t> counts;
    for (const Point& p : subspace_points(S, mu)) ++counts[G.owner(p)];
    LinearSetWitness w;
    w.mu = mu;
    w.rank = mu.rank();
    std::uint64_t vec_sum = 0;
    for (const auto& [idx, c] : counts) {
        // c = (q0^wt - 1)/(q0 - 1)
        int wt = 0;
        std::uint64_t acc = 0, pw = 1;
        while (acc < c) {
            acc += pw;
            pw *= q0;
            ++wt;
        }
        if (acc != c) throw LinSetError("point count is not a subspace size");
        w.profile.emplace_back(G.index_points()[idx], wt);
        std::uint64_t vecs = 1;
        for (int j = 0; j < wt; ++j) vecs *= q0;
        vec_sum += vecs - 1;
    }
    std::uint64_t expect = 1;
    for (int j = 0; j < w.rank; ++j) expect *= q0;
    if (vec_sum != expect - 1) throw LinSetError("weight/vector count identity failed");
    return w;
}

namespace {

// mu from a list of generators given as big-field coordinate pairs.
LinearSetWitness witness_from_big_gens(const ReducedGeometry& G,
                                       const std::vector<std::array<fe, 2>>& gens) {
    std::vector<std::vector<fe>> rows;
    for (const auto& g : gens) rows.push_back(G.expand({g[0], g[1]}));
    Subspace mu = make_subspace(G.small(), G.n(), std::move(rows));
    return weight_profile(G, mu);
}

}  // namespace

LinearSetWitness club_trace(const ReducedGeometry& G) {
    const Field& B = G.big();
    int d = G.small().deg();
    std::vector<std::array<fe, 2>> gens;
    fe lam = 1;
    for (int j = 0; j < G.t(); ++j) {
        gens.push_back({lam, B.trace(lam, d)});
        lam = B.mul(lam, 2);
    }
    auto w = witness_from_big_gens(G, gens);
    if (w.rank != G.t()) throw LinSetError("club_trace rank defect");
    return w;
}

LinearSetWitness club_km(const ReducedGeometry& G, int i, int n) {
    const Field& B = G.big();
    int h = G.t(), d = G.small().deg();
    if (i < 1 || i >= h || (h % (h - i)) != 0 || std::gcd(h - i, n) != 1)
        throw LinSetError("BadParams: club_km needs (h-i) | h and gcd(h-i, n) = 1");
    int sub = d * (h - i);  // F2-degree of the target subfield of L
    std::vector<std::array<fe, 2>> gens;
    fe lam = 1;
    for (int j = 0; j < h; ++j) {
        fe L = B.trace(lam, sub);
        gens.push_back({B.frobenius(L, d * n), lam});
        lam = B.mul(lam, 2);
    }
    auto w = witness_from_big_gens(G, gens);
    if (w.rank != h) throw LinSetError("club_km rank defect");
    return w;
}

LinearSetWitness club_hminus2(const ReducedGeometry& G) {
    const Field& B = G.big();
    int h = G.t();
    if (h < 3) throw LinSetError("club_hminus2 requires h >= 3");
    std::vector<std::array<fe, 2>> gens;
    fe lam_j = 2;  // lambda
    for (int j = 1; j <= h - 2; ++j) {
        gens.push_back({lam_j, 0});
        lam_j = B.mul(lam_j, 2);
    }
    gens.push_back({lam_j, 1});   // (lambda^{h-1}, 1)
    gens.push_back({0, 2});       // (0, lambda)
    auto w = witness_from_big_gens(G, gens);
    if (w.rank != h) throw LinSetError("club_hminus2 rank defect");
    return w;
}

LinearSetWitness club_scattered(const ReducedGeometry& G, int n) {
    const Field& B = G.big();
    int h = G.t(), d = G.small().deg();
    if (std::gcd(n, h) != 1) throw LinSetError("BadParams: club_scattered needs gcd(n, h) = 1");
    std::vector<std::array<fe, 2>> gens;
    fe lam = 1;
    for (int j = 0; j < h; ++j) {
        gens.push_back({lam, B.frobenius(lam, d * n)});
        lam = B.mul(lam, 2);
    }
    auto w = witness_from_big_gens(G, gens);
    for (const auto& [p, wt] : w.profile)
        if (wt != 1) throw LinSetError("club_scattered produced a non-scattered set");
    return w;
}

LinearSetWitness club_gw(const ReducedGeometry& G, int r, int n, fe a, fe b) {
    const Field& B = G.big();
    if (G.small().deg() != 1) throw LinSetError("club_gw implemented over q0 = 2");
    int m = B.deg();
    if (r < 2 || m % r != 0 || m / r < 2) throw LinSetError("BadParams: club_gw needs r >= 2, r | m, t >= 2");
    int t = m / r;
    // scattered check for f(x) = x^{2^n} on PG(1, 2^r), done in a standalone copy
    Field mid = Field::make(r);
    if (b == 0 || b >= mid.order() || a >= mid.order())
        throw LinSetError("BadParams: club_gw needs a, b in the mid field, b != 0");
    {
        const auto& Gm = reduced_geometry(mid, 1, 2);
        std::vector<std::vector<fe>> rows;
        fe lam = 1;
        for (int j = 0; j < r; ++j) {
            rows.push_back(Gm.expand({lam, mid.frobenius(lam, n)}));
            lam = mid.mul(lam, 2);
        }
        auto w = weight_profile(Gm, make_subspace(Gm.small(), 2 * r, std::move(rows)));
        for (const auto& [p, wt] : w.profile)
            if (wt != 1) throw LinSetError("NotScattered: x^(2^n) is not scattered over F_(2^r)");
    }
    SubfieldMap sm(B, r);
    fe ae = sm.embed(a), be = sm.embed(b);
    std::vector<std::array<fe, 2>> gens;
    // F2-basis of the embedded mid field
    std::vector<fe> ebasis;
    {
        fe g = 1;
        fe gen = sm.embed(2 % sm.small().order());
        for (int j = 0; j < r; ++j) {
            ebasis.push_back(g);
            g = B.mul(g, gen);
        }
        if (r == 1) ebasis = {1};
    }
    fe omega = 2;  // lambda generates the omega-basis 1, w, ..., w^{t-1} over mid
    for (fe e : ebasis) {
        gens.push_back({B.add(B.frobenius(e, n), B.mul(ae, e)), B.mul(be, e)});
        fe wi = omega;
        for (int i = 1; i < t; ++i) {
            gens.push_back({0, B.mul(e, wi)});
            wi = B.mul(wi, omega);
        }
    }
    auto w = witness_from_big_gens(G, gens);
    if (w.rank != m) throw LinSetError("club_gw rank defect");
    return w;
}

Point line_to_pg1(const Field& F, const Point& A, const Point& B, const Point& P) {
    int n = static_cast<int>(A.c.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            fe det = F.add(F.mul(A.c[i], B.c[j]), F.mul(A.c[j], B.c[i]));
            if (det == 0) continue;
            fe alpha = F.div(F.add(F.mul(P.c[i], B.c[j]), F.mul(P.c[j], B.c[i])), det);
            fe beta = F.div(F.add(F.mul(A.c[i], P.c[j]), F.mul(A.c[j], P.c[i])), det);
            // consistency: P really lies on <A, B>
            for (int k = 0; k < n; ++k)
                if (F.add(F.mul(alpha, A.c[k]), F.mul(beta, B.c[k])) != P.c[k])
                    throw GeomError("point not on the line of the frame");
            return normalize(F, {alpha, beta});
        }
    throw GeomError("degenerate frame");
}

namespace {

std::optional<ClubDescriptor> recognize_impl(const Field& F, const std::vector<Point>& S,
                                             const Point& N) {
    if (S.empty()) return std::nullopt;
    std::size_t sz = S.size();
    if (sz & (sz - 1)) return std::nullopt;  // not a power of two
    int s = 0;
    while ((std::size_t(1) << s) < sz) ++s;
    const Point& B = S[0];
    std::vector<std::uint64_t> slopes;
    for (const Point& P : S) {
        if (P == N) return std::nullopt;
        Point ab = line_to_pg1(F, N, B, P);
        if (ab.c[1] == 0) return std::nullopt;  // coincides with N projectively
        slopes.push_back(F.div(ab.c[0], ab.c[1]));
    }
    // B maps to slope 0, so the slope set must be an F2-subspace of dim s
    std::vector<std::uint64_t> rows = slopes;
    if (gf2::rank(rows, F.deg()) != s) return std::nullopt;
    // distinctness: 2^s distinct slopes inside a rank-s span forces equality,
    // but guard against repeated input points
    {
        auto u = slopes;
        std::sort(u.begin(), u.end());
        if (std::adjacent_find(u.begin(), u.end()) != u.end()) return std::nullopt;
    }
    return ClubDescriptor{s, s + 1, N, sz + 1};
}

}  // namespace

std::optional<ClubDescriptor> recognize_maxhead_club(const Field& F, const std::vector<Point>& S,
                                                     const Point& N) {
    return recognize_impl(F, S, N);
}

std::optional<ClubDescriptor> recognize_maxhead_club_on_line(const Field& F,
                                                             const std::vector<Point>& S,
                                                             const Point& N) {
    return recognize_impl(F, S, N);
}

bool complement_club_check(const ReducedGeometry& G, const LinearSetWitness& C) {
    const Point* hd = C.head();
    if (!hd) throw LinSetError("complement_club_check needs a club with a head");
    int h = G.t();
    if (C.head_weight() != h - 2 || C.rank != h)
        throw LinSetError("complement_club_check expects an (h-2)-club of rank h");
    std::vector<Point> inside = C.points();
    std::sort(inside.begin(), inside.end());
    std::vector<Point> S;
    for (const Point& p : G.index_points())
        if (!std::binary_search(inside.begin(), inside.end(), p)) S.push_back(p);
    auto d = recognize_maxhead_club(G.big(), S, *hd);
    return d && d->i == h - 2 && d->rank == h - 1;
}

}  // namespace kmarc
