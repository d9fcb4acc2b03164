#include "kmarc/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "kmarc/gf2mat.hpp"
#include "kmarc/tracesys.hpp"

namespace kmarc {

std::uint64_t LineSpectrum::lines() const {
    std::uint64_t n = 0;
    for (const auto& [k, c] : counts) n += c;
    return n;
}

std::uint64_t LineSpectrum::incidences() const {
    std::uint64_t n = 0;
    for (const auto& [k, c] : counts) n += std::uint64_t(k) * c;
    return n;
}

bool KMArc::contains(const Point& p) const {
    return std::binary_search(points.begin(), points.end(), p,
                              [this](const Point& a, const Point& b) {
                                  return point_key(field, a) < point_key(field, b);
                              });
}

namespace {

std::vector<Point> normalize_set(const Field& F, std::vector<Point> S) {
    for (auto& p : S) p = normalize(F, p.c);
    std::sort(S.begin(), S.end(), [&](const Point& a, const Point& b) {
        return point_key(F, a) < point_key(F, b);
    });
    if (std::adjacent_find(S.begin(), S.end()) != S.end())
        throw ArcError("DegenerateInput: repeated point");
    return S;
}

std::string line_str(const Field& F, const Line& l) {
    return "[" + fe_to_hex(l.c[0]) + "," + fe_to_hex(l.c[1]) + "," + fe_to_hex(l.c[2]) + "]";
}

}  // namespace

LineSpectrum line_spectrum(const Field& F, const std::vector<Point>& S) {
    LineSpectrum sp;
    for (const Line& l : all_lines(F)) {
        int k = 0;
        for (const Point& p : S)
            if (on_line(F, l, p)) ++k;
        ++sp.counts[k];
    }
    return sp;
}

KMArc verify_km(const Field& F, std::vector<Point> S) {
    S = normalize_set(F, S);
    std::uint64_t q = F.order();
    std::size_t n = S.size();
    if (n < q + 2) throw ArcError("NotKMArc: too few points for any type");

    // pair counts per line, and the distinct secant lines through each point
    std::unordered_map<std::uint64_t, std::uint32_t> pair_count;
    std::vector<std::vector<std::uint64_t>> thru(n);
    pair_count.reserve(n * n / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::uint64_t lk = point_key(F, line_through(F, S[i], S[j]));
            ++pair_count[lk];
            thru[i].push_back(lk);
            thru[j].push_back(lk);
        }
    }

    // k points on a line produce k(k-1)/2 pairs
    std::map<int, std::uint64_t> sizes;
    std::unordered_map<std::uint64_t, int> line_size;
    line_size.reserve(pair_count.size());
    for (const auto& [lk, p] : pair_count) {
        int k = static_cast<int>((1 + std::llround(std::sqrt(8.0 * p + 1))) / 2);
        if (std::uint64_t(k) * (k - 1) / 2 != p) throw ArcError("internal: bad pair count");
        ++sizes[k];
        line_size[lk] = k;
    }

    // a tangent at S[i] exists iff fewer than q+1 distinct secants pass
    // through it (every line through an arc point must carry >= 2 points)
    for (std::size_t i = 0; i < n; ++i) {
        auto& t = thru[i];
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        if (t.size() != q + 1) {
            for (const Line& l : points_on_line(F, S[i])) {  // dual: lines through S[i]
                if (!std::binary_search(t.begin(), t.end(), point_key(F, l)))
                    throw ArcError("NotKMArc: line " + line_str(F, l) + " meets the set in 1 point");
            }
            throw ArcError("internal: tangent not exhibited");
        }
    }

    int t = sizes.rbegin()->first;
    for (const auto& [k, c] : sizes)
        if (k != 2 && k != t) {
            for (const auto& [lk, ls] : line_size)
                if (ls == k)
                    throw ArcError("NotKMArc: line " + line_str(F, point_from_key(F, 3, lk)) +
                                   " meets the set in " + std::to_string(k) + " points");
        }
    if (t > 2 && sizes.count(2) == 0)
        throw ArcError("NotKMArc: no 2-secant realized");
    if (n != q + std::uint64_t(t))
        throw ArcError("NotKMArc: size " + std::to_string(n) + " does not match type " +
                       std::to_string(t));
    if (q % t != 0) throw ArcError("NotKMArc: type does not divide q");

    KMArc A{F, std::move(S), t, std::nullopt, {}, {}};
    if (t > 2) {
        for (const auto& [lk, k] : line_size)
            if (k == t) A.t_secants.push_back(point_from_key(F, 3, lk));
        std::sort(A.t_secants.begin(), A.t_secants.end(), [&](const Line& a, const Line& b) {
            return point_key(F, a) < point_key(F, b);
        });
        if (A.t_secants.size() != q / t + 1)
            throw ArcError("NotKMArc: " + std::to_string(A.t_secants.size()) + " t-secants, expected " +
                           std::to_string(q / t + 1));
        Point N = meet(F, A.t_secants[0], A.t_secants[1]);
        for (const Line& l : A.t_secants)
            if (!on_line(F, l, N))
                throw ArcError("NotKMArc: t-secants not concurrent at line " + line_str(F, l));
        if (A.contains(N)) throw ArcError("NotKMArc: nucleus lies on the arc");
        A.nucleus = N;
    }
    std::uint64_t total = q * q + q + 1;
    A.spectrum.counts[0] = total - pair_count.size();
    for (const auto& [k, c] : sizes) A.spectrum.counts[k] += c;
    if (A.spectrum.incidences() != (q + t) * (q + 1))
        throw ArcError("internal: incidence double count failed");
    return A;
}

// ------------------------------------------------------- the q/4 family

FamilyParams family_params(const Field& F, fe alpha, fe beta, int a, int b) {
    if (alpha == 0 || alpha == 1 || beta == 0 || beta == 1 || F.mul(alpha, beta) == 1)
        throw ArcError("BadParams: need alpha, beta outside {0,1} and alpha*beta != 1");
    if ((a | b) < 0 || a > 1 || b > 1) throw ArcError("BadParams: a, b are bits");
    FamilyParams p{alpha, beta, a, b, 0, 0};
    p.gamma = F.div(F.add(beta, 1), F.add(F.mul(alpha, beta), 1));
    p.xi = F.mul(F.mul(alpha, beta), p.gamma);
    if (F.add(F.add(p.xi, beta), p.gamma) != 1)
        throw ArcError("internal: xi + beta + gamma != 1");
    return p;
}

std::array<Line, 5> new_family_secants(const Field& F, const FamilyParams& p) {
    return {p3(F, 0, 0, 1),                      // Z = 0
            p3(F, 0, 1, 0),                      // Y = 0
            p3(F, 0, 1, 1),                      // Y = Z
            p3(F, 0, 1, p.gamma),                // Y = gamma Z
            p3(F, 0, 1, F.add(p.beta, 1))};      // Y = (beta+1) Z
}

KMArc new_family(const Field& F, const FamilyParams& p) {
    if (F.deg() < 3) throw ArcError("BadParams: new_family needs h >= 3");
    fe ia = F.inv(p.alpha);
    fe iag = F.inv(F.mul(p.alpha, p.gamma));
    fe iab = F.inv(F.mul(p.alpha, p.beta));
    fe ixi = F.inv(p.xi);
    int a = p.a, b = p.b;
    std::vector<Point> S;
    auto add = [&](const TraceSystem& sys, fe y, fe z) {
        for (fe x : trace_solve(F, sys)) S.push_back(normalize(F, {x, y, z}));
    };
    add({{1, ia}, {0, a}}, 1, 0);                      // S_0 on Z = 0
    add({{1, iag}, {0, 0}}, 0, 1);                     // S_1 on Y = 0
    add({{1, iab}, {1, b}}, 1, 1);                     // S_2 on Y = Z
    add({{iag, ixi}, {a ^ 1, b ^ 1}}, p.gamma, 1);     // S_3 on Y = gamma Z
    add({{iab, ixi}, {a ^ b ^ 1, b}}, F.add(p.beta, 1), 1);  // S_4 on Y = (beta+1) Z
    KMArc A = verify_km(F, std::move(S));
    if (A.points.size() != F.order() + F.order() / 4)
        throw ArcError("internal: new_family size mismatch");
    return A;
}

// ------------------------------------------------ Vandendriessche arcs

Line vandendriessche_translation_line(const Field& F) {
    return p3(F, 0, 1, 2);  // lambda Z = Y
}

KMArc vandendriessche(const Field& F, int c) {
    int h = F.deg();
    if (h < 4) throw ArcError("BadField: vandendriessche needs h >= 4");
    if (!F.vdd_compatible())
        throw ArcError("BadField: modulus must lack terms of degree h-1 and h-2");
    if (c < 0 || c > 1) throw ArcError("BadParams: c is a bit");
    auto bit = [](fe mu, int i) { return int((mu >> i) & 1); };
    auto lowsum = [&](fe mu, int top) {
        int s = 0;
        for (int i = 0; i <= top; ++i) s ^= bit(mu, i);
        return s;
    };
    fe lam = 2, lam2 = F.mul(2, 2);
    std::vector<Point> S;
    for (fe mu = 0; mu < F.order(); ++mu) {
        if (bit(mu, h - 2) == 0 && bit(mu, h - 3) == 1) S.push_back(normalize(F, {mu, 1, 0}));
        if (bit(mu, h - 1) == 0 && bit(mu, h - 2) == 1) S.push_back(normalize(F, {mu, 0, 1}));
        if (bit(mu, h - 2) == 0 && lowsum(mu, h - 3) == c) S.push_back(normalize(F, {mu, 1, 1}));
        if ((bit(mu, h - 1) ^ bit(mu, h - 2)) == 1 && lowsum(mu, h - 3) == c)
            S.push_back(normalize(F, {mu, lam, 1}));
        if (bit(mu, h - 1) == 0 && lowsum(mu, h - 2) == c) S.push_back(normalize(F, {mu, lam2, 1}));
    }
    return verify_km(F, std::move(S));
}

// ------------------------------------------- Korchmáros–Mazzocca arcs

KMArc km_family(const Field& F, int i, const OPoly& g) {
    int h = F.deg(), d = h - i;
    if (i < 1 || i >= h || h % d != 0) throw ArcError("BadParams: km_family needs (h-i) | h, i >= 1");
    SubfieldMap sm(F, d);
    const Field& Sd = sm.small();
    auto eval = [&](fe x) -> fe {
        if (g.n >= 0) return Sd.frobenius(x, g.n);
        if (g.table.size() != Sd.order()) throw ArcError("BadParams: o-polynomial table size");
        return g.table[x];
    };
    {
        // validate: the graph plus the frame points must be a hyperoval
        std::vector<Point> H;
        for (fe x = 0; x < Sd.order(); ++x) H.push_back(normalize(Sd, {eval(x), x, 1}));
        H.push_back(normalize(Sd, {1, 0, 0}));
        H.push_back(normalize(Sd, {0, 1, 0}));
        try {
            KMArc hv = verify_km(Sd, std::move(H));
            if (hv.t != 2) throw ArcError("not a hyperoval");
        } catch (const ArcError&) {
            throw ArcError("NotOPolynomial: the graph of g is not a hyperoval of PG(2,2^" +
                           std::to_string(d) + ")");
        }
    }
    std::vector<Point> S;
    std::vector<fe> gx(F.order());
    for (fe x = 0; x < F.order(); ++x) {
        fe L = F.trace(x, d);
        gx[x] = sm.embed(eval(sm.coords(L)[0]));
        S.push_back(normalize(F, {gx[x], x, 1}));
    }
    // non-determined directions at infinity
    std::set<std::uint64_t> det;
    for (fe x = 0; x < F.order(); ++x)
        for (fe y = x + 1; y < F.order(); ++y)
            det.insert(point_key(F, normalize(F, {F.add(gx[x], gx[y]), x ^ y, 0})));
    Point inf = p3(F, 0, 1, 0);
    if (!det.count(point_key(F, inf))) S.push_back(inf);
    for (fe y = 0; y < F.order(); ++y) {
        Point pt = p3(F, 1, y, 0);
        if (!det.count(point_key(F, pt))) S.push_back(pt);
    }
    return verify_km(F, std::move(S));
}

// ------------------------------------------------------ cones (GW)

KMArc gw_cone(int r, int s, const std::vector<Point>& base_small, const Point& P_small,
              GWVariant variant) {
    if (r < 1 || s < 2) throw ArcError("BadGeometry: gw_cone needs s >= 2");
    Field big = Field::make(r * s);
    const ReducedGeometry& G = reduced_geometry(big, r, 3);
    const Field& Sd = G.small();
    const Field& F2s = Sd;  // base plane field F_{2^r}
    for (const Point& p : base_small)
        if (p.c.size() != 3) throw ArcError("BadGeometry: base must live in PG(2,2^r)");

    // base validation per variant
    KMArc base = verify_km(F2s, base_small);
    bool P_in_base =
        std::find(base.points.begin(), base.points.end(), normalize(F2s, P_small.c)) !=
        base.points.end();
    int j = 0;
    switch (variant) {
        case GWVariant::in:
            if (base.t != 2 || !P_in_base)
                throw ArcError("BadGeometry: variant in needs a hyperoval through P");
            break;
        case GWVariant::out:
            if (base.t != 2 || P_in_base)
                throw ArcError("BadGeometry: variant out needs a hyperoval avoiding P");
            break;
        case GWVariant::recursive:
            while ((1 << (j + 1)) <= base.t) ++j;  // j = log2 t
            if (base.t > 2) {
                if (!base.nucleus || !(*base.nucleus == normalize(F2s, P_small.c)))
                    throw ArcError("BadGeometry: recursive base must have nucleus P");
            } else if (P_in_base) {
                throw ArcError("BadGeometry: recursive hyperoval base must avoid P");
            }
            break;
    }

    // embed the subplane point (a,b,c) as a big point and as a vector of
    // the reduced geometry
    auto embed_pt = [&](const Point& p) {
        return normalize(big, {G.map().embed(p.c[0]), G.map().embed(p.c[1]), G.map().embed(p.c[2])});
    };
    Point P_big = embed_pt(P_small);
    std::vector<fe> vP = G.expand(P_big.c);
    Subspace rho = G.field_reduce(P_big);

    // first hyperplane of rho avoiding P: kernel of a functional phi on
    // the coefficient space F_{2^r}^s
    std::vector<fe> cP;  // coordinates of vP in the RREF basis of rho
    for (const auto& row : rho.rows) {
        int piv = 0;
        while (row[piv] == 0) ++piv;
        cP.push_back(vP[piv]);
    }
    Subspace mu;
    bool found = false;
    for (const Point& phi : all_points(Sd, rho.rank())) {
        fe dot = 0;
        for (int k = 0; k < rho.rank(); ++k) dot = Sd.add(dot, Sd.mul(phi.c[k], cP[k]));
        if (dot == 0) continue;
        // kernel basis of phi, mapped through the rows of rho
        std::vector<std::vector<fe>> gens;
        int lead = 0;
        while (phi.c[lead] == 0) ++lead;
        for (int k = 0; k < rho.rank(); ++k) {
            if (k == lead) continue;
            std::vector<fe> v(G.n(), 0);
            fe coeff = Sd.div(phi.c[k], phi.c[lead]);
            for (int jj = 0; jj < G.n(); ++jj)
                v[jj] = Sd.add(rho.rows[k][jj], Sd.mul(coeff, rho.rows[lead][jj]));
            gens.push_back(std::move(v));
        }
        mu = make_subspace(Sd, G.n(), std::move(gens));
        if (mu.rank() != rho.rank() - 1 || subspace_contains(Sd, mu, vP))
            throw ArcError("internal: bad vertex hyperplane");
        found = true;
        break;
    }
    if (!found) throw ArcError("internal: no vertex hyperplane");

    // the cone: generators <Q, mu> over the base points
    std::set<Point> arc;
    for (const Point& Q : base.points) {
        auto gens = mu.rows;
        gens.push_back(G.expand(embed_pt(Q).c));
        Subspace gen = make_subspace(Sd, G.n(), std::move(gens));
        if (gen.rank() != rho.rank()) throw ArcError("BadGeometry: base point inside the vertex span");
        for (const Point& v : subspace_points(Sd, gen))
            arc.insert(G.index_points()[G.owner(v)]);
    }
    arc.erase(P_big);  // remove B(rho)
    return verify_km(big, std::vector<Point>(arc.begin(), arc.end()));
}

// --------------------------------------------------- lift and inverse

KMArc lift_club_to_arc(const Field& F, const LinearSetWitness& club,
                       std::optional<std::vector<fe>> lift_point) {
    int h = F.deg();
    if (club.mu.n != 2 * h) throw ArcError("BadLift: witness ambient must be 2h");
    const ReducedGeometry& G3 = reduced_geometry(F, 1, 3);
    const Field& F2 = G3.small();
    std::vector<fe> e(3 * h, 0);
    if (lift_point) {
        if (lift_point->size() != std::size_t(3 * h)) throw ArcError("BadLift: lift point dimension");
        e = *lift_point;
    } else {
        e[2 * h] = 1;  // the vector (0; 0; 1)
    }
    bool off_H = false;
    for (int k = 2 * h; k < 3 * h; ++k) off_H |= e[k] != 0;
    if (!off_H) throw ArcError("BadLift: lift point lies in H");

    std::vector<std::vector<fe>> gens;
    for (const auto& row : club.mu.rows) {
        std::vector<fe> v(3 * h, 0);
        std::copy(row.begin(), row.end(), v.begin());
        gens.push_back(std::move(v));
    }
    gens.push_back(e);
    Subspace pi = make_subspace(F2, 3 * h, std::move(gens));
    if (pi.rank() != club.rank + 1) throw ArcError("BadLift: lift point inside the witness span");

    std::set<Point> C;  // the club, embedded on Z = 0
    for (const Point& p : club.points()) C.insert(normalize(F, {p.c[0], p.c[1], 0}));
    std::set<Point> arc;
    for (const Point& v : subspace_points(F2, pi)) {
        Point bp = G3.index_points()[G3.owner(v)];
        if (!C.count(bp)) arc.insert(bp);
    }
    for (fe x = 0; x < F.order(); ++x) {  // ell_infty \ C
        Point p = p3(F, x, 1, 0);
        if (!C.count(p)) arc.insert(p);
    }
    {
        Point p = p3(F, 1, 0, 0);
        if (!C.count(p)) arc.insert(p);
    }
    return verify_km(F, std::vector<Point>(arc.begin(), arc.end()));
}

LinearSetWitness directions_club(const KMArc& A, const Line& ell) {
    const Field& F = A.field;
    int h = F.deg();
    std::uint64_t q = F.order();

    // projectivity with third row = ell, so ell maps to Z = 0
    int k = 0;
    while (ell.c[k] == 0) ++k;
    std::array<std::array<fe, 3>, 3> M{};
    int row = 0;
    for (int idx = 0; idx < 3; ++idx) {
        if (idx == k) continue;
        M[row++][idx] = 1;
    }
    M[2] = {ell.c[0], ell.c[1], ell.c[2]};
    auto act = [&](const Point& p) {
        std::vector<fe> v(3, 0);
        for (int r = 0; r < 3; ++r)
            for (int cidx = 0; cidx < 3; ++cidx)
                v[r] = F.add(v[r], F.mul(M[r][cidx], p.c[cidx]));
        return v;
    };

    std::vector<std::array<fe, 2>> affine;
    std::set<Point> on_ell_img;
    for (const Point& p : A.points) {
        std::vector<fe> v = act(p);
        if (v[2] == 0)
            on_ell_img.insert(normalize(F, {v[0], v[1]}));
        else
            affine.push_back({F.div(v[0], v[2]), F.div(v[1], v[2])});
    }
    if (affine.size() != q)
        throw ArcError("NotTranslation: " + std::to_string(affine.size()) + " affine points");
    if (on_ell_img.size() + q != A.points.size())
        throw ArcError("NotTranslation: ell is not a secant of the declared type");

    // the affine part must be a coset of an F2-subspace of rank h
    std::vector<std::uint64_t> diff;
    for (std::size_t i = 1; i < affine.size(); ++i)
        diff.push_back(((affine[i][0] ^ affine[0][0])) | ((affine[i][1] ^ affine[0][1]) << h));
    {
        auto rows = diff;
        if (gf2::rank(rows, 2 * h) != h)
            throw ArcError("NotTranslation: affine points are not an F2-coset of rank h");
    }

    std::vector<std::vector<fe>> gens;
    for (std::uint64_t d : diff) {
        std::vector<fe> v(2 * h);
        for (int bitpos = 0; bitpos < 2 * h; ++bitpos) v[bitpos] = (d >> bitpos) & 1;
        gens.push_back(std::move(v));
    }
    const ReducedGeometry& G2 = reduced_geometry(F, 1, 2);
    LinearSetWitness w = weight_profile(G2, make_subspace(G2.small(), 2 * h, std::move(gens)));

    // B(mu) must be exactly the set of determined directions
    std::set<Point> determined;
    for (const Point& p : w.points()) determined.insert(p);
    for (const Point& p : all_points(F, 2))
        if (determined.count(p) == on_ell_img.count(p))
            throw ArcError("NotTranslation: direction complement mismatch");
    if (A.nucleus) {
        std::vector<fe> nv = act(*A.nucleus);
        if (nv[2] != 0 || !w.head() || !(*w.head() == normalize(F, {nv[0], nv[1]})))
            throw ArcError("NotTranslation: head does not match the nucleus");
    }
    return w;
}

// ------------------------------------------------- projective triads

KMArc triad_trace(const Field& F) {
    std::vector<Point> S;
    for (fe x = 0; x < F.order(); ++x) S.push_back(normalize(F, {x, F.trace(x), 1}));
    for (fe z = 0; z < F.order(); ++z)
        if (F.trace(z) == 0) S.push_back(normalize(F, {z, 1, 0}));
    return verify_km(F, std::move(S));
}

bool is_projective_triad(const Field& F, const std::vector<Point>& S,
                         const std::array<Line, 3>& lines) {
    Point P = meet(F, lines[0], lines[1]);
    if (!on_line(F, lines[2], P)) return false;
    std::set<Point> T;
    for (const Point& p : S) T.insert(normalize(F, p.c));
    if (T.size() != S.size()) return false;
    std::array<std::vector<Point>, 3> on;
    for (const Point& p : T) {
        bool anywhere = false;
        for (int i = 0; i < 3; ++i)
            if (on_line(F, lines[i], p)) {
                on[i].push_back(p);
                anywhere = true;
            }
        if (!anywhere) return false;
    }
    std::size_t nside = on[0].size();
    if (on[1].size() != nside || on[2].size() != nside) return false;
    if (T.size() != 3 * nside - 2 || !T.count(P)) return false;
    for (const Point& R0 : on[0]) {
        if (R0 == P) continue;
        for (const Point& R1 : on[1]) {
            if (R1 == P) continue;
            if (!T.count(meet(F, line_through(F, R0, R1), lines[2]))) return false;
        }
    }
    return true;
}

std::pair<std::vector<Point>, std::array<Line, 3>> arc_to_triad(const KMArc& A) {
    const Field& F = A.field;
    if (std::uint64_t(A.t) != F.order() / 2 || A.t_secants.size() != 3)
        throw ArcError("BadParams: arc_to_triad needs a type-q/2 arc");
    std::array<Line, 3> lines{A.t_secants[0], A.t_secants[1], A.t_secants[2]};
    std::set<Point> T;
    T.insert(*A.nucleus);
    for (const Line& l : lines)
        for (const Point& p : points_on_line(F, l))
            if (!A.contains(p)) T.insert(p);
    return {std::vector<Point>(T.begin(), T.end()), lines};
}

// ----------------------------------------------- subspace enumeration

std::uint64_t enumerate_subspaces(const Field& F, int n, int k,
                                  const std::function<void(const Subspace&)>& fn) {
    if (k < 0 || k > n) throw ArcError("BadParams: enumerate_subspaces rank out of range");
    std::uint64_t q = F.order(), total = 0;
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        // free cells: (row i, col j) with j > piv[i] and j not a pivot
        std::vector<std::pair<int, int>> cells;
        for (int i = 0; i < k; ++i)
            for (int j = piv[i] + 1; j < n; ++j)
                if (std::find(piv.begin(), piv.end(), j) == piv.end()) cells.emplace_back(i, j);
        std::uint64_t fills = 1;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (fills > (std::uint64_t(1) << 40) / q)
                throw ArcError("TooLarge: enumerate_subspaces");
            fills *= q;
        }
        std::vector<std::vector<fe>> rows(k, std::vector<fe>(n, 0));
        for (int i = 0; i < k; ++i) rows[i][piv[i]] = 1;
        for (std::uint64_t idx = 0; idx < fills; ++idx) {
            std::uint64_t rem = idx;
            for (const auto& [ri, cj] : cells) {
                rows[ri][cj] = rem % q;
                rem /= q;
            }
            fn(Subspace{n, rows});
            ++total;
        }
        // next pivot combination
        int i = k - 1;
        while (i >= 0 && piv[i] == n - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    return total;
}

}  // namespace kmarc
