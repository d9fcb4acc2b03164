#include "kmarc/symmetry.hpp"

#include <algorithm>

namespace kmarc {

namespace {

using Mat3 = std::array<std::array<fe, 3>, 3>;

Mat3 mat_mul(const Field& F, const Mat3& A, const Mat3& B) {
    Mat3 C{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) C[i][j] = F.add(C[i][j], F.mul(A[i][k], B[k][j]));
    return C;
}

fe det3(const Field& F, const Mat3& M) {
    fe d = 0;
    d = F.add(d, F.mul(M[0][0], F.add(F.mul(M[1][1], M[2][2]), F.mul(M[1][2], M[2][1]))));
    d = F.add(d, F.mul(M[0][1], F.add(F.mul(M[1][0], M[2][2]), F.mul(M[1][2], M[2][0]))));
    d = F.add(d, F.mul(M[0][2], F.add(F.mul(M[1][0], M[2][1]), F.mul(M[1][1], M[2][0]))));
    return d;
}

Mat3 mat_inv(const Field& F, const Mat3& M) {
    fe d = det3(F, M);
    if (d == 0) throw SymError("singular matrix");
    Mat3 inv{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // cofactor of (j, i); no signs in characteristic 2
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            fe cof = F.add(F.mul(M[r0][c0], M[r1][c1]), F.mul(M[r0][c1], M[r1][c0]));
            inv[i][j] = F.div(cof, d);
        }
    return inv;
}

void mat_canonicalize(const Field& F, Mat3& M) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (M[i][j] != 0) {
                fe s = F.inv(M[i][j]);
                for (auto& row : M)
                    for (auto& x : row) x = F.mul(s, x);
                return;
            }
    throw SymError("zero matrix");
}

fe dot3(const Field& F, const Point& a, const Point& b) {
    fe s = 0;
    for (int i = 0; i < 3; ++i) s = F.add(s, F.mul(a.c[i], b.c[i]));
    return s;
}

// T with T e_i ~ f[i] and T (1,1,1) = f[3]; nullopt if the frame is
// degenerate.
std::optional<Mat3> frame_matrix(const Field& F, const std::array<Point, 4>& f) {
    // solve [f0 | f1 | f2] c = f3 by elimination
    std::array<std::array<fe, 4>, 3> m{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m[i][j] = f[j].c[i];
        m[i][3] = f[3].c[i];
    }
    for (int col = 0, row = 0; col < 3; ++col, ++row) {
        int sel = row;
        while (sel < 3 && m[sel][col] == 0) ++sel;
        if (sel == 3) return std::nullopt;
        std::swap(m[row], m[sel]);
        fe s = F.inv(m[row][col]);
        for (auto& x : m[row]) x = F.mul(s, x);
        for (int i = 0; i < 3; ++i)
            if (i != row && m[i][col] != 0) {
                fe c = m[i][col];
                for (int j = 0; j < 4; ++j) m[i][j] = F.add(m[i][j], F.mul(c, m[row][j]));
            }
    }
    Mat3 T{};
    for (int j = 0; j < 3; ++j) {
        if (m[j][3] == 0) return std::nullopt;  // f3 on a side of the triangle
        for (int i = 0; i < 3; ++i) T[i][j] = F.mul(m[j][3], f[j].c[i]);
    }
    return T;
}

std::vector<std::uint64_t> key_set(const Field& F, const std::vector<Point>& S) {
    std::vector<std::uint64_t> ks;
    ks.reserve(S.size());
    for (const Point& p : S) ks.push_back(point_key(F, p));
    std::sort(ks.begin(), ks.end());
    return ks;
}

Point frob_point(const Field& F, const Point& p, int k) {
    std::vector<fe> v(p.c.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.frobenius(p.c[i], k);
    return Point{std::move(v)};  // first nonzero coordinate stays 1
}

}  // namespace

Collineation identity_collineation() {
    Collineation g;
    for (int i = 0; i < 3; ++i) g.matrix[i][i] = 1;
    return g;
}

Point apply(const Field& F, const Collineation& g, const Point& p) {
    std::vector<fe> v(3, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            v[i] = F.add(v[i], F.mul(g.matrix[i][j], F.frobenius(p.c[j], g.frob)));
    return normalize(F, std::move(v));
}

std::vector<Point> apply(const Field& F, const Collineation& g, const std::vector<Point>& S) {
    std::vector<Point> out;
    out.reserve(S.size());
    for (const Point& p : S) out.push_back(apply(F, g, p));
    std::sort(out.begin(), out.end(), [&](const Point& a, const Point& b) {
        return point_key(F, a) < point_key(F, b);
    });
    return out;
}

Collineation compose(const Field& F, const Collineation& g, const Collineation& f) {
    Collineation c;
    c.frob = (g.frob + f.frob) % F.deg();
    Mat3 fm;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) fm[i][j] = F.frobenius(f.matrix[i][j], g.frob);
    c.matrix = mat_mul(F, g.matrix, fm);
    mat_canonicalize(F, c.matrix);
    return c;
}

Collineation inverse(const Field& F, const Collineation& g) {
    Collineation inv;
    inv.frob = (F.deg() - g.frob) % F.deg();
    Mat3 mi = mat_inv(F, g.matrix);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) inv.matrix[i][j] = F.frobenius(mi[i][j], inv.frob);
    mat_canonicalize(F, inv.matrix);
    return inv;
}

Collineation elation(const Field& F, const Line& axis, const Point& pre, const Point& image) {
    fe dp = dot3(F, axis, pre), di = dot3(F, axis, image);
    if (dp == 0 || di == 0) throw SymError("DegenerateElation: point on the axis");
    Collineation g = identity_collineation();
    if (normalize(F, pre.c) == normalize(F, image.c)) return g;
    // M = I + w a^T with w = (c * image + pre) / a.pre, c = a.pre / a.image:
    // fixes the axis pointwise and sends pre to c * image; a.w = 0 makes
    // it unipotent.
    fe c = F.div(dp, di);
    std::array<fe, 3> w{};
    for (int i = 0; i < 3; ++i) w[i] = F.div(F.add(F.mul(c, image.c[i]), pre.c[i]), dp);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g.matrix[i][j] = F.add(g.matrix[i][j], F.mul(w[i], axis.c[j]));
    mat_canonicalize(F, g.matrix);
    return g;
}

std::vector<Line> translation_lines(const KMArc& A) {
    const Field& F = A.field;
    std::vector<Line> candidates = A.t_secants;
    if (A.t == 2) {  // hyperoval: every secant is a 2-secant
        std::set<Point> ls;
        for (std::size_t i = 0; i < A.points.size(); ++i)
            for (std::size_t j = i + 1; j < A.points.size(); ++j)
                ls.insert(line_through(F, A.points[i], A.points[j]));
        candidates.assign(ls.begin(), ls.end());
    }
    std::vector<std::uint64_t> keys = key_set(F, A.points);
    std::vector<Line> out;
    for (const Line& ell : candidates) {
        std::vector<Point> off;
        for (const Point& p : A.points)
            if (!on_line(F, ell, p)) off.push_back(p);
        bool ok = off.size() == F.order();
        for (std::size_t r = 1; ok && r < off.size(); ++r) {
            Collineation g = elation(F, ell, off[0], off[r]);
            for (const Point& p : A.points)
                if (!std::binary_search(keys.begin(), keys.end(), point_key(F, apply(F, g, p)))) {
                    ok = false;
                    break;
                }
        }
        if (ok) out.push_back(ell);
    }
    return out;
}

// ---------------------------------------- direction sets, properties

int DSets::index(int i, int j) {
    static constexpr int idx[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return idx[i - 1][j - 1];
}

namespace {

struct SecantData {
    Line ell0;
    Point N;
    std::array<Line, 4> others;                   // ascending by key
    std::array<std::vector<Point>, 4> s;          // arc points per other secant
    std::array<std::vector<Point>, 6> d;          // pairwise D, indexed by DSets::index
};

SecantData secant_data(const KMArc& A, const Line& ell0) {
    const Field& F = A.field;
    if (std::uint64_t(A.t) * 4 != F.order() || A.t_secants.size() != 5)
        throw SymError("WrongType: direction sets need a type-q/4 arc");
    if (std::find(A.t_secants.begin(), A.t_secants.end(), normalize(F, ell0.c)) ==
        A.t_secants.end())
        throw SymError("WrongType: ell0 is not a t-secant");
    SecantData sd;
    sd.ell0 = normalize(F, ell0.c);
    sd.N = *A.nucleus;
    int k = 0;
    for (const Line& l : A.t_secants)
        if (!(l == sd.ell0)) sd.others[k++] = l;  // t_secants already key-sorted
    for (int i = 0; i < 4; ++i)
        for (const Point& p : A.points)
            if (on_line(F, sd.others[i], p)) sd.s[i].push_back(p);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            std::set<Point> dir;
            for (const Point& P : sd.s[i])
                for (const Point& Q : sd.s[j]) dir.insert(meet(F, line_through(F, P, Q), sd.ell0));
            auto& out = sd.d[DSets::index(i + 1, j + 1)];
            out.assign(dir.begin(), dir.end());
        }
    return sd;
}

std::vector<Point> inter(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::vector<Point> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_club_on_line(const Field& F, const std::vector<Point>& S, const Point& N, int i,
                     int rank) {
    auto d = recognize_maxhead_club_on_line(F, S, N);
    return d && d->i == i && d->rank == rank;
}

bool property_check(const KMArc& A, const Line& ell0, bool want_II) {
    const Field& F = A.field;
    int h = F.deg(), q4 = int(F.order() / 4);
    SecantData sd = secant_data(A, ell0);
    for (const auto& S : sd.s)
        if (int(S.size()) != q4 || !is_club_on_line(F, S, sd.N, h - 2, h - 1)) return false;
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        auto D = [&](int a, int b) -> const std::vector<Point>& {
            int i = perm[a - 1] + 1, j = perm[b - 1] + 1;
            return sd.d[DSets::index(std::min(i, j), std::max(i, j))];
        };
        if (D(1, 2) != D(3, 4) || D(1, 3) != D(2, 4) || D(1, 4) != D(2, 3)) continue;
        const auto &d12 = D(1, 2), &d13 = D(1, 3), &d14 = D(1, 4);
        bool ok;
        if (!want_II) {
            ok = int(d12.size()) == q4 && int(d13.size()) == q4 && int(d14.size()) == q4 &&
                 is_club_on_line(F, d12, sd.N, h - 2, h - 1) &&
                 is_club_on_line(F, d13, sd.N, h - 2, h - 1) &&
                 is_club_on_line(F, d14, sd.N, h - 2, h - 1) && inter(d12, d13).empty() &&
                 inter(d12, d14).empty() && inter(d13, d14).empty();
        } else {
            ok = int(d12.size()) == 2 * q4 && int(d13.size()) == 2 * q4 &&
                 int(d14.size()) == 2 * q4 && is_club_on_line(F, d12, sd.N, h - 1, h) &&
                 is_club_on_line(F, d13, sd.N, h - 1, h) &&
                 is_club_on_line(F, d14, sd.N, h - 1, h) && int(inter(d12, d13).size()) == q4 &&
                 int(inter(d12, d14).size()) == q4 && int(inter(d13, d14).size()) == q4 &&
                 inter(inter(d12, d13), d14).empty();
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

DSets d_sets(const KMArc& A, const Line& ell0, const std::array<int, 4>& labeling) {
    SecantData sd = secant_data(A, ell0);
    {
        auto l = labeling;
        std::sort(l.begin(), l.end());
        if (l != std::array<int, 4>{0, 1, 2, 3}) throw SymError("BadParams: labeling");
    }
    DSets out;
    out.secants[0] = sd.ell0;
    for (int i = 0; i < 4; ++i) {
        out.secants[i + 1] = sd.others[labeling[i]];
        out.s[i] = sd.s[labeling[i]];
    }
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            int a = labeling[i - 1] + 1, b = labeling[j - 1] + 1;
            out.d[DSets::index(i, j)] = sd.d[DSets::index(std::min(a, b), std::max(a, b))];
        }
    return out;
}

bool has_property_I(const KMArc& A, const Line& ell0) { return property_check(A, ell0, false); }
bool has_property_II(const KMArc& A, const Line& ell0) { return property_check(A, ell0, true); }

// ---------------------------------------------- the q/4-family criterion

std::set<fe> transliff_set(const Field& F, fe beta) {
    if (beta == 0 || beta == 1) throw SymError("BadParams: beta outside {0,1}");
    return {F.inv(F.mul(beta, beta)), F.add(1, F.inv(beta)), beta, F.inv(F.sqrt(beta)),
            F.inv(F.add(beta, 1))};
}

// --------------------------------------------------------- equivalence

std::optional<Collineation> pgl_equivalent(const KMArc& A, const KMArc& B, bool semilinear) {
    const Field& F = A.field;
    if (!(F == B.field)) throw SymError("FieldMismatch");
    if (A.t != B.t || A.points.size() != B.points.size() ||
        !(A.spectrum.counts == B.spectrum.counts))
        return std::nullopt;
    if (A.t <= 2) throw SymError("WrongType: frame anchoring needs t > 2");

    std::vector<std::uint64_t> bkeys = key_set(F, B.points);
    std::vector<std::vector<Point>> bsec(B.t_secants.size());
    for (std::size_t i = 0; i < B.t_secants.size(); ++i)
        for (const Point& p : B.points)
            if (on_line(F, B.t_secants[i], p)) bsec[i].push_back(p);

    int frobs = semilinear ? F.deg() : 1;
    for (int k = 0; k < frobs; ++k) {
        // the Frobenius part of the candidate, applied to A up front
        std::vector<Point> Ak;
        for (const Point& p : A.points) Ak.push_back(frob_point(F, p, k));
        Point Nk = frob_point(F, *A.nucleus, k);
        std::array<Point, 4> src;
        src[0] = Nk;
        for (int i = 0; i < 3; ++i) {
            Line l = frob_point(F, A.t_secants[i], k);
            for (const Point& p : Ak)
                if (on_line(F, l, p)) {
                    src[i + 1] = p;
                    break;
                }
        }
        auto TA = frame_matrix(F, src);
        if (!TA) throw SymError("internal: frame degenerate despite the spectrum");
        Mat3 TAinv = mat_inv(F, *TA);

        std::size_t ns = B.t_secants.size();
        for (std::size_t ia = 0; ia < ns; ++ia)
            for (std::size_t ib = 0; ib < ns; ++ib)
                for (std::size_t ic = 0; ic < ns; ++ic) {
                    if (ia == ib || ia == ic || ib == ic) continue;
                    for (const Point& Q1 : bsec[ia])
                        for (const Point& Q2 : bsec[ib])
                            for (const Point& Q3 : bsec[ic]) {
                                auto TB = frame_matrix(F, {*B.nucleus, Q1, Q2, Q3});
                                if (!TB) continue;
                                Collineation g;
                                g.frob = k;
                                g.matrix = mat_mul(F, *TB, TAinv);
                                mat_canonicalize(F, g.matrix);
                                Collineation lin{g.matrix, 0};
                                bool ok = true;
                                for (const Point& p : Ak)
                                    if (!std::binary_search(bkeys.begin(), bkeys.end(),
                                                            point_key(F, apply(F, lin, p)))) {
                                        ok = false;
                                        break;
                                    }
                                if (ok) return g;
                            }
                }
    }
    return std::nullopt;
}

Point apply2(const Field& F, const Collineation2& g, const Point& p) {
    std::vector<fe> v(2, 0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            v[i] = F.add(v[i], F.mul(g.matrix[i][j], F.frobenius(p.c[j], g.frob)));
    return normalize(F, std::move(v));
}

namespace {

// all normalized invertible 2x2 matrices (first nonzero entry 1)
template <class Fn>
void for_pgl2(const Field& F, Fn fn) {
    std::uint64_t q = F.order();
    for (fe b = 0; b < q; ++b)  // a = 1
        for (fe c = 0; c < q; ++c)
            for (fe d = 0; d < q; ++d) {
                if (F.add(d, F.mul(b, c)) == 0) continue;
                if (fn(std::array<std::array<fe, 2>, 2>{{{1, b}, {c, d}}})) return;
            }
    for (fe c = 0; c < q; ++c) {  // a = 0, b = 1: det = c
        if (c == 0) continue;
        for (fe d = 0; d < q; ++d)
            if (fn(std::array<std::array<fe, 2>, 2>{{{0, 1}, {c, d}}})) return;
    }
}

bool maps_onto(const Field& F, const Collineation2& g, const std::vector<Point>& S,
               const std::vector<std::uint64_t>& target_keys) {
    for (const Point& p : S)
        if (!std::binary_search(target_keys.begin(), target_keys.end(),
                                point_key(F, apply2(F, g, p))))
            return false;
    return true;
}

}  // namespace

std::optional<Collineation2> line_set_equivalent(const Field& F, const std::vector<Point>& S1,
                                                 const std::vector<Point>& S2, bool semilinear) {
    if (F.order() > 64) throw SymError("TooLarge: PGL(2,q) enumeration capped at q = 64");
    if (S1.size() != S2.size()) return std::nullopt;
    std::vector<std::uint64_t> k2 = key_set(F, S2);
    std::optional<Collineation2> found;
    int frobs = semilinear ? F.deg() : 1;
    for (int k = 0; k < frobs && !found; ++k) {
        for_pgl2(F, [&](const std::array<std::array<fe, 2>, 2>& m) {
            Collineation2 g{m, k};
            if (maps_onto(F, g, S1, k2)) {
                found = g;
                return true;
            }
            return false;
        });
    }
    return found;
}

std::uint64_t stabilizer_order(const Field& F, const std::vector<Point>& S) {
    if (F.order() > 64) throw SymError("TooLarge: PGL(2,q) enumeration capped at q = 64");
    std::vector<std::uint64_t> keys = key_set(F, S);
    std::uint64_t count = 0;
    for (int k = 0; k < F.deg(); ++k) {
        for_pgl2(F, [&](const std::array<std::array<fe, 2>, 2>& m) {
            if (maps_onto(F, Collineation2{m, k}, S, keys)) ++count;
            return false;
        });
    }
    return count;
}

}  // namespace kmarc
