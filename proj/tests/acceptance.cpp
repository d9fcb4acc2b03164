// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit if
// any gating criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <unordered_set>

#include "kmarc/jsonio.hpp"
#include "kmarc/symmetry.hpp"
#include "kmarc/tracesys.hpp"

using namespace kmarc;

namespace {

struct CriterionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw CriterionFailure(msg);
}

const ReducedGeometry& line_geom(int h) { return reduced_geometry(Field::make(h), 1, 2); }

std::vector<Point> frobenius_hyperoval(const Field& F, int n = 1) {
    std::vector<Point> S;
    for (fe x = 0; x < F.order(); ++x) S.push_back(p3(F, F.frobenius(x, n), x, 1));
    S.push_back(p3(F, 1, 0, 0));
    S.push_back(p3(F, 0, 1, 0));
    return S;
}

void check_new_family_arc(const Field& F, fe alpha, fe beta, int a, int b) {
    std::uint64_t q = F.order();
    auto p = family_params(F, alpha, beta, a, b);
    KMArc A = new_family(F, p);
    require(std::uint64_t(A.t) == q / 4, "type is not q/4");
    if (A.t > 2)
        require(*A.nucleus == p3(F, 1, 0, 0), "nucleus is not (1,0,0)");
    else
        require(!A.contains(p3(F, 1, 0, 0)), "(1,0,0) lies on the hyperoval");
    for (const Line& l : new_family_secants(F, p)) {
        std::uint64_t k = 0;
        for (const Point& pt : A.points) k += on_line(F, l, pt);
        require(k == q / 4, "S_i size is not q/4");
    }
}

// ---------------------------------------------------------- criteria

void criterion1() {
    for (int h : {3, 4, 5}) {
        Field F = Field::make(h);
        for (fe alpha = 2; alpha < F.order(); ++alpha)
            for (fe beta = 2; beta < F.order(); ++beta) {
                if (F.mul(alpha, beta) == 1) continue;
                for (int a : {0, 1})
                    for (int b : {0, 1}) check_new_family_arc(F, alpha, beta, a, b);
            }
    }
    std::mt19937 rng(20260823);
    for (int h : {6, 7, 8}) {
        Field F = Field::make(h);
        std::uniform_int_distribution<fe> el(2, F.order() - 1);
        int done = 0;
        while (done < 200) {
            fe alpha = el(rng), beta = el(rng);
            if (F.mul(alpha, beta) == 1) continue;
            check_new_family_arc(F, alpha, beta, int(rng() & 1), int(rng() & 1));
            ++done;
        }
    }
}

void criterion2() {
    for (int h : {4, 5}) {
        Field F = Field::make(h);
        for (fe beta = 2; beta < F.order(); ++beta) {
            auto crit = transliff_set(F, beta);
            for (fe alpha = 2; alpha < F.order(); ++alpha) {
                if (F.mul(alpha, beta) == 1) continue;
                KMArc A = new_family(F, family_params(F, alpha, beta, 0, 0));
                bool translation = !translation_lines(A).empty();
                require(translation == (crit.count(alpha) > 0), "translation criterion mismatch");
            }
        }
    }
    // q = 16: beta of order 3 makes every q/4-secant a translation line
    Field F = Field::make(4);
    int cubes = 0;
    for (fe beta = 2; beta < F.order(); ++beta) {
        if (F.mul(beta, F.mul(beta, beta)) != 1) continue;
        ++cubes;
        KMArc A = new_family(F, family_params(F, beta, beta, 0, 0));
        require(translation_lines(A).size() == 5, "singleton case must have five translation lines");
    }
    require(cubes == 2, "expected two cube roots of unity outside F2");
}

struct ClubCensus {
    std::uint64_t clubs = 0;
    std::uint64_t per_head = 0;
    bool uniform = true;
};

ClubCensus count_clubs(int h) {
    Field F2(1, 2, false);
    const auto& G = line_geom(h);
    const Field& big = G.big();
    std::set<std::vector<std::uint64_t>> seen;
    std::map<std::uint64_t, std::uint64_t> per_head;
    enumerate_subspaces(F2, 2 * h, h, [&](const Subspace& S) {
        auto w = weight_profile(G, S);
        if (!w.is_club() || w.head_weight() != h - 1) return;
        std::vector<std::uint64_t> ks;
        for (const auto& [p, wt] : w.profile) ks.push_back(point_key(big, p));
        if (seen.insert(std::move(ks)).second) ++per_head[point_key(big, *w.head())];
    });
    ClubCensus c;
    c.clubs = seen.size();
    c.per_head = per_head.empty() ? 0 : per_head.begin()->second;
    for (const auto& [hd, n] : per_head) c.uniform &= n == c.per_head;
    return c;
}

void criterion3() {
    ClubCensus c3 = count_clubs(3);
    require(c3.clubs == 126, "h=3 club count != 126");
    require(c3.per_head == 14 && c3.uniform, "h=3 per-head count != 14");
    ClubCensus c4 = count_clubs(4);
    require(c4.clubs == 510, "h=4 club count != 510");
    require(c4.per_head == 30 && c4.uniform, "h=4 per-head count != 30");
}

void criterion4() {
    Field F = Field::make(3);
    auto S = club_trace(line_geom(3)).points();
    std::uint64_t stab = stabilizer_order(F, S);
    require(stab == 12, "stabilizer order != 12");
    std::uint64_t pgammal = (F.order() * F.order() * F.order() - F.order()) * F.deg();
    require(pgammal == 1512 && 126 * stab == pgammal, "orbit-stabilizer mismatch");
}

void criterion5() {
    Field F = Field::make(3);
    std::array<Line, 3> lines{p3(F, 1, 0, 0), p3(F, 0, 1, 0), p3(F, 1, 1, 0)};
    Point P = meet(F, lines[0], lines[1]);
    std::array<std::vector<Point>, 2> side;
    for (int i = 0; i < 2; ++i)
        for (const Point& pt : points_on_line(F, lines[i]))
            if (!(pt == P)) side[i].push_back(pt);
    std::set<std::set<Point>> triads;
    std::uint64_t pairs = 0;
    std::vector<int> idx;
    // all 4-subsets of an 8-set, twice
    std::vector<std::vector<int>> subsets;
    {
        std::vector<int> c{0, 1, 2, 3};
        for (;;) {
            subsets.push_back(c);
            int i = 3;
            while (i >= 0 && c[i] == 4 + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < 4; ++j) c[j] = c[j - 1] + 1;
        }
    }
    for (const auto& c0 : subsets)
        for (const auto& c1 : subsets) {
            ++pairs;
            std::set<Point> T{P};
            for (int i : c0) T.insert(side[0][i]);
            for (int i : c1) T.insert(side[1][i]);
            for (int i : c0)
                for (int j : c1) T.insert(meet(F, line_through(F, side[0][i], side[1][j]), lines[2]));
            if (T.size() != 13) continue;
            std::vector<Point> Tv(T.begin(), T.end());
            if (is_projective_triad(F, Tv, lines)) triads.insert(std::move(T));
        }
    require(pairs == 4900, "pair scan count != C(8,4)^2");
    require(triads.size() == 28, "triad count != 4q-4");
    for (int h = 3; h <= 8; ++h) {
        Field Fh = Field::make(h);
        auto [T, ls] = arc_to_triad(triad_trace(Fh));
        require(is_projective_triad(Fh, T, ls), "triad_trace complement is not a triad");
    }
    (void)idx;
}

void criterion6() {
    std::mt19937 rng(4242);
    for (int m : {4, 8, 10}) {
        Field F = Field::make(m);
        std::uniform_int_distribution<fe> el(0, F.order() - 1);
        for (int rep = 0; rep < 10000; ++rep) {
            TraceSystem sys;
            int len = rep % 7;
            for (int i = 0; i < len; ++i) {
                sys.ks.push_back(el(rng));
                sys.cs.push_back(int(rng() & 1));
            }
            require(trace_count(F, sys) == trace_brute_count(F, sys), "trace count mismatch");
        }
    }
}

void criterion7() {
    for (int h : {4, 5, 6}) {
        Field F = Field::make(h, {.vdd_compatible = true});
        std::uint64_t q = F.order();
        KMArc A0 = vandendriessche(F, 0), A1 = vandendriessche(F, 1);
        require(std::uint64_t(A0.t) == q / 4 && std::uint64_t(A1.t) == q / 4, "vdd type != q/4");
        Collineation shift = identity_collineation();
        shift.matrix[0][2] = 1;
        require(apply(F, shift, A0.points) == A1.points, "shift matrix does not map A_0 to A_1");
        Line ell = vandendriessche_translation_line(F);
        auto tl = translation_lines(A0);
        require(std::find(tl.begin(), tl.end(), ell) != tl.end(),
                "lambda Z = Y is not a translation line");
        require(has_property_II(A0, p3(F, 0, 0, 1)), "property (II) fails at Z = 0");
        auto w = directions_club(A0, ell);
        require(w.is_club() && w.head_weight() == h - 2 && w.rank == h,
                "directions club is not an (h-2)-club of rank h");
        if (h <= 5) {
            auto target = club_hminus2(line_geom(h)).points();
            require(line_set_equivalent(F, w.points(), target, true).has_value(),
                    "directions club not PGammaL-equivalent to the h-2 club");
        }
    }
}

void criterion8() {
    auto round_trip = [](const Field& F, const LinearSetWitness& w, const char* name) {
        KMArc A = lift_club_to_arc(F, w);
        int t_expect = 1 << w.head_weight();
        require(A.t == t_expect, std::string(name) + ": lifted type mismatch");
        auto back = directions_club(A, p3(F, 0, 0, 1));
        require(back.profile == w.profile, std::string(name) + ": profile not recovered");
    };
    for (int h = 2; h <= 8; ++h) {
        Field F = Field::make(h);
        const auto& G = line_geom(h);
        round_trip(F, club_trace(G), "trace");
        if (std::gcd(1, h) == 1) round_trip(F, club_scattered(G, 1), "scattered");
        if (h >= 3) round_trip(F, club_hminus2(G), "hminus2");
        for (int i = 1; i < h; ++i) {
            if (h % (h - i) != 0) continue;
            for (int n = 1; n < std::max(2, h - i); ++n)
                if (std::gcd(h - i, n) == 1) round_trip(F, club_km(G, i, n), "km");
        }
    }
    for (auto [r, t] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}}) {
        int m = r * t;
        Field F = Field::make(m);
        const auto& G = line_geom(m);
        for (int n = 1; n < r; ++n) {
            if (std::gcd(n, r) != 1) continue;
            for (fe a : {fe(0), fe(1)}) round_trip(F, club_gw(G, r, n, a, 1), "gw");
        }
    }
}

void criterion9() {
    auto check_arc = [](const KMArc& A) {
        auto tl = translation_lines(A);
        for (const Line& ell : A.t_secants) {
            bool is_tl = std::find(tl.begin(), tl.end(), ell) != tl.end();
            require(has_property_I(A, ell) == is_tl, "property (I) <-> translation mismatch");
        }
    };
    for (int h : {4, 5}) {
        Field F = Field::make(h);
        for (fe alpha = 2; alpha < F.order(); ++alpha)
            for (fe beta = 2; beta < F.order(); ++beta) {
                if (F.mul(alpha, beta) == 1) continue;
                for (int a : {0, 1})
                    for (int b : {0, 1})
                        check_arc(new_family(F, family_params(F, alpha, beta, a, b)));
            }
        Field Fv = Field::make(h, {.vdd_compatible = true});
        check_arc(vandendriessche(Fv, 0));
        check_arc(vandendriessche(Fv, 1));
    }
    // km_family gives a q/4 arc only when (h - i) | h with i = h - 2
    check_arc(km_family(Field::make(4), 2, OPoly{1, {}}));
}

void criterion10() {
    auto expect = [](const KMArc& A, int t, const char* name) {
        require(A.t == t, std::string(name) + ": unexpected type");
    };
    {
        Field F4 = Field::make(2);
        auto H = frobenius_hyperoval(F4);
        expect(gw_cone(2, 2, H, p3(F4, 0, 0, 1), GWVariant::in), 4, "(2,2) in");
        expect(gw_cone(2, 2, H, p3(F4, 2, 1, 1), GWVariant::out), 8, "(2,2) out");
        // hyperoval base avoiding P: j = 1
        expect(gw_cone(2, 2, H, p3(F4, 2, 1, 1), GWVariant::recursive), 8, "(2,2) recursive");
    }
    {
        Field F2(1, 2, false);
        std::vector<Point> H{p3(F2, 1, 0, 0), p3(F2, 0, 1, 0), p3(F2, 0, 0, 1), p3(F2, 1, 1, 1)};
        expect(gw_cone(1, 3, H, p3(F2, 1, 0, 0), GWVariant::in), 4, "(1,3) in");
        expect(gw_cone(1, 3, H, p3(F2, 1, 1, 0), GWVariant::out), 8, "(1,3) out");
        expect(gw_cone(1, 3, H, p3(F2, 1, 1, 0), GWVariant::recursive), 8, "(1,3) recursive");
    }
    {
        Field F8 = Field::make(3);
        auto H = frobenius_hyperoval(F8);
        expect(gw_cone(3, 2, H, p3(F8, 0, 0, 1), GWVariant::in), 8, "(3,2) in");
        Point outside = p3(F8, 2, 1, 1);
        require(std::find(H.begin(), H.end(), outside) == H.end(), "(3,2) witness inside");
        expect(gw_cone(3, 2, H, outside, GWVariant::out), 16, "(3,2) out");
        KMArc base = triad_trace(F8);  // type 4, j = 2
        expect(gw_cone(3, 2, base.points, *base.nucleus, GWVariant::recursive), 32,
               "(3,2) recursive");
    }
}

void criterion11() {
    for (int h : {4, 5, 6}) {
        const auto& G = line_geom(h);
        auto C = club_hminus2(G);
        require(complement_club_check(G, C), "complement check failed");
        std::vector<Point> inside = C.points();
        std::sort(inside.begin(), inside.end());
        std::vector<Point> S;
        for (const Point& p : G.index_points())
            if (!std::binary_search(inside.begin(), inside.end(), p)) S.push_back(p);
        auto d = recognize_maxhead_club(G.big(), S, *C.head());
        require(d.has_value() && d->i == h - 2 && d->rank == h - 1,
                "complement is not an (h-2)-club of rank h-1");
    }
}

// non-gating stretch: all 3-clubs of rank 5 with a fixed head at q = 32
// are pairwise PGammaL-equivalent
bool criterion12_stretch() {
    int h = 5;
    Field F2(1, 2, false);
    const auto& G = line_geom(h);
    const Field& big = G.big();
    Point N = normalize(big, {1, 0});
    Subspace E = G.field_reduce(N);  // the spread element of the head

    // quotient F2^10 / sigma machinery: complete sigma to a basis, lift
    // quotient vectors through the completion
    auto club_key = [&](const std::vector<Point>& pts) {
        std::vector<std::uint64_t> ks;
        for (const Point& p : pts) ks.push_back(point_key(big, p));
        std::sort(ks.begin(), ks.end());
        return ks;
    };
    std::set<std::vector<std::uint64_t>> clubs;
    enumerate_subspaces(F2, 5, 3, [&](const Subspace& S3) {
        // sigma = S3 through the rows of E
        std::vector<std::vector<fe>> sig;
        for (const auto& coeff : S3.rows) {
            std::vector<fe> v(10, 0);
            for (int j = 0; j < 5; ++j)
                if (coeff[j])
                    for (int k = 0; k < 10; ++k) v[k] ^= E.rows[j][k];
            sig.push_back(std::move(v));
        }
        Subspace sigma = make_subspace(F2, 10, sig);
        // completion of sigma to the full space: unit vectors off the pivots
        std::vector<int> piv;
        for (const auto& row : sigma.rows) {
            int p = 0;
            while (row[p] == 0) ++p;
            piv.push_back(p);
        }
        std::vector<std::vector<fe>> comp;
        for (int j = 0; j < 10; ++j)
            if (std::find(piv.begin(), piv.end(), j) == piv.end()) {
                std::vector<fe> v(10, 0);
                v[j] = 1;
                comp.push_back(std::move(v));
            }
        enumerate_subspaces(F2, 7, 2, [&](const Subspace& Q) {
            auto gens = sigma.rows;
            for (const auto& qrow : Q.rows) {
                std::vector<fe> v(10, 0);
                for (int j = 0; j < 7; ++j)
                    if (qrow[j])
                        for (int k = 0; k < 10; ++k) v[k] ^= comp[j][k];
                gens.push_back(std::move(v));
            }
            Subspace mu = make_subspace(F2, 10, std::move(gens));
            if (mu.rank() != 5) return;
            auto w = weight_profile(G, mu);
            if (!w.is_club() || w.head_weight() != 3) return;
            if (!(*w.head() == N)) return;
            std::vector<std::uint64_t> ks;
            for (const auto& [p, wt] : w.profile) ks.push_back(point_key(big, p));
            std::sort(ks.begin(), ks.end());
            clubs.insert(std::move(ks));
        });
    });
    if (clubs.empty()) return false;

    // orbit of the first club under PGammaL(2, 32)
    std::vector<Point> first;
    for (std::uint64_t k : *clubs.begin()) first.push_back(point_from_key(big, 2, k));
    std::set<std::vector<std::uint64_t>> orbit;
    std::uint64_t q = big.order();
    auto try_mat = [&](fe a, fe b, fe c, fe d, int frob) {
        Collineation2 g{{{{a, b}, {c, d}}}, frob};
        std::vector<Point> img;
        for (const Point& p : first) img.push_back(apply2(big, g, p));
        orbit.insert(club_key(img));
    };
    for (int frob = 0; frob < h; ++frob) {
        for (fe b = 0; b < q; ++b)
            for (fe c = 0; c < q; ++c)
                for (fe d = 0; d < q; ++d)
                    if (big.add(d, big.mul(b, c)) != 0) try_mat(1, b, c, d, frob);
        for (fe c = 1; c < q; ++c)
            for (fe d = 0; d < q; ++d) try_mat(0, 1, c, d, frob);
    }
    std::size_t in_orbit = 0;
    for (const auto& ck : clubs) in_orbit += orbit.count(ck);
    std::printf("      stretch: %zu distinct 3-clubs of rank 5 with the fixed head, %zu in one "
                "PGammaL orbit\n",
                clubs.size(), in_orbit);
    return in_orbit == clubs.size();
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        void (*fn)();
    };
    const Entry entries[] = {
        {1, "new-family correctness (exhaustive q<=32, sampled q<=256)", criterion1},
        {2, "translation criterion for the q/4 family at q in {16,32}", criterion2},
        {3, "exhaustive (h-1)-club counts at h in {3,4}", criterion3},
        {4, "club stabilizer order and orbit-stabilizer consistency", criterion4},
        {5, "projective triad census at q=8 and triad complements to q=256", criterion5},
        {6, "trace-system solver vs brute-force oracle", criterion6},
        {7, "Vandendriessche suite at q in {16,32,64}", criterion7},
        {8, "club lift round trips for all constructors at q<=256", criterion8},
        {9, "property (I) <-> translation for q/4 arcs at q in {16,32}", criterion9},
        {10, "cone constructions at (r,s) in {(2,2),(1,3),(3,2)}", criterion10},
        {11, "complement linearity of the (h-2)-club", criterion11},
    };
    int failures = 0;
    for (const auto& e : entries) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS", detail;
        try {
            e.fn();
        } catch (const std::exception& ex) {
            verdict = "FAIL";
            detail = std::string(" (") + ex.what() + ")";
            ++failures;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("[%2d] %s  %s%s  [%lld ms]\n", e.id, verdict.c_str(), e.name, detail.c_str(),
                    static_cast<long long>(ms));
        std::fflush(stdout);
    }
    // criterion 12 is declared out of desk scale (the full q=64 type-8
    // census and an example with unpublished coordinates); the club
    // equivalence stretch below is informative only and never gates
    std::printf("[12] DECLARED  full q=64 type-8 census not desk-scale; running non-gating "
                "stretch\n");
    try {
        bool ok = criterion12_stretch();
        std::printf("[12] %s  3-clubs of rank 5 with fixed head at q=32 pairwise equivalent "
                    "(non-gating)\n",
                    ok ? "PASS" : "INFO");
    } catch (const std::exception& ex) {
        std::printf("[12] INFO  stretch run aborted: %s (non-gating)\n", ex.what());
    }
    return failures == 0 ? 0 : 1;
}
