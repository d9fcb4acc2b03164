#pragma once

// KM-arcs of type t in PG(2, q), q = 2^h: the (0,2,t) verifier and the
// constructors — the club lift and its inverse, the q/4 family with
// parameters (alpha, beta, a, b), the Vandendriessche arcs, the
// Korchmáros–Mazzocca family, cone constructions over a subplane, and
// projective triads.

#include <functional>
#include <map>
#include <optional>

#include "kmarc/linsets.hpp"
#include "kmarc/projgeom.hpp"

namespace kmarc {

struct ArcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LineSpectrum {
    std::map<int, std::uint64_t> counts;  // intersection size -> line count
    std::uint64_t lines() const;
    std::uint64_t incidences() const;  // sum of size * count
};

struct KMArc {
    Field field;
    std::vector<Point> points;  // normalized, ascending by key
    int t = 0;
    std::optional<Point> nucleus;  // absent for t = 2 (hyperoval)
    std::vector<Line> t_secants;   // q/t + 1 concurrent lines (empty for t = 2)
    LineSpectrum spectrum;

    bool contains(const Point& p) const;
};

// Full scan over all q^2 + q + 1 lines (the oracle for verify_km).
LineSpectrum line_spectrum(const Field& F, const std::vector<Point>& S);

// Checks that every line meets S in 0, 2 or t points with |S| = q + t,
// t | q, and (for t > 2) q/t + 1 concurrent t-secants.  Throws ArcError
// naming the offending line otherwise.  The spectrum is assembled from
// pair counts, so the cost is O(|S|^2), not a full line scan.
KMArc verify_km(const Field& F, std::vector<Point> S);

// ------------------------------------------------------- the q/4 family

struct FamilyParams {
    fe alpha = 0, beta = 0;
    int a = 0, b = 0;
    fe gamma = 0, xi = 0;  // derived
};

// Validates alpha, beta not in {0,1}, alpha*beta != 1; derives
// gamma = (beta+1)/(alpha*beta+1) and xi = alpha*beta*gamma, and checks
// the identity xi + beta + gamma = 1.
FamilyParams family_params(const Field& F, fe alpha, fe beta, int a, int b);

// The arc S_0 u ... u S_4 on the five secants Z=0, Y=0, Y=Z, Y=gamma*Z,
// Y=(beta+1)*Z; type q/4 with nucleus (1,0,0) (a hyperoval when h = 3).
KMArc new_family(const Field& F, const FamilyParams& p);

// The five secant lines of new_family, in the order above.
std::array<Line, 5> new_family_secants(const Field& F, const FamilyParams& p);

// ------------------------------------------------ Vandendriessche arcs

// A_c for c in {0,1}; requires a vdd_compatible modulus (no terms of
// degree h-1, h-2).  Type q/4 with nucleus (1,0,0).
KMArc vandendriessche(const Field& F, int c);

// The translation line lambda*Z = Y of A_c.
Line vandendriessche_translation_line(const Field& F);

// ------------------------------------------- Korchmáros–Mazzocca arcs

struct OPoly {
    int n = -1;             // monomial x^{2^n} when n >= 0
    std::vector<fe> table;  // otherwise a value table over F_{2^{h-i}}
};

// Affine part {(g(L(x)), x, 1)} with L the relative trace onto
// F_{2^{h-i}}, completed with the non-determined directions; requires
// (h-i) | h and g passing the hyperoval validation in PG(2, 2^{h-i}).
KMArc km_family(const Field& F, int i, const OPoly& g);

// ------------------------------------------------------ cones (GW)

enum class GWVariant { in, out, recursive };

// Cone construction in PG(3s-1, 2^r) over the canonically embedded
// subplane PG(2, 2^r) of PG(2, 2^{rs}).  base_small and P_small are
// given in PG(2, 2^r) over Field::make(r); the base must be a hyperoval
// through P (in), a hyperoval avoiding P (out), or a KM-arc with
// nucleus P (recursive).  The vertex is the first hyperplane of the
// spread element of P that avoids P.
KMArc gw_cone(int r, int s, const std::vector<Point>& base_small, const Point& P_small,
              GWVariant variant);

// --------------------------------------------------- lift and inverse

// Theorem "translation": lift an i-club B(mu) on the line at infinity to
// a translation KM-arc of type 2^i.  The club witness lives in the
// two-slot geometry PG(2h-1, 2); the default lift point is the vector
// (0; 0; coords of 1).
KMArc lift_club_to_arc(const Field& F, const LinearSetWitness& club,
                       std::optional<std::vector<fe>> lift_point = std::nullopt);

// Inverse: recover the club witness from a translation arc and its
// translation line.  Throws ArcError{NotTranslation} if the affine part
// of A relative to ell is not a coset of an F2-subspace of rank h.
LinearSetWitness directions_club(const KMArc& A, const Line& ell);

// ------------------------------------------------- projective triads

// The type-q/2 arc with affine part {(x, Tr(x), 1)} and the
// non-determined directions {(z, 1, 0) : Tr(z) = 0} at infinity.
KMArc triad_trace(const Field& F);

// Definition check: lines[] concurrent at P; S has 3n-2 points, n on
// each line (so P in S), and <R0, R1> meets lines[2] inside S for all
// R0 != P on lines[0], R1 != P on lines[1] in S.
bool is_projective_triad(const Field& F, const std::vector<Point>& S,
                         const std::array<Line, 3>& lines);

// The projective triad associated with a type-q/2 arc: the nucleus
// together with the non-arc points on the three q/2-secants (side
// q/2 + 1).  Returns the triad points and the secant lines.
std::pair<std::vector<Point>, std::array<Line, 3>> arc_to_triad(const KMArc& A);

// ----------------------------------------------- subspace enumeration

// All rank-k subspaces of F_q^n in RREF order; returns the number
// visited (the Gaussian binomial).
std::uint64_t enumerate_subspaces(const Field& F, int n, int k,
                                  const std::function<void(const Subspace&)>& fn);

}  // namespace kmarc
