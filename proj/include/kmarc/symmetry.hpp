#pragma once

// Collineations of PG(2, q) and the symmetry machinery for KM-arcs:
// elations, translation-line detection, the D_ij direction sets with
// properties (I) and (II), the translation criterion for the q/4
// family, and small-q PGL / PGammaL equivalence searches.

#include <array>
#include <optional>
#include <set>

#include "kmarc/arcs.hpp"

namespace kmarc {

struct SymError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ------------------------------------------------------- collineations

struct Collineation {
    std::array<std::array<fe, 3>, 3> matrix{};  // invertible, first nonzero entry 1
    int frob = 0;                               // x -> x^{2^frob}, applied before the matrix
};

Collineation identity_collineation();
Point apply(const Field& F, const Collineation& g, const Point& p);
std::vector<Point> apply(const Field& F, const Collineation& g, const std::vector<Point>& S);
Collineation compose(const Field& F, const Collineation& g, const Collineation& f);  // g after f
Collineation inverse(const Field& F, const Collineation& g);

// The unique elation with the given axis mapping pre onto image (the
// identity when pre = image).  Throws SymError{DegenerateElation} if
// pre or image lies on the axis.
Collineation elation(const Field& F, const Line& axis, const Point& pre, const Point& image);

// Every t-secant ell (every 2-secant for a hyperoval) such that the
// elations with axis ell fixing A act transitively on A \ ell.
std::vector<Line> translation_lines(const KMArc& A);

// ---------------------------------------- direction sets, properties

// For a type-q/4 arc: secants[0] = ell0, secants[1..4] the others under
// the chosen labeling; d[] holds D_12, D_13, D_14, D_23, D_24, D_34.
struct DSets {
    std::array<Line, 5> secants;
    std::array<std::vector<Point>, 4> s;  // S_1..S_4, arc points on secants[1..4]
    std::array<std::vector<Point>, 6> d;  // normalized, ascending by key

    static int index(int i, int j);  // 1 <= i < j <= 4
};

// labeling permutes the four secants other than ell0 (in ascending key
// order).  Throws SymError{WrongType} unless A has type q/4.
DSets d_sets(const KMArc& A, const Line& ell0, const std::array<int, 4>& labeling = {0, 1, 2, 3});

// Definition check over all labelings consistent with the pairing
// equalities D_12 = D_34, D_13 = D_24, D_14 = D_23.
bool has_property_I(const KMArc& A, const Line& ell0);
bool has_property_II(const KMArc& A, const Line& ell0);

// ---------------------------------------------- the q/4-family criterion

// {1/beta^2, 1 + 1/beta, beta, 1/sqrt(beta), 1/(beta+1)}; a singleton
// exactly when beta^3 = 1 with beta outside F2.
std::set<fe> transliff_set(const Field& F, fe beta);

// --------------------------------------------------------- equivalence

// Frame-anchored search (nucleus -> nucleus forced): needs t > 2 on
// both sides.  Returns a witness with apply(g, A) = B, or nullopt.
std::optional<Collineation> pgl_equivalent(const KMArc& A, const KMArc& B, bool semilinear);

struct Collineation2 {
    std::array<std::array<fe, 2>, 2> matrix{};
    int frob = 0;
};

Point apply2(const Field& F, const Collineation2& g, const Point& p);

// Brute force over PGL(2, q) (times Frobenius when semilinear); q <= 64.
std::optional<Collineation2> line_set_equivalent(const Field& F, const std::vector<Point>& S1,
                                                 const std::vector<Point>& S2, bool semilinear);

// Order of the stabilizer of S in PGammaL(2, q).
std::uint64_t stabilizer_order(const Field& F, const std::vector<Point>& S);

}  // namespace kmarc
