#pragma once

// F_{q0}-linear sets on the projective line PG(1, q0^h) via field
// reduction: weight profiles, the i-club constructors, and recognition
// of clubs whose head weight equals rank - 1.

#include <optional>

#include "kmarc/projgeom.hpp"

namespace kmarc {

struct LinSetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LinearSetWitness {
    Subspace mu;  // over the small field, ambient F_{q0}^{r t}
    int rank = 0;
    // big-field point together with its weight, ascending by point key
    std::vector<std::pair<Point, int>> profile;

    std::size_t size() const { return profile.size(); }
    // exactly one point of weight > 1 (the head); weight-1 profiles are
    // scattered and have no head
    bool is_club() const;
    int head_weight() const;            // 1 if scattered
    const Point* head() const;          // nullptr if scattered
    std::vector<Point> points() const;
};

struct ClubDescriptor {
    int i = 0;     // head weight
    int rank = 0;  // k; here always i + 1
    Point head;
    std::size_t size = 0;
};

LinearSetWitness weight_profile(const ReducedGeometry& G, const Subspace& mu);

// All constructors work in G = reduced_geometry(big, small_deg, 2).
LinearSetWitness club_trace(const ReducedGeometry& G);                 // (h-1)-club, head (1,0)
LinearSetWitness club_km(const ReducedGeometry& G, int i, int n);      // i-club, head (0,1)
LinearSetWitness club_hminus2(const ReducedGeometry& G);               // (h-2)-club, head (1,0)
LinearSetWitness club_scattered(const ReducedGeometry& G, int n);      // all weights 1

// q0 = 2 only; r = mid subfield degree, t = m / r, f(x) = x^{2^n};
// a, b given in the mid field F_{2^r} (own canonical representation).
LinearSetWitness club_gw(const ReducedGeometry& G, int r, int n, fe a, fe b);

// Points S on PG(1, q) (pairs over F) with N not in S: S + {N} is an
// (s)-club of rank s+1 with head N iff the slopes of S relative to N form
// a coset of an F2-subspace of dimension s = log2 |S|.
std::optional<ClubDescriptor> recognize_maxhead_club(const Field& F,
                                                     const std::vector<Point>& S,
                                                     const Point& N);

// Same test for points lying on a line of PG(2, q); N on that line.
std::optional<ClubDescriptor> recognize_maxhead_club_on_line(const Field& F,
                                                             const std::vector<Point>& S,
                                                             const Point& N);

// For an (h-2)-club C of rank h on PG(1, 2^h): the complement of C plus
// its head is an (h-2)-club of rank h-1.
bool complement_club_check(const ReducedGeometry& G, const LinearSetWitness& C);

// Coordinates (alpha : beta) of P in the frame (A, B) on their line.
Point line_to_pg1(const Field& F, const Point& A, const Point& B, const Point& P);

}  // namespace kmarc
