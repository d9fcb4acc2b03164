#pragma once

// Projective points, lines and subspaces over F_{2^r}; field reduction
// PG(r-1, q^t) -> PG(rt-1, q) and the Desarguesian spread with its
// B(.) operator.

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "kmarc/gf2field.hpp"

namespace kmarc {

struct GeomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- points

struct Point {
    std::vector<fe> c;
    bool operator==(const Point& o) const { return c == o.c; }
    bool operator<(const Point& o) const { return c < o.c; }
};

// Scale so the first nonzero coordinate is 1.  Throws on the zero vector.
Point normalize(const Field& F, std::vector<fe> v);

// Pack coordinates into an integer key (coordinate i in bits [i*m, (i+1)*m)).
std::uint64_t point_key(const Field& F, const Point& p);
Point point_from_key(const Field& F, int n, std::uint64_t key);

// All points of PG(n-1, q), ascending by key.
std::vector<Point> all_points(const Field& F, int n);

// ----------------------------------------------------------- plane (n=3)

using Line = Point;  // dual coordinates [a,b,c]: aX + bY + cZ = 0

Point p3(const Field& F, fe x, fe y, fe z);
// In characteristic 2 the cross product serves both directions of duality.
Line line_through(const Field& F, const Point& P, const Point& Q);
Point meet(const Field& F, const Line& l1, const Line& l2);
bool on_line(const Field& F, const Line& l, const Point& P);
std::vector<Point> points_on_line(const Field& F, const Line& l);
std::vector<Line> all_lines(const Field& F);

// ------------------------------------------------------------- subspaces

struct Subspace {
    int n = 0;                          // ambient vector dimension
    std::vector<std::vector<fe>> rows;  // RREF basis over the base field
    int rank() const { return static_cast<int>(rows.size()); }
    int proj_dim() const { return rank() - 1; }
    bool operator==(const Subspace& o) const { return n == o.n && rows == o.rows; }
};

Subspace make_subspace(const Field& F, int n, std::vector<std::vector<fe>> gens);
Subspace span(const Field& F, const Subspace& A, const Subspace& B);
Subspace intersect(const Field& F, const Subspace& A, const Subspace& B);
bool subspace_contains(const Field& F, const Subspace& S, const std::vector<fe>& v);
// Normalized points of the subspace, ascending by key.
std::vector<Point> subspace_points(const Field& F, const Subspace& S);

// ------------------------------------------------------- field reduction

// The reduction PG(r-1, Q^t) -> PG(rt-1, Q) where the big field has
// degree m over F2, the small field degree d = m/t, with respect to the
// basis 1, lambda, ..., lambda^{t-1} of big over small.  Spread elements
// are indexed by the points of PG(r-1, Q^t) in key order.
class ReducedGeometry {
public:
    ReducedGeometry(const Field& big, int small_deg, int r);

    const Field& big() const { return big_; }
    const Field& small() const { return map_.small(); }
    const SubfieldMap& map() const { return map_; }
    int r() const { return r_; }
    int t() const { return t_; }
    int n() const { return n_; }  // ambient vector dimension = r*t

    const std::vector<Point>& index_points() const { return index_points_; }
    int index_of(const Point& big_point) const;

    // Coordinate-wise expansion of a big vector to a small vector.
    std::vector<fe> expand(const std::vector<fe>& big_vec) const;
    // Inverse on points: spread element owning a small-field point.
    int owner(const Point& small_point) const;
    int owner_key(std::uint64_t small_key) const { return lookup_[small_key]; }

    Subspace field_reduce(const Point& big_point) const;  // the spread element
    std::vector<int> b_operator(const Subspace& U) const; // sorted element indices

private:
    Field big_;
    SubfieldMap map_;
    int r_, t_, n_;
    std::vector<Point> index_points_;
    std::vector<std::int32_t> lookup_;  // small point key -> element index
};

// Cached per (big modulus, small degree, r).
const ReducedGeometry& reduced_geometry(const Field& big, int small_deg, int r);

}  // namespace kmarc
