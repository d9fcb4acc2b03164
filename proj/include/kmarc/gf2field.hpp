#pragma once

// Arithmetic in F_{2^m} with a fixed modulus polynomial.  Elements are
// bit patterns in the polynomial basis 1, lambda, ..., lambda^{m-1},
// packed into a single machine word (m <= 64).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kmarc {

using fe = std::uint64_t;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModulusConstraints {
    bool primitive = false;
    bool vdd_compatible = false;  // no terms of degree m-1 and m-2
};

// Polynomial predicates over F2 (poly = bit pattern, bit i = coeff of x^i).
bool poly_irreducible(std::uint64_t f, int m);
bool poly_primitive(std::uint64_t f, int m);  // residue of x generates the group

// Lexicographically smallest (as integer) irreducible modulus of degree m
// meeting the constraints.  Throws FieldError{NotFound} if none exists.
std::uint64_t find_modulus(int m, ModulusConstraints c = {});

class Field {
public:
    Field(int m, std::uint64_t modulus, bool check = true);
    static Field make(int m, ModulusConstraints c = {});

    int deg() const { return m_; }
    std::uint64_t modulus() const { return mod_; }
    bool primitive() const { return primitive_; }
    bool vdd_compatible() const { return vdd_; }
    std::uint64_t order() const { return std::uint64_t(1) << m_; }  // q = 2^m

    fe add(fe a, fe b) const { return a ^ b; }
    fe mul(fe a, fe b) const {
        if (!multab_.empty()) return multab_[(a << m_) | b];
        return mul_slow(a, b);
    }
    fe inv(fe a) const;
    fe div(fe a, fe b) const { return mul(a, inv(b)); }
    fe pow(fe a, std::uint64_t e) const;
    fe frobenius(fe a, int k = 1) const;  // a^{2^k}
    fe sqrt(fe a) const { return frobenius(a, m_ - 1); }

    // Relative trace into F_{2^d}, d | m; result is an element of the big
    // field lying in the subfield (asserted).
    fe trace(fe a, int d = 1) const;
    bool in_subfield(fe a, int d) const;

    bool operator==(const Field& o) const { return m_ == o.m_ && mod_ == o.mod_; }

private:
    fe mul_slow(fe a, fe b) const;
    int m_;
    std::uint64_t mod_;
    bool primitive_ = false;
    bool vdd_ = false;
    std::vector<fe> multab_;  // full table for m <= 8
};

std::string fe_to_hex(fe a);
fe fe_from_hex(const std::string& s);

// Change of basis between a custom F2-basis of the field and the
// polynomial basis.  matrix is row-major over F2: column j holds the
// polynomial-basis bits of the j-th custom basis vector.
struct BasisMap {
    enum class Kind { polynomial, normal, custom };
    Kind kind = Kind::polynomial;
    int m = 0;
    std::vector<std::uint64_t> to_poly;    // rows; bit j of row i
    std::vector<std::uint64_t> from_poly;  // inverse matrix rows

    fe to_polynomial(std::uint64_t custom_coords) const;
    std::uint64_t from_polynomial(fe a) const;
};

// First omega (in bit-pattern order) whose conjugates omega^{2^j} are
// F2-independent; returns the corresponding BasisMap of kind normal.
BasisMap find_normal_basis(const Field& F);

// Coordinates of the big field over an embedded subfield F_{2^d}, d | m,
// with respect to the basis {1, lambda, ..., lambda^{t-1}} (t = m/d) over
// the subfield.  The subfield is represented by its own canonical Field
// (smallest irreducible modulus) embedded via a root of that modulus.
class SubfieldMap {
public:
    SubfieldMap(const Field& big, int d);

    const Field& big() const { return *big_; }
    const Field& small() const { return small_; }
    int t() const { return t_; }

    fe embed(fe small_elt) const;                // small field -> big field
    std::vector<fe> coords(fe big_elt) const;    // t small-field coordinates
    fe from_coords(const std::vector<fe>& cs) const;

private:
    const Field* big_;
    Field small_;
    int d_, t_;
    fe gen_;                           // image of the small generator in big
    std::vector<fe> embed_pow_;        // gen_^j for j < d
    std::vector<std::uint64_t> minv_;  // inverse coordinate matrix over F2
};

}  // namespace kmarc
