#include "kmarc/gf2field.hpp"

#include <algorithm>
#include <cstdio>

#include "kmarc/gf2mat.hpp"

namespace kmarc {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

int poly_deg(u128 f) {
    int d = -1;
    while (f) { ++d; f >>= 1; }
    return d;
}

// product of polynomials over F2, degrees < 64
u128 poly_mul(u64 a, u64 b) {
    u128 r = 0, aa = a;
    while (b) {
        if (b & 1) r ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    return r;
}

u64 poly_mod(u128 a, u64 f, int m) {
    int d = poly_deg(a);
    while (d >= m) {
        a ^= u128(f) << (d - m);
        d = poly_deg(a);
    }
    return static_cast<u64>(a);
}

u64 poly_mulmod(u64 a, u64 b, u64 f, int m) { return poly_mod(poly_mul(a, b), f, m); }

u64 poly_gcd(u64 a, u64 b) {
    while (b) {
        int da = poly_deg(a), db = poly_deg(b);
        if (da < db) { std::swap(a, b); std::swap(da, db); }
        if (!b) break;
        while (da >= db && a) {
            a ^= b << (da - db);
            da = poly_deg(a);
        }
        std::swap(a, b);
    }
    return a;
}

// x^{2^k} mod f via repeated squaring of the residue
u64 poly_x_pow_pow2(int k, u64 f, int m) {
    u64 r = 2;  // x
    for (int i = 0; i < k; ++i) r = poly_mulmod(r, r, f, m);
    return r;
}

// --- integer factorization for primitivity tests (Pollard rho) ---

u64 mulmod64(u64 a, u64 b, u64 n) { return static_cast<u64>((u128)a * b % n); }

u64 powmod64(u64 a, u64 e, u64 n) {
    u64 r = 1;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod64(r, a, n);
        a = mulmod64(a, a, n);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool ok = false;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) { ok = true; break; }
        }
        if (!ok) return false;
    }
    return true;
}

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod64(x, x, n) + c) % n;
            y = (mulmod64(y, y, n) + c) % n;
            y = (mulmod64(y, y, n) + c) % n;
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) { d = n; break; }
            u64 a = diff, b = n;
            while (b) { u64 t = a % b; a = b; b = t; }
            d = a;
        }
        if (d != n) return d;
    }
}

void factorize(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        if (std::find(primes.begin(), primes.end(), n) == primes.end()) primes.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factorize(d, primes);
    factorize(n / d, primes);
}

std::vector<int> prime_divisors_int(int m) {
    std::vector<int> ps;
    for (int p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) ps.push_back(m);
    return ps;
}

}  // namespace

bool poly_irreducible(u64 f, int m) {
    if (poly_deg(f) != m || m < 1) return false;
    if (m == 1) return true;
    if ((f & 1) == 0) return false;
    // Rabin: x^{2^m} == x (mod f), and gcd(x^{2^{m/p}} - x, f) = 1 for prime p | m
    u64 xm = poly_x_pow_pow2(m, f, m);
    if (xm != 2) return false;
    for (int p : prime_divisors_int(m)) {
        u64 xp = poly_x_pow_pow2(m / p, f, m);
        if (poly_gcd(xp ^ 2u, f) != 1) return false;
    }
    return true;
}

bool poly_primitive(u64 f, int m) {
    if (!poly_irreducible(f, m)) return false;
    if (m >= 63) throw FieldError("primitivity test limited to m < 63");
    u64 order = (u64(1) << m) - 1;
    std::vector<u64> primes;
    factorize(order, primes);
    for (u64 p : primes) {
        // x^{order/p} mod f
        u64 r = 1, base = 2, e = order / p;
        while (e) {
            if (e & 1) r = poly_mulmod(r, base, f, m);
            base = poly_mulmod(base, base, f, m);
            e >>= 1;
        }
        if (r == 1) return false;
    }
    return true;
}

u64 find_modulus(int m, ModulusConstraints c) {
    if (m < 2) throw FieldError("find_modulus: degree must be >= 2");
    if (c.vdd_compatible && m < 3) throw FieldError("find_modulus: vdd requires m >= 3");
    u64 lo = u64(1) << m, hi = u64(1) << (m + 1);
    u64 forbid = c.vdd_compatible ? (u64(3) << (m - 2)) : 0;
    for (u64 f = lo + 1; f < hi; f += 2) {
        if (f & forbid) continue;
        if (!poly_irreducible(f, m)) continue;
        if (c.primitive && !poly_primitive(f, m)) continue;
        return f;
    }
    throw FieldError("find_modulus: NotFound");
}

Field::Field(int m, u64 modulus, bool check) : m_(m), mod_(modulus) {
    if (m < 1 || m > 63) throw FieldError("field degree out of range");
    if (check && !poly_irreducible(modulus, m)) throw FieldError("modulus not irreducible");
    if (m <= 62) primitive_ = (m >= 63) ? false : poly_primitive(modulus, m);
    vdd_ = m >= 3 && (modulus & (u64(3) << (m - 2))) == 0;
    if (m <= 8) {
        std::size_t q = std::size_t(1) << m;
        multab_.assign(q * q, 0);
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = 0; b <= a; ++b) {
                fe p = mul_slow(a, b);
                multab_[(a << m) | b] = p;
                multab_[(b << m) | a] = p;
            }
    }
}

Field Field::make(int m, ModulusConstraints c) { return Field(m, find_modulus(m, c), false); }

fe Field::mul_slow(fe a, fe b) const { return poly_mulmod(a, b, mod_, m_); }

fe Field::pow(fe a, u64 e) const {
    fe r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

fe Field::inv(fe a) const {
    if (a == 0) throw FieldError("DivisionByZero");
    return pow(a, order() - 2);
}

fe Field::frobenius(fe a, int k) const {
    k %= m_;
    if (k < 0) k += m_;
    for (int i = 0; i < k; ++i) a = mul(a, a);
    return a;
}

bool Field::in_subfield(fe a, int d) const { return frobenius(a, d % m_) == a; }

fe Field::trace(fe a, int d) const {
    if (d < 1 || m_ % d != 0) throw FieldError("BadSubfield");
    fe s = 0, t = a;
    for (int j = 0; j < m_ / d; ++j) {
        s ^= t;
        t = frobenius(t, d);
    }
    if (!in_subfield(s, d)) throw FieldError("trace left the subfield");
    return s;
}

std::string fe_to_hex(fe a) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(a));
    return buf;
}

fe fe_from_hex(const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos, 16);
    if (pos != s.size()) throw FieldError("bad hex element: " + s);
    return v;
}

fe BasisMap::to_polynomial(u64 custom) const {
    fe a = 0;
    for (int j = 0; j < m; ++j)
        if ((custom >> j) & 1) {
            // column j of to_poly
            for (int i = 0; i < m; ++i) a ^= ((to_poly[i] >> j) & 1) << i;
        }
    return a;
}

u64 BasisMap::from_polynomial(fe a) const {
    u64 c = 0;
    for (int j = 0; j < m; ++j)
        if ((a >> j) & 1)
            for (int i = 0; i < m; ++i) c ^= ((from_poly[i] >> j) & 1) << i;
    return c;
}

BasisMap find_normal_basis(const Field& F) {
    int m = F.deg();
    for (fe w = 1; w < F.order(); ++w) {
        std::vector<u64> conj(m);
        fe t = w;
        for (int j = 0; j < m; ++j) {
            conj[j] = t;
            t = F.mul(t, t);
        }
        if (gf2::rank(conj, m) != m) continue;
        BasisMap bm;
        bm.kind = BasisMap::Kind::normal;
        bm.m = m;
        bm.to_poly.assign(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) bm.to_poly[i] |= ((conj[j] >> i) & 1) << j;
        auto inv = gf2::invert(bm.to_poly, m);
        bm.from_poly = *inv;
        return bm;
    }
    throw FieldError("no normal basis found");  // unreachable
}

SubfieldMap::SubfieldMap(const Field& big, int d)
    : big_(&big),
      small_(d == 1 ? Field(1, 2, false) : Field::make(d)),
      d_(d),
      t_(big.deg() / d) {
    int m = big.deg();
    if (m % d != 0) throw FieldError("BadSubfield");
    // root of the small modulus inside the big field
    gen_ = 0;
    if (d == 1) {
        gen_ = 1;
    } else {
        for (fe g = 0; g < big.order(); ++g) {
            fe acc = 0, p = 1;
            u64 f = small_.modulus();
            for (int i = 0; i <= d; ++i) {
                if ((f >> i) & 1) acc ^= p;
                p = big.mul(p, g);
            }
            if (acc == 0) {  // a root of an irreducible degree-d polynomial
                gen_ = g;
                break;
            }
        }
        if (gen_ == 0) throw FieldError("no subfield generator found");
    }
    embed_pow_.resize(d);
    fe p = 1;
    for (int j = 0; j < d; ++j) {
        embed_pow_[j] = p;
        p = big.mul(p, gen_);
    }
    // coordinate matrix: column (i*d + j) = bits of lambda^i * gen^j
    std::vector<u64> M(m, 0);
    fe lam_i = 1;
    for (int i = 0; i < t_; ++i) {
        for (int j = 0; j < d; ++j) {
            fe v = big.mul(lam_i, embed_pow_[j]);
            int col = i * d + j;
            for (int row = 0; row < m; ++row) M[row] |= ((v >> row) & 1) << col;
        }
        lam_i = big.mul(lam_i, 2);
    }
    auto inv = gf2::invert(M, m);
    if (!inv) throw FieldError("subfield basis is singular");
    minv_ = *inv;
}

fe SubfieldMap::embed(fe s) const {
    fe r = 0;
    for (int j = 0; j < d_; ++j)
        if ((s >> j) & 1) r ^= embed_pow_[j];
    return r;
}

std::vector<fe> SubfieldMap::coords(fe y) const {
    u64 c = gf2::mat_vec(minv_, y);
    std::vector<fe> out(t_);
    for (int i = 0; i < t_; ++i) out[i] = (c >> (i * d_)) & ((u64(1) << d_) - 1);
    return out;
}

fe SubfieldMap::from_coords(const std::vector<fe>& cs) const {
    fe r = 0, lam_i = 1;
    for (int i = 0; i < t_; ++i) {
        r ^= big_->mul(lam_i, embed(cs[i]));
        lam_i = big_->mul(lam_i, 2);
    }
    return r;
}

}  // namespace kmarc
