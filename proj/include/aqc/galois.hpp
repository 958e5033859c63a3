#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aqc/error.hpp"

namespace aqc {

// A field element is the packed integer sum_i c_i p^i of its coordinates in
// the power basis of the modulus. Zero is 0 and one is 1.
using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

// F_q = F_{p^(l m)} with distinguished subfield F_r = F_{p^l}.
//
// The modulus is the primitive polynomial of degree l*m that comes first when
// x^d - c1 x^(d-1) + c2 x^(d-2) - ... is ordered by (c1, c2, ..., cd); the
// generator w is its root x. For every field used by the tables this is the
// Conway polynomial, so "w" means the same element as in the usual tables.
class Field {
public:
    int p() const { return p_; }
    int l() const { return l_; }
    int m() const { return m_; }
    int degree() const { return l_ * m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t r() const { return r_; }

    // Monic modulus over F_p, lowest coefficient first, degree()+1 entries.
    const std::vector<int>& modulus() const { return modulus_; }
    Elem generator() const { return gen_; }

    std::vector<int> coords(Elem a) const;
    Elem from_coords(const std::vector<int>& c) const;
    Elem from_int(long long c) const;

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
        return add_slow(a, b);
    }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    // g^k for the fixed generator g, k taken mod q-1.
    Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
    // Discrete log base g; a must be nonzero.
    std::uint32_t log(Elem a) const;
    std::uint32_t order(Elem a) const;

    Elem frobenius(Elem a, int k = 1) const;
    // Tr_{q/r}
    Elem trace(Elem a) const;
    // Tr_{q/p}
    Elem abs_trace(Elem a) const;
    // a^r, only for m = 2.
    Elem conj(Elem a) const;
    // alpha = g^((r+1)/2) with conj(alpha) = -alpha, only for odd q and m = 2.
    Elem skew_alpha() const;

    bool in_subfield(Elem a) const { return a == 0 || (log_[a] % sub_step_) == 0; }
    // Elements of F_r in increasing packed order.
    const std::vector<Elem>& subfield_elements() const { return sub_elems_; }
    // Primitive element of F_r and the F_p-basis 1, z, ..., z^(l-1) it spans.
    Elem subfield_generator() const { return exp_[sub_step_ % (q_ - 1)]; }
    const std::vector<Elem>& subfield_basis() const { return sub_basis_; }

    // Coordinates c_0..c_{m-1} in F_r with a = sum_j c_j w^j.
    void subfield_coords(Elem a, Elem* out) const;
    std::vector<Elem> subfield_coords(Elem a) const;
    Elem from_subfield_coords(const Elem* c) const;

    // "0", a digit for prime-subfield elements, otherwise "w" or "w^k".
    std::string format(Elem a) const;
    // Accepts digits, "w", "w^k", "w^{k}" and coordinate vectors "{c0,c1,...}".
    Elem parse(std::string_view s) const;

    std::string name() const { return "F_" + std::to_string(q_); }

private:
    friend std::shared_ptr<const Field> make_field(int p, int l, int m);
    Field(int p, int l, int m);
    Elem add_slow(Elem a, Elem b) const;

    int p_, l_, m_;
    std::uint32_t q_, r_;
    std::vector<int> modulus_;
    Elem gen_ = 0;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> neg_;
    std::vector<Elem> add_table_;
    std::uint32_t sub_step_ = 1;
    std::vector<Elem> sub_elems_;
    std::vector<Elem> sub_basis_;
    std::vector<Elem> wpow_;  // w^0..w^(m-1)
    std::vector<int> coord_inv_;  // degree x degree over F_p
    std::vector<Elem> coord_cache_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Fields are interned: equal (p, l, m) return the same instance.
FieldPtr make_field(int p, int l, int m);
// Splits q = p^e and builds F_q over F_r with r = p unless given.
FieldPtr make_field_q(std::uint32_t q, std::uint32_t r = 0);

bool is_prime(long long n);

// True iff the monic polynomial f over F_p (lowest coefficient first) has no
// monic factor of degree between 1 and deg(f)/2.
bool is_irreducible_mod_p(const std::vector<int>& f, int p);

// Polynomials over F_q, lowest degree first, without trailing zeros.
struct Poly {
    Vec c;

    Poly() = default;
    explicit Poly(Vec coeffs);
    static Poly monomial(Elem a, std::size_t k);

    bool is_zero() const { return c.empty(); }
    // Empty for the zero polynomial.
    std::optional<std::size_t> degree() const;
    Elem coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    Elem lead() const { return c.empty() ? 0 : c.back(); }
    bool operator==(const Poly& o) const { return c == o.c; }
};

Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, const Poly& a, Elem s);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
// Returns (quotient, remainder) with deg(rem) < deg(b).
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);
Poly poly_mod(const Field& F, const Poly& a, const Poly& b);
Poly poly_monic(const Field& F, const Poly& a);
// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Field& F, const Poly& a, const Poly& b);
bool poly_divides(const Field& F, const Poly& d, const Poly& a);
Poly poly_xn_minus_1(const Field& F, std::size_t n);
// Reduction modulo x^n - 1 by folding exponents.
Poly poly_mod_xn1(const Field& F, const Poly& a, std::size_t n);
Elem poly_eval(const Field& F, const Poly& a, Elem x);
bool poly_in_subfield(const Field& F, const Poly& a);
std::string poly_format(const Field& F, const Poly& a);
// Coefficient vector of length n (a must have degree < n).
Vec poly_to_vec(const Poly& a, std::size_t n);
Poly vec_to_poly(const Vec& v);

}  // namespace aqc
