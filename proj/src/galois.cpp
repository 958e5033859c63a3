#include "aqc/galois.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <tuple>

namespace aqc {

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::NotQuadraticExtension: return "NotQuadraticExtension";
        case Errc::EvenCharacteristic: return "EvenCharacteristic";
        case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::InvalidKindForField: return "InvalidKindForField";
        case Errc::CodeTooLarge: return "CodeTooLarge";
        case Errc::TrivialCode: return "TrivialCode";
        case Errc::NotNested: return "NotNested";
        case Errc::EqualCodes: return "EqualCodes";
        case Errc::AlreadyContained: return "AlreadyContained";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::SizeMismatch: return "SizeMismatch";
        case Errc::NotDivisor: return "NotDivisor";
        case Errc::NotShiftClosed: return "NotShiftClosed";
        case Errc::ParseError: return "ParseError";
        case Errc::InvalidOrderElement: return "InvalidOrderElement";
        case Errc::BadRange: return "BadRange";
        case Errc::NotSelfOrthogonal: return "NotSelfOrthogonal";
        case Errc::NoFullWeightWord: return "NoFullWeightWord";
        case Errc::UnsupportedKindPair: return "UnsupportedKindPair";
        case Errc::InconsistentDims: return "InconsistentDims";
        case Errc::DimMismatch: return "DimMismatch";
        case Errc::NotInSubfield: return "NotInSubfield";
    }
    return "Error";
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using IntPoly = std::vector<int>;  // over F_p, lowest first

void trim(IntPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly mod_p(IntPoly a, const IntPoly& f, int p) {
    trim(a);
    const std::size_t d = f.size() - 1;
    while (a.size() > d) {
        int lead = a.back();
        std::size_t shift = a.size() - 1 - d;
        for (std::size_t i = 0; i <= d; ++i) {
            a[shift + i] = ((a[shift + i] - lead * f[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

IntPoly mulmod_p(const IntPoly& a, const IntPoly& b, const IntPoly& f, int p) {
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return mod_p(std::move(c), f, p);
}

IntPoly powmod_x(std::uint64_t e, const IntPoly& f, int p) {
    IntPoly result{1};
    IntPoly base = mod_p(IntPoly{0, 1}, f, p);
    while (e) {
        if (e & 1) result = mulmod_p(result, base, f, p);
        base = mulmod_p(base, base, f, p);
        e >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool x_is_primitive(const IntPoly& f, int p, std::uint64_t q) {
    if (f[0] == 0) return false;
    const IntPoly one{1};
    if (powmod_x(q - 1, f, p) != one) return false;
    for (auto pr : prime_factors(q - 1))
        if (powmod_x((q - 1) / pr, f, p) == one) return false;
    return true;
}

// Monic primitive polynomial of degree d, first in the order of
// (c1, ..., cd) where f = x^d - c1 x^(d-1) + c2 x^(d-2) - ...
IntPoly choose_modulus(int p, int d, std::uint64_t q) {
    std::vector<int> c(d, 0);
    for (;;) {
        IntPoly f(d + 1, 0);
        f[d] = 1;
        for (int i = 1; i <= d; ++i) {
            int sign = (i % 2) ? -1 : 1;
            f[d - i] = ((sign * c[i - 1]) % p + p) % p;
        }
        if (x_is_primitive(f, p, q)) return f;
        int j = d - 1;
        while (j >= 0 && c[j] == p - 1) c[j--] = 0;
        if (j < 0) break;
        ++c[j];
    }
    throw Error(Errc::FieldTooLarge, "no primitive polynomial found");
}

std::vector<int> invert_mod_p(std::vector<int> a, int n, int p) {
    std::vector<int> inv(n * n, 0);
    for (int i = 0; i < n; ++i) inv[i * n + i] = 1;
    auto inverse = [p](int x) {
        for (int y = 1; y < p; ++y)
            if (x * y % p == 1) return y;
        return 0;
    };
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) throw Error(Errc::DimMismatch, "singular basis matrix");
        for (int k = 0; k < n; ++k) {
            std::swap(a[piv * n + k], a[col * n + k]);
            std::swap(inv[piv * n + k], inv[col * n + k]);
        }
        int s = inverse(a[col * n + col]);
        for (int k = 0; k < n; ++k) {
            a[col * n + k] = a[col * n + k] * s % p;
            inv[col * n + k] = inv[col * n + k] * s % p;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row * n + col] == 0) continue;
            int f = a[row * n + col];
            for (int k = 0; k < n; ++k) {
                a[row * n + k] = ((a[row * n + k] - f * a[col * n + k]) % p + p) % p;
                inv[row * n + k] = ((inv[row * n + k] - f * inv[col * n + k]) % p + p) % p;
            }
        }
    }
    return inv;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<int>& f, int p) {
    const int d = int(f.size()) - 1;
    if (d < 1) return false;
    // trial division by every monic polynomial of degree 1..d/2
    for (int k = 1; k <= d / 2; ++k) {
        std::vector<int> g(k + 1, 0);
        g[k] = 1;
        for (;;) {
            if (mod_p(f, g, p).empty()) return false;
            int j = 0;
            while (j < k && g[j] == p - 1) g[j++] = 0;
            if (j == k) break;
            ++g[j];
        }
    }
    return true;
}

Field::Field(int p, int l, int m) : p_(p), l_(l), m_(m) {
    const int d = l * m;
    std::uint64_t q = 1, r = 1;
    for (int i = 0; i < d; ++i) q *= std::uint64_t(p);
    for (int i = 0; i < l; ++i) r *= std::uint64_t(p);
    q_ = std::uint32_t(q);
    r_ = std::uint32_t(r);

    modulus_ = choose_modulus(p, d, q);
    if (!is_irreducible_mod_p(modulus_, p)) throw Error(Errc::FieldTooLarge, "modulus not irreducible");

    neg_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
        auto c = coords(a);
        for (auto& x : c) x = (p - x) % p;
        neg_[a] = from_coords(c);
    }
    if (p != 2 && q_ <= 1024) {
        add_table_.resize(std::size_t(q_) * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b) add_table_[std::size_t(a) * q_ + b] = add_slow(a, b);
    }

    // powers of x
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::vector<int> cur(d, 0);
    cur[0] = 1;
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
        Elem e = from_coords(cur);
        exp_[k] = e;
        log_[e] = k;
        // multiply by x
        int carry = cur[d - 1];
        for (int i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (int i = 0; i < d; ++i) cur[i] = ((cur[i] - carry * modulus_[i]) % p + p) % p;
    }
    gen_ = (q_ == 2) ? 1 : exp_[1 % (q_ - 1)];
    if (order(gen_) != q_ - 1) throw Error(Errc::InvalidOrderElement, "generator is not primitive");

    sub_step_ = (r_ == 1) ? 1 : (q_ - 1) / (r_ - 1);
    for (Elem a = 0; a < q_; ++a)
        if (in_subfield(a)) sub_elems_.push_back(a);
    Elem z = subfield_generator();
    Elem t = 1;
    for (int i = 0; i < l; ++i) {
        sub_basis_.push_back(t);
        t = mul(t, z);
    }
    Elem w = 1;
    for (int j = 0; j < m; ++j) {
        wpow_.push_back(w);
        w = mul(w, gen_);
    }
    // column (j*l + t) of the basis matrix holds the coordinates of z^t w^j
    std::vector<int> B(d * d, 0);
    for (int j = 0; j < m; ++j)
        for (int s = 0; s < l; ++s) {
            auto c = coords(mul(sub_basis_[s], wpow_[j]));
            for (int i = 0; i < d; ++i) B[i * d + (j * l + s)] = c[i];
        }
    coord_inv_ = invert_mod_p(B, d, p);
    if (std::uint64_t(q_) * m_ <= (1u << 22)) {
        coord_cache_.resize(std::size_t(q_) * m_);
        std::vector<Elem> tmp(m_);
        for (Elem a = 0; a < q_; ++a) {
            auto c = coords(a);
            for (int j = 0; j < m_; ++j) {
                Elem v = 0;
                for (int s = 0; s < l_; ++s) {
                    int row = j * l_ + s;
                    long acc = 0;
                    for (int i = 0; i < d; ++i) acc += long(coord_inv_[row * d + i]) * c[i];
                    v = add(v, mul(from_int(acc), sub_basis_[s]));
                }
                coord_cache_[std::size_t(a) * m_ + j] = v;
            }
        }
    }
}

std::vector<int> Field::coords(Elem a) const {
    std::vector<int> c(degree(), 0);
    for (int i = 0; i < degree(); ++i) {
        c[i] = int(a % Elem(p_));
        a /= Elem(p_);
    }
    return c;
}

Elem Field::from_coords(const std::vector<int>& c) const {
    Elem a = 0;
    for (int i = int(c.size()) - 1; i >= 0; --i) a = a * Elem(p_) + Elem(((c[i] % p_) + p_) % p_);
    return a;
}

Elem Field::from_int(long long c) const {
    return Elem(((c % p_) + p_) % p_);
}

Elem Field::add_slow(Elem a, Elem b) const {
    Elem out = 0, scale = 1;
    for (int i = 0; i < degree(); ++i) {
        Elem s = (a % p_ + b % p_) % p_;
        out += s * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(Errc::OutOfRange, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t Field::log(Elem a) const {
    if (a == 0) throw Error(Errc::OutOfRange, "log of zero");
    return log_[a];
}

std::uint32_t Field::order(Elem a) const {
    if (a == 0) throw Error(Errc::OutOfRange, "order of zero");
    std::uint32_t k = log_[a];
    std::uint32_t n = q_ - 1;
    std::uint32_t g = n, x = k;
    while (x) {
        std::uint32_t t = g % x;
        g = x;
        x = t;
    }
    return n / g;
}

Elem Field::frobenius(Elem a, int k) const {
    if (a == 0) return 0;
    std::uint64_t e = 1;
    for (int i = 0; i < k; ++i) e = e * p_ % (q_ - 1);
    return pow(a, e == 0 ? q_ - 1 : e);
}

Elem Field::trace(Elem a) const {
    Elem s = 0, t = a;
    for (int i = 0; i < m_; ++i) {
        s = add(s, t);
        t = pow(t, r_);
    }
    return s;
}

Elem Field::abs_trace(Elem a) const {
    Elem s = 0, t = a;
    for (int i = 0; i < degree(); ++i) {
        s = add(s, t);
        t = pow(t, p_);
    }
    return s;
}

Elem Field::conj(Elem a) const {
    if (m_ != 2) throw Error(Errc::NotQuadraticExtension, name() + " is not a quadratic extension of its subfield");
    return pow(a, r_);
}

Elem Field::skew_alpha() const {
    if (m_ != 2) throw Error(Errc::NotQuadraticExtension, name() + " is not a quadratic extension of its subfield");
    if (p_ == 2) throw Error(Errc::EvenCharacteristic, "skew element needs odd q");
    Elem a = exp((r_ + 1) / 2);
    if (a == 0 || conj(a) != neg(a)) throw Error(Errc::InvalidOrderElement, "skew element check failed");
    return a;
}

void Field::subfield_coords(Elem a, Elem* out) const {
    if (!coord_cache_.empty()) {
        std::copy_n(coord_cache_.begin() + std::size_t(a) * m_, m_, out);
        return;
    }
    const int d = degree();
    auto c = coords(a);
    for (int j = 0; j < m_; ++j) {
        Elem v = 0;
        for (int s = 0; s < l_; ++s) {
            int row = j * l_ + s;
            long acc = 0;
            for (int i = 0; i < d; ++i) acc += long(coord_inv_[row * d + i]) * c[i];
            v = add(v, mul(from_int(acc), sub_basis_[s]));
        }
        out[j] = v;
    }
}

std::vector<Elem> Field::subfield_coords(Elem a) const {
    std::vector<Elem> out(m_);
    subfield_coords(a, out.data());
    return out;
}

Elem Field::from_subfield_coords(const Elem* c) const {
    Elem a = 0;
    for (int j = 0; j < m_; ++j) a = add(a, mul(c[j], wpow_[j]));
    return a;
}

std::string Field::format(Elem a) const {
    if (a < Elem(p_)) return std::to_string(a);
    std::uint32_t k = log_[a];
    return k == 1 ? std::string("w") : "w^" + std::to_string(k);
}

Elem Field::parse(std::string_view s) const {
    auto fail = [&](const std::string& why) -> Elem { throw ParseError(0, "bad field element '" + std::string(s) + "': " + why); };
    if (s.empty()) return fail("empty");
    if (s[0] == '{') {
        if (s.back() != '}') return fail("unterminated coordinate vector");
        std::vector<int> c;
        std::string cur;
        for (std::size_t i = 1; i + 1 < s.size(); ++i) {
            char ch = s[i];
            if (ch == ',' || ch == ' ') {
                if (!cur.empty()) c.push_back(std::stoi(cur));
                cur.clear();
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                cur.push_back(ch);
            } else {
                return fail("bad coordinate");
            }
        }
        if (!cur.empty()) c.push_back(std::stoi(cur));
        if (int(c.size()) > degree()) return fail("too many coordinates");
        c.resize(degree(), 0);
        return from_coords(c);
    }
    if (s[0] == 'w') {
        if (s.size() == 1) return gen_;
        if (s[1] != '^') return fail("expected '^'");
        std::string_view e = s.substr(2);
        if (!e.empty() && e.front() == '{' && e.back() == '}') e = e.substr(1, e.size() - 2);
        if (e.empty()) return fail("missing exponent");
        std::uint64_t k = 0;
        for (char ch : e) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) return fail("bad exponent");
            k = k * 10 + (ch - '0');
        }
        return exp(k);
    }
    long long v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return fail("not a digit");
        v = v * 10 + (ch - '0');
    }
    return from_int(v);
}

FieldPtr make_field(int p, int l, int m) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (l < 1 || m < 1) throw Error(Errc::OutOfRange, "field exponents must be positive");
    std::uint64_t q = 1;
    for (int i = 0; i < l * m; ++i) {
        q *= std::uint64_t(p);
        if (q > (1u << 20)) throw Error(Errc::FieldTooLarge, "q exceeds 2^20");
    }
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, l, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    FieldPtr f(new Field(p, l, m));
    cache.emplace(key, f);
    return f;
}

FieldPtr make_field_q(std::uint32_t q, std::uint32_t r) {
    if (q < 2) throw Error(Errc::NotPrime, "q must be a prime power");
    std::uint32_t p = 2;
    while (q % p) ++p;
    int e = 0;
    std::uint32_t t = q;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    if (r == 0) r = p;
    int l = 0;
    t = r;
    while (t % p == 0) {
        t /= p;
        ++l;
    }
    if (t != 1 || l == 0 || e % l) throw Error(Errc::OutOfRange, std::to_string(r) + " is not a subfield order of " + std::to_string(q));
    return make_field(int(p), l, e / l);
}

// ---------------------------------------------------------------- polynomials

Poly::Poly(Vec coeffs) : c(std::move(coeffs)) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::monomial(Elem a, std::size_t k) {
    if (a == 0) return Poly();
    Vec v(k + 1, 0);
    v[k] = a;
    return Poly(std::move(v));
}

std::optional<std::size_t> Poly::degree() const {
    if (c.empty()) return std::nullopt;
    return c.size() - 1;
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    Vec v(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(v));
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    Vec v(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(v));
}

Poly poly_scale(const Field& F, const Poly& a, Elem s) {
    Vec v(a.c.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.mul(a.c[i], s);
    return Poly(std::move(v));
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Vec v(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] = F.add(v[i + j], F.mul(a.c[i], b.c[j]));
    }
    return Poly(std::move(v));
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
    Vec rem = a.c;
    const std::size_t db = b.c.size() - 1;
    if (rem.size() <= db) return {Poly(), Poly(rem)};
    Vec quo(rem.size() - db, 0);
    const Elem li = F.inv(b.lead());
    for (std::size_t i = rem.size(); i-- > db;) {
        Elem coef = rem[i];
        if (coef == 0) continue;
        Elem t = F.mul(coef, li);
        quo[i - db] = t;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(t, b.c[j]));
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_mod(const Field& F, const Poly& a, const Poly& b) {
    return poly_divmod(F, a, b).second;
}

Poly poly_monic(const Field& F, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(F, a, F.inv(a.lead()));
}

Poly poly_gcd(const Field& F, const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly t = poly_mod(F, x, y);
        x = std::move(y);
        y = std::move(t);
    }
    return poly_monic(F, x);
}

bool poly_divides(const Field& F, const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return poly_mod(F, a, d).is_zero();
}

Poly poly_xn_minus_1(const Field& F, std::size_t n) {
    Vec v(n + 1, 0);
    v[0] = F.neg(1);
    v[n] = 1;
    return Poly(std::move(v));
}

Poly poly_mod_xn1(const Field& F, const Poly& a, std::size_t n) {
    if (a.c.size() <= n) return a;
    Vec v(n, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) v[i % n] = F.add(v[i % n], a.c[i]);
    return Poly(std::move(v));
}

Elem poly_eval(const Field& F, const Poly& a, Elem x) {
    Elem s = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) s = F.add(F.mul(s, x), a.c[i]);
    return s;
}

bool poly_in_subfield(const Field& F, const Poly& a) {
    return std::all_of(a.c.begin(), a.c.end(), [&](Elem e) { return F.in_subfield(e); });
}

std::string poly_format(const Field& F, const Poly& a) {
    if (a.is_zero()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (i) s += ' ';
        s += F.format(a.c[i]);
    }
    return s + ")";
}

Vec poly_to_vec(const Poly& a, std::size_t n) {
    if (a.c.size() > n) throw Error(Errc::LengthMismatch, "polynomial degree exceeds length");
    Vec v(n, 0);
    std::copy(a.c.begin(), a.c.end(), v.begin());
    return v;
}

Poly vec_to_poly(const Vec& v) {
    return Poly(v);
}

}  // namespace aqc
