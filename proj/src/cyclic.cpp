#include "aqc/cyclic.hpp"

#include <algorithm>
#include <cctype>

namespace aqc {

Code CyclicCode::code() const {
    return cyclic_from_gen(F, n, g);
}

CyclicCode make_cyclic(FieldPtr F, std::size_t n, const Poly& g) {
    if (g.is_zero() || !poly_divides(*F, g, poly_xn_minus_1(*F, n)))
        throw Error(Errc::NotDivisor, poly_format(*F, g) + " does not divide x^" + std::to_string(n) + " - 1");
    return CyclicCode{F, n, poly_monic(*F, g)};
}

Code cyclic_from_gen(FieldPtr F, std::size_t n, const Poly& g) {
    CyclicCode c = make_cyclic(F, n, g);
    const std::size_t deg = *c.g.degree();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i + deg < n; ++i) {
        Vec v(n, 0);
        for (std::size_t j = 0; j <= deg; ++j) v[i + j] = c.g.c[j];
        rows.push_back(std::move(v));
    }
    return Code::fq_span(F, n, rows);
}

Code cyclic_subcode(const CyclicCode& C, const Poly& h) {
    return cyclic_from_gen(C.F, C.n, poly_mul(*C.F, h, C.g));
}

Code cyclic_module_span(FieldPtr F, std::size_t n, const std::vector<Poly>& polys) {
    std::vector<Vec> rows;
    for (const auto& p : polys) {
        Vec v = poly_to_vec(poly_mod_xn1(*F, p, n), n);
        for (std::size_t s = 0; s < n; ++s) {
            rows.push_back(v);
            std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
        }
    }
    return Code(F, n, rows);
}

bool is_shift_closed(const Code& C) {
    for (auto v : C.gens()) {
        std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
        if (!C.contains(v)) return false;
    }
    return true;
}

Poly SubfieldCyclicCode::row_poly(std::size_t i) const {
    Poly s;
    Elem wj = 1;
    for (const auto& aij : a[i]) {
        s = poly_add(*F, s, poly_scale(*F, aij, wj));
        wj = F->mul(wj, F->generator());
    }
    return poly_mod_xn1(*F, s, n);
}

std::size_t SubfieldCyclicCode::log_size() const {
    std::size_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += n - *diagonal(i).degree();
    return s;
}

Code SubfieldCyclicCode::code() const {
    std::vector<Poly> rows;
    for (std::size_t i = 0; i < a.size(); ++i) rows.push_back(row_poly(i));
    return cyclic_module_span(F, n, rows);
}

namespace {

Poly block_poly(const Vec& v, std::size_t block, std::size_t n) {
    return Poly(Vec(v.begin() + block * n, v.begin() + (block + 1) * n));
}

Poly cyclic_generator(const Field& F, const std::vector<Poly>& polys, std::size_t n) {
    Poly g = poly_xn_minus_1(F, n);
    for (const auto& p : polys) g = poly_gcd(F, g, p);
    return g;
}

// Module of k-tuples of polynomials over F_r, each tuple laid out as k blocks
// of n coefficients. Returns rows 0..k-1, row i holding columns 0..k-1-i.
std::vector<std::vector<Poly>> canon(const Field& F, const std::vector<Vec>& basis, std::size_t k, std::size_t n) {
    if (k == 1) {
        std::vector<Poly> polys;
        for (const auto& v : basis) polys.push_back(block_poly(v, 0, n));
        return {{cyclic_generator(F, polys, n)}};
    }
    // put column 0 last so that elimination splits image and kernel
    std::vector<Vec> aug;
    for (auto v : basis) {
        std::rotate(v.begin(), v.begin() + n, v.end());
        aug.push_back(std::move(v));
    }
    Echelon e = rref(F, aug, k * n);
    const std::size_t split = (k - 1) * n;
    std::vector<Vec> image;
    std::vector<Poly> kernel;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] < split) image.emplace_back(e.rows[i].begin(), e.rows[i].begin() + split);
        else kernel.push_back(block_poly(e.rows[i], k - 1, n));
    }
    const Poly a = cyclic_generator(F, kernel, n);
    auto sub = canon(F, image, k - 1, n);
    std::vector<std::vector<Poly>> out;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        Vec t(k * n, 0);
        for (std::size_t j = 0; j < sub[i].size(); ++j) {
            Vec c = poly_to_vec(poly_mod_xn1(F, sub[i][j], n), n);
            std::copy(c.begin(), c.end(), t.begin() + j * n);
        }
        Vec res = reduce(F, e, t);
        if (!std::all_of(res.begin(), res.begin() + split, [](Elem x) { return x == 0; }))
            throw Error(Errc::NotShiftClosed, "image row has no preimage");
        Vec pre(res.begin() + split, res.end());
        for (auto& x : pre) x = F.neg(x);
        std::vector<Poly> row;
        row.push_back(poly_mod(F, Poly(pre), a));
        for (auto& p : sub[i]) row.push_back(p);
        out.push_back(std::move(row));
    }
    out.push_back({a});
    return out;
}

}  // namespace

SubfieldCyclicCode canonical_subfield_cyclic(const Code& C) {
    if (!is_shift_closed(C)) throw Error(Errc::NotShiftClosed, "code is not closed under cyclic shift");
    const Field& F = C.field();
    const std::size_t n = C.length(), m = std::size_t(F.m());
    std::vector<Vec> basis;
    for (const auto& g : C.gens()) {
        Vec t(m * n);
        for (std::size_t i = 0; i < n; ++i) {
            auto c = F.subfield_coords(g[i]);
            for (std::size_t j = 0; j < m; ++j) t[j * n + i] = c[j];
        }
        basis.push_back(std::move(t));
    }
    return SubfieldCyclicCode{C.field_ptr(), n, canon(F, basis, m, n)};
}

SubfieldCyclicCode canonical_subfield_cyclic(FieldPtr F, std::size_t n, const std::vector<Poly>& raw_gens) {
    return canonical_subfield_cyclic(cyclic_module_span(F, n, raw_gens));
}

Code subfield_cyclic_subcode(const SubfieldCyclicCode& C, const std::vector<Poly>& b) {
    const Field& F = *C.F;
    if (b.size() != C.rows()) throw Error(Errc::DimMismatch, "need one multiplier per generator row");
    const Poly xn1 = poly_xn_minus_1(F, C.n);
    std::vector<Poly> rows;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!poly_in_subfield(F, b[i])) throw Error(Errc::NotInSubfield, "multiplier must have subfield coefficients");
        Poly quo = poly_divmod(F, xn1, C.diagonal(i)).first;
        if (!poly_divides(F, b[i], quo))
            throw Error(Errc::NotDivisor, poly_format(F, b[i]) + " does not divide (x^n-1)/" + poly_format(F, C.diagonal(i)));
        rows.push_back(poly_mul(F, b[i], C.row_poly(i)));
    }
    return cyclic_module_span(C.F, C.n, rows);
}

// ------------------------------------------------------------------ parsing

namespace {

class Parser {
public:
    Parser(std::string_view s, const Field& F, std::size_t n, const std::vector<NamedPoly>& env)
        : s_(s), F_(F), n_(n), env_(env) {}

    std::vector<NamedPoly> list() {
        std::vector<NamedPoly> out;
        for (;;) {
            skip();
            if (at_end()) break;
            out.push_back(item());
            skip();
            if (at_end()) break;
            expect(',');
        }
        return out;
    }

    Poly bare_poly() {
        skip();
        Poly p;
        if (peek() == '(') {
            p = factor();
        } else {
            p = Poly(elements(s_.size()));
        }
        skip();
        if (!at_end()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const { throw ParseError(pos_, why); }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string ident() {
        std::string id;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) id.push_back(s_[pos_++]);
        id.erase(std::remove(id.begin(), id.end(), '_'), id.end());
        return id;
    }

    NamedPoly item() {
        skip();
        std::size_t save = pos_;
        if (peek() == 'g') {
            std::string id = ident();
            skip();
            if (peek() == '=') {
                ++pos_;
                return {id, expr()};
            }
            pos_ = save;
        }
        return {"", expr()};
    }

    Poly expr() {
        Poly sum = term();
        for (;;) {
            skip();
            if (peek() != '+') break;
            ++pos_;
            sum = poly_add(F_, sum, term());
        }
        return sum;
    }

    Poly term() {
        skip();
        Poly prod(Vec{1});
        bool any = false;
        if (peek() == 'w') {
            prod = Poly(Vec{power()});
            any = true;
        }
        for (;;) {
            skip();
            if (peek() == '(') {
                prod = poly_mod_xn1(F_, poly_mul(F_, prod, factor()), n_);
                any = true;
            } else if (peek() == 'g') {
                std::size_t at = pos_;
                std::string id = ident();
                auto it = std::find_if(env_.begin(), env_.end(), [&](const NamedPoly& p) { return p.name == id; });
                if (it == env_.end()) {
                    pos_ = at;
                    fail("unknown generator '" + id + "'");
                }
                prod = poly_mod_xn1(F_, poly_mul(F_, prod, it->poly), n_);
                any = true;
                break;
            } else {
                break;
            }
        }
        if (!any) fail("expected a term");
        return prod;
    }

    Poly factor() {
        expect('(');
        std::size_t close = s_.find(')', pos_);
        if (close == std::string_view::npos) fail("unterminated '('");
        Vec c = elements(close);
        pos_ = close + 1;
        return Poly(std::move(c));
    }

    Elem power() {
        ++pos_;  // 'w'
        if (peek() != '^') return F_.generator();
        ++pos_;
        std::uint64_t k = 0;
        if (peek() == '{') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("bad exponent");
            while (std::isdigit(static_cast<unsigned char>(peek()))) k = k * 10 + std::uint64_t(s_[pos_++] - '0');
            if (peek() != '}') fail("expected '}'");
            ++pos_;
        } else {
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("bad exponent");
            // exponents are single digits whenever q - 2 <= 9
            if (F_.q() <= 11) {
                k = std::uint64_t(s_[pos_++] - '0');
            } else {
                while (std::isdigit(static_cast<unsigned char>(peek()))) k = k * 10 + std::uint64_t(s_[pos_++] - '0');
            }
        }
        return F_.exp(k);
    }

    // Field elements up to position end; whitespace only separates.
    Vec elements(std::size_t end) {
        Vec out;
        while (pos_ < end) {
            char c = s_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == 'w') {
                out.push_back(power());
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                if (F_.p() < 10) {
                    int d = c - '0';
                    if (d >= F_.p()) fail("digit outside the prime field");
                    out.push_back(F_.from_int(d));
                    ++pos_;
                } else {
                    long long v = 0;
                    while (pos_ < end && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
                    if (v >= F_.p()) fail("digit outside the prime field");
                    out.push_back(F_.from_int(v));
                }
            } else if (c == '{') {
                std::size_t close = s_.find('}', pos_);
                if (close == std::string_view::npos || close >= end) fail("unterminated coordinate vector");
                try {
                    out.push_back(F_.parse(s_.substr(pos_, close - pos_ + 1)));
                } catch (const ParseError&) {
                    fail("bad coordinate vector");
                }
                pos_ = close + 1;
            } else {
                fail(std::string("unexpected '") + c + "'");
            }
        }
        return out;
    }

    std::string_view s_;
    const Field& F_;
    std::size_t n_;
    const std::vector<NamedPoly>& env_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Field& F) {
    static const std::vector<NamedPoly> none;
    return Parser(text, F, 0, none).bare_poly();
}

std::vector<NamedPoly> parse_gen_shorthand(std::string_view text, const Field& F, std::size_t n,
                                           const std::vector<NamedPoly>& env) {
    return Parser(text, F, n, env).list();
}

}  // namespace aqc
