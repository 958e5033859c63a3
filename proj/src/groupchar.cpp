#include "aqc/groupchar.hpp"

namespace aqc {

namespace {

std::size_t ipow_sz(std::size_t b, std::size_t e) {
    std::size_t x = 1;
    while (e--) x *= b;
    return x;
}

std::uint32_t digit_sum(std::size_t j, std::uint32_t t, std::uint32_t l) {
    std::uint32_t s = 0;
    for (std::uint32_t i = 0; i < l; ++i, j /= t) s += std::uint32_t(j % t);
    return s;
}

std::size_t gc_distance(std::uint32_t t, std::uint32_t l, std::uint32_t r) {
    const std::uint32_t a = r / (t - 1), b = r % (t - 1);
    return (t - b) * ipow_sz(t, l - 1 - a);
}

}  // namespace

void gc_validate(const GcSpec& s) {
    if (s.t < 2 || s.l < 1 || (s.q - 1) % s.t != 0)
        throw Error(Errc::InvalidOrderElement, "need t >= 2 dividing q - 1");
    if (s.r >= s.l * (s.t - 1)) throw Error(Errc::BadRange, "need r < l(t-1)");
}

Elem gc_zeta(const Field& F, std::uint32_t t) {
    Elem z = F.exp((F.q() - 1) / t);
    if (F.order(z) != t) throw Error(Errc::InvalidOrderElement, "no element of order " + std::to_string(t));
    return z;
}

Code gc_code(const GcSpec& s) {
    gc_validate(s);
    auto F = make_field_q(s.q);
    const Elem zeta = gc_zeta(*F, s.t);
    const std::size_t n = ipow_sz(s.t, s.l);
    std::vector<Vec> H;
    for (std::size_t x = 0; x < n; ++x) {
        if (digit_sum(x, s.t, s.l) <= s.r) continue;
        Vec row(n);
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t dot = 0;
            for (std::size_t a = x, b = j, i = 0; i < s.l; ++i, a /= s.t, b /= s.t) dot += (a % s.t) * (b % s.t);
            row[j] = F->pow(zeta, dot % s.t);
        }
        H.push_back(std::move(row));
    }
    return Code::fq_span(F, n, null_space(*F, H, n));
}

std::size_t gc_count(std::uint32_t t, std::uint32_t l, std::uint32_t r) {
    const std::size_t n = ipow_sz(t, l);
    std::size_t c = 0;
    for (std::size_t j = 0; j < n; ++j) c += digit_sum(j, t, l) <= r;
    return c;
}

GcParams gc_params(const GcSpec& s) {
    gc_validate(s);
    return {ipow_sz(s.t, s.l), gc_count(s.t, s.l, s.r), gc_distance(s.t, s.l, s.r)};
}

NestedPair gc_pair(std::uint32_t r1, std::uint32_t r2, std::uint32_t l, std::uint32_t t, std::uint32_t q) {
    if (r1 > r2) throw Error(Errc::BadRange, "need r1 <= r2");
    const Code Ca = gc_code({q, t, l, r1});
    const Code Cb = gc_code({q, t, l, r2});
    return make_pair(dual(Ca, InnerProduct::Euclidean), Cb, InnerProduct::Euclidean);
}

AqcParams gc_aqc(std::uint32_t r1, std::uint32_t r2, std::uint32_t l, std::uint32_t t, std::uint32_t q) {
    if (r1 > r2) throw Error(Errc::BadRange, "need r1 <= r2");
    gc_validate({q, t, l, r2});
    const std::uint32_t top = l * (t - 1) - 1;
    if (!is_nested(gc_code({q, t, l, r1}), gc_code({q, t, l, r2})))
        throw Error(Errc::NotNested, "group character codes are not nested");
    AqcParams out;
    out.q = q;
    out.n = ipow_sz(t, l);
    out.k = Rational(long(gc_count(t, l, r2)) - long(gc_count(t, l, r1)));
    out.dz = gc_distance(t, l, r2);
    out.dx = gc_distance(t, l, top - r1);
    out.pure = true;
    if (out.dz < out.dx) {
        std::swap(out.dz, out.dx);
        out.swapped = true;
    }
    return out;
}

}  // namespace aqc
