#include <doctest.h>

#include "aqc/cyclic.hpp"
#include "aqc/error.hpp"
#include "aqc/quantum.hpp"
#include "oracles.hpp"

using namespace aqc;

namespace {

// Random pair with D = C1^perp a random subcode of C2.
NestedPair random_pair(const FieldPtr& F, std::size_t n, InnerProduct kind, std::mt19937_64& rng) {
    const bool linear = kind == InnerProduct::Euclidean || kind == InnerProduct::Hermitian;
    for (;;) {
        auto rows = oracle::random_rows(*F, n, 2 + rng() % 2, rng);
        Code C2 = linear ? Code::fq_span(F, n, rows) : Code(F, n, rows);
        auto words = oracle::code_words(C2);
        std::vector<Vec> sub{words[rng() % words.size()]};
        Code D = linear ? Code::fq_span(F, n, sub) : Code(F, n, sub);
        if (D.dim() == 0 || D == C2) continue;
        Code C1 = dual(D, kind);
        if (C1.dim() == 0) continue;
        return make_pair(C1, C2, kind);
    }
}

std::size_t min_outside(const std::vector<Vec>& words, const std::vector<Vec>& inner) {
    std::set<Vec> in(inner.begin(), inner.end());
    std::size_t best = SIZE_MAX;
    for (const auto& w : words)
        if (!in.count(w)) best = std::min(best, oracle::weight(w));
    return best;
}

std::size_t min_nonzero(const std::vector<Vec>& words) {
    std::size_t best = SIZE_MAX;
    for (const auto& w : words)
        if (oracle::weight(w)) best = std::min(best, oracle::weight(w));
    return best;
}

// Parameters straight from the word lists.
AqcParams brute_params(const NestedPair& p) {
    const Field& F = p.C1.field();
    const std::size_t n = p.C1.length();
    auto w1 = oracle::code_words(p.C1), w2 = oracle::code_words(p.C2);
    auto w1d = oracle::dual_words(F, n, w1, p.kind), w2d = oracle::dual_words(F, n, w2, p.kind);
    AqcParams out;
    out.q = F.q();
    out.n = n;
    // |C1| |C2| = q^n r^(mk)
    BigInt prod = BigInt(std::uint64_t(w1.size())) * BigInt(std::uint64_t(w2.size()));
    long num = 0;
    for (std::size_t i = 0; i < n; ++i) prod /= F.q();
    while (prod > 1) {
        prod /= F.r();
        ++num;
    }
    out.k = Rational(num, F.m());
    out.k.canonicalize();
    if (w1d.size() == w2.size()) {
        out.dz = min_nonzero(w2);
        out.dx = min_nonzero(w1);
    } else {
        out.dz = min_outside(w2, w1d);
        out.dx = min_outside(w1, w2d);
    }
    if (out.dz < out.dx) std::swap(out.dz, out.dx);
    return out;
}

}  // namespace

TEST_CASE("pair parameters match the word lists") {
    std::mt19937_64 rng(31);
    struct Case {
        std::uint32_t q, r;
        std::size_t n;
        InnerProduct kind;
    };
    const Case cases[] = {{2, 2, 7, InnerProduct::Euclidean},      {3, 3, 5, InnerProduct::Euclidean},
                          {4, 2, 4, InnerProduct::TraceEuclidean}, {4, 2, 4, InnerProduct::TraceHermitian},
                          {4, 4, 4, InnerProduct::Euclidean},      {9, 3, 3, InnerProduct::TraceHermitian},
                          {8, 2, 3, InnerProduct::TraceEuclidean}, {4, 2, 4, InnerProduct::Hermitian}};
    for (const auto& c : cases) {
        auto F = make_field_q(c.q, c.r);
        for (int trial = 0; trial < 5; ++trial) {
            auto p = random_pair(F, c.n, c.kind, rng);
            auto got = css_like(p);
            auto want = brute_params(p);
            CAPTURE(c.q);
            CAPTURE(to_string(c.kind));
            CHECK(got.k == want.k);
            CHECK(got.dz == want.dz);
            CHECK(got.dx == want.dx);
        }
    }
}

TEST_CASE("converting between trace products keeps the parameters") {
    std::mt19937_64 rng(32);
    for (std::uint32_t q : {4u, 9u}) {
        auto F = make_field_q(q);
        const std::size_t n = q == 4 ? 5 : 3;
        for (int trial = 0; trial < 10; ++trial) {
            auto p = random_pair(F, n, InnerProduct::TraceEuclidean, rng);
            auto h = convert_pair(p, InnerProduct::TraceHermitian);
            CHECK(h.kind == InnerProduct::TraceHermitian);
            CHECK(h.C2 == p.C2);
            CHECK(css_like(h).same_parameters(css_like(p)));
            auto back = convert_pair(h, InnerProduct::TraceEuclidean);
            CHECK(back.C1 == p.C1);
        }
        for (int trial = 0; trial < 5; ++trial) {
            auto p = random_pair(F, n, InnerProduct::Euclidean, rng);
            auto h = convert_pair(p, InnerProduct::Hermitian);
            CHECK(css_like(h).same_parameters(css_like(p)));
        }
    }
    auto F8 = make_field_q(8);
    std::mt19937_64 r2(33);
    auto p = random_pair(F8, 3, InnerProduct::TraceEuclidean, r2);
    CHECK_THROWS_AS(convert_pair(p, InnerProduct::TraceHermitian), Error);
}

TEST_CASE("pairs must be nested") {
    auto F = make_field_q(2);
    Code C(F, 4, {{1, 1, 0, 0}});
    CHECK_THROWS_AS(make_pair(C, C, InnerProduct::Euclidean), Error);
}

TEST_CASE("ad hoc recipes") {
    CHECK(css_like(adhoc_pair("4-1-2-2")).str() == "[[4,1,2/2]]_2");
    CHECK(css_like(adhoc_pair("5-2-2-2")).str() == "[[5,2,2/2]]_2");
    auto p = css_like(adhoc_pair("13-1-5-3"));
    CHECK(p.str() == "[[13,1,5/3]]_2");
    CHECK(p.pure);
    CHECK_THROWS_AS(adhoc_pair("1-1-1-1"), Error);
}

TEST_CASE("quantum Singleton slack") {
    AqcParams p;
    p.q = 4;
    p.n = 6;
    p.k = 2;
    p.dz = 4;
    p.dx = 2;
    CHECK(quantum_singleton(p).slack == 0);
    CHECK(quantum_singleton(p).meets);
    p.q = 2;
    p.n = 13;
    p.k = 1;
    p.dz = 5;
    p.dx = 3;
    CHECK(quantum_singleton(p).slack == 6);
}

TEST_CASE("self-orthogonal and full-weight constructions") {
    auto F = make_field_q(2);
    Code simplex = dual(cyclic_from_gen(F, 7, Poly(Vec{1, 1, 0, 1})), InnerProduct::Euclidean);
    auto so = self_orthogonal_aqc(simplex, InnerProduct::Euclidean);
    CHECK(so.str() == "[[7,1,3/3]]_2");
    Code hamming = cyclic_from_gen(F, 7, Poly(Vec{1, 1, 0, 1}));
    CHECK_THROWS_AS(self_orthogonal_aqc(hamming, InnerProduct::Euclidean), Error);
    CHECK(full_weight_aqc(hamming).str() == "[[7,3,3/2]]_2");
    CHECK(css_like(full_weight_pair(hamming)).same_parameters(full_weight_aqc(hamming)));
}

TEST_CASE("parameter strings") {
    AqcParams p;
    p.q = 8;
    p.n = 10;
    p.k = Rational(19, 3);
    p.dz = 3;
    p.dx = 2;
    CHECK(p.str() == "[[10,19/3,3/2]]_8");
}
