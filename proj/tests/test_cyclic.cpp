#include <doctest.h>

#include "aqc/cyclic.hpp"
#include "aqc/error.hpp"
#include "aqc/quantum.hpp"
#include "oracles.hpp"

using namespace aqc;

namespace {

Vec rotate(const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[(i + 1) % v.size()] = v[i];
    return out;
}

Code random_cyclic(const FieldPtr& F, std::size_t n, std::mt19937_64& rng) {
    std::vector<Poly> polys;
    const std::size_t k = 1 + rng() % 2;
    for (std::size_t i = 0; i < k; ++i) {
        Vec v = oracle::random_vec(*F, n, rng);
        // sparse polynomials tend to give proper subcodes
        for (auto& e : v)
            if (rng() % 3) e = 0;
        polys.push_back(vec_to_poly(v));
    }
    return cyclic_module_span(F, n, polys);
}

}  // namespace

TEST_CASE("cyclic code from a generator") {
    auto F = make_field_q(2);
    Poly g = parse_poly("1 1 0 1", *F);
    Code C = cyclic_from_gen(F, 7, g);
    CHECK(C.dim() == 4);
    CHECK(C.min_distance() == 3);
    CHECK(is_shift_closed(C));
    for (const auto& w : oracle::code_words(C)) CHECK(C.contains(rotate(w)));
    CHECK_THROWS_AS(cyclic_from_gen(F, 7, parse_poly("(111)", *F)), Error);

    CyclicCode cc = make_cyclic(F, 7, g);
    Code sub = cyclic_subcode(cc, parse_poly("11", *F));
    CHECK(sub.dim() == 3);
    CHECK(is_nested(sub, C));
}

TEST_CASE("polynomial text forms") {
    auto F4 = make_field_q(4);
    CHECK(parse_poly("(1011)", *F4) == parse_poly("1 0 1 1", *F4));
    CHECK(parse_poly("(1 0 1 1)", *F4) == Poly(Vec{1, 0, 1, 1}));
    Poly p = parse_poly("(w 1 w^2)", *F4);
    CHECK(p.coeff(0) == F4->generator());
    CHECK(p.coeff(2) == F4->exp(2));
    auto F13 = make_field_q(13);
    CHECK(parse_poly("(12 0 1)", *F13) == Poly(Vec{12, 0, 1}));
    CHECK_THROWS_AS(parse_poly("(1 2", *F4), Error);
}

TEST_CASE("generator shorthand with names") {
    auto F = make_field_q(4);
    auto C = parse_gen_shorthand("g4=(1011)+w(11), g2=(111111)", *F, 6);
    REQUIRE(C.size() == 2);
    CHECK(C[0].name == "g4");
    CHECK(C[1].poly == Poly(Vec{1, 1, 1, 1, 1, 1}));
    Poly expect = poly_add(*F, Poly(Vec{1, 0, 1, 1}), poly_scale(*F, Poly(Vec{1, 1}), F->generator()));
    CHECK(C[0].poly == expect);
    auto D = parse_gen_shorthand("(10101)g4, (1)g2", *F, 6, C);
    REQUIRE(D.size() == 2);
    CHECK(D[0].poly == poly_mod_xn1(*F, poly_mul(*F, Poly(Vec{1, 0, 1, 0, 1}), expect), 6));
    CHECK_THROWS_AS(parse_gen_shorthand("(1)g9", *F, 6, C), Error);
}

TEST_CASE("canonical form reproduces the code and is idempotent") {
    std::mt19937_64 rng(21);
    for (std::uint32_t q : {4u, 8u}) {
        auto F = make_field_q(q, 2);
        for (std::size_t n : {3u, 5u, 6u, 7u}) {
            for (int trial = 0; trial < 4; ++trial) {
                Code C = random_cyclic(F, n, rng);
                auto S = canonical_subfield_cyclic(C);
                CAPTURE(q);
                CAPTURE(n);
                CHECK(S.code() == C);
                CHECK(S.log_size() == C.dim());
                auto S2 = canonical_subfield_cyclic(S.code());
                CHECK(S2.a == S.a);
                for (std::size_t i = 0; i < S.rows(); ++i) {
                    const Poly& d = S.diagonal(i);
                    CHECK(poly_divides(*F, d, poly_xn_minus_1(*F, n)));
                    CHECK(poly_in_subfield(*F, d));
                    for (std::size_t j = 0; j + 1 < S.a[i].size(); ++j) {
                        CHECK(poly_in_subfield(*F, S.a[i][j]));
                        // component j is reduced by the diagonal of the row that ends there
                        const Poly& dj = S.diagonal(S.rows() - 1 - j);
                        CHECK((S.a[i][j].is_zero() || *S.a[i][j].degree() < *dj.degree()));
                    }
                }
            }
        }
    }
}

TEST_CASE("non-cyclic codes are rejected") {
    auto F = make_field_q(4, 2);
    Code C(F, 4, {{1, 1, 0, 0}});
    CHECK_FALSE(is_shift_closed(C));
    CHECK_THROWS_AS(canonical_subfield_cyclic(C), Error);
}

TEST_CASE("submodule from multipliers is nested") {
    auto F = make_field_q(4, 2);
    auto C = parse_gen_shorthand("g4=(1011)+w(11), g2=(111111)", *F, 6);
    Code big = cyclic_module_span(F, 6, {C[0].poly, C[1].poly});
    auto S = canonical_subfield_cyclic(big);
    std::vector<Poly> b(S.rows(), Poly(Vec{1, 1}));
    Code small = subfield_cyclic_subcode(S, b);
    CHECK(is_nested(small, big));
    CHECK(is_shift_closed(small));
}

TEST_CASE("the F_4 example pair") {
    auto F = make_field_q(4, 2);
    auto C = parse_gen_shorthand("g4=(1011)+w(11), g2=(111111)", *F, 6);
    auto D = parse_gen_shorthand("(10101)g4, (1)g2", *F, 6, C);
    Code C2 = cyclic_module_span(F, 6, {C[0].poly, C[1].poly});
    Code Dc = cyclic_module_span(F, 6, {D[0].poly, D[1].poly});
    auto p = css_like(make_pair(dual(Dc, InnerProduct::TraceEuclidean), C2, InnerProduct::TraceEuclidean));
    CHECK(p.str() == "[[6,2,4/2]]_4");
    CHECK(p.pure);
}
