#include <doctest.h>

#include <set>

#include "aqc/error.hpp"
#include "aqc/galois.hpp"

using namespace aqc;

namespace {

const std::uint32_t kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49};

}  // namespace

TEST_CASE("field axioms hold exhaustively for small orders") {
    for (std::uint32_t q : kOrders) {
        if (q > 16) continue;
        auto F = make_field_q(q);
        CAPTURE(q);
        for (Elem a = 0; a < q; ++a) {
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a) CHECK(F->mul(a, F->inv(a)) == 1);
            for (Elem b = 0; b < q; ++b) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                    CHECK(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
                }
            }
        }
    }
}

TEST_CASE("generator is primitive") {
    for (std::uint32_t q : kOrders) {
        auto F = make_field_q(q);
        CAPTURE(q);
        CHECK(F->order(F->generator()) == q - 1);
        std::set<Elem> seen;
        for (std::uint32_t k = 0; k + 1 < q; ++k) seen.insert(F->exp(k));
        CHECK(seen.size() == q - 1);
        CHECK(!seen.count(0));
    }
}

TEST_CASE("moduli are the Conway polynomials") {
    // low degree first
    CHECK(make_field_q(4)->modulus() == std::vector<int>{1, 1, 1});
    CHECK(make_field_q(8)->modulus() == std::vector<int>{1, 1, 0, 1});
    CHECK(make_field_q(9)->modulus() == std::vector<int>{2, 2, 1});
    CHECK(make_field_q(16)->modulus() == std::vector<int>{1, 1, 0, 0, 1});
    CHECK(make_field_q(25)->modulus() == std::vector<int>{2, 4, 1});
    CHECK(make_field_q(27)->modulus() == std::vector<int>{1, 2, 0, 1});
    CHECK(make_field_q(49)->modulus() == std::vector<int>{3, 6, 1});
}

TEST_CASE("trace is an onto F_r-linear map and Frobenius fixes the subfield") {
    for (auto [q, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{4, 2}, {8, 2}, {9, 3}, {16, 4}, {16, 2}, {27, 3}}) {
        auto F = make_field_q(q, r);
        CAPTURE(q);
        CAPTURE(r);
        std::set<Elem> image;
        for (Elem a = 0; a < q; ++a) {
            Elem t = F->trace(a);
            CHECK(F->in_subfield(t));
            image.insert(t);
            CHECK(F->in_subfield(a) == (F->pow(a, r) == a));
            CHECK(F->frobenius(a, F->degree()) == a);
            for (Elem s : F->subfield_elements()) CHECK(F->trace(F->mul(s, a)) == F->mul(s, t));
        }
        CHECK(image.size() == r);
        CHECK(F->subfield_elements().size() == r);
    }
}

TEST_CASE("conjugation and the skew element") {
    auto F4 = make_field_q(4);
    for (Elem a = 0; a < 4; ++a) CHECK(F4->conj(F4->conj(a)) == a);
    auto F9 = make_field_q(9);
    Elem al = F9->skew_alpha();
    CHECK(al != 0);
    CHECK(F9->conj(al) == F9->neg(al));
    CHECK_THROWS_AS(F4->skew_alpha(), Error);
    CHECK_THROWS_AS(make_field_q(8)->conj(1), Error);
}

TEST_CASE("element text round-trips") {
    for (std::uint32_t q : kOrders) {
        auto F = make_field_q(q);
        for (Elem a = 0; a < q; ++a) CHECK(F->parse(F->format(a)) == a);
    }
    auto F8 = make_field_q(8);
    CHECK(F8->parse("w^{3}") == F8->exp(3));
    CHECK(F8->parse("w") == F8->generator());
    CHECK(F8->parse("{1,1,0}") == F8->exp(3));
}

TEST_CASE("invalid orders are rejected") {
    CHECK_THROWS_AS(make_field_q(6), Error);
    CHECK_THROWS_AS(make_field_q(1), Error);
    CHECK_THROWS_AS(make_field_q(8, 4), Error);
}

TEST_CASE("polynomial arithmetic") {
    auto F = make_field_q(2);
    Poly a(Vec{1, 1, 0, 1});  // 1 + x + x^3
    Poly b(Vec{1, 0, 1, 1});  // 1 + x^2 + x^3
    Poly x7 = poly_xn_minus_1(*F, 7);
    Poly prod = poly_mul(*F, poly_mul(*F, a, b), Poly(Vec{1, 1}));
    CHECK(prod == x7);
    auto [qt, rm] = poly_divmod(*F, x7, a);
    CHECK(rm.is_zero());
    CHECK(poly_mul(*F, qt, a) == x7);
    CHECK(poly_gcd(*F, a, x7) == a);
    CHECK(poly_gcd(*F, a, b) == Poly(Vec{1}));
    CHECK(poly_divides(*F, b, x7));
    CHECK_FALSE(poly_divides(*F, Poly(Vec{1, 1, 1}), x7));
    CHECK(is_irreducible_mod_p({1, 1, 0, 1}, 2));
    CHECK_FALSE(is_irreducible_mod_p({1, 0, 1}, 2));
}
