#include <doctest.h>

#include "aqc/error.hpp"
#include "aqc/groupchar.hpp"
#include "aqc/quantum.hpp"
#include "oracles.hpp"

using namespace aqc;

namespace {

std::vector<std::uint32_t> digits(std::size_t x, std::uint32_t t, std::uint32_t l) {
    std::vector<std::uint32_t> d(l);
    for (auto& e : d) {
        e = std::uint32_t(x % t);
        x /= t;
    }
    return d;
}

// Span of the characters chi_{-x} with digit sum of x at most r, which by
// character orthogonality is the same code as the parity-check definition.
Code character_span(const GcSpec& s) {
    auto F = make_field_q(s.q);
    const Elem zeta = F->exp((s.q - 1) / s.t);
    std::size_t n = 1;
    for (std::uint32_t i = 0; i < s.l; ++i) n *= s.t;
    std::vector<Vec> rows;
    for (std::size_t x = 0; x < n; ++x) {
        auto dx = digits(x, s.t, s.l);
        std::uint32_t sum = 0;
        for (auto d : dx) sum += d;
        if (sum > s.r) continue;
        Vec row(n);
        for (std::size_t j = 0; j < n; ++j) {
            auto dj = digits(j, s.t, s.l);
            std::uint64_t e = 0;
            for (std::uint32_t i = 0; i < s.l; ++i) e += (s.t - dx[i]) % s.t * dj[i];
            row[j] = F->pow(zeta, e % s.t);
        }
        rows.push_back(row);
    }
    return Code::fq_span(F, n, rows);
}

}  // namespace

TEST_CASE("gc_code equals the span of the low characters") {
    for (auto [q, t] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {5, 2}, {5, 4}, {7, 3}, {4, 3}, {9, 4}}) {
        for (std::uint32_t l = 1; l <= 3; ++l) {
            std::size_t n = 1;
            for (std::uint32_t i = 0; i < l; ++i) n *= t;
            if (n > 64) continue;
            for (std::uint32_t r = 0; r < l * (t - 1); ++r) {
                GcSpec s{q, t, l, r};
                CAPTURE(q);
                CAPTURE(t);
                CAPTURE(l);
                CAPTURE(r);
                Code C = gc_code(s);
                CHECK(C == character_span(s));
                CHECK(C.fq_dim() == Rational(long(gc_params(s).k)));
            }
        }
    }
}

TEST_CASE("closed-form parameters match enumeration") {
    for (auto [q, t, l] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
             {3, 2, 3}, {3, 2, 4}, {5, 4, 2}, {7, 3, 2}, {4, 3, 2}, {8, 7, 1}}) {
        for (std::uint32_t r = 0; r < l * (t - 1); ++r) {
            GcSpec s{q, t, l, r};
            auto p = gc_params(s);
            CAPTURE(q);
            CAPTURE(t);
            CAPTURE(l);
            CAPTURE(r);
            CHECK(gc_code(s).min_distance() == p.d);
        }
    }
}

TEST_CASE("dimension count") {
    // t = 2 gives the binomial partial sums of Reed-Muller codes
    CHECK(gc_count(2, 4, 0) == 1);
    CHECK(gc_count(2, 4, 1) == 5);
    CHECK(gc_count(2, 4, 2) == 11);
    CHECK(gc_count(3, 2, 2) == 6);
    CHECK(gc_count(3, 2, 4) == 9);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(gc_validate({5, 3, 2, 1}), Error);  // 3 does not divide 4
    CHECK_THROWS_AS(gc_aqc(2, 1, 3, 2, 3), Error);
    CHECK_NOTHROW(gc_validate({7, 3, 2, 1}));
}

TEST_CASE("nested pairs agree with the formulas") {
    auto a = gc_aqc(1, 2, 3, 2, 3);
    auto b = css_like(gc_pair(1, 2, 3, 2, 3));
    CHECK(a.same_parameters(b));
    CHECK(b.str() == "[[8,3,4/2]]_3");
    CHECK(css_like(gc_pair(2, 3, 2, 3, 7)).str() == "[[9,2,6/2]]_7");
}
