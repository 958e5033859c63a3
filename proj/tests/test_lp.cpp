#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <random>

#include "aqc/error.hpp"
#include "aqc/lp.hpp"

using namespace aqc;

namespace {

const std::string kCertificate = std::string(AQC_FIXTURES) + "/certificate_6_2_2_1_3_2.json";

RMat matrix_from(const nlohmann::json& j) {
    RMat out;
    for (const auto& row : j) {
        RVec r;
        for (const auto& x : row) r.push_back(Rational(x.get<long>()));
        out.push_back(r);
    }
    return out;
}

RVec vector_from(const nlohmann::json& j) {
    RVec out;
    for (const auto& x : j) out.push_back(Rational(x.get<long>()));
    return out;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("constructed system equals the printed matrices") {
    auto j = load_json(kCertificate);
    LpProblem P = build_css_lp(6, 2, 1, 2, 1, 3, 2, 0);
    CHECK(P.M1 == matrix_from(j["M1"]));
    CHECK(P.M2 == matrix_from(j["M2"]));
    CHECK(P.r == vector_from(j["r"]));
    CHECK(P.h == vector_from(j["h"]));
    CHECK(P.nvars == 14);
}

TEST_CASE("printed certificate verifies") {
    CertificateFile f = read_certificate_file(kCertificate);
    CHECK(f.a == 2);
    CHECK(f.b == 1);
    LpProblem P = build_css_lp(f.n, f.q, f.m, f.a, f.b, f.dx, f.dz, 0);
    Certificate c = normalized_certificate(f);
    CHECK(verify_certificate(P, c));
    RVec row = combined_row(P, c);
    RVec want(14, 0);
    want[8] = Rational(-88, 3);
    want[9] = -29;
    CHECK(row == want);

    // any tampering breaks it
    Certificate bad = c;
    bad.s2[0] = -1;
    CHECK_FALSE(verify_certificate(P, bad));
    bad = c;
    bad.s1[1] = 10;
    CHECK_FALSE(verify_certificate(P, bad));
}

TEST_CASE("certificate rows can be permuted and negated") {
    CertificateFile f = read_certificate_file(kCertificate);
    const std::size_t total = f.row_order.size();
    const std::size_t n1 = f.cert.s1.size();
    CertificateFile g = f;
    // reverse the equality rows and flip their signs
    RVec flat(f.cert.s1);
    for (std::size_t i = 0; i < n1; ++i) {
        g.row_order[i] = n1 - 1 - i;
        g.signs[i] = -1;
        g.cert.s1[i] = -flat[n1 - 1 - i];
    }
    CHECK(normalized_certificate(g).s1 == normalized_certificate(f).s1);
    g.row_order.pop_back();
    CHECK_THROWS_AS(normalized_certificate(g), Error);
    CHECK(total == 31);
}

TEST_CASE("dichotomy at (n, q, dx, dz) = (6, 2, 3, 2)") {
    for (const Rational& gap : {Rational(0), Rational(1)}) {
        for (auto [a, b, feasible] : std::vector<std::tuple<long, long, bool>>{{1, 1, true}, {1, 2, true}, {2, 1, false}}) {
            LpProblem P = build_css_lp(6, 2, 1, a, b, 3, 2, gap);
            LpOutcome o = solve_feasibility(P);
            CAPTURE(a);
            CAPTURE(b);
            CHECK(o.feasible == feasible);
            if (o.feasible) CHECK(verify_witness(P, o.witness));
            else CHECK(verify_certificate(P, o.cert));
        }
    }
}

TEST_CASE("solver on random systems with a planted solution") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> coef(-4, 4), val(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t nv = 3 + rng() % 4;
        LpProblem P;
        P.nvars = nv;
        RVec x(nv);
        for (auto& e : x) e = val(rng);
        for (int i = 0; i < 2; ++i) {
            RVec row(nv);
            for (auto& e : row) e = coef(rng);
            Rational s = 0;
            for (std::size_t k = 0; k < nv; ++k) s += row[k] * x[k];
            P.M1.push_back(row);
            P.r.push_back(s);
        }
        for (int i = 0; i < 3; ++i) {
            RVec row(nv);
            for (auto& e : row) e = coef(rng);
            Rational s = 0;
            for (std::size_t k = 0; k < nv; ++k) s += row[k] * x[k];
            P.M2.push_back(row);
            P.h.push_back(s - val(rng));
        }
        LpOutcome o = solve_feasibility(P);
        REQUIRE(o.feasible);
        CHECK(verify_witness(P, o.witness));

        // x_0 >= 1 and -x_0 >= 0 cannot both hold
        RVec e0(nv, 0), ne0(nv, 0);
        e0[0] = 1;
        ne0[0] = -1;
        P.M2.push_back(e0);
        P.h.push_back(1);
        P.M2.push_back(ne0);
        P.h.push_back(0);
        o = solve_feasibility(P);
        REQUIRE_FALSE(o.feasible);
        CHECK(verify_certificate(P, o.cert));
    }
}

TEST_CASE("Delsarte maxima") {
    CHECK(delsarte_max(7, 2, 3) == 16);
    CHECK(delsarte_max(8, 2, 4) == 16);
    CHECK(delsarte_max(7, 4, 5) == 40);
    CHECK(delsarte_max(7, 4, 2) == 4096);
    CHECK(dlog(7, 4, 2, 5) == 5);
    CHECK(dlog(7, 4, 2, 2) == 12);
    CHECK(delsarte_max(5, 2, 1) == 32);
}

TEST_CASE("feasible region") {
    Region R = feasible_region(7, 4, 2, 5, 2);
    CHECK(R.alpha == 5);
    CHECK(R.beta == 12);
    std::vector<std::pair<long, long>> want{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}};
    CHECK(R.points == want);
}

TEST_CASE("bounds on k") {
    CHECK(*lp_bound_k(6, 2, 1, 3, 2).k == 1);
    CHECK(*lp_bound_k(7, 4, 2, 2, 5).k == Rational(3, 2));
    CHECK(*lp_bound_k_linear(7, 4, 2, 2, 5).k == 1);
    CHECK(*lp_bound_k(6, 4, 2, 2, 4).k == 2);
}

TEST_CASE("certificate JSON round-trips") {
    LpProblem P = build_css_lp(6, 2, 1, 2, 1, 3, 2);
    LpOutcome o = solve_feasibility(P);
    REQUIRE_FALSE(o.feasible);
    const std::string path = "lp_roundtrip_certificate.json";
    std::ofstream(path) << certificate_json(P, o.cert);
    CertificateFile f = read_certificate_file(path);
    CHECK(verify_certificate(P, normalized_certificate(f)));
    std::remove(path.c_str());
}
