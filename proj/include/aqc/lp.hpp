#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aqc/rational.hpp"

namespace aqc {

using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;

// Linear system over x >= 0:  M1 x = r,  M2 x >= h.
// For the CSS system x = (A_0..A_n, B_0..B_n), the weight distributions of
// C2 and C1; the dual distributions are eliminated through K^2 = q^n I.
struct LpProblem {
    std::size_t nvars = 0;
    RMat M1;
    RVec r;
    RMat M2;
    RVec h;

    // Metadata of the CSS system; a = mk and b = mk' are integers.
    std::size_t n = 0;
    std::uint32_t q = 0;
    int m = 1;
    long a = 0, b = 0;
    std::size_t dx = 0, dz = 0;
};

struct Certificate {
    RVec s1, s2;
};

struct LpOutcome {
    bool feasible = false;
    RVec witness;      // when feasible
    Certificate cert;  // when infeasible
};

// Phase-one simplex over exact rationals with Bland's rule. Infeasibility
// certificates are re-verified before being returned.
LpOutcome solve_feasibility(const LpProblem& prob);

// s2 >= 0, M1^T s1 + M2^T s2 <= 0 and s1.r + s2.h > 0.
bool verify_certificate(const LpProblem& prob, const Certificate& cert);
// M1^T s1 + M2^T s2.
RVec combined_row(const LpProblem& prob, const Certificate& cert);
bool verify_witness(const LpProblem& prob, const RVec& x);

// Maximum of sum W over W >= 0 with W_0 = 1, W_s = 0 for 0 < s < d, KW >= 0
// and, when dual_d is given, (KW)_i = 0 for 0 < i < dual_d.
Rational delsarte_max(std::size_t n, std::uint32_t q, std::size_t d, std::optional<std::size_t> dual_d = {});
// floor(log_r delsarte_max).
long dlog(std::size_t n, std::uint32_t q, std::uint32_t r, std::size_t d, std::optional<std::size_t> dual_d = {});

struct Region {
    long alpha = 0, beta = 0;
    std::vector<std::pair<long, long>> points;  // (mk, mk') in lexicographic order
};
Region feasible_region(std::size_t n, std::uint32_t q, int m, std::size_t dx, std::size_t dz);

// a = mk, b = mk'. gap realizes A_dz > Bperp_dz as A_dz >= Bperp_dz + gap.
LpProblem build_css_lp(std::size_t n, std::uint32_t q, int m, long a, long b, std::size_t dx, std::size_t dz,
                       const Rational& gap = 1);

struct BoundResult {
    std::optional<Rational> k;  // empty when nothing is feasible
    std::optional<std::pair<long, long>> point;
};
// Largest k = mk/m over region points whose CSS system is feasible.
BoundResult lp_bound_k(std::size_t n, std::uint32_t q, int m, std::size_t dx, std::size_t dz, const Rational& gap = 1);
// Same with F_q-linearity imposed: only points with m | mk and m | mk'.
BoundResult lp_bound_k_linear(std::size_t n, std::uint32_t q, int m, std::size_t dx, std::size_t dz,
                              const Rational& gap = 1);

// Certificate file: {n, q, m, k, kp, dx, dz, row_order, signs, s1, s2}.
// row_order[i] and signs[i] map stored row i to the row of build_css_lp.
struct CertificateFile {
    std::size_t n = 0;
    std::uint32_t q = 0;
    int m = 1;
    long a = 0, b = 0;
    std::size_t dx = 0, dz = 0;
    std::vector<std::size_t> row_order;
    std::vector<int> signs;
    Certificate cert;
};
CertificateFile read_certificate_file(const std::string& path);
std::string certificate_json(const LpProblem& prob, const Certificate& cert);
// Certificate expressed in the row order and signs of build_css_lp.
Certificate normalized_certificate(const CertificateFile& f);

}  // namespace aqc
