#pragma once

#include "aqc/code.hpp"
#include "aqc/quantum.hpp"

namespace aqc {

// Group character code C_q(r, l; t) of length t^l over F_q, t | q - 1.
// Index j of (Z/tZ)^l is read as little-endian base-t digits.
struct GcSpec {
    std::uint32_t q = 0;
    std::uint32_t t = 0;
    std::uint32_t l = 0;
    std::uint32_t r = 0;
};

struct GcParams {
    std::size_t n, k, d;
};

void gc_validate(const GcSpec& s);
// zeta = g^((q-1)/t) for the fixed generator g of F_q.
Elem gc_zeta(const Field& F, std::uint32_t t);
Code gc_code(const GcSpec& s);
// Dimension by counting {a : ||a|| <= r}; d = (t-b) t^(l-1-a) with r = a(t-1)+b.
GcParams gc_params(const GcSpec& s);
std::size_t gc_count(std::uint32_t t, std::uint32_t l, std::uint32_t r);

// Pair C1 = C(r1)^perp, C2 = C(r2) under the Euclidean product.
NestedPair gc_pair(std::uint32_t r1, std::uint32_t r2, std::uint32_t l, std::uint32_t t, std::uint32_t q);
// Parameters from the closed formulas; the nesting C(r1) in C(r2) is checked.
AqcParams gc_aqc(std::uint32_t r1, std::uint32_t r2, std::uint32_t l, std::uint32_t t, std::uint32_t q);

}  // namespace aqc
