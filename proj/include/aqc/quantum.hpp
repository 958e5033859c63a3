#pragma once

#include <string>

#include "aqc/code.hpp"

namespace aqc {

// Parameters [[n, k, dz/dx]]_q of an asymmetric quantum code. k = log_q K is
// rational because subfield-linear pairs give K = r^s.
struct AqcParams {
    std::uint32_t q = 0;
    std::size_t n = 0;
    Rational k;
    std::size_t dz = 0;
    std::size_t dx = 0;
    bool pure = false;
    InnerProduct kind = InnerProduct::Euclidean;
    bool swapped = false;

    // "[[7,3,3/2]]_2"; k is written as p/q when fractional.
    std::string str() const;
    bool same_parameters(const AqcParams& o) const {
        return q == o.q && n == o.n && k == o.k && dz == o.dz && dx == o.dx;
    }
};

// C1^{perp kind} must lie in C2.
struct NestedPair {
    Code C1;
    Code C2;
    InnerProduct kind;
};

NestedPair make_pair(const Code& C1, const Code& C2, InnerProduct kind);

AqcParams css_like(const NestedPair& pair);
AqcParams self_orthogonal_aqc(const Code& C, InnerProduct kind);

// Needs an F_q-linear C with a word of full weight; returns [[n, k-1, d/2]].
AqcParams full_weight_aqc(const Code& C);
NestedPair full_weight_pair(const Code& C);

// Moves a pair between TraceEuclidean and TraceHermitian (or Euclidean and
// Hermitian) keeping C2 and mapping C1 by c -> a conj(c).
NestedPair convert_pair(const NestedPair& pair, InnerProduct target);

struct SingletonCheck {
    bool meets;
    Rational slack;
};
// slack = n - dz - dx + 2 - k.
SingletonCheck quantum_singleton(const AqcParams& p);

// Recipes "4-1-2-2", "5-2-2-2" and "13-1-5-3" over F_2.
NestedPair adhoc_pair(const std::string& recipe);

}  // namespace aqc
