#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aqc/code.hpp"
#include "aqc/galois.hpp"

namespace aqc {

// F_q-linear cyclic code with generator polynomial g | x^n - 1.
struct CyclicCode {
    FieldPtr F;
    std::size_t n = 0;
    Poly g;

    Code code() const;
};

CyclicCode make_cyclic(FieldPtr F, std::size_t n, const Poly& g);
Code cyclic_from_gen(FieldPtr F, std::size_t n, const Poly& g);
// Cyclic code generated by h*g; requires h*g | x^n - 1.
Code cyclic_subcode(const CyclicCode& C, const Poly& h);

// F_r-span of every cyclic shift of every polynomial.
Code cyclic_module_span(FieldPtr F, std::size_t n, const std::vector<Poly>& polys);
bool is_shift_closed(const Code& C);

// Triangular generator set of an F_r-linear cyclic code over F_q:
// row i is g_i = sum_{j <= m-1-i} w^j a[i][j] with a[i][j] in F_r[x].
// A diagonal equal to x^n - 1 stands for an empty row.
struct SubfieldCyclicCode {
    FieldPtr F;
    std::size_t n = 0;
    std::vector<std::vector<Poly>> a;

    std::size_t rows() const { return a.size(); }
    const Poly& diagonal(std::size_t i) const { return a[i].back(); }
    Poly row_poly(std::size_t i) const;
    // log_r |C| from the diagonal degrees.
    std::size_t log_size() const;
    Code code() const;
};

SubfieldCyclicCode canonical_subfield_cyclic(FieldPtr F, std::size_t n, const std::vector<Poly>& raw_gens);
// Throws NotShiftClosed unless C is cyclic.
SubfieldCyclicCode canonical_subfield_cyclic(const Code& C);

// F_r[x]-module generated by b_i * g_i; b_i must divide (x^n - 1)/a_{i,m-1-i}.
Code subfield_cyclic_subcode(const SubfieldCyclicCode& C, const std::vector<Poly>& b);

// "(1 0 1 1)", "1 0 1 1" or "(1011)"; digits are prime-subfield elements and
// w, w^k, w^{k} are powers of the generator.
Poly parse_poly(std::string_view text, const Field& F);

struct NamedPoly {
    std::string name;
    Poly poly;
};

// Comma-separated list of generator expressions such as
//   g4=(1011)+w(11), g2=(111111)
//   (1001001001001)(111)g1, (11 011)g2 + (1001)(011)g1
// A term is an optional w-power, any number of parenthesised polynomials and
// an optional reference to a name defined in env. Products are reduced
// modulo x^n - 1.
std::vector<NamedPoly> parse_gen_shorthand(std::string_view text, const Field& F, std::size_t n,
                                           const std::vector<NamedPoly>& env = {});

}  // namespace aqc
