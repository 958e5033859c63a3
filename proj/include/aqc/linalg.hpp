#pragma once

#include <cstddef>
#include <vector>

#include "aqc/galois.hpp"

namespace aqc {

// Reduced row echelon form. Entries are field elements; if every input entry
// lies in a subfield, so does every entry of the result.
struct Echelon {
    std::size_t width = 0;
    std::vector<Vec> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return rows.size(); }
};

Echelon rref(const Field& F, std::vector<Vec> rows, std::size_t width);

// Residual of v after eliminating every pivot column of e.
Vec reduce(const Field& F, const Echelon& e, Vec v);

bool is_zero_vec(const Vec& v);

// Basis of {x : row . x = 0 for every row}.
std::vector<Vec> null_space(const Field& F, const std::vector<Vec>& rows, std::size_t width);

}  // namespace aqc
