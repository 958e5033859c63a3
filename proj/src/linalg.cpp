#include "aqc/linalg.hpp"

#include <algorithm>

namespace aqc {

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

Echelon rref(const Field& F, std::vector<Vec> rows, std::size_t width) {
    Echelon e;
    e.width = width;
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        Vec& pr = rows[r];
        const Elem s = F.inv(pr[col]);
        for (std::size_t k = col; k < width; ++k) pr[k] = F.mul(pr[k], s);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Elem f = rows[i][col];
            Vec& ri = rows[i];
            for (std::size_t k = col; k < width; ++k)
                if (pr[k]) ri[k] = F.sub(ri[k], F.mul(f, pr[k]));
        }
        e.pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    e.rows = std::move(rows);
    return e;
}

Vec reduce(const Field& F, const Echelon& e, Vec v) {
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const Elem f = v[e.pivots[i]];
        if (f == 0) continue;
        const Vec& row = e.rows[i];
        for (std::size_t k = e.pivots[i]; k < e.width; ++k)
            if (row[k]) v[k] = F.sub(v[k], F.mul(f, row[k]));
    }
    return v;
}

std::vector<Vec> null_space(const Field& F, const std::vector<Vec>& rows, std::size_t width) {
    Echelon e = rref(F, rows, width);
    std::vector<bool> is_pivot(width, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < width; ++free) {
        if (is_pivot[free]) continue;
        Vec x(width, 0);
        x[free] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = F.neg(e.rows[i][free]);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace aqc
