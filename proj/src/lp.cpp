#include "aqc/lp.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aqc/code.hpp"
#include "aqc/error.hpp"

namespace aqc {

namespace {

enum class Status { Optimal, Infeasible, Unbounded };

struct SimplexResult {
    Status status;
    RVec x;
    RVec y;  // Farkas multipliers per input row when infeasible
    Rational value;
};

// Dense tableau for  E x = b (eq rows) and G x >= g (ge rows), x >= 0.
// Columns: originals, one surplus per ge row, one artificial per row.
class Simplex {
public:
    Simplex(const RMat& eq, const RVec& be, const RMat& ge, const RVec& bg, std::size_t nvars)
        : nv_(nvars), ns_(ge.size()), m_(eq.size() + ge.size()) {
        art0_ = nv_ + ns_;
        width_ = art0_ + m_;
        T_.assign(m_, RVec(width_));
        rhs_.resize(m_);
        sigma_.resize(m_);
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const bool is_eq = i < eq.size();
            const RVec& row = is_eq ? eq[i] : ge[i - eq.size()];
            const Rational& b = is_eq ? be[i] : bg[i - eq.size()];
            if (row.size() != nv_) throw Error(Errc::DimMismatch, "row width differs from variable count");
            sigma_[i] = b < 0 ? -1 : 1;
            for (std::size_t j = 0; j < nv_; ++j)
                if (row[j] != 0) T_[i][j] = sigma_[i] < 0 ? Rational(-row[j]) : row[j];
            if (!is_eq) T_[i][nv_ + i - eq.size()] = -sigma_[i];
            T_[i][art0_ + i] = 1;
            rhs_[i] = sigma_[i] < 0 ? Rational(-b) : b;
            basis_[i] = art0_ + i;
        }
    }

    SimplexResult run(const RVec* objective) {
        // phase one: minimize the sum of artificials
        z_.assign(width_, 0);
        for (std::size_t j = art0_; j < width_; ++j) z_[j] = 1;
        value_ = 0;
        for (std::size_t i = 0; i < m_; ++i) price_out(i, 1);
        if (!iterate(width_)) throw Error(Errc::OutOfRange, "phase one cannot be unbounded");
        if (value_ != 0) {
            SimplexResult res{Status::Infeasible, {}, RVec(m_), value_};
            for (std::size_t i = 0; i < m_; ++i) {
                Rational y = 1 - z_[art0_ + i];
                res.y[i] = sigma_[i] < 0 ? Rational(-y) : y;
            }
            return res;
        }
        drive_out_artificials();
        Rational value = 0;
        if (objective) {
            z_.assign(width_, 0);
            for (std::size_t j = 0; j < nv_; ++j) z_[j] = -(*objective)[j];
            value_ = 0;
            for (std::size_t i = 0; i < T_.size(); ++i) {
                Rational c = basis_[i] < nv_ ? Rational(-(*objective)[basis_[i]]) : Rational(0);
                if (c != 0) price_out(i, c);
            }
            if (!iterate(art0_)) return {Status::Unbounded, {}, {}, 0};
            value = value_;
        }
        RVec x(nv_);
        for (std::size_t i = 0; i < T_.size(); ++i)
            if (basis_[i] < nv_) x[basis_[i]] = rhs_[i];
        return {Status::Optimal, x, {}, value};
    }

private:
    // Subtract c times row i from the reduced costs.
    void price_out(std::size_t i, const Rational& c) {
        for (std::size_t j = 0; j < width_; ++j)
            if (T_[i][j] != 0) z_[j] -= c * T_[i][j];
        value_ -= c * rhs_[i];
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rational p = T_[r][c];
        for (auto& v : T_[r])
            if (v != 0) v /= p;
        rhs_[r] /= p;
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < width_; ++j)
            if (T_[r][j] != 0) nz.push_back(j);
        for (std::size_t i = 0; i < T_.size(); ++i) {
            if (i == r || T_[i][c] == 0) continue;
            const Rational f = T_[i][c];
            for (std::size_t j : nz) T_[i][j] -= f * T_[r][j];
            rhs_[i] -= f * rhs_[r];
        }
        if (z_[c] != 0) {
            const Rational f = z_[c];
            for (std::size_t j : nz) z_[j] -= f * T_[r][j];
            value_ -= f * rhs_[r];
        }
        basis_[r] = c;
    }

    // Bland's rule over columns [0, limit). False when unbounded.
    bool iterate(std::size_t limit) {
        for (;;) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j)
                if (z_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == limit) return true;
            std::size_t leave = T_.size();
            Rational best;
            for (std::size_t i = 0; i < T_.size(); ++i) {
                if (T_[i][enter] <= 0) continue;
                Rational ratio = rhs_[i] / T_[i][enter];
                if (leave == T_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == T_.size()) return false;
            pivot(leave, enter);
        }
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < T_.size();) {
            if (basis_[i] < art0_) {
                ++i;
                continue;
            }
            std::size_t j = 0;
            while (j < art0_ && T_[i][j] == 0) ++j;
            if (j < art0_) {
                pivot(i, j);
                ++i;
            } else {
                T_.erase(T_.begin() + long(i));
                rhs_.erase(rhs_.begin() + long(i));
                basis_.erase(basis_.begin() + long(i));
            }
        }
    }

    std::size_t nv_, ns_, m_, art0_ = 0, width_ = 0;
    RMat T_;
    RVec rhs_;
    RVec z_;
    Rational value_;
    std::vector<int> sigma_;
    std::vector<std::size_t> basis_;
};

Rational dot(const RVec& a, const RVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

std::uint32_t exact_root(std::uint32_t q, int m) {
    for (std::uint32_t r = 2; r <= q; ++r) {
        std::uint64_t p = 1;
        for (int i = 0; i < m; ++i) p *= r;
        if (p == q) return r;
        if (p > q) break;
    }
    throw Error(Errc::InconsistentDims, std::to_string(q) + " is not an m-th power");
}

}  // namespace

LpOutcome solve_feasibility(const LpProblem& prob) {
    if (prob.M1.empty() && prob.M2.empty()) return {true, RVec(prob.nvars), {}};
    Simplex s(prob.M1, prob.r, prob.M2, prob.h, prob.nvars);
    SimplexResult res = s.run(nullptr);
    LpOutcome out;
    if (res.status == Status::Optimal) {
        out.feasible = true;
        out.witness = std::move(res.x);
        if (!verify_witness(prob, out.witness)) throw Error(Errc::OutOfRange, "simplex witness failed verification");
        return out;
    }
    out.cert.s1.assign(res.y.begin(), res.y.begin() + long(prob.M1.size()));
    out.cert.s2.assign(res.y.begin() + long(prob.M1.size()), res.y.end());
    if (!verify_certificate(prob, out.cert)) throw Error(Errc::OutOfRange, "simplex certificate failed verification");
    return out;
}

RVec combined_row(const LpProblem& prob, const Certificate& c) {
    if (c.s1.size() != prob.M1.size() || c.s2.size() != prob.M2.size())
        throw Error(Errc::DimMismatch, "certificate length differs from row count");
    RVec out(prob.nvars);
    for (std::size_t i = 0; i < prob.M1.size(); ++i)
        if (c.s1[i] != 0)
            for (std::size_t j = 0; j < prob.nvars; ++j) out[j] += c.s1[i] * prob.M1[i][j];
    for (std::size_t i = 0; i < prob.M2.size(); ++i)
        if (c.s2[i] != 0)
            for (std::size_t j = 0; j < prob.nvars; ++j) out[j] += c.s2[i] * prob.M2[i][j];
    return out;
}

bool verify_certificate(const LpProblem& prob, const Certificate& c) {
    RVec row = combined_row(prob, c);
    for (const auto& v : c.s2)
        if (v < 0) return false;
    for (const auto& v : row)
        if (v > 0) return false;
    RVec h = prob.h;
    h.resize(prob.M2.size());
    return dot(c.s1, prob.r) + dot(c.s2, h) > 0;
}

bool verify_witness(const LpProblem& prob, const RVec& x) {
    if (x.size() != prob.nvars) return false;
    for (const auto& v : x)
        if (v < 0) return false;
    for (std::size_t i = 0; i < prob.M1.size(); ++i)
        if (dot(prob.M1[i], x) != prob.r[i]) return false;
    for (std::size_t i = 0; i < prob.M2.size(); ++i)
        if (dot(prob.M2[i], x) < (i < prob.h.size() ? prob.h[i] : Rational(0))) return false;
    return true;
}

Rational delsarte_max(std::size_t n, std::uint32_t q, std::size_t d, std::optional<std::size_t> dual_d) {
    if (d < 1 || d > n) throw Error(Errc::BadRange, "need 1 <= d <= n");
    if (dual_d && (*dual_d < 1 || *dual_d > n + 1)) throw Error(Errc::BadRange, "need 1 <= dual distance <= n+1");
    const auto K = krawtchouk_matrix(long(n), long(q));
    const std::size_t N = n + 1;
    RMat eq, ge;
    RVec be, bg;
    RVec unit(N);
    unit[0] = 1;
    eq.push_back(unit);
    be.push_back(1);
    for (std::size_t s = 1; s < d; ++s) {
        RVec row(N);
        row[s] = 1;
        eq.push_back(row);
        be.push_back(0);
    }
    for (std::size_t j = 0; j < N; ++j) {
        RVec row(N);
        for (std::size_t i = 0; i < N; ++i) row[i] = K[j][i];
        const bool zero = dual_d && j >= 1 && j < *dual_d;
        (zero ? eq : ge).push_back(row);
        (zero ? be : bg).push_back(0);
    }
    RVec obj(N, 1);
    Simplex s(eq, be, ge, bg, N);
    SimplexResult res = s.run(&obj);
    if (res.status == Status::Infeasible) return 0;
    if (res.status == Status::Unbounded) throw Error(Errc::OutOfRange, "Delsarte program is unbounded");
    return res.value;
}

long dlog(std::size_t n, std::uint32_t q, std::uint32_t r, std::size_t d, std::optional<std::size_t> dual_d) {
    Rational mx = delsarte_max(n, q, d, dual_d);
    if (mx < 1) return -1;
    return floor_log(mx, r);
}

Region feasible_region(std::size_t n, std::uint32_t q, int m, std::size_t dx, std::size_t dz) {
    if (dx < 2 || dz < 2 || dx > n || dz > n) throw Error(Errc::BadRange, "need 2 <= dx, dz <= n");
    const std::uint32_t r = exact_root(q, m);
    Region reg;
    reg.alpha = dlog(n, q, r, dx, dz);
    reg.beta = dlog(n, q, r, dz, dx);
    const long mn = long(m) * long(n);
    for (long a = 1; a <= reg.alpha; ++a)
        for (long b = std::max(1L, mn - reg.beta); a + b <= reg.alpha && b < mn - a; ++b) reg.points.emplace_back(a, b);
    return reg;
}

LpProblem build_css_lp(std::size_t n, std::uint32_t q, int m, long a, long b, std::size_t dx, std::size_t dz,
                       const Rational& gap) {
    const std::uint32_t r = exact_root(q, m);
    const long mn = long(m) * long(n);
    if (a < 0 || b < 0 || a + b > mn || dx < 1 || dz < 1 || dx > n || dz > n)
        throw Error(Errc::InconsistentDims, "dimensions out of range");
    const auto K = krawtchouk_matrix(long(n), long(q));
    const std::size_t N = n + 1;
    LpProblem P;
    P.nvars = 2 * N;
    P.n = n;
    P.q = q;
    P.m = m;
    P.a = a;
    P.b = b;
    P.dx = dx;
    P.dz = dz;
    const Rational c2 = ipow(BigInt(r), (unsigned long)(mn - b));  // |C2|
    const Rational c1 = ipow(BigInt(r), (unsigned long)(a + b));   // |C1|

    auto unit = [&](std::size_t col) {
        RVec row(2 * N);
        row[col] = 1;
        return row;
    };
    // (K X)_j for the block starting at off
    auto kraw = [&](std::size_t off, std::size_t j) {
        RVec row(2 * N);
        for (std::size_t i = 0; i < N; ++i) row[off + i] = K[j][i];
        return row;
    };
    // s * Y_j - (K X)_j with X at xoff and Y at yoff
    auto couple = [&](std::size_t yoff, const Rational& s, std::size_t xoff, std::size_t j) {
        RVec row(2 * N);
        for (std::size_t i = 0; i < N; ++i) row[xoff + i] = -Rational(K[j][i]);
        row[yoff + j] += s;
        return row;
    };
    auto eq = [&](RVec row, const Rational& rhs) {
        P.M1.push_back(std::move(row));
        P.r.push_back(rhs);
    };
    auto ge = [&](RVec row, const Rational& rhs) {
        P.M2.push_back(std::move(row));
        P.h.push_back(rhs);
    };
    const std::size_t A = 0, B = N;

    eq(unit(A), 1);
    for (std::size_t j = 1; j < dz; ++j) eq(unit(A + j), 0);
    for (std::size_t j = 1; j < dx; ++j) eq(kraw(A, j), 0);
    eq(unit(B), 1);
    for (std::size_t j = 1; j < dx; ++j) eq(unit(B + j), 0);
    for (std::size_t j = 1; j < dz; ++j) eq(kraw(B, j), 0);
    for (std::size_t j = 0; j < dx; ++j) eq(couple(B, c2, A, j), 0);
    for (std::size_t j = 0; j < dz; ++j) eq(couple(A, c1, B, j), 0);

    for (std::size_t j = dx; j <= n; ++j) ge(kraw(A, j), 0);
    for (std::size_t j = dz; j <= n; ++j) ge(kraw(B, j), 0);
    for (std::size_t j = dx; j <= n; ++j) ge(couple(B, c2, A, j), j == dx ? Rational(gap * c2) : Rational(0));
    for (std::size_t j = dz; j <= n; ++j) ge(couple(A, c1, B, j), j == dz ? Rational(gap * c1) : Rational(0));
    return P;
}

namespace {

BoundResult bound_impl(std::size_t n, std::uint32_t q, int m, std::size_t dx, std::size_t dz, const Rational& gap,
                       bool linear) {
    Region reg = feasible_region(n, q, m, dx, dz);
    BoundResult out;
    for (auto it = reg.points.rbegin(); it != reg.points.rend(); ++it) {
        const auto [a, b] = *it;
        if (out.point && a < out.point->first) break;
        if (linear && (a % m != 0 || b % m != 0)) continue;
        if (out.point) continue;
        if (solve_feasibility(build_css_lp(n, q, m, a, b, dx, dz, gap)).feasible) {
            out.point = *it;
            out.k = Rational(a, m);
            out.k->canonicalize();
        }
    }
    return out;
}

}  // namespace

BoundResult lp_bound_k(std::size_t n, std::uint32_t q, int m, std::size_t dx, std::size_t dz, const Rational& gap) {
    return bound_impl(n, q, m, dx, dz, gap, false);
}

BoundResult lp_bound_k_linear(std::size_t n, std::uint32_t q, int m, std::size_t dx, std::size_t dz,
                              const Rational& gap) {
    return bound_impl(n, q, m, dx, dz, gap, true);
}

// ------------------------------------------------------------ certificates

using nlohmann::json;

CertificateFile read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    json j;
    try {
        in >> j;
        CertificateFile f;
        f.n = j.at("n").get<std::size_t>();
        f.q = j.at("q").get<std::uint32_t>();
        f.m = j.value("m", 1);
        Rational k = parse_rational(j.at("k").get<std::string>()) * f.m;
        Rational kp = parse_rational(j.at("kp").get<std::string>()) * f.m;
        if (k.get_den() != 1 || kp.get_den() != 1) throw Error(Errc::InconsistentDims, "mk and mk' must be integers");
        f.a = k.get_num().get_si();
        f.b = kp.get_num().get_si();
        f.dx = j.at("dx").get<std::size_t>();
        f.dz = j.at("dz").get<std::size_t>();
        f.row_order = j.at("row_order").get<std::vector<std::size_t>>();
        f.signs = j.at("signs").get<std::vector<int>>();
        for (const auto& s : j.at("s1")) f.cert.s1.push_back(parse_rational(s.get<std::string>()));
        for (const auto& s : j.at("s2")) f.cert.s2.push_back(parse_rational(s.get<std::string>()));
        return f;
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
}

Certificate normalized_certificate(const CertificateFile& f) {
    const std::size_t n1 = f.cert.s1.size(), total = n1 + f.cert.s2.size();
    if (f.row_order.size() != total || f.signs.size() != total)
        throw Error(Errc::DimMismatch, "row_order and signs must cover every row");
    RVec flat(f.cert.s1);
    flat.insert(flat.end(), f.cert.s2.begin(), f.cert.s2.end());
    RVec out(total);
    for (std::size_t i = 0; i < total; ++i) {
        if (f.row_order[i] >= total) throw Error(Errc::DimMismatch, "row index out of range");
        out[f.row_order[i]] = f.signs[i] < 0 ? Rational(-flat[i]) : flat[i];
    }
    return {RVec(out.begin(), out.begin() + long(n1)), RVec(out.begin() + long(n1), out.end())};
}

std::string certificate_json(const LpProblem& p, const Certificate& c) {
    json j;
    j["n"] = p.n;
    j["q"] = p.q;
    j["m"] = p.m;
    Rational k(p.a, p.m), kp(p.b, p.m);
    k.canonicalize();
    kp.canonicalize();
    j["k"] = to_string(k);
    j["kp"] = to_string(kp);
    j["dx"] = p.dx;
    j["dz"] = p.dz;
    std::vector<std::size_t> order(p.M1.size() + p.M2.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    j["row_order"] = order;
    j["signs"] = std::vector<int>(order.size(), 1);
    std::vector<std::string> s1, s2;
    for (const auto& v : c.s1) s1.push_back(to_string(v));
    for (const auto& v : c.s2) s2.push_back(to_string(v));
    j["s1"] = s1;
    j["s2"] = s2;
    return j.dump();
}

}  // namespace aqc
