#include "aqc/code.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <optional>

namespace aqc {

std::string to_string(InnerProduct k) {
    switch (k) {
        case InnerProduct::Euclidean: return "E";
        case InnerProduct::TraceEuclidean: return "TrE";
        case InnerProduct::Hermitian: return "H";
        case InnerProduct::TraceHermitian: return "TrH";
    }
    return "?";
}

InnerProduct parse_inner_product(const std::string& s) {
    if (s == "E" || s == "Euclidean") return InnerProduct::Euclidean;
    if (s == "TrE" || s == "TraceEuclidean") return InnerProduct::TraceEuclidean;
    if (s == "H" || s == "Hermitian") return InnerProduct::Hermitian;
    if (s == "TrH" || s == "TraceHermitian") return InnerProduct::TraceHermitian;
    throw ParseError(0, "unknown inner product '" + s + "'");
}

bool kind_valid(const Field& F, InnerProduct k) {
    if (k == InnerProduct::Hermitian || k == InnerProduct::TraceHermitian) return F.m() == 2;
    return true;
}

BigInt WeightDistribution::total() const {
    BigInt s = 0;
    for (const auto& a : counts) s += a;
    return s;
}

struct Code::Cache {
    std::mutex mu;
    std::optional<WeightDistribution> wd;
};

Vec expand(const Field& F, const Vec& v) {
    const std::size_t m = F.m();
    Vec x(v.size() * m);
    for (std::size_t i = 0; i < v.size(); ++i) F.subfield_coords(v[i], x.data() + i * m);
    return x;
}

Vec pack(const Field& F, const Vec& x, std::size_t n) {
    const std::size_t m = F.m();
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = F.from_subfield_coords(x.data() + i * m);
    return v;
}

std::size_t hamming_weight(const Vec& v) {
    return std::size_t(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

Code::Code(FieldPtr F, std::size_t n, const std::vector<Vec>& spanning)
    : F_(std::move(F)), n_(n), cache_(std::make_shared<Cache>()) {
    std::vector<Vec> rows;
    rows.reserve(spanning.size());
    for (const auto& v : spanning) {
        if (v.size() != n_) throw Error(Errc::LengthMismatch, "generator length differs from code length");
        for (Elem e : v)
            if (e >= F_->q()) throw Error(Errc::OutOfRange, "element outside the field");
        rows.push_back(expand(*F_, v));
    }
    ech_ = rref(*F_, std::move(rows), n_ * F_->m());
    for (const auto& row : ech_.rows) gens_.push_back(pack(*F_, row, n_));
    fq_linear_ = true;
    if (F_->m() > 1) {
        const Elem w = F_->generator();
        for (const auto& g : gens_) {
            Vec h(n_);
            for (std::size_t i = 0; i < n_; ++i) h[i] = F_->mul(w, g[i]);
            if (!contains(h)) {
                fq_linear_ = false;
                break;
            }
        }
    }
}

Code Code::zero(FieldPtr F, std::size_t n) {
    return Code(std::move(F), n, {});
}

Code Code::full(FieldPtr F, std::size_t n) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        Vec v(n, 0);
        v[i] = 1;
        rows.push_back(v);
    }
    return fq_span(std::move(F), n, rows);
}

Code Code::fq_span(FieldPtr F, std::size_t n, const std::vector<Vec>& spanning) {
    std::vector<Vec> rows;
    for (const auto& v : spanning) {
        Elem s = 1;
        for (int j = 0; j < F->m(); ++j) {
            Vec h(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) h[i] = F->mul(s, v[i]);
            rows.push_back(std::move(h));
            s = F->mul(s, F->generator());
        }
    }
    return Code(F, n, rows);
}

BigInt Code::size() const {
    return ipow(BigInt(F_->r()), dim());
}

bool Code::contains(const Vec& v) const {
    if (v.size() != n_) throw Error(Errc::LengthMismatch, "vector length differs from code length");
    return is_zero_vec(reduce(*F_, ech_, expand(*F_, v)));
}

bool Code::operator==(const Code& o) const {
    return F_ == o.F_ && n_ == o.n_ && gens_ == o.gens_;
}

Elem inner_product(const Field& F, const Vec& u, const Vec& v, InnerProduct kind) {
    if (u.size() != v.size()) throw Error(Errc::LengthMismatch, "inner product of vectors of different length");
    if (!kind_valid(F, kind)) throw Error(Errc::InvalidKindForField, to_string(kind) + " needs q = r^2");
    const bool herm = kind == InnerProduct::Hermitian || kind == InnerProduct::TraceHermitian;
    Elem s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s = F.add(s, F.mul(u[i], herm ? F.conj(v[i]) : v[i]));
    switch (kind) {
        case InnerProduct::Euclidean:
        case InnerProduct::Hermitian: return s;
        case InnerProduct::TraceEuclidean: return F.trace(s);
        case InnerProduct::TraceHermitian: return F.trace(F.p() == 2 ? s : F.mul(F.skew_alpha(), s));
    }
    return s;
}

std::uint64_t enumeration_cap() {
    if (const char* env = std::getenv("AQC_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return std::uint64_t(1) << 24;
}

namespace {

// Number of codewords p^k if it fits under the cap.
std::optional<std::uint64_t> bounded_count(int p, std::size_t k, std::uint64_t cap) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (c > cap / std::uint64_t(p)) return std::nullopt;
        c *= std::uint64_t(p);
    }
    if (c > cap) return std::nullopt;
    return c;
}

struct SparseVec {
    std::vector<std::uint32_t> idx;
    std::vector<Elem> val;
};

std::vector<SparseVec> fp_basis(const Code& C) {
    const Field& F = C.field();
    std::vector<SparseVec> basis;
    for (const auto& g : C.gens())
        for (Elem b : F.subfield_basis()) {
            SparseVec s;
            for (std::size_t i = 0; i < g.size(); ++i) {
                Elem e = F.mul(g[i], b);
                if (e) {
                    s.idx.push_back(std::uint32_t(i));
                    s.val.push_back(e);
                }
            }
            basis.push_back(std::move(s));
        }
    return basis;
}

// Odometer walk; f receives the word and its weight.
template <typename Fn>
void walk(const Code& C, Fn&& f) {
    const Field& F = C.field();
    const std::size_t k = C.dim() * std::size_t(F.l());
    if (!bounded_count(F.p(), k, enumeration_cap()))
        throw Error(Errc::CodeTooLarge, "code has more than " + std::to_string(enumeration_cap()) + " words");
    auto basis = fp_basis(C);
    Vec word(C.length(), 0);
    std::size_t weight = 0;
    std::vector<int> digit(k, 0);
    const int p = F.p();
    if (!f(word, weight)) return;
    for (;;) {
        std::size_t j = 0;
        for (; j < k; ++j) {
            const SparseVec& b = basis[j];
            for (std::size_t t = 0; t < b.idx.size(); ++t) {
                Elem& x = word[b.idx[t]];
                const bool was = x != 0;
                x = F.add(x, b.val[t]);
                weight += (x != 0);
                weight -= was;
            }
            if (++digit[j] < p) break;
            digit[j] = 0;
        }
        if (j == k) return;
        if (!f(word, weight)) return;
    }
}

WeightDistribution enumerate_distribution(const Code& C) {
    std::vector<std::uint64_t> counts(C.length() + 1, 0);
    walk(C, [&](const Vec&, std::size_t w) {
        ++counts[w];
        return true;
    });
    WeightDistribution wd;
    for (auto c : counts) wd.counts.emplace_back(static_cast<unsigned long>(c));
    return wd;
}

}  // namespace

void enumerate_codewords(const Code& C, const std::function<bool(const Vec&)>& f) {
    walk(C, [&](const Vec& w, std::size_t) { return f(w); });
}

const WeightDistribution& Code::weight_distribution() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->wd) return *cache_->wd;
    const std::size_t mn = n_ * std::size_t(F_->m());
    if (dim() <= mn - dim()) {
        cache_->wd = enumerate_distribution(*this);
    } else {
        Code D = dual(*this, InnerProduct::TraceEuclidean);
        auto t = macwilliams_transform(D.weight_distribution(), D.size(), long(n_), long(F_->q()));
        WeightDistribution wd;
        for (const auto& x : t) {
            if (x.get_den() != 1 || x < 0) throw Error(Errc::SizeMismatch, "MacWilliams transform of a code is not integral");
            wd.counts.push_back(x.get_num());
        }
        cache_->wd = std::move(wd);
    }
    return *cache_->wd;
}

namespace {

bool distribution_feasible(const Code& C) {
    const Field& F = C.field();
    const std::size_t mn = C.length() * std::size_t(F.m());
    const std::size_t k = std::min(C.dim(), mn - C.dim()) * std::size_t(F.l());
    return bounded_count(F.p(), k, enumeration_cap()).has_value();
}

// Large but enumerable codes are usually much faster through information sets.
bool prefer_information_sets(const Code& C) {
    if (!C.is_fq_linear()) return false;
    const Field& F = C.field();
    const std::size_t mn = C.length() * std::size_t(F.m());
    const std::size_t k = std::min(C.dim(), mn - C.dim()) * std::size_t(F.l());
    return !bounded_count(F.p(), k, std::min<std::uint64_t>(enumeration_cap(), std::uint64_t(1) << 20)).has_value();
}

// Depth-first walk over messages of weight exactly t on rows [start, k),
// first nonzero coefficient one. bufs[d] holds the partial word at depth d.
class MessageWalk {
public:
    MessageWalk(const Field& F, const std::vector<Vec>& G, const std::function<bool(const Vec&)>& keep,
                std::size_t& best, std::uint64_t& evaluated, std::uint64_t budget)
        : F_(F), G_(G), keep_(keep), best_(best), evaluated_(evaluated), budget_(budget) {}

    // False when the budget ran out before the level was complete.
    bool run(std::size_t t) {
        bufs_.assign(t + 1, Vec(G_.empty() ? 0 : G_[0].size(), 0));
        return walk(0, t, 0);
    }

private:
    bool walk(std::size_t start, std::size_t t, std::size_t depth) {
        const Vec& word = bufs_[depth];
        Vec& next = bufs_[depth + 1];
        for (std::size_t i = start; i + t <= G_.size(); ++i) {
            const Vec& g = G_[i];
            const std::uint32_t top = depth == 0 ? 2 : F_.q();
            for (std::uint32_t e = 1; e < top; ++e) {
                const Elem c = depth == 0 ? 1 : F_.exp(e - 1);
                for (std::size_t j = 0; j < word.size(); ++j) next[j] = g[j] ? F_.add(word[j], F_.mul(c, g[j])) : word[j];
                if (t == 1) {
                    if (++evaluated_ > budget_) return false;
                    const std::size_t w = hamming_weight(next);
                    if (w > 0 && w < best_ && keep_(next)) best_ = w;
                } else if (!walk(i + 1, t - 1, depth + 1)) {
                    return false;
                }
            }
        }
        return true;
    }

    const Field& F_;
    const std::vector<Vec>& G_;
    const std::function<bool(const Vec&)>& keep_;
    std::size_t& best_;
    std::uint64_t& evaluated_;
    std::uint64_t budget_;
    std::vector<Vec> bufs_;
};

struct SearchResult {
    std::size_t lower = 1;
    std::optional<std::size_t> upper;
    bool complete = false;
};

// Brouwer-Zimmermann search over disjoint information sets. A set of rank
// r_j that has been fully enumerated up to message weight t guarantees
// max(0, t + 1 - (k - r_j)) nonzero positions of every word not yet seen.
SearchResult information_set_search(const Code& C, const std::function<bool(const Vec&)>& keep,
                                    std::uint64_t budget) {
    if (!C.is_fq_linear()) throw Error(Errc::CodeTooLarge, "information sets need a code linear over the full field");
    const Field& F = C.field();
    const std::size_t n = C.length();
    const Echelon base = rref(F, C.gens(), n);
    const std::size_t k = base.rank();
    SearchResult res;
    if (k == 0) {
        res.complete = true;
        return res;
    }

    // Generator matrices whose pivots cover disjoint coordinate sets.
    std::vector<std::vector<Vec>> mats;
    std::vector<std::size_t> ranks;
    std::vector<bool> used(n, false);
    for (;;) {
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < n; ++i)
            if (!used[i]) order.push_back(i);
        const std::size_t fresh = order.size();
        if (fresh == 0) break;
        for (std::size_t i = 0; i < n; ++i)
            if (used[i]) order.push_back(i);
        std::vector<Vec> perm;
        for (const auto& row : base.rows) {
            Vec v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = row[order[i]];
            perm.push_back(std::move(v));
        }
        Echelon e = rref(F, perm, n);
        std::size_t r = 0;
        for (auto pc : e.pivots)
            if (pc < fresh) {
                used[order[pc]] = true;
                ++r;
            }
        if (r == 0) break;
        std::vector<Vec> G;
        for (const auto& row : e.rows) {
            Vec v(n);
            for (std::size_t i = 0; i < n; ++i) v[order[i]] = row[i];
            G.push_back(std::move(v));
        }
        mats.push_back(std::move(G));
        ranks.push_back(r);
    }

    std::size_t best = n + 1;
    std::uint64_t evaluated = 0;
    std::vector<std::size_t> done(mats.size(), 0);
    auto bound = [&] {
        std::size_t lb = 0;
        for (std::size_t j = 0; j < mats.size(); ++j)
            if (done[j] + 1 > k - ranks[j]) lb += done[j] + 1 - (k - ranks[j]);
        return std::max<std::size_t>(lb, 1);
    };
    for (std::size_t t = 1; t <= k; ++t) {
        for (std::size_t j = 0; j < mats.size(); ++j) {
            // a set whose guarantee would stay zero is not worth enumerating
            if (t + 1 <= k - ranks[j]) continue;
            MessageWalk walk(F, mats[j], keep, best, evaluated, budget);
            const bool finished = walk.run(t);
            if (best <= n) res.upper = best;
            if (!finished) {
                res.lower = std::min(bound(), best);
                return res;
            }
            done[j] = t;
            if (best <= bound()) break;
        }
        if (best <= bound()) break;
    }
    // every message has been tried once t reaches k
    res.complete = true;
    if (best <= n) {
        res.upper = best;
        res.lower = best;
    }
    return res;
}

}  // namespace

std::optional<std::size_t> min_weight_information_sets(const Code& C, const std::function<bool(const Vec&)>& keep) {
    const std::uint64_t cap = enumeration_cap();
    SearchResult r = information_set_search(C, keep, cap);
    if (!r.complete) throw Error(Errc::CodeTooLarge, "information-set search exceeds " + std::to_string(cap) + " words");
    return r.upper;
}

DistanceBounds min_distance_bounds(const Code& C, std::uint64_t budget) {
    if (C.dim() == 0) throw Error(Errc::TrivialCode, "minimum distance of the zero code");
    SearchResult r = information_set_search(C, [](const Vec&) { return true; }, budget);
    return {r.lower, r.upper.value_or(C.length()), r.complete};
}

std::size_t Code::min_distance() const {
    if (dim() == 0) throw Error(Errc::TrivialCode, "minimum distance of the zero code");
    bool cached;
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        cached = cache_->wd.has_value();
    }
    if (!cached && prefer_information_sets(*this)) {
        try {
            auto d = min_weight_information_sets(*this, [](const Vec&) { return true; });
            if (d) return *d;
        } catch (const Error& e) {
            if (e.code() != Errc::CodeTooLarge || !distribution_feasible(*this)) throw;
        }
    }
    const auto& wd = weight_distribution();
    for (std::size_t i = 1; i < wd.counts.size(); ++i)
        if (wd.counts[i] != 0) return i;
    throw Error(Errc::TrivialCode, "no nonzero word");
}

const WeightDistribution& weight_distribution(const Code& C) {
    return C.weight_distribution();
}

std::size_t min_distance(const Code& C) {
    return C.min_distance();
}

Code transform_code(const Code& C, Elem a, bool apply_conj) {
    const Field& F = C.field();
    std::vector<Vec> rows;
    for (const auto& g : C.gens()) {
        Vec h(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) h[i] = F.mul(a, apply_conj ? F.conj(g[i]) : g[i]);
        rows.push_back(std::move(h));
    }
    return Code(C.field_ptr(), C.length(), rows);
}

namespace {

// {u : Tr_{q/r}(sum_i u_i s_i) = 0 for all s in S}
Code trace_dual_of(const FieldPtr& Fp, std::size_t n, const std::vector<Vec>& S) {
    const Field& F = *Fp;
    const std::size_t m = F.m();
    std::vector<Elem> wpow(m);
    wpow[0] = 1;
    for (std::size_t a = 1; a < m; ++a) wpow[a] = F.mul(wpow[a - 1], F.generator());
    std::vector<Vec> rows;
    rows.reserve(S.size());
    for (const auto& s : S) {
        Vec row(n * m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t a = 0; a < m; ++a) row[i * m + a] = F.trace(F.mul(wpow[a], s[i]));
        rows.push_back(std::move(row));
    }
    std::vector<Vec> out;
    for (const auto& x : null_space(F, rows, n * m)) out.push_back(pack(F, x, n));
    return Code(Fp, n, out);
}

}  // namespace

Code dual(const Code& C, InnerProduct kind) {
    const Field& F = C.field();
    if (!kind_valid(F, kind)) throw Error(Errc::InvalidKindForField, to_string(kind) + " needs q = r^2");
    const bool herm = kind == InnerProduct::Hermitian || kind == InnerProduct::TraceHermitian;
    const bool fq = kind == InnerProduct::Euclidean || kind == InnerProduct::Hermitian;
    Elem twist = 1;
    if (kind == InnerProduct::TraceHermitian && F.p() != 2) twist = F.skew_alpha();
    std::vector<Vec> S;
    for (const auto& g : C.gens()) {
        Vec h(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) h[i] = F.mul(twist, herm ? F.conj(g[i]) : g[i]);
        if (fq) {
            Elem s = 1;
            for (int j = 0; j < F.m(); ++j) {
                Vec t(h.size());
                for (std::size_t i = 0; i < h.size(); ++i) t[i] = F.mul(s, h[i]);
                S.push_back(std::move(t));
                s = F.mul(s, F.generator());
            }
        } else {
            S.push_back(std::move(h));
        }
    }
    return trace_dual_of(C.field_ptr(), C.length(), S);
}

bool is_nested(const Code& D, const Code& C) {
    if (D.length() != C.length()) throw Error(Errc::LengthMismatch, "codes of different length");
    if (D.field_ptr() != C.field_ptr()) throw Error(Errc::LengthMismatch, "codes over different fields");
    return std::all_of(D.gens().begin(), D.gens().end(), [&](const Vec& g) { return C.contains(g); });
}

std::size_t wt_setminus(const Code& C, const Code& D) {
    if (!is_nested(D, C)) throw Error(Errc::NotNested, "subcode is not contained in the code");
    if (D.dim() == C.dim()) throw Error(Errc::EqualCodes, "codes are equal");
    if ((prefer_information_sets(C) || prefer_information_sets(D)) && C.is_fq_linear() && D.is_fq_linear()) {
        try {
            auto w = min_weight_information_sets(C, [&](const Vec& v) { return !D.contains(v); });
            if (w) return *w;
        } catch (const Error& e) {
            if (e.code() != Errc::CodeTooLarge || !distribution_feasible(C) || !distribution_feasible(D)) throw;
        }
    }
    const auto& a = C.weight_distribution().counts;
    const auto& b = D.weight_distribution().counts;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] > b[i]) return i;
    throw Error(Errc::EqualCodes, "no word outside the subcode");
}

Code extend_by_vector(const Code& C, const Vec& v) {
    if (C.contains(v)) throw Error(Errc::AlreadyContained, "vector already in the code");
    auto rows = C.gens();
    rows.push_back(v);
    return Code(C.field_ptr(), C.length(), rows);
}

BigInt krawtchouk(long n, long q, long j, long i) {
    if (n < 0 || j < 0 || i < 0 || j > n || i > n) throw Error(Errc::OutOfRange, "Krawtchouk index out of range");
    BigInt s = 0;
    for (long l = 0; l <= j; ++l) {
        if (l > i || j - l > n - i) continue;
        BigInt bi, bn;
        mpz_bin_uiui(bi.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(l));
        mpz_bin_uiui(bn.get_mpz_t(), static_cast<unsigned long>(n - i), static_cast<unsigned long>(j - l));
        BigInt t = ipow(BigInt(q - 1), static_cast<unsigned long>(j - l)) * bi * bn;
        if (l % 2) s -= t;
        else s += t;
    }
    return s;
}

std::vector<std::vector<BigInt>> krawtchouk_matrix(long n, long q) {
    std::vector<std::vector<BigInt>> K(n + 1, std::vector<BigInt>(n + 1));
    for (long j = 0; j <= n; ++j)
        for (long i = 0; i <= n; ++i) K[j][i] = krawtchouk(n, q, j, i);
    return K;
}

std::vector<Rational> macwilliams_transform(const WeightDistribution& A, const BigInt& size, long n, long q) {
    if (long(A.counts.size()) != n + 1) throw Error(Errc::SizeMismatch, "distribution length is not n+1");
    if (A.total() != size) throw Error(Errc::SizeMismatch, "distribution does not sum to the code size");
    auto K = krawtchouk_matrix(n, q);
    std::vector<Rational> out(n + 1);
    for (long j = 0; j <= n; ++j) {
        BigInt s = 0;
        for (long i = 0; i <= n; ++i) s += A.counts[i] * K[j][i];
        out[j] = Rational(s, size);
        out[j].canonicalize();
    }
    return out;
}

}  // namespace aqc
