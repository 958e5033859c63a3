#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aqc/galois.hpp"
#include "aqc/linalg.hpp"
#include "aqc/rational.hpp"

namespace aqc {

enum class InnerProduct { Euclidean, TraceEuclidean, Hermitian, TraceHermitian };

std::string to_string(InnerProduct k);
InnerProduct parse_inner_product(const std::string& s);
bool kind_valid(const Field& F, InnerProduct k);

struct WeightDistribution {
    std::vector<BigInt> counts;  // A_0..A_n

    std::size_t length() const { return counts.empty() ? 0 : counts.size() - 1; }
    BigInt total() const;
    bool operator==(const WeightDistribution& o) const { return counts == o.counts; }
};

// An F_r-linear subset of F_q^n. The generators are kept as the reduced
// echelon basis of the expansion into F_r^(mn), so equal codes have equal
// generator lists.
class Code {
public:
    Code(FieldPtr F, std::size_t n, const std::vector<Vec>& spanning);

    static Code zero(FieldPtr F, std::size_t n);
    static Code full(FieldPtr F, std::size_t n);
    // F_q-span of the given vectors.
    static Code fq_span(FieldPtr F, std::size_t n, const std::vector<Vec>& spanning);

    const Field& field() const { return *F_; }
    const FieldPtr& field_ptr() const { return F_; }
    std::size_t length() const { return n_; }
    // Dimension over F_r; |C| = r^dim.
    std::size_t dim() const { return gens_.size(); }
    const std::vector<Vec>& gens() const { return gens_; }
    bool is_fq_linear() const { return fq_linear_; }
    BigInt size() const;
    // log_r |C| / m, the dimension measured in F_q units.
    Rational fq_dim() const {
        Rational k(long(dim()), long(F_->m()));
        k.canonicalize();
        return k;
    }

    bool contains(const Vec& v) const;
    bool operator==(const Code& o) const;

    // Cached; computed by enumerating the smaller of C and its trace dual.
    const WeightDistribution& weight_distribution() const;
    std::size_t min_distance() const;

private:
    FieldPtr F_;
    std::size_t n_;
    std::vector<Vec> gens_;
    Echelon ech_;
    bool fq_linear_ = false;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

Vec expand(const Field& F, const Vec& v);
Vec pack(const Field& F, const Vec& x, std::size_t n);

std::size_t hamming_weight(const Vec& v);

Elem inner_product(const Field& F, const Vec& u, const Vec& v, InnerProduct kind);

// Enumeration cap: 2^24 unless the environment variable AQC_ENUM_CAP is set.
std::uint64_t enumeration_cap();

// Calls f on every codeword in mixed-radix order over the F_p-coefficients of
// the generators; stops early when f returns false.
void enumerate_codewords(const Code& C, const std::function<bool(const Vec&)>& f);

const WeightDistribution& weight_distribution(const Code& C);
std::size_t min_distance(const Code& C);

Code dual(const Code& C, InnerProduct kind);

bool is_nested(const Code& D, const Code& C);

// Smallest nonzero weight among words of C accepted by keep, by enumerating
// low-weight messages over disjoint information sets. C must be linear over
// the full field and keep must be invariant under nonzero scaling.
std::optional<std::size_t> min_weight_information_sets(const Code& C, const std::function<bool(const Vec&)>& keep);

// Proven interval for d(C) after an information-set search limited to
// budget words; exact is set when lower == upper was established.
struct DistanceBounds {
    std::size_t lower;
    std::size_t upper;
    bool exact;
};
DistanceBounds min_distance_bounds(const Code& C, std::uint64_t budget);

// Minimum weight of a word of C outside D, for D strictly inside C.
std::size_t wt_setminus(const Code& C, const Code& D);

Code extend_by_vector(const Code& C, const Vec& v);

// Image of C under c -> a * conj(c) (conj is skipped when apply_conj is false).
Code transform_code(const Code& C, Elem a, bool apply_conj);

BigInt krawtchouk(long n, long q, long j, long i);
// Row j, column i holds K_j(i).
std::vector<std::vector<BigInt>> krawtchouk_matrix(long n, long q);

std::vector<Rational> macwilliams_transform(const WeightDistribution& A, const BigInt& size, long n, long q);

}  // namespace aqc
