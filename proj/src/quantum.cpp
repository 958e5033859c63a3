#include "aqc/quantum.hpp"

namespace aqc {

std::string AqcParams::str() const {
    return "[[" + std::to_string(n) + "," + to_string(k) + "," + std::to_string(dz) + "/" + std::to_string(dx) +
           "]]_" + std::to_string(q);
}

NestedPair make_pair(const Code& C1, const Code& C2, InnerProduct kind) {
    if (C1.length() != C2.length() || C1.field_ptr() != C2.field_ptr())
        throw Error(Errc::LengthMismatch, "pair codes must share field and length");
    if (!is_nested(dual(C1, kind), C2))
        throw Error(Errc::NotNested, "C1 dual is not contained in C2 under " + to_string(kind));
    return NestedPair{C1, C2, kind};
}

AqcParams css_like(const NestedPair& pr) {
    const Field& F = pr.C1.field();
    const std::size_t n = pr.C1.length();
    const Code C1d = dual(pr.C1, pr.kind);
    const Code C2d = dual(pr.C2, pr.kind);
    if (!is_nested(C1d, pr.C2)) throw Error(Errc::NotNested, "C1 dual is not contained in C2");

    AqcParams out;
    out.q = F.q();
    out.n = n;
    out.kind = pr.kind;
    const long s = long(pr.C1.dim() + pr.C2.dim()) - long(F.m() * n);
    out.k = Rational(s, F.m());
    out.k.canonicalize();
    const std::size_t d2 = pr.C2.min_distance(), d1 = pr.C1.min_distance();
    if (s == 0) {
        out.dz = d2;
        out.dx = d1;
        out.pure = true;
    } else {
        out.dz = wt_setminus(pr.C2, C1d);
        out.dx = wt_setminus(pr.C1, C2d);
        out.pure = out.dz == d2 && out.dx == d1;
    }
    if (out.dz < out.dx) {
        std::swap(out.dz, out.dx);
        out.swapped = true;
    }
    return out;
}

AqcParams self_orthogonal_aqc(const Code& C, InnerProduct kind) {
    const Code Cd = dual(C, kind);
    if (!is_nested(C, Cd)) throw Error(Errc::NotSelfOrthogonal, "code is not self-orthogonal");
    const Field& F = C.field();
    AqcParams out;
    out.q = F.q();
    out.n = C.length();
    out.kind = kind;
    out.k = Rational(long(C.length() * F.m()) - 2 * long(C.dim()), F.m());
    out.k.canonicalize();
    out.dz = out.dx = Cd.min_distance();
    out.pure = true;
    return out;
}

NestedPair full_weight_pair(const Code& C) {
    if (!C.is_fq_linear()) throw Error(Errc::NoFullWeightWord, "code must be linear over the full field");
    const std::size_t n = C.length();
    Vec word;
    enumerate_codewords(C, [&](const Vec& v) {
        if (hamming_weight(v) != n) return true;
        word = v;
        return false;
    });
    if (word.empty()) throw Error(Errc::NoFullWeightWord, "no codeword of full weight");
    const Code D = Code::fq_span(C.field_ptr(), n, {word});
    return make_pair(dual(D, InnerProduct::Euclidean), C, InnerProduct::Euclidean);
}

AqcParams full_weight_aqc(const Code& C) {
    return css_like(full_weight_pair(C));
}

NestedPair convert_pair(const NestedPair& pr, InnerProduct target) {
    const Field& F = pr.C1.field();
    if (F.m() != 2) throw Error(Errc::NotQuadraticExtension, "conversion needs q = r^2");
    using IP = InnerProduct;
    const Elem alpha = F.p() == 2 ? 1 : F.skew_alpha();
    Elem a;
    if (pr.kind == IP::TraceEuclidean && target == IP::TraceHermitian) a = F.inv(alpha);
    else if (pr.kind == IP::TraceHermitian && target == IP::TraceEuclidean) a = alpha;
    else if ((pr.kind == IP::Euclidean && target == IP::Hermitian) ||
             (pr.kind == IP::Hermitian && target == IP::Euclidean)) a = 1;
    else throw Error(Errc::UnsupportedKindPair, to_string(pr.kind) + " to " + to_string(target));
    return make_pair(transform_code(pr.C1, a, true), pr.C2, target);
}

SingletonCheck quantum_singleton(const AqcParams& p) {
    Rational slack = Rational(long(p.n) - long(p.dz) - long(p.dx) + 2) - p.k;
    return {slack == 0, slack};
}

namespace {

Code binary_code(std::size_t n, const std::vector<std::string>& rows) {
    auto F = make_field(2, 1, 1);
    std::vector<Vec> gens;
    for (const auto& r : rows) {
        Vec v;
        for (char c : r) v.push_back(Elem(c - '0'));
        gens.push_back(std::move(v));
    }
    return Code(F, n, gens);
}

}  // namespace

NestedPair adhoc_pair(const std::string& recipe) {
    if (recipe == "4-1-2-2") return full_weight_pair(binary_code(4, {"1010", "0101"}));
    if (recipe == "5-2-2-2") return full_weight_pair(binary_code(5, {"10001", "01011", "00101"}));
    if (recipe == "13-1-5-3") {
        // Columns 1..13 in binary: a simplex code punctured twice, so every
        // nonzero word has weight 6, 7 or 8 and its dual is a [13,9,3] code.
        std::vector<std::string> rows(4, std::string(13, '0'));
        for (int col = 1; col <= 13; ++col)
            for (int b = 0; b < 4; ++b)
                if (col >> b & 1) rows[std::size_t(b)][std::size_t(col - 1)] = '1';
        const Code D4 = binary_code(13, rows);
        const Code C2 = dual(D4, InnerProduct::Euclidean);
        const Code C1 = extend_by_vector(D4, Vec(13, 1));
        return make_pair(C1, C2, InnerProduct::Euclidean);
    }
    throw Error(Errc::ParseError, "unknown recipe '" + recipe + "'");
}

}  // namespace aqc
