#include "aqc/tables.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "aqc/codefile.hpp"
#include "aqc/cyclic.hpp"
#include "aqc/groupchar.hpp"

namespace aqc {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) out.push_back(trim(part));
    return out;
}

// "r1=1 r2=2 l=3 t=2" or "recipe=4-1-2-2"
std::map<std::string, std::string> key_values(const std::string& s) {
    std::map<std::string, std::string> kv;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw Error(Errc::ParseError, "expected key=value, got '" + tok + "'");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

std::uint32_t int_field(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(Errc::ParseError, "missing '" + key + "'");
    return std::uint32_t(std::stoul(it->second));
}

std::vector<Poly> polys_of(const std::vector<NamedPoly>& v) {
    std::vector<Poly> out;
    for (const auto& p : v) out.push_back(p.poly);
    return out;
}

Code ideal(const FieldPtr& F, std::size_t n, const Poly& p) {
    return cyclic_from_gen(F, n, poly_gcd(*F, p, poly_xn_minus_1(*F, n)));
}

}  // namespace

AqcParams parse_aqc_params(const std::string& s) {
    static const std::regex re(R"(\s*\[\[\s*(\d+)\s*,\s*([0-9./]+)\s*,\s*(\d+)\s*/\s*(\d+)\s*\]\]_\{?(\d+)\}?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw Error(Errc::ParseError, "bad parameters '" + s + "'");
    AqcParams p;
    p.n = std::stoul(m[1]);
    p.k = parse_rational(m[2]);
    p.dz = std::stoul(m[3]);
    p.dx = std::stoul(m[4]);
    p.q = std::uint32_t(std::stoul(m[5]));
    p.pure = true;
    return p;
}

std::vector<FixtureRow> parse_fixture(const std::string& text, const std::string& file) {
    std::vector<FixtureRow> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto cols = split(line, '|');
        if (cols.size() < 5) throw Error(Errc::ParseError, file + ":" + std::to_string(lineno) + ": too few columns");
        FixtureRow r;
        r.file = file;
        r.line = lineno;
        std::istringstream qn(cols[0]);
        if (!(qn >> r.q >> r.n)) throw Error(Errc::ParseError, file + ":" + std::to_string(lineno) + ": bad 'q n'");
        r.type = cols[1];
        if (!r.type.empty() && r.type[0] == '!') {
            r.erratum = true;
            r.type = trim(r.type.substr(1));
        }
        r.cspec = cols[2];
        r.dspec = cols[3];
        r.expected_text = cols[4];
        r.expected = parse_aqc_params(cols[4]);
        if (cols.size() > 5 && !cols[5].empty()) r.labels = split(cols[5], ',');
        if (cols.size() > 6 && !cols[6].empty()) r.lp = parse_rational(cols[6]);
        if (cols.size() > 7) r.matrix_file = cols[7];
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<FixtureRow> load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str(), path);
}

std::optional<NestedPair> build_row_pair(const FixtureRow& row, const std::string& base_dir) {
    const std::size_t n = row.n;
    if (row.type == "CC") {
        auto F = make_field_q(row.q);
        auto C = parse_gen_shorthand(row.cspec, *F, n);
        if (C.size() != 1) throw Error(Errc::ParseError, "CC rows need a single generator");
        auto D = parse_gen_shorthand(row.dspec, *F, n, C);
        if (D.size() != 1) throw Error(Errc::ParseError, "CC rows need a single subcode generator");
        const Code C2 = ideal(F, n, C[0].poly);
        const Code Dc = ideal(F, n, D[0].poly);
        return make_pair(dual(Dc, InnerProduct::Euclidean), C2, InnerProduct::Euclidean);
    }
    if (row.type == "ACC") {
        auto F = make_field_q(row.q);
        auto C = parse_gen_shorthand(row.cspec, *F, n);
        auto D = parse_gen_shorthand(row.dspec, *F, n, C);
        const Code C2 = cyclic_module_span(F, n, polys_of(C));
        const Code Dc = cyclic_module_span(F, n, polys_of(D));
        return make_pair(dual(Dc, InnerProduct::TraceEuclidean), C2, InnerProduct::TraceEuclidean);
    }
    if (row.type == "GC") {
        auto kv = key_values(row.cspec);
        return gc_pair(int_field(kv, "r1"), int_field(kv, "r2"), int_field(kv, "l"), int_field(kv, "t"), row.q);
    }
    if (row.type == "AH" && !row.cspec.empty()) {
        auto kv = key_values(row.cspec);
        auto it = kv.find("recipe");
        if (it == kv.end()) throw Error(Errc::ParseError, "AH rows need recipe=...");
        return adhoc_pair(it->second);
    }
    if (!row.matrix_file.empty()) {
        std::filesystem::path p(row.matrix_file);
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        CodeFile cf = load_code(p.string());
        if (row.type == "SO") {
            const Code Cd = dual(cf.code, cf.kind);
            return make_pair(Cd, Cd, cf.kind);
        }
        return full_weight_pair(cf.code);
    }
    return std::nullopt;
}

const char* to_string(RowStatus s) {
    switch (s) {
        case RowStatus::Pass: return "PASS";
        case RowStatus::Fail: return "FAIL";
        case RowStatus::Skipped: return "SKIPPED";
        case RowStatus::Error: return "ERROR";
        case RowStatus::Erratum: return "ERRATUM";
    }
    return "?";
}

RowResult verify_row(const FixtureRow& row, const std::string& base_dir) {
    RowResult res;
    try {
        std::optional<AqcParams> got;
        if (row.type == "SO" && !row.matrix_file.empty()) {
            std::filesystem::path p(row.matrix_file);
            if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
            CodeFile cf = load_code(p.string());
            got = self_orthogonal_aqc(cf.code, cf.kind);
        } else {
            auto pair = build_row_pair(row, base_dir);
            if (!pair) {
                res.status = RowStatus::Skipped;
                res.message = row.type + " row needs an external generator matrix";
                return res;
            }
            got = css_like(*pair);
        }
        if (row.type == "GC") {
            auto kv = key_values(row.cspec);
            AqcParams formula = gc_aqc(int_field(kv, "r1"), int_field(kv, "r2"), int_field(kv, "l"), int_field(kv, "t"), row.q);
            if (!formula.same_parameters(*got)) {
                res.status = RowStatus::Fail;
                res.got = got;
                res.message = "closed formula gives " + formula.str() + ", enumeration gives " + got->str();
                return res;
            }
        }
        res.got = got;
        const bool match = got->same_parameters(row.expected);
        res.status = match && got->pure ? RowStatus::Pass : RowStatus::Fail;
        if (!match) res.message = "expected " + row.expected.str() + ", got " + got->str() + (got->pure ? "" : " (impure)");
        else if (!got->pure) res.message = "parameters match but the code is impure";
        if (res.status == RowStatus::Fail && row.erratum) res.status = RowStatus::Erratum;
    } catch (const Error& e) {
        res.status = RowStatus::Error;
        res.message = e.what();
    }
    return res;
}

std::vector<std::string> goodness_labels(const Rational& k, bool fq_linear, const std::optional<Rational>& bound,
                                         const std::optional<Rational>& bound_linear) {
    std::vector<std::string> out;
    if (bound && k == *bound) out.push_back("Optimal");
    if (!fq_linear && bound_linear && k > *bound_linear) out.push_back("BeOpLin");
    if (fq_linear && bound_linear && k == *bound_linear) out.push_back("OpLin");
    if (!fq_linear && bound_linear && k == *bound_linear) out.push_back("ROpLin");
    return out;
}

}  // namespace aqc
