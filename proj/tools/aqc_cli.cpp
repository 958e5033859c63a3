// Command-line front end: construct, lp, verify-tables, dual, macwilliams,
// delsarte. Every record is printed as one line of JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "aqc/codefile.hpp"
#include "aqc/cyclic.hpp"
#include "aqc/groupchar.hpp"
#include "aqc/lp.hpp"
#include "aqc/quantum.hpp"
#include "aqc/tables.hpp"

using nlohmann::json;
using namespace aqc;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitConstruction = 3;

std::string rat(const Rational& x) {
    return to_string(x);
}

json params_json(const AqcParams& p, const std::string& type) {
    json j;
    j["q"] = p.q;
    j["n"] = p.n;
    j["k"] = rat(p.k);
    j["k_num"] = p.k.get_num().get_si();
    j["k_den"] = p.k.get_den().get_si();
    j["dz"] = p.dz;
    j["dx"] = p.dx;
    j["pure"] = p.pure;
    j["kind"] = to_string(p.kind);
    j["swapped"] = p.swapped;
    j["singleton_slack"] = rat(quantum_singleton(p).slack);
    j["construction_type"] = type;
    j["params"] = p.str();
    return j;
}

json code_json(const Code& C) {
    const Field& F = C.field();
    json gens = json::array();
    for (const auto& g : C.gens()) {
        json row = json::array();
        for (Elem e : g) row.push_back(F.format(e));
        gens.push_back(row);
    }
    return gens;
}

void emit(const json& j) {
    std::cout << j.dump() << '\n';
}

std::vector<Poly> polys_of(const std::vector<NamedPoly>& v) {
    std::vector<Poly> out;
    for (const auto& p : v) out.push_back(p.poly);
    return out;
}

int run_guarded(const std::function<int()>& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        emit({{"error", e.what()}, {"code", errc_name(e.code())}, {"position", e.position()}});
        return kExitParse;
    } catch (const Error& e) {
        emit({{"error", e.what()}, {"code", errc_name(e.code())}});
        return e.code() == Errc::ParseError ? kExitParse : kExitConstruction;
    }
}

Rational rational_flag(const std::string& s) {
    return parse_rational(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nested classical code pairs, asymmetric quantum code parameters and LP bounds"};
    app.require_subcommand(1);
    int rc = 0;

    // ---------------------------------------------------------------- construct
    auto* construct = app.add_subcommand("construct", "Build a nested pair and derive [[n,k,dz/dx]]_q");
    construct->require_subcommand(1);

    std::uint32_t cq = 0, cr = 0;
    std::size_t cn = 0;
    std::string cg, ch;
    auto* cyc = construct->add_subcommand("cyclic", "F_q-linear cyclic pair C = <g>, D = <h g>");
    cyc->set_help_flag("--help", "Print this help message and exit");
    cyc->add_option("--q", cq, "field size")->required();
    cyc->add_option("--n", cn, "length")->required();
    cyc->add_option("--g", cg, "generator polynomial of C, lowest degree first")->required();
    cyc->add_option("--h", ch, "multiplier giving the subcode D = <h g>")->required();
    cyc->callback([&] {
        rc = run_guarded([&] {
            auto F = make_field_q(cq);
            Poly g = parse_poly(cg, *F), h = parse_poly(ch, *F);
            Code C2 = cyclic_from_gen(F, cn, g);
            Code D = cyclic_from_gen(F, cn, poly_mul(*F, h, g));
            auto pr = make_pair(dual(D, InnerProduct::Euclidean), C2, InnerProduct::Euclidean);
            emit(params_json(css_like(pr), "CC"));
            return 0;
        });
    });

    std::string sc, sd;
    auto* scyc = construct->add_subcommand("subfield-cyclic", "F_r-linear cyclic pair under the trace Euclidean product");
    scyc->add_option("--q", cq, "field size")->required();
    scyc->add_option("--r", cr, "subfield size (default: the prime)");
    scyc->add_option("--n", cn, "length")->required();
    scyc->add_option("--c", sc, "generators of C, e.g. \"g4=(1011)+w(11), g2=(111111)\"")->required();
    scyc->add_option("--d", sd, "generators of D in terms of the names of C, e.g. \"(10101)g4, (1)g2\"")->required();
    scyc->callback([&] {
        rc = run_guarded([&] {
            auto F = make_field_q(cq, cr);
            auto C = parse_gen_shorthand(sc, *F, cn);
            auto D = parse_gen_shorthand(sd, *F, cn, C);
            Code C2 = cyclic_module_span(F, cn, polys_of(C));
            Code Dc = cyclic_module_span(F, cn, polys_of(D));
            auto pr = make_pair(dual(Dc, InnerProduct::TraceEuclidean), C2, InnerProduct::TraceEuclidean);
            json j = params_json(css_like(pr), C2.is_fq_linear() && Dc.is_fq_linear() ? "CC" : "ACC");
            auto canon = canonical_subfield_cyclic(C2);
            json rows = json::array();
            for (const auto& row : canon.a) {
                json r = json::array();
                for (const auto& p : row) r.push_back(poly_format(*F, p));
                rows.push_back(r);
            }
            j["canonical_c"] = rows;
            emit(j);
            return 0;
        });
    });

    std::uint32_t gt = 0, gl = 0, r1 = 0, r2 = 0;
    auto* gc = construct->add_subcommand("gc", "Nested group character codes C_q(r1,l;t) in C_q(r2,l;t)");
    gc->add_option("--q", cq, "field size")->required();
    gc->add_option("--t", gt, "group exponent, t | q-1")->required();
    gc->add_option("--l", gl, "rank of (Z/tZ)^l")->required();
    gc->add_option("--r1", r1, "smaller defect parameter")->required();
    gc->add_option("--r2", r2, "larger defect parameter")->required();
    gc->callback([&] {
        rc = run_guarded([&] {
            AqcParams formula = gc_aqc(r1, r2, gl, gt, cq);
            AqcParams got = css_like(gc_pair(r1, r2, gl, gt, cq));
            json j = params_json(got, "GC");
            j["formula_agrees"] = formula.same_parameters(got);
            emit(j);
            return formula.same_parameters(got) ? 0 : kExitMismatch;
        });
    });

    std::string f1, f2, fkind;
    auto* ff = construct->add_subcommand("from-file", "Pair read from two code files");
    ff->add_option("--c1", f1, "code file for C1")->required();
    ff->add_option("--c2", f2, "code file for C2 (omit for a full-weight construction from C1)");
    ff->add_option("--kind", fkind, "inner product E, TrE, H or TrH (default: from the C1 file)");
    ff->callback([&] {
        rc = run_guarded([&] {
            CodeFile a = load_code(f1);
            if (f2.empty()) {
                emit(params_json(full_weight_aqc(a.code), "BC"));
                return 0;
            }
            CodeFile b = load_code(f2);
            InnerProduct kind = fkind.empty() ? a.kind : parse_inner_product(fkind);
            emit(params_json(css_like(make_pair(a.code, b.code, kind)), "BC"));
            return 0;
        });
    });

    std::string recipe;
    auto* adhoc = construct->add_subcommand("adhoc", "Ad hoc binary recipes");
    adhoc->add_option("--recipe", recipe, "4-1-2-2, 5-2-2-2 or 13-1-5-3")->required();
    adhoc->callback([&] {
        rc = run_guarded([&] {
            emit(params_json(css_like(adhoc_pair(recipe)), "AH"));
            return 0;
        });
    });

    // ----------------------------------------------------------------------- lp
    std::size_t ln = 0, ldx = 0, ldz = 0;
    std::uint32_t lq = 0;
    int lm = 0;
    std::string lk, lkp, lgap = "1", lcert;
    auto* lp = app.add_subcommand("lp", "Feasible (mk, mk') region, CSS feasibility and the LP bound on k");
    lp->add_option("--n", ln, "length")->required();
    lp->add_option("--q", lq, "field size")->required();
    lp->add_option("--m", lm, "degree of F_q over F_r (default: over the prime field)")->check(CLI::PositiveNumber);
    lp->add_option("--dx", ldx, "bit-flip distance")->required();
    lp->add_option("--dz", ldz, "phase-flip distance")->required();
    lp->add_option("--k", lk, "k for a single-point test (rational)");
    lp->add_option("--kp", lkp, "k' for a single-point test (rational)");
    lp->add_option("--gap", lgap, "lower bound for A_dz - Bperp_dz and B_dx - Aperp_dx");
    lp->add_option("--cert-out", lcert, "write the certificate of an infeasible point to this file");
    lp->callback([&] {
        rc = run_guarded([&] {
            const Rational gap = rational_flag(lgap);
            if (lm == 0) lm = make_field_q(lq)->degree();
            if (!lk.empty() || !lkp.empty()) {
                if (lk.empty() || lkp.empty()) throw ParseError(0, "--k and --kp go together");
                Rational a = rational_flag(lk) * lm, b = rational_flag(lkp) * lm;
                if (a.get_den() != 1 || b.get_den() != 1) throw Error(Errc::InconsistentDims, "m*k and m*k' must be integers");
                LpProblem P = build_css_lp(ln, lq, lm, a.get_num().get_si(), b.get_num().get_si(), ldx, ldz, gap);
                LpOutcome o = solve_feasibility(P);
                json j{{"n", ln}, {"q", lq}, {"m", lm}, {"k", lk}, {"kp", lkp}, {"dx", ldx}, {"dz", ldz},
                       {"gap", rat(gap)}, {"outcome", o.feasible ? "feasible" : "infeasible"}};
                if (o.feasible) {
                    json w = json::array();
                    for (const auto& v : o.witness) w.push_back(rat(v));
                    j["witness"] = w;
                } else {
                    j["certificate"] = json::parse(certificate_json(P, o.cert));
                    j["certificate_verified"] = verify_certificate(P, o.cert);
                    if (!lcert.empty()) std::ofstream(lcert) << certificate_json(P, o.cert) << '\n';
                }
                emit(j);
                return 0;
            }
            Region reg = feasible_region(ln, lq, lm, ldx, ldz);
            json pts = json::array();
            for (auto [a, b] : reg.points) {
                LpOutcome o = solve_feasibility(build_css_lp(ln, lq, lm, a, b, ldx, ldz, gap));
                pts.push_back({{"mk", a}, {"mkp", b}, {"outcome", o.feasible ? "feasible" : "infeasible"}});
            }
            auto bound = lp_bound_k(ln, lq, lm, ldx, ldz, gap);
            auto lin = lp_bound_k_linear(ln, lq, lm, ldx, ldz, gap);
            json j{{"n", ln}, {"q", lq}, {"m", lm}, {"dx", ldx}, {"dz", ldz}, {"gap", rat(gap)},
                   {"alpha", reg.alpha}, {"beta", reg.beta}, {"points", pts}};
            j["lp_bound_k"] = bound.k ? json(rat(*bound.k)) : json(nullptr);
            j["lp_bound_k_linear"] = lin.k ? json(rat(*lin.k)) : json(nullptr);
            emit(j);
            return 0;
        });
    });

    // ------------------------------------------------------------ verify-tables
    std::vector<std::string> tables;
    bool labels = false;
    std::size_t label_max_n = 12;
    auto* vt = app.add_subcommand("verify-tables", "Rebuild every row of the given fixture files");
    vt->add_option("files", tables, "fixture files")->required()->check(CLI::ExistingFile);
    vt->add_flag("--labels", labels, "recompute goodness labels where the LP is small");
    vt->add_option("--labels-max-n", label_max_n, "largest n for label recomputation");
    vt->callback([&] {
        rc = run_guarded([&] {
            std::map<std::string, std::size_t> counts;
            for (const auto& path : tables) {
                const std::string base = std::filesystem::path(path).parent_path().string();
                for (const auto& row : load_fixture(path)) {
                    RowResult res = verify_row(row, base);
                    json j{{"file", row.file}, {"line", row.line}, {"type", row.type},
                           {"expected", row.expected_text}, {"status", to_string(res.status)}};
                    if (res.got) j["got"] = res.got->str();
                    if (!res.message.empty()) j["message"] = res.message;
                    if (!row.labels.empty()) {
                        j["labels"] = row.labels;
                        j["recomputed"] = false;
                    }
                    if (labels && res.got && res.status == RowStatus::Pass && row.n <= label_max_n) {
                        const auto& p = *res.got;
                        auto F = make_field_q(p.q);
                        auto b = lp_bound_k(p.n, p.q, F->m(), p.dx, p.dz);
                        auto bl = lp_bound_k_linear(p.n, p.q, F->m(), p.dx, p.dz);
                        bool linear = row.type != "ACC";
                        if (auto pr = build_row_pair(row, base)) linear = pr->C1.is_fq_linear() && pr->C2.is_fq_linear();
                        auto mine = goodness_labels(p.k, linear, b.k, bl.k);
                        j["labels_recomputed"] = mine;
                        j["recomputed"] = true;
                        if (b.k) j["lp_bound_k"] = rat(*b.k);
                        if (row.lp && b.k && *row.lp != *b.k) j["warning"] = "LP bound differs from the printed value";
                    }
                    ++counts[to_string(res.status)];
                    emit(j);
                }
            }
            json summary{{"summary", counts}};
            emit(summary);
            return counts["FAIL"] + counts["ERROR"] > 0 ? kExitMismatch : 0;
        });
    });

    // ------------------------------------------------------ dual / macwilliams
    std::string dfile, dkind;
    auto* du = app.add_subcommand("dual", "Dual of a code file");
    du->add_option("file", dfile, "code file")->required();
    du->add_option("--kind", dkind, "inner product (default: from the file)");
    du->callback([&] {
        rc = run_guarded([&] {
            CodeFile cf = load_code(dfile);
            InnerProduct kind = dkind.empty() ? cf.kind : parse_inner_product(dkind);
            Code D = dual(cf.code, kind);
            json j{{"q", D.field().q()}, {"r", D.field().r()}, {"n", D.length()}, {"kind", to_string(kind)},
                   {"dim_r", D.dim()}, {"fq_linear", D.is_fq_linear()}, {"gens", code_json(D)}};
            if (D.dim() > 0) j["min_distance"] = D.min_distance();
            emit(j);
            return 0;
        });
    });

    std::string mfile;
    auto* mw = app.add_subcommand("macwilliams", "Weight distribution of a code and of its trace dual");
    mw->add_option("file", mfile, "code file")->required();
    mw->callback([&] {
        rc = run_guarded([&] {
            CodeFile cf = load_code(mfile);
            const Code& C = cf.code;
            const auto& wd = C.weight_distribution();
            auto t = macwilliams_transform(wd, C.size(), long(C.length()), long(C.field().q()));
            json a = json::array(), b = json::array();
            for (const auto& x : wd.counts) a.push_back(x.get_str());
            for (const auto& x : t) b.push_back(rat(x));
            emit({{"q", C.field().q()}, {"n", C.length()}, {"size", C.size().get_str()}, {"distribution", a},
                  {"dual_distribution", b}});
            return 0;
        });
    });

    // ----------------------------------------------------------------- delsarte
    std::size_t dn = 0, dd = 0, ddual = 0;
    std::uint32_t dq = 0, dr = 0;
    auto* de = app.add_subcommand("delsarte", "Delsarte LP maximum of |C|");
    de->add_option("--n", dn, "length")->required();
    de->add_option("--q", dq, "field size")->required();
    de->add_option("--d", dd, "minimum distance")->required();
    de->add_option("--dual-d", ddual, "minimum distance of the dual");
    de->add_option("--r", dr, "base for the logarithm (default q)");
    de->callback([&] {
        rc = run_guarded([&] {
            std::optional<std::size_t> dual_d;
            if (ddual) dual_d = ddual;
            Rational mx = delsarte_max(dn, dq, dd, dual_d);
            const std::uint32_t base = dr ? dr : dq;
            json j{{"n", dn}, {"q", dq}, {"d", dd}, {"max", rat(mx)}, {"r", base}, {"dlog", dlog(dn, dq, base, dd, dual_d)}};
            if (dual_d) j["dual_d"] = *dual_d;
            emit(j);
            return 0;
        });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }
    return rc;
}
