#include "aqc/codefile.hpp"

#include <fstream>
#include <sstream>

namespace aqc {

namespace {

bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

[[noreturn]] void bad(std::size_t lineno, const std::string& why) {
    throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": " + why);
}

}  // namespace

CodeFile read_code(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!next_line(in, line, lineno)) bad(lineno, "missing header");
    std::istringstream hs(line);
    std::uint32_t q = 0, r = 0;
    std::size_t n = 0, rows = 0;
    std::string kind_s, extra;
    if (!(hs >> q >> n >> rows >> kind_s)) bad(lineno, "header must be 'q n rows kind [r=R]'");
    if (hs >> extra) {
        if (extra.rfind("r=", 0) != 0) bad(lineno, "unexpected '" + extra + "'");
        r = std::uint32_t(std::stoul(extra.substr(2)));
    }
    auto F = make_field_q(q, r);
    InnerProduct kind = parse_inner_product(kind_s);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < rows; ++i) {
        if (!next_line(in, line, lineno)) bad(lineno, "expected " + std::to_string(rows) + " generator rows");
        std::istringstream ls(line);
        Vec v;
        std::string tok;
        while (ls >> tok) {
            try {
                v.push_back(F->parse(tok));
            } catch (const ParseError& e) {
                bad(lineno, e.what());
            }
        }
        if (v.size() != n) bad(lineno, "row has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
        gens.push_back(std::move(v));
    }
    return CodeFile{Code(F, n, gens), kind};
}

CodeFile load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    return read_code(in);
}

std::string format_code(const Code& C, InnerProduct kind) {
    const Field& F = C.field();
    std::ostringstream os;
    os << F.q() << ' ' << C.length() << ' ' << C.dim() << ' ' << to_string(kind);
    if (F.l() > 1) os << " r=" << F.r();
    os << '\n';
    for (const auto& g : C.gens()) {
        for (std::size_t i = 0; i < g.size(); ++i) os << (i ? " " : "") << F.format(g[i]);
        os << '\n';
    }
    return os.str();
}

}  // namespace aqc
