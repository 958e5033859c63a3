#include "aqc/rational.hpp"

#include <cctype>

#include "aqc/error.hpp"

namespace aqc {

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw ParseError(0, "empty rational");
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        std::string whole = t.substr(0, dot), frac = t.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (neg) whole.erase(0, 1);
        if (whole.empty()) whole = "0";
        for (char c : whole + frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(0, "bad decimal '" + s + "'");
        BigInt den = ipow(BigInt(10), frac.size());
        BigInt num = BigInt(whole) * den + (frac.empty() ? BigInt(0) : BigInt(frac));
        Rational out(num, den);
        out.canonicalize();
        return neg ? Rational(-out) : out;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && (i == 0 || t[i - 1] == '/'))))
            throw ParseError(i, "bad rational '" + s + "'");
    }
    Rational out;
    if (out.set_str(t, 10) != 0 || out.get_den() == 0) throw ParseError(0, "bad rational '" + s + "'");
    out.canonicalize();
    return out;
}

BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

long floor_log(const Rational& x, unsigned long r) {
    if (x < 1) throw Error(Errc::OutOfRange, "floor_log needs x >= 1");
    long e = 0;
    BigInt p = r;
    while (Rational(p) <= x) {
        p *= r;
        ++e;
    }
    return e;
}

}  // namespace aqc
