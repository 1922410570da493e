#include "nilbohr/rational.hpp"

#include "nilbohr/errors.hpp"

namespace nilbohr {

BigInt floor_of(const Rational& r) {
    BigInt n = numerator(r);
    BigInt d = denominator(r);  // canonical form keeps d > 0
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

Rational mod1(const Rational& r) {
    return r - Rational(floor_of(r));
}

Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw PreconditionViolated("rational with zero denominator");
    return Rational(std::move(num), std::move(den));
}

Rational parse_rational(std::string_view text) {
    auto bad = [&] { return PreconditionViolated("bad rational literal: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(text)));
        }
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
        return make_rational(BigInt(std::string(num)), BigInt(std::string(den)));
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

std::string rational_str(const Rational& r) {
    BigInt n = numerator(r);
    BigInt d = denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

}  // namespace nilbohr
