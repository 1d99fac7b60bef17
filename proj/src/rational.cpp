#include "cwtk/rational.hpp"

#include <stdexcept>

namespace cwtk {

std::string rational_to_string(const Rational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

BigInt rational_floor(const Rational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r); // always > 0 in canonical form
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

BigInt rational_ceil(const Rational& r) {
    return -rational_floor(-r);
}

} // namespace cwtk
