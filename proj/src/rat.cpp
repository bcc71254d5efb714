#include "dartline/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace dartline {

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0)
        v_ = boost::multiprecision::cpp_rational(-num, BigInt(-den));
    else
        v_ = boost::multiprecision::cpp_rational(num, den);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat Rat::pow(unsigned e) const {
    Rat base = *this, acc = 1;
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

Rat Rat::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> BigInt {
        if (s.empty()) throw std::invalid_argument("Rat: empty integer");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("Rat: sign without digits");
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw std::invalid_argument("Rat: invalid digit in '" + std::string(s) + "'");
        return BigInt(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("Rat: denominator must be positive");
    return Rat(num, den);
}

std::string Rat::to_string() const {
    std::string s = numerator().str();
    BigInt den = denominator();
    if (den != 1) s += "/" + den.str();
    return s;
}

std::string Rat::to_decimal(int digits, bool round_up) const {
    if (digits < 0) throw std::invalid_argument("Rat: negative digit count");
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt num = numerator() * scale;
    BigInt den = denominator();
    // floor or ceil of num/den
    BigInt q = num / den, r = num % den;
    if (r != 0) {
        if (round_up && num > 0) ++q;
        if (!round_up && num < 0) --q;
    }
    bool neg = q < 0;
    std::string body = BigInt(boost::multiprecision::abs(q)).str();
    if (static_cast<int>(body.size()) <= digits)
        body.insert(0, std::string(digits + 1 - body.size(), '0'));
    std::string out = neg ? "-" : "";
    if (digits == 0) return out + body;
    out += body.substr(0, body.size() - digits);
    out += ".";
    out += body.substr(body.size() - digits);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace dartline
