#pragma once

// Exact rational scalar. Every coefficient in the library is a Rat, so all
// table fills, series expansions and probability bounds are free of rounding;
// conversion to double is the only lossy step and happens at the edges.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dartline {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator (both invariants maintained by the backend).
class Rat {
public:
    Rat() = default;
    Rat(int value) : v_(value) {}                 // NOLINT: implicit by design
    Rat(long long value) : v_(value) {}           // NOLINT
    Rat(const BigInt& value) : v_(value) {}       // NOLINT
    Rat(const BigInt& num, const BigInt& den);    // throws on den == 0
    Rat(long long num, long long den) : Rat(BigInt(num), BigInt(den)) {}

    /// Parses "a", "-a", "a/b". Throws std::invalid_argument on anything else.
    static Rat parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);                // throws on division by zero

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const;

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

    Rat pow(unsigned e) const;
    Rat abs() const { return v_ < 0 ? -*this : *this; }

    double to_double() const { return v_.convert_to<double>(); }

    /// Canonical exact form: "a" when the denominator is 1, else "a/b".
    std::string to_string() const;

    /// Decimal rendering with directed rounding, for rigorous bound output:
    /// round_down gives the largest k-digit decimal <= value, round_up the
    /// smallest one >= value.
    std::string to_decimal(int digits, bool round_up) const;

private:
    boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace dartline
