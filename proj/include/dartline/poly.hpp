#pragma once

// Univariate polynomial in x over Rat, kept in canonical form (trailing zero
// coefficients trimmed). The degree of the zero polynomial is -1.

#include <string>
#include <string_view>
#include <vector>

#include "dartline/rat.hpp"

namespace dartline {

class Poly {
public:
    Poly() = default;  // zero polynomial
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(Rat v);
    static Poly x();  // the monomial x

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& coeff(int i) const;  // 0 outside the stored range

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p);
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Rat eval(const Rat& x) const;
    double eval_double(double x) const;

    /// Antiderivative vanishing at 0, i.e. the map f(v) -> \int_0^x f(v) dv.
    Poly integral() const;
    Poly derivative() const;

    std::string to_string(std::string_view var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;  // c_[i] is the coefficient of x^i
};

}  // namespace dartline
