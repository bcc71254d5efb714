#pragma once

// Truncated formal power series over Rat, univariate (Series1) and bivariate
// (BiSeries). All ring operations respect the truncation window: the result
// coefficient at a retained power depends only on input coefficients at
// powers inside the window, and is exact there.
//
// exp requires a zero constant term and log a constant term of exactly 1;
// transcendental factors must be split off by the caller (see the expected-
// length computations, which carry them as an exponent tag).

#include <string>
#include <string_view>
#include <vector>

#include "dartline/rat.hpp"

namespace dartline {

/// Univariate truncated series: coefficients for powers 0..order().
class Series1 {
public:
    Series1(std::string var, int order);
    static Series1 from_coeffs(std::string var, std::vector<Rat> coeffs);

    const std::string& var() const { return var_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int i) const;
    Series1& set_coeff(int i, Rat v);

    Series1& operator+=(const Series1& o);
    Series1& operator-=(const Series1& o);
    friend Series1 operator+(Series1 a, const Series1& b) { return a += b; }
    friend Series1 operator-(Series1 a, const Series1& b) { return a -= b; }
    friend Series1 operator*(const Series1& a, const Series1& b);
    friend Series1 operator*(const Rat& s, Series1 a);
    friend bool operator==(const Series1& a, const Series1& b) = default;

    std::string to_string() const;

private:
    void check_same_var(const Series1& o) const;
    std::string var_;
    std::vector<Rat> c_;
};

Series1 series_exp(const Series1& s);                     // pre: s(0) == 0
Series1 series_log(const Series1& s);                     // pre: s(0) == 1
Series1 series_div(const Series1& a, const Series1& b);   // pre: b(0) != 0

/// Bivariate truncated series in (u, z) on the dense rectangular window
/// 0 <= i <= order_u, 0 <= j <= order_z.
class BiSeries {
public:
    BiSeries(int order_u, int order_z);
    static BiSeries constant(const Rat& v, int order_u, int order_z);
    static BiSeries monomial(int iu, int iz, const Rat& coeff, int order_u, int order_z);

    int order_u() const { return nu_; }
    int order_z() const { return nz_; }
    const Rat& coeff(int iu, int iz) const;
    BiSeries& set_coeff(int iu, int iz, Rat v);

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const Rat& s, BiSeries a);
    friend bool operator==(const BiSeries& a, const BiSeries& b) = default;

private:
    friend BiSeries series_exp(const BiSeries&);
    friend BiSeries series_log(const BiSeries&);
    friend BiSeries series_div(const BiSeries&, const BiSeries&);
    int nu_, nz_;
    std::vector<std::vector<Rat>> z_;  // z_[j][i] = coefficient of u^i z^j
};

BiSeries series_exp(const BiSeries& s);                    // pre: s(0,0) == 0
BiSeries series_log(const BiSeries& s);                    // pre: s(0,0) == 1
BiSeries series_div(const BiSeries& a, const BiSeries& b); // pre: b(0,0) != 0

}  // namespace dartline
