#include "dartline/lengthdist.hpp"

#include <cmath>
#include <stdexcept>

namespace dartline {

double ScaledExact::to_double() const {
    return multiplier.to_double() * std::exp(exponent.to_double());
}

const Poly& QTable::poly(int n, int p) {
    if (n < 0 || p < 1) throw std::invalid_argument("QTable: requires n >= 0, p >= 1");
    auto it = memo_.find({n, p});
    if (it != memo_.end()) return it->second;

    Poly result;
    if (p == 1) {
        result = (n == 0) ? Poly::constant(1) : Poly{};
    } else if (n == 0) {
        result = Poly{};
    } else {
        static const Poly kOneMinusX = Poly::constant(1) - Poly::x();
        result = kOneMinusX * poly(n - 1, p - 1) + poly(n - 1, p).integral();
    }
    return memo_.emplace(std::make_pair(n, p), std::move(result)).first->second;
}

Rat QTable::prob(int n, int p) { return poly(n, p).eval(1); }

void QTable::ensure(int n_max, int p_max) {
    for (int p = 1; p <= p_max; ++p)
        for (int n = 0; n <= n_max; ++n) poly(n, p);
}

Rat QTable::tail(int p, const Rat& x, int N) {
    Rat sum = 0;
    for (int n = 0; n <= N; ++n) sum += poly(n, p).eval(x);
    return Rat(1) - sum;
}

BiSeries q_closed_series_standard(int order_u, int order_z) {
    int nu = order_u, nz = order_z;
    // exponent of (1-uz)^{-1/u} = exp(sum_{m>=1} u^{m-1} z^m / m)
    BiSeries s(nu, nz);
    for (int m = 1; m <= nz; ++m)
        if (m - 1 <= nu) s.set_coeff(m - 1, m, Rat(1, m));
    BiSeries f = series_exp(s);

    // (z - 1) * f
    BiSeries zf(nu, nz);
    for (int j = 1; j <= nz; ++j)
        for (int i = 0; i <= nu; ++i) zf.set_coeff(i, j, f.coeff(i, j - 1));
    BiSeries inner = BiSeries::constant(1, nu, nz) + zf - f;

    BiSeries one_minus_u =
        BiSeries::constant(1, nu, nz) - BiSeries::monomial(1, 0, 1, nu, nz);
    BiSeries prefix = series_div(BiSeries::monomial(2, 0, 1, nu, nz), one_minus_u);
    return BiSeries::monomial(1, 0, 1, nu, nz) + prefix * inner;
}

BiSeries q_closed_series(const Rat& x, int order_u, int order_z) {
    if (x < Rat(0) || x > Rat(1))
        throw std::invalid_argument("q_closed_series: x must be in [0,1]");
    int nu = order_u, nz = order_z;
    // exponent (1 - 1/u) log((1-uz)/(1-(1-x)uz))
    //        = sum_{m>=1} a_m (u^m - u^{m-1}) z^m,  a_m = ((1-x)^m - 1)/m.
    // Every term carries z^m with m >= 1, so the constant term is zero and
    // series_exp applies without a transcendental factor.
    BiSeries e(nu, nz);
    Rat one_minus_x = Rat(1) - x;
    Rat power = 1;
    for (int m = 1; m <= nz; ++m) {
        power *= one_minus_x;
        Rat a = (power - Rat(1)) / Rat(m);
        if (m <= nu) e.set_coeff(m, m, e.coeff(m, m) + a);
        if (m - 1 <= nu) e.set_coeff(m - 1, m, e.coeff(m - 1, m) - a);
    }
    BiSeries f = series_exp(e);

    BiSeries u = BiSeries::monomial(1, 0, 1, nu, nz);
    BiSeries one_minus_u = BiSeries::constant(1, nu, nz) - BiSeries::monomial(1, 0, 1, nu, nz);
    BiSeries one_minus_uz = BiSeries::constant(1, nu, nz) - BiSeries::monomial(1, 1, 1, nu, nz);
    BiSeries a = series_div(u, one_minus_u);    // u/(1-u)
    BiSeries b = series_div(u, one_minus_uz);   // u/(1-uz)
    return a + (b - a) * f;
}

namespace {

// [u^{p-2}] of exp applied to the zero-constant exponent series, times the
// supplied prefactor series; shared helper for both expectations.
Rat extract_expected(int players, const Series1& exponent, bool divide_by_sq) {
    Series1 f = series_exp(exponent);
    if (divide_by_sq) {
        // divide by (1-u)^2, i.e. multiply by sum_j (j+1) u^j
        Rat acc = 0;
        for (int j = 0; j <= players - 2; ++j)
            acc += Rat(j + 1) * f.coeff(players - 2 - j);
        return acc;
    }
    return f.coeff(players - 2);
}

}  // namespace

ScaledExact expected_length(int players) {
    if (players <= 1) return {Rat(0), Rat(0)};
    // E(u) = u^2 (1-u)^{-1-1/u} = e u^2 exp(sum_{m>=1} (1/m + 1/(m+1)) u^m):
    // the exponent (1+1/u) log(1/(1-u)) has constant term exactly 1, split
    // off as the factor e.
    int order = players - 2;
    Series1 s("u", order);
    for (int m = 1; m <= order; ++m) s.set_coeff(m, Rat(1, m) + Rat(1, m + 1));
    return {extract_expected(players, s, false), Rat(1)};
}

ScaledExact expected_remaining(int players, const Rat& x) {
    if (x < Rat(0) || x > Rat(1))
        throw std::invalid_argument("expected_remaining: x must be in [0,1]");
    if (players < 1) throw std::invalid_argument("expected_remaining: requires p >= 1");
    if (players == 1) return {Rat(0), Rat(0)};
    if (x.is_zero()) return {Rat(players - 1), Rat(0)};  // L_p(0) = p-1
    // E(x,u) = u^2/(1-u)^2 ((1-u)/(1-(1-x)u))^{1-1/u}; the exponent series
    // (1-1/u) log((1-u)/(1-(1-x)u)) = sum_m a_m (u^m - u^{m-1}),
    // a_m = ((1-x)^m - 1)/m, has constant term exactly x, split off as the
    // exponent tag.
    int order = players - 2;
    Series1 s("u", order);
    Rat one_minus_x = Rat(1) - x;
    Rat power = 1;
    for (int m = 1; m <= order + 1; ++m) {
        power *= one_minus_x;
        Rat a = (power - Rat(1)) / Rat(m);
        if (m <= order) s.set_coeff(m, s.coeff(m) + a);
        if (m - 1 >= 1) s.set_coeff(m - 1, s.coeff(m - 1) - a);
    }
    return {extract_expected(players, s, true), x};
}

double asymptotic_residual(int players, const Rat& x) {
    if (players < 2) throw std::invalid_argument("asymptotic_residual: requires p >= 2");
    constexpr double kEulerGamma = 0.5772156649015329;
    double value = expected_remaining(players, x).to_double();
    double p = static_cast<double>(players);
    return value - (p + std::log(p) + kEulerGamma - 1.0 + std::log(x.to_double()));
}

}  // namespace dartline
