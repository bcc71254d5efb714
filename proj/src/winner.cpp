#include "dartline/winner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace dartline {

const Poly& RTable::poly(int n, int p, int k) {
    if (n < 0 || p < 1) throw std::invalid_argument("RTable: requires n >= 0, p >= 1");
    if (k < 1 || k > p) throw std::invalid_argument("RTable: k out of range 1..p");
    auto it = memo_.find({n, p, k});
    if (it != memo_.end()) return it->second;

    Poly result;
    if (p == 1) {
        result = (n == 0) ? Poly::constant(1) : Poly{};
    } else if (n == 0) {
        result = Poly{};
    } else if (k == 1) {
        result = poly(n - 1, p, p).integral();
    } else {
        static const Poly kOneMinusX = Poly::constant(1) - Poly::x();
        result = kOneMinusX * poly(n - 1, p - 1, k - 1) + poly(n - 1, p, k - 1).integral();
    }
    return memo_.emplace(std::make_tuple(n, p, k), std::move(result)).first->second;
}

void RTable::ensure(int n_max, int p_max) {
    for (int p = 1; p <= p_max; ++p)
        for (int k = 1; k <= p; ++k)
            for (int n = 0; n <= n_max; ++n) poly(n, p, k);
}

Enclosure win_prob(RTable& r, QTable& q, int p, int k, const Rat& x, int N) {
    if (k < 1 || k > p) throw std::invalid_argument("win_prob: k out of range 1..p");
    if (x < Rat(0) || x > Rat(1)) throw std::invalid_argument("win_prob: x must be in [0,1]");
    Rat lo = 0;
    for (int n = 0; n <= N; ++n) lo += r.poly(n, p, k).eval(x);
    Rat tail = q.tail(p, x, N);
    return {lo, lo + tail};
}

MonotonicityResult check_monotonicity(RTable& r, QTable& q, int p, int N) {
    if (p < 2) throw std::invalid_argument("check_monotonicity: requires p >= 2");
    std::vector<Enclosure> enc;
    enc.reserve(static_cast<std::size_t>(p));
    for (int k = 1; k <= p; ++k) enc.push_back(win_prob(r, q, p, k, Rat(1), N));
    bool all_separated = true;
    for (int k = 0; k + 1 < p; ++k) {
        const auto& a = enc[static_cast<std::size_t>(k)];
        const auto& b = enc[static_cast<std::size_t>(k) + 1];
        if (a.lo > b.hi) continue;         // strictly above: certified for this pair
        if (a.hi < b.lo) return MonotonicityResult::violated;
        all_separated = false;
    }
    return all_separated ? MonotonicityResult::certified : MonotonicityResult::indeterminate;
}

// --- closed forms -----------------------------------------------------------

namespace {

// Common oscillatory block: sin and cos of sqrt(3) x / 2.
struct Trig {
    double s, c;
    explicit Trig(double x) {
        double a = std::sqrt(3.0) * x / 2.0;
        s = std::sin(a);
        c = std::cos(a);
    }
};

double closed_p2(int k, double x) {
    double e = std::exp(-x);
    return k == 1 ? 1.0 - e : e;
}

double closed_p3(int k, double x) {
    const double s3 = std::sqrt(3.0);
    Trig t(x);
    double em = std::exp(-x), eh = std::exp(-x / 2.0);
    switch (k) {
        case 1: return 1.0 + (x - 1.0) * em - 2.0 / s3 * eh * t.s;
        case 2: return -em + eh * (t.s / s3 + t.c);
        default: return (2.0 - x) * em + eh * (t.s / s3 - t.c);
    }
}

double closed_p4(int k, double x) {
    const double s3 = std::sqrt(3.0);
    Trig t(x);
    double em = std::exp(-x), eh = std::exp(-x / 2.0);
    double cx = std::cos(x), sx = std::sin(x);
    switch (k) {
        case 1:
            return 1.0 + 1.25 * (cx - sx) - (3 * x * x - 8 * x + 5) / 4.0 * em +
                   eh * (s3 * (x - 1.0 / 3.0) * t.s - (x + 1.0) * t.c);
        case 2:
            // constant term 1 (not 3): required for sum_k P_{4,k}(x) = 1 and
            // P_{4,2}(0) = 0, and confirmed against the exact enclosures
            return 1.25 * (cx + sx) - (x * x - 6 * x + 1) / 4.0 * em -
                   eh * ((x + 3.0) / s3 * t.s + (x + 1.0) * t.c);
        case 3:
            return 1.25 * (sx - cx) + (x * x - 7) / 4.0 * em +
                   eh * (3.0 * t.c - (2 * x + 1) / s3 * t.s);
        default:
            return -1.25 * (sx + cx) + (9 * x * x - 42 * x + 39) / 12.0 * em +
                   eh * (5.0 / s3 * t.s + (2 * x - 1) * t.c);
    }
}

double closed_p51() {
    const double s3 = std::sqrt(3.0);
    const double s5 = std::sqrt(5.0);
    const double r = std::sqrt(10.0 - 2.0 * s5);
    return 1.0 - 12.5 * std::cos(1.0)
         - r * (3.0 * s5 + 2.0) / 10.0 * std::exp((s5 - 1.0) / 4.0) * std::sin(r * (s5 + 1.0) / 8.0)
         + (3.0 * s5 + 7.0) / 2.0 * std::exp((s5 - 1.0) / 4.0) * std::cos(r * (s5 + 1.0) / 8.0)
         - (3.0 * s5 - 7.0) / 2.0 * std::exp((-s5 - 1.0) / 4.0) * std::cos(r / 4.0)
         - r * (s5 + 13.0) / 20.0 * std::exp((-s5 - 1.0) / 4.0) * std::sin(r / 4.0)
         + 5.0 * std::exp(-0.5) * (std::cos(s3 / 2.0) + std::sin(s3 / 2.0) / s3);
}

}  // namespace

double closed_form_p(int p, int k, double x) {
    if (k < 1 || k > p) throw std::invalid_argument("closed_form_p: k out of range");
    switch (p) {
        case 2: return closed_p2(k, x);
        case 3: return closed_p3(k, x);
        case 4: return closed_p4(k, x);
        case 5:
            if (k == 1 && x == 1.0) return closed_p51();
            throw std::invalid_argument("closed_form_p: only (k=1, x=1) is available for p=5");
        default:
            throw std::invalid_argument("closed_form_p: closed forms cover p = 2..5 only");
    }
}

// --- roots-of-unity identity -----------------------------------------------

namespace {

using Cplx = std::complex<double>;

// Complex-coefficient polynomial helpers (coefficients of v^i).
Cplx ceval(const std::vector<Cplx>& poly, double v) {
    Cplx acc = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * v + *it;
    return acc;
}

Cplx csimpson(const std::vector<Cplx>& poly, Cplx tz, double a, double b, Cplx fa,
              Cplx fm, Cplx fb, Cplx whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    auto f = [&](double v) { return ceval(poly, v) * std::exp(-v * tz); };
    Cplx flm = f(lm), frm = f(rm);
    Cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    Cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth > 40 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return csimpson(poly, tz, a, m, fa, flm, fm, left, tol / 2.0, depth + 1) +
           csimpson(poly, tz, m, b, fm, frm, fb, right, tol / 2.0, depth + 1);
}

// integral over [0, x] of poly(v) e^{-v t z} dv
Cplx integrate(const std::vector<Cplx>& poly, Cplx tz, double x, double tol) {
    if (x == 0.0) return 0.0;
    auto f = [&](double v) { return ceval(poly, v) * std::exp(-v * tz); };
    Cplx fa = f(0.0), fb = f(x), fm = f(0.5 * x);
    Cplx whole = x / 6.0 * (fa + 4.0 * fm + fb);
    return csimpson(poly, tz, 0.0, x, fa, fm, fb, whole, tol, 0);
}

// R_p(x,t,z) truncated at z^N, from the recurrence table.
Cplx r_gf(RTable& r, int p, double x, Cplx t, double z, int N) {
    Cplx total = 0.0;
    Cplx tk = 1.0;
    for (int k = 1; k <= p; ++k) {
        tk *= t;
        double zn = 1.0;
        Cplx acc = 0.0;
        for (int n = 0; n <= N; ++n) {
            acc += r.poly(n, p, k).eval_double(x) * zn;
            zn *= z;
        }
        total += acc * tk;
    }
    return total;
}

// Rtilde_p(x,t,z): integrand polynomial d/dv[(1-v) R_{p-1}(v,t,z)] built
// exactly from the table, then quadrature against e^{-vtz}.
Cplx r_tilde(RTable& r, int p, double x, Cplx t, double z, int N, double tol) {
    // complex coefficients of (1-v) R_{p-1}(v,t,z) in v
    std::vector<Cplx> coeffs(static_cast<std::size_t>(N) + 3, 0.0);
    Cplx tk = 1.0;
    for (int k = 1; k <= p - 1; ++k) {
        tk *= t;
        double zn = 1.0;
        for (int n = 0; n <= N; ++n) {
            const Poly& poly = r.poly(n, p - 1, k);
            Cplx w = tk * zn;
            for (int i = 0; i <= poly.degree(); ++i)
                coeffs[static_cast<std::size_t>(i)] += w * poly.coeff(i).to_double();
            zn *= z;
        }
    }
    for (std::size_t i = coeffs.size() - 1; i >= 1; --i) coeffs[i] -= coeffs[i - 1];
    // derivative
    std::vector<Cplx> deriv(coeffs.size() - 1);
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        deriv[i - 1] = static_cast<double>(i) * coeffs[i];

    Cplx tz = t * z;
    Cplx integral = integrate(deriv, tz, x, tol);
    Cplx zpow = std::pow(Cplx(z), p - 1);
    return (zpow + t * z * integral) * std::exp(x * tz);
}

}  // namespace

RpIdentityReport verify_rp_identity(RTable& r, int p, double x, std::complex<double> t,
                                    double z, int N, double quad_tol) {
    if (p < 2 || p > 3)
        throw std::invalid_argument("verify_rp_identity: p must be 2 or 3");
    if (!(x > 0.0) || x > 1.0)
        throw std::invalid_argument("verify_rp_identity: x must be in (0,1]");
    if (std::abs(z) >= 1.0)
        throw std::invalid_argument("verify_rp_identity: |z| must be < 1");

    std::vector<Cplx> roots;
    for (int j = 0; j < p; ++j) {
        double arg = 2.0 * std::numbers::pi * j / p;
        roots.emplace_back(std::cos(arg), std::sin(arg));
    }
    for (const Cplx& zeta : roots)
        if (std::abs(t - zeta) < 1e-9)
            throw std::invalid_argument("verify_rp_identity: t must not be a p-th root of unity");

    Cplx lhs = r_gf(r, p, x, t, z, N);
    Cplx sum = 0.0;
    for (const Cplx& zeta : roots)
        sum += r_tilde(r, p, x, zeta, z, N, quad_tol) / (t - zeta);
    Cplx rhs = (std::pow(t, p + 1) - t) / static_cast<double>(p) * sum;
    return {lhs, rhs};
}

}  // namespace dartline
