#pragma once

// Winner-refined distribution. R_{n,p,k}(x) is the probability that, with p
// players left and distance-to-beat x, the k-th player in throwing order
// wins after exactly n further throws. The recurrence
//
//   R_{n,p,1}(x) = \int_0^x R_{n-1,p,p}(v) dv
//   R_{n,p,k}(x) = (1-x) R_{n-1,p-1,k-1}(x) + \int_0^x R_{n-1,p,k-1}(v) dv
//
// with R_{0,1,1} = 1 feeds rigorous enclosures for the winning probabilities
// P_{p,k}(x): an exact partial sum below, plus the exact length-distribution
// tail above.

#include <complex>
#include <map>
#include <tuple>

#include "dartline/lengthdist.hpp"
#include "dartline/poly.hpp"
#include "dartline/rat.hpp"

namespace dartline {

/// Exact interval [lo, hi] guaranteed to contain a true probability.
struct Enclosure {
    Rat lo;
    Rat hi;

    Rat width() const { return hi - lo; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    double mid_double() const { return ((lo + hi) / Rat(2)).to_double(); }
};

/// Memoized table of the polynomials R_{n,p,k}(x). Same threading contract
/// as QTable: fill before reading concurrently.
class RTable {
public:
    const Poly& poly(int n, int p, int k);
    void ensure(int n_max, int p_max);

private:
    std::map<std::tuple<int, int, int>, Poly> memo_;
};

/// Enclosure for P_{p,k}(x): lo is the exact partial sum over n <= N, hi
/// adds the exact Q-tail (each omitted R term is at most the matching Q
/// term, so the true value lies inside).
Enclosure win_prob(RTable& r, QTable& q, int p, int k, const Rat& x, int N);

enum class MonotonicityResult {
    certified,      // every adjacent pair strictly separated: P_{p,k} > P_{p,k+1}
    violated,       // some adjacent pair strictly separated the other way
    indeterminate,  // enclosures overlap; raise N
};

/// Rigorous certificate that P_{p,k} > P_{p,k+1} for all k < p at x = 1,
/// obtained from non-overlapping enclosures.
MonotonicityResult check_monotonicity(RTable& r, QTable& q, int p, int N);

/// Closed forms for the winning probabilities, evaluated in double
/// precision: all k for p in {2,3,4}, and (k=1, x=1) for p = 5. Anything
/// else is rejected.
double closed_form_p(int p, int k, double x);

struct RpIdentityReport {
    std::complex<double> lhs;
    std::complex<double> rhs;

    double residual() const { return std::abs(lhs - rhs); }
};

/// Numeric check of the roots-of-unity recursion for the generating function
/// R_p(x,t,z) = sum_k R_{p,k}(x,z) t^k. The left side is the truncated
/// series from the recurrence table; the right side assembles the auxiliary
/// function at each p-th root of unity,
///
///   Rtilde_p(x,t,z) = (z^{p-1} + tz \int_0^x d/dv[(1-v) R_{p-1}(v,t,z)]
///                      e^{-vtz} dv) e^{xtz},
///
/// through the filter (t^{p+1}-t)/p sum_j Rtilde_p(x, zeta^j, z)/(t - zeta^j).
/// The polynomial-in-v part of the integrand comes exactly from the table;
/// the integral uses adaptive Simpson quadrature to quad_tol per panel.
/// Requires p in {2,3}, |z| < 1, x in (0,1], and t not a p-th root of unity.
RpIdentityReport verify_rp_identity(RTable& r, int p, double x, std::complex<double> t,
                                    double z, int N, double quad_tol = 1e-9);

}  // namespace dartline
