#pragma once

// Exact distribution of the number of throws. Q_{n,p}(x) is the probability
// that, with p players left and distance-to-beat x, the game ends after
// exactly n further throws. The table is filled from the recurrence
//
//   Q_{n,p}(x) = (1-x) Q_{n-1,p-1}(x) + \int_0^x Q_{n-1,p}(v) dv,
//   Q_{0,1} = 1,  Q_{n,1} = 0 (n >= 1),  Q_{0,p} = 0 (p >= 2),
//
// and the closed-form generating functions are expanded independently so the
// two routes can be compared coefficient by coefficient.

#include <map>
#include <utility>

#include "dartline/poly.hpp"
#include "dartline/rat.hpp"
#include "dartline/series.hpp"

namespace dartline {

/// A real number represented exactly as multiplier * e^{exponent}.
struct ScaledExact {
    Rat multiplier;
    Rat exponent;

    double to_double() const;
};

/// Memoized table of the polynomials Q_{n,p}(x).
///
/// Filling is not thread-safe: call ensure() (or finish all poly()/prob()
/// calls) on one thread before reading concurrently.
class QTable {
public:
    const Poly& poly(int n, int p);
    Rat prob(int n, int p);  // Q_{n,p}(1)

    void ensure(int n_max, int p_max);

    /// Exact tail 1 - sum_{n<=N} Q_{n,p}(x); rigorous because the Q_{n,p}(x)
    /// sum to 1 over n.
    Rat tail(int p, const Rat& x, int N);

private:
    std::map<std::pair<int, int>, Poly> memo_;
};

/// Expansion of the closed form for the standard game's length generating
/// function: u + u^2/(1-u) (1 + (z-1)(1-uz)^{-1/u}). Coefficient of u^p z^n
/// is Q_{n,p}(1).
BiSeries q_closed_series_standard(int order_u, int order_z);

/// Expansion of the general closed form
///   u/(1-u) + (u/(1-uz) - u/(1-u)) ((1-uz)/(1-(1-x)uz))^{1-1/u}
/// at a rational x in [0,1]. Coefficient of u^p z^n is Q_{n,p}(x).
BiSeries q_closed_series(const Rat& x, int order_u, int order_z);

/// Expected length of a p-player game, as an exact rational multiple of e.
/// E_1 = 0 is returned as (0, 0).
ScaledExact expected_length(int players);

/// Expected number of remaining throws with p players left and distance to
/// beat x, as an exact rational multiple of e^x. x = 0 gives exactly p-1.
ScaledExact expected_remaining(int players, const Rat& x);

/// Numeric E_p(x) - (p + ln p + gamma - 1 + ln x).
double asymptotic_residual(int players, const Rat& x);

}  // namespace dartline
