#pragma once

// Signless Stirling numbers of the first kind c(n,k) -- the number of
// permutations of [n] with k left-to-right minima (equivalently k cycles) --
// and the count of permutations encoding a complete p-player game.

#include <string>

#include "dartline/rat.hpp"

namespace dartline {

/// Triangular table of c(n,k), built eagerly up to max_n and then immutable;
/// concurrent readers are safe.
class StirlingTable {
public:
    explicit StirlingTable(int max_n = 64);

    int max_n() const { return max_n_; }

    /// c(n,k); zero for k < 0 or k > n. Throws std::out_of_range for n > max_n.
    const BigInt& c(int n, int k) const;

    /// Number of permutations of [n] encoding a complete p-player game,
    /// (n-1) * c(n-1, n-p+1). Requires n >= 2, p >= 2.
    BigInt complete_game_count(int n, int p) const;

private:
    int max_n_;
    std::vector<std::vector<BigInt>> rows_;
};

struct EgfReport {
    bool passed = false;
    std::string message;
};

/// Machine check of the exponential generating function identity for c(n,k):
/// expands exp(v log(1/(1-z))) as a bivariate series with v carried in the
/// coefficients and compares n! [z^n] row by row against the recurrence
/// table, exactly. Reports the first mismatch, if any.
EgfReport verify_stirling_egf(int n_max);

}  // namespace dartline
