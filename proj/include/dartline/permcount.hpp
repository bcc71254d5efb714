#pragma once

// Counting the permutations that encode games with a given winner, three
// ways: brute-force enumeration, the first-entry recurrence for w_{n,p,k,s},
// and (via the tests) n! R_{n,p,k}(1). Also the census and explicit
// injections behind the monotonicity argument.

#include <map>
#include <utility>
#include <vector>

#include "dartline/engine.hpp"
#include "dartline/rat.hpp"

namespace dartline {

/// w_{n,p,k,s}: number of permutations of [n] encoding a complete p-player
/// game won by player k whose first entry is s. Built bottom-up from the
/// recurrence
///
///   w_{n,p,k,s} = sum_{s' < s} w_{n-1,p,kbar,s'} + (n-s) w_{n-1,p-1,khat,s}
///
/// with kbar = k-1 reduced into 1..p modulo p, khat = k-1 for k >= 3 and 1
/// for k = 1 (the second summand is absent for k = 2); everything vanishes
/// for p = 1 or n = 2 except w_{2,2,1,1} = 1.
class WinCountTable {
public:
    WinCountTable(int n_max, int p_max);

    int n_max() const { return n_max_; }
    int p_max() const { return p_max_; }

    /// w_{n,p,k,s}; zero for out-of-range indices.
    const BigInt& refined(int n, int p, int k, int s) const;

    /// Marginal w_{n,p,k} = sum_s w_{n,p,k,s}.
    BigInt count(int n, int p, int k) const;

private:
    std::size_t index(int n, int p, int k, int s) const;
    int n_max_, p_max_;
    std::vector<BigInt> w_;
};

/// Tallies winners over all n! permutations, filtered to complete p-player
/// games. Rejects n > 10 (factorial enumeration budget).
std::map<int, long long> count_by_enumeration(int n, int p);

/// One pass over all of S_n: every complete permutation determines its
/// player count p from the number of left-to-right minima, so a single
/// sweep tallies w_{n,p,k} for every (p,k) at once.
std::map<std::pair<int, int>, long long> winner_counts_sweep(int n);

/// Like count_by_enumeration but restricted to permutations with first
/// entry s; enumeration oracle for the refined recurrence.
std::map<int, long long> count_by_enumeration_first_entry(int n, int p, int s);

/// Which census set a permutation falls into for the pair (k, k+1):
///   u     -- encodes a game won by k+1 whose last throw is not player k's
///   u_bar -- won by k+1, last throw is player k's
///   v     -- won by k, and player (k+1)'s losing throw would have lost even
///            before player k's immediately preceding throw
///   v_bar -- won by k, but that throw would have survived
///   none  -- not a complete game, or won by someone else
enum class CensusSet { u, u_bar, v, v_bar, none };

CensusSet classify_for_census(const Perm& pi, int p, int k);

struct InjectionCensus {
    long long u = 0;
    long long u_bar = 0;
    long long v = 0;
    long long v_bar = 0;
};

/// Cardinalities of the four census sets at (n, p, k); n <= 9, 1 <= k < p.
InjectionCensus injection_census(int n, int p, int k);

/// Census for every (p, k) pair in one sweep over S_n. A complete
/// permutation with winner k0 lands in the census of pair (k0-1, k0) as
/// u/u_bar and of pair (k0, k0+1) as v/v_bar.
std::map<std::pair<int, int>, InjectionCensus> census_sweep(int n);

/// First injection: swap player k's losing throw with the (winner's) throw
/// right after it. Maps the u set at (n,p,k+1) into the v set at (n,p,k).
Perm swap_losing_throw(const Perm& pi, int p, int k);

/// Second injection: swap player k's last good throw with the next one,
/// then delete the final entry. Maps the u_bar set at (n,p,k+1) into
/// (v_bar set at (n-1,p,k)) x {2..n}; returns the deleted value as second
/// component.
std::pair<Perm, int> swap_and_drop_last(const Perm& pi, int p, int k);

}  // namespace dartline
