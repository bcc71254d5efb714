#include "dartline/permcount.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dartline {

namespace {
const BigInt kZeroInt{};
constexpr int kEnumerationBudget = 10;
}

WinCountTable::WinCountTable(int n_max, int p_max) : n_max_(n_max), p_max_(p_max) {
    if (n_max < 2 || p_max < 2)
        throw std::invalid_argument("WinCountTable: requires n_max >= 2 and p_max >= 2");
    w_.assign(static_cast<std::size_t>(n_max - 1) * static_cast<std::size_t>(p_max) *
                  static_cast<std::size_t>(p_max) * static_cast<std::size_t>(n_max),
              BigInt(0));
    // n = 2 base case
    w_[index(2, 2, 1, 1)] = 1;
    for (int n = 3; n <= n_max; ++n) {
        for (int p = 2; p <= p_max; ++p) {
            for (int k = 1; k <= p; ++k) {
                int kbar = (k == 1) ? p : k - 1;
                int khat = (k == 1) ? 1 : k - 1;
                for (int s = 1; s <= n; ++s) {
                    BigInt total = 0;
                    for (int sp = 1; sp < s; ++sp) total += refined(n - 1, p, kbar, sp);
                    if (k != 2)
                        total += BigInt(n - s) * refined(n - 1, p - 1, khat, s);
                    w_[index(n, p, k, s)] = std::move(total);
                }
            }
        }
    }
}

std::size_t WinCountTable::index(int n, int p, int k, int s) const {
    // n in 2..n_max, p in 1..p_max, k in 1..p, s in 1..n
    std::size_t nn = static_cast<std::size_t>(n - 2);
    std::size_t pp = static_cast<std::size_t>(p - 1);
    std::size_t kk = static_cast<std::size_t>(k - 1);
    std::size_t ss = static_cast<std::size_t>(s - 1);
    return ((nn * static_cast<std::size_t>(p_max_) + pp) * static_cast<std::size_t>(p_max_) + kk) *
               static_cast<std::size_t>(n_max_) +
           ss;
}

const BigInt& WinCountTable::refined(int n, int p, int k, int s) const {
    if (n < 2 || n > n_max_ || p < 2 || p > p_max_ || k < 1 || k > p || s < 1 || s > n)
        return kZeroInt;
    return w_[index(n, p, k, s)];
}

BigInt WinCountTable::count(int n, int p, int k) const {
    BigInt total = 0;
    if (n < 2 || n > n_max_) return total;
    for (int s = 1; s <= n; ++s) total += refined(n, p, k, s);
    return total;
}

namespace {

// Iterate all permutations of [n], handing each to fn as a Perm.
template <typename Fn>
void for_each_perm(int n, Fn&& fn) {
    std::vector<int> entries(static_cast<std::size_t>(n));
    std::iota(entries.begin(), entries.end(), 1);
    Perm pi{entries};
    do {
        fn(pi);
    } while (std::next_permutation(pi.entries.begin(), pi.entries.end()));
}

void check_budget(int n) {
    if (n < 0 || n > kEnumerationBudget)
        throw std::invalid_argument("enumeration limited to n <= 10 (factorial budget)");
}

}  // namespace

std::map<int, long long> count_by_enumeration(int n, int p) {
    check_budget(n);
    std::map<int, long long> counts;
    if (n == 0 || p < 2) return counts;
    for_each_perm(n, [&](const Perm& pi) {
        if (is_complete_game(pi, p)) ++counts[winner_of(pi, p)];
    });
    return counts;
}

std::map<std::pair<int, int>, long long> winner_counts_sweep(int n) {
    check_budget(n);
    std::map<std::pair<int, int>, long long> counts;
    if (n < 2) return counts;
    for_each_perm(n, [&](const Perm& pi) {
        if (pi.entries.back() == 1) return;  // ends with a good throw: not complete
        int p = n - static_cast<int>(lrm_positions(pi).size()) + 1;
        if (p < 2) return;
        ++counts[{p, winner_of(pi, p)}];
    });
    return counts;
}

std::map<int, long long> count_by_enumeration_first_entry(int n, int p, int s) {
    check_budget(n);
    std::map<int, long long> counts;
    if (n == 0 || p < 2) return counts;
    for_each_perm(n, [&](const Perm& pi) {
        if (pi.entries[0] == s && is_complete_game(pi, p)) ++counts[winner_of(pi, p)];
    });
    return counts;
}

namespace {

// Replay the game behind a complete permutation. Caller guarantees
// completeness.
GameRecord replay(const Perm& pi, int p) {
    std::vector<double> d;
    d.reserve(pi.entries.size());
    for (int v : pi.entries) d.push_back(static_cast<double>(v));
    return play(p, d);
}

// 1-based position of player `who`'s losing throw, or 0 if none.
int losing_throw_position(const GameRecord& rec, int who) {
    for (int i = 0; i < rec.length(); ++i) {
        const auto& t = rec.throws[static_cast<std::size_t>(i)];
        if (t.player == who && t.eliminated) return i + 1;
    }
    return 0;
}

}  // namespace

CensusSet classify_for_census(const Perm& pi, int p, int k) {
    if (k < 1 || k >= p) throw std::invalid_argument("classify_for_census: requires 1 <= k < p");
    if (!is_complete_game(pi, p)) return CensusSet::none;
    GameRecord rec = replay(pi, p);
    if (rec.winner == k + 1) {
        // last throw belongs to player k?
        return rec.throws.back().player == k ? CensusSet::u_bar : CensusSet::u;
    }
    if (rec.winner == k) {
        // player k+1's losing throw is at position i; would it still have
        // lost had it been thrown before position i-1 (player k's throw)?
        int i = losing_throw_position(rec, k + 1);
        int prev_min = std::numeric_limits<int>::max();
        for (int j = 0; j + 2 < i; ++j)
            prev_min = std::min(prev_min, pi.entries[static_cast<std::size_t>(j)]);
        bool still_losing = pi.entries[static_cast<std::size_t>(i) - 1] > prev_min;
        return still_losing ? CensusSet::v : CensusSet::v_bar;
    }
    return CensusSet::none;
}

InjectionCensus injection_census(int n, int p, int k) {
    if (n > 9) throw std::invalid_argument("injection_census: limited to n <= 9");
    if (k < 1 || k >= p) throw std::invalid_argument("injection_census: requires 1 <= k < p");
    InjectionCensus census;
    for_each_perm(n, [&](const Perm& pi) {
        switch (classify_for_census(pi, p, k)) {
            case CensusSet::u: ++census.u; break;
            case CensusSet::u_bar: ++census.u_bar; break;
            case CensusSet::v: ++census.v; break;
            case CensusSet::v_bar: ++census.v_bar; break;
            case CensusSet::none: break;
        }
    });
    return census;
}

std::map<std::pair<int, int>, InjectionCensus> census_sweep(int n) {
    check_budget(n);
    std::map<std::pair<int, int>, InjectionCensus> out;
    if (n < 2) return out;
    for_each_perm(n, [&](const Perm& pi) {
        if (pi.entries.back() == 1) return;
        int p = n - static_cast<int>(lrm_positions(pi).size()) + 1;
        if (p < 2) return;
        GameRecord rec = replay(pi, p);
        int winner = rec.winner;
        if (winner >= 2) {
            // contributes to the (k = winner-1, k+1) census as u / u_bar
            auto& c = out[{p, winner - 1}];
            if (rec.throws.back().player == winner - 1) ++c.u_bar;
            else ++c.u;
        }
        if (winner < p) {
            // contributes to the (k = winner, k+1) census as v / v_bar
            auto& c = out[{p, winner}];
            int i = losing_throw_position(rec, winner + 1);
            int prev_min = std::numeric_limits<int>::max();
            for (int j = 0; j + 2 < i; ++j)
                prev_min = std::min(prev_min, pi.entries[static_cast<std::size_t>(j)]);
            if (pi.entries[static_cast<std::size_t>(i) - 1] > prev_min) ++c.v;
            else ++c.v_bar;
        }
    });
    return out;
}

Perm swap_losing_throw(const Perm& pi, int p, int k) {
    GameRecord rec = replay(pi, p);
    int i = losing_throw_position(rec, k);
    if (i == 0 || i >= pi.size())
        throw std::invalid_argument("swap_losing_throw: player k has no swappable losing throw");
    Perm out = pi;
    std::swap(out.entries[static_cast<std::size_t>(i) - 1],
              out.entries[static_cast<std::size_t>(i)]);
    return out;
}

std::pair<Perm, int> swap_and_drop_last(const Perm& pi, int p, int k) {
    GameRecord rec = replay(pi, p);
    int i = 0;  // player k's last good throw
    for (int j = 0; j < rec.length(); ++j) {
        const auto& t = rec.throws[static_cast<std::size_t>(j)];
        if (t.player == k && !t.eliminated) i = j + 1;
    }
    if (i == 0 || i >= pi.size())
        throw std::invalid_argument("swap_and_drop_last: player k has no swappable good throw");
    std::vector<int> entries = pi.entries;
    std::swap(entries[static_cast<std::size_t>(i) - 1], entries[static_cast<std::size_t>(i)]);
    int last = entries.back();
    entries.pop_back();
    for (int& v : entries)
        if (v > last) --v;
    return {Perm{std::move(entries)}, last};
}

}  // namespace dartline
