#pragma once

// The game itself: deterministic replay from a list of throw distances,
// the permutation encoding of a game, and a reproducible Monte Carlo
// simulator.
//
// Rules: players queue up; a throw that lands closer to the center than
// everything before it keeps its thrower in the game (they rejoin at the
// back), any other throw eliminates them. Last player standing wins.

#include <cstdint>
#include <span>
#include <vector>

namespace dartline {

/// Permutation of 1..n in one-line notation.
struct Perm {
    std::vector<int> entries;

    int size() const { return static_cast<int>(entries.size()); }

    /// Validates that entries form a bijection on 1..n.
    static Perm from_entries(std::vector<int> entries);
};

/// Rank transform: smallest distance becomes 1, second smallest 2, and so
/// on. Duplicate distances are rejected (a probability-zero event under the
/// continuous model).
Perm encode(std::span<const double> distances);

/// 1-based positions i with pi_i smaller than every earlier entry.
/// Position 1 is always included for nonempty permutations.
std::vector<int> lrm_positions(const Perm& pi);

/// A permutation encodes a finished p-player game iff it has n-p+1
/// left-to-right minima and ends with a botch. Requires p >= 2.
bool is_complete_game(const Perm& pi, int players);

struct GameRecord {
    struct Throw {
        int player;
        double distance;
        bool eliminated;
    };

    int players = 0;
    std::vector<Throw> throws;
    int winner = 0;

    int length() const { return static_cast<int>(throws.size()); }
    std::vector<int> elimination_positions() const;  // 1-based throw indices
};

/// Replays a game from a queue of throw distances. Consumes exactly
/// length() distances; throws std::invalid_argument if the supplied
/// distances run out before the game finishes (or are not distinct).
GameRecord play(int players, std::span<const double> distances);

/// Winner of the game encoded by a complete permutation; rejects
/// permutations that do not encode a complete game.
int winner_of(const Perm& pi, int players);

/// Counter-based generator: value i of stream (seed, stream) is a pure
/// function of (seed, stream, i), so disjoint game ranges can be simulated
/// in parallel with bit-identical results at any thread count.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double next_u01();  // [0, 1), 53-bit

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

struct SimulationResult {
    std::uint64_t games = 0;
    std::vector<std::uint64_t> win_counts;        // index k-1
    std::vector<std::uint64_t> length_histogram;  // index = game length
    std::uint64_t total_throws = 0;

    double win_frequency(int k) const;
    double mean_length() const;
};

/// Runs `games` independent games with i.i.d. uniform(0,1) distances.
/// The first throw must beat x0 (x0 = 1 is the standard game). Results are
/// deterministic for fixed (players, games, seed, x0) at any thread count;
/// threads = 0 picks the hardware concurrency.
SimulationResult simulate(int players, std::uint64_t games, std::uint64_t seed,
                          double x0 = 1.0, int threads = 0);

}  // namespace dartline
