#include "dartline/engine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace dartline {

Perm Perm::from_entries(std::vector<int> entries) {
    int n = static_cast<int>(entries.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : entries) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Perm: entries are not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
    return Perm{std::move(entries)};
}

Perm encode(std::span<const double> distances) {
    std::size_t n = distances.size();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return distances[static_cast<std::size_t>(a)] <
                                         distances[static_cast<std::size_t>(b)]; });
    std::vector<int> entries(n);
    for (std::size_t rank = 0; rank < n; ++rank) {
        if (rank > 0 && distances[static_cast<std::size_t>(idx[rank])] ==
                            distances[static_cast<std::size_t>(idx[rank - 1])])
            throw std::invalid_argument("encode: duplicate distances");
        entries[static_cast<std::size_t>(idx[rank])] = static_cast<int>(rank) + 1;
    }
    return Perm{std::move(entries)};
}

std::vector<int> lrm_positions(const Perm& pi) {
    std::vector<int> out;
    int best = std::numeric_limits<int>::max();
    for (int i = 0; i < pi.size(); ++i) {
        if (pi.entries[static_cast<std::size_t>(i)] < best) {
            best = pi.entries[static_cast<std::size_t>(i)];
            out.push_back(i + 1);
        }
    }
    return out;
}

bool is_complete_game(const Perm& pi, int players) {
    if (players < 2) throw std::invalid_argument("is_complete_game: requires p >= 2");
    int n = pi.size();
    if (n == 0) return false;
    auto lrm = lrm_positions(pi);
    return static_cast<int>(lrm.size()) == n - players + 1 && lrm.back() != n;
}

std::vector<int> GameRecord::elimination_positions() const {
    std::vector<int> out;
    for (int i = 0; i < length(); ++i)
        if (throws[static_cast<std::size_t>(i)].eliminated) out.push_back(i + 1);
    return out;
}

GameRecord play(int players, std::span<const double> distances) {
    if (players < 1) throw std::invalid_argument("play: requires p >= 1");
    GameRecord rec;
    rec.players = players;
    if (players == 1) {
        rec.winner = 1;
        return rec;
    }
    std::deque<int> queue;
    for (int k = 1; k <= players; ++k) queue.push_back(k);
    double best = std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    while (queue.size() > 1) {
        if (i >= distances.size())
            throw std::invalid_argument("play: ran out of distances before the game ended");
        int thrower = queue.front();
        queue.pop_front();
        double d = distances[i++];
        if (d == best) throw std::invalid_argument("play: duplicate distances");
        bool good = d < best;
        rec.throws.push_back({thrower, d, !good});
        if (good) {
            best = d;
            queue.push_back(thrower);
        }
    }
    rec.winner = queue.front();
    return rec;
}

int winner_of(const Perm& pi, int players) {
    if (!is_complete_game(pi, players))
        throw std::invalid_argument("winner_of: permutation does not encode a complete game");
    std::vector<double> distances;
    distances.reserve(pi.entries.size());
    for (int v : pi.entries) distances.push_back(static_cast<double>(v));
    return play(players, distances).winner;
}

// --- counter-based RNG ------------------------------------------------------

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed + kGolden) ^ mix64(stream * kGolden + 1)) {}

std::uint64_t CounterRng::next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
}

double CounterRng::next_u01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

// --- simulation -------------------------------------------------------------

double SimulationResult::win_frequency(int k) const {
    if (k < 1 || k > static_cast<int>(win_counts.size())) return 0.0;
    return games == 0 ? 0.0
                      : static_cast<double>(win_counts[static_cast<std::size_t>(k) - 1]) /
                            static_cast<double>(games);
}

double SimulationResult::mean_length() const {
    return games == 0 ? 0.0
                      : static_cast<double>(total_throws) / static_cast<double>(games);
}

namespace {

struct Tally {
    std::vector<std::uint64_t> wins;
    std::vector<std::uint64_t> lengths;
    std::uint64_t throws = 0;

    explicit Tally(int players) : wins(static_cast<std::size_t>(players), 0) {}

    void merge(const Tally& o) {
        for (std::size_t k = 0; k < wins.size(); ++k) wins[k] += o.wins[k];
        if (o.lengths.size() > lengths.size()) lengths.resize(o.lengths.size(), 0);
        for (std::size_t n = 0; n < o.lengths.size(); ++n) lengths[n] += o.lengths[n];
        throws += o.throws;
    }
};

void run_range(int players, std::uint64_t seed, double x0, std::uint64_t lo,
               std::uint64_t hi, Tally& tally) {
    std::deque<int> queue;
    for (std::uint64_t g = lo; g < hi; ++g) {
        CounterRng rng(seed, g);
        queue.clear();
        for (int k = 1; k <= players; ++k) queue.push_back(k);
        double best = x0;
        std::uint64_t len = 0;
        while (queue.size() > 1) {
            double d = rng.next_u01();
            while (d == best) d = rng.next_u01();  // break exact ties by redrawing
            int thrower = queue.front();
            queue.pop_front();
            ++len;
            if (d < best) {
                best = d;
                queue.push_back(thrower);
            }
        }
        int winner = queue.front();
        ++tally.wins[static_cast<std::size_t>(winner) - 1];
        if (len >= tally.lengths.size()) tally.lengths.resize(len + 1, 0);
        ++tally.lengths[len];
        tally.throws += len;
    }
}

}  // namespace

SimulationResult simulate(int players, std::uint64_t games, std::uint64_t seed,
                          double x0, int threads) {
    if (players < 1) throw std::invalid_argument("simulate: requires p >= 1");
    if (!(x0 > 0.0) || x0 > 1.0) throw std::invalid_argument("simulate: x0 must be in (0,1]");
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    std::uint64_t per = games / static_cast<std::uint64_t>(threads);
    if (per == 0) threads = 1;

    std::vector<Tally> tallies(static_cast<std::size_t>(threads), Tally(players));
    if (threads == 1) {
        run_range(players, seed, x0, 0, games, tallies[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            std::uint64_t lo = per * static_cast<std::uint64_t>(t);
            std::uint64_t hi = (t + 1 == threads) ? games : lo + per;
            pool.emplace_back(run_range, players, seed, x0, lo, hi,
                              std::ref(tallies[static_cast<std::size_t>(t)]));
        }
        for (auto& th : pool) th.join();
        for (int t = 1; t < threads; ++t) tallies[0].merge(tallies[static_cast<std::size_t>(t)]);
    }

    SimulationResult res;
    res.games = games;
    res.win_counts = std::move(tallies[0].wins);
    res.length_histogram = std::move(tallies[0].lengths);
    res.total_throws = tallies[0].throws;
    return res;
}

}  // namespace dartline
