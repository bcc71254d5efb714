#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "dartline/engine.hpp"

using namespace dartline;

TEST_SUITE_BEGIN("engine");

TEST_CASE("encode: worked example, singleton, sorted input") {
    std::vector<double> d{6, 8, 5, 4, 2, 7};
    CHECK(encode(d).entries == std::vector<int>{4, 6, 3, 2, 1, 5});

    std::vector<double> one{0.33};
    CHECK(encode(one).entries == std::vector<int>{1});

    std::vector<double> sorted{0.1, 0.4, 0.5, 0.9};
    CHECK(encode(sorted).entries == std::vector<int>{1, 2, 3, 4});

    std::vector<double> dup{0.5, 0.2, 0.5};
    CHECK_THROWS_AS(encode(dup), std::invalid_argument);
}

TEST_CASE("lrm_positions") {
    Perm pi = Perm::from_entries({4, 6, 3, 2, 1, 5});
    CHECK(lrm_positions(pi) == std::vector<int>{1, 3, 4, 5});

    Perm identity = Perm::from_entries({1, 2, 3, 4, 5});
    CHECK(lrm_positions(identity) == std::vector<int>{1});

    Perm decreasing = Perm::from_entries({5, 4, 3, 2, 1});
    CHECK(lrm_positions(decreasing) == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("is_complete_game") {
    CHECK(is_complete_game(Perm::from_entries({4, 6, 3, 2, 1, 5}), 3));
    CHECK(is_complete_game(Perm::from_entries({1, 2}), 2));
    CHECK_FALSE(is_complete_game(Perm::from_entries({2, 1}), 2));
    CHECK_FALSE(is_complete_game(Perm::from_entries({1, 2, 3}), 2));  // does not end with a botch
    CHECK_THROWS_AS(is_complete_game(Perm::from_entries({1}), 1), std::invalid_argument);
}

TEST_CASE("play: worked 3-player example") {
    std::vector<double> d{6, 8, 5, 4, 2, 7};
    GameRecord rec = play(3, d);
    CHECK(rec.winner == 3);
    CHECK(rec.length() == 6);
    CHECK(rec.elimination_positions() == std::vector<int>{2, 6});
}

TEST_CASE("play: edge cases") {
    GameRecord solo = play(1, std::vector<double>{});
    CHECK(solo.winner == 1);
    CHECK(solo.length() == 0);

    std::vector<double> two{0.4, 0.7};
    GameRecord rec = play(2, two);
    CHECK(rec.winner == 1);
    CHECK(rec.length() == 2);

    std::vector<double> short_list{0.9};
    CHECK_THROWS_AS(play(2, short_list), std::invalid_argument);
}

TEST_CASE("winner_of agrees with play") {
    CHECK(winner_of(Perm::from_entries({4, 6, 3, 2, 1, 5}), 3) == 3);
    CHECK(winner_of(Perm::from_entries({1, 2}), 2) == 1);
    {
        Perm pi = Perm::from_entries({2, 1, 3, 4});
        std::vector<double> d{2, 1, 3, 4};
        CHECK(winner_of(pi, 3) == play(3, d).winner);
    }
    CHECK_THROWS_AS(winner_of(Perm::from_entries({2, 1}), 2), std::invalid_argument);
}

TEST_CASE("play and winner_of agree on every complete permutation, n <= 7") {
    for (int n = 2; n <= 7; ++n) {
        std::vector<int> entries(static_cast<std::size_t>(n));
        std::iota(entries.begin(), entries.end(), 1);
        do {
            Perm pi{entries};
            for (int p = 2; p <= n; ++p) {
                if (!is_complete_game(pi, p)) continue;
                std::vector<double> d(entries.begin(), entries.end());
                GameRecord rec = play(p, d);
                CHECK(winner_of(pi, p) == rec.winner);
                CHECK(rec.length() == n);
                // structural invariants of any complete game
                CHECK(static_cast<int>(rec.elimination_positions().size()) == p - 1);
                CHECK(rec.throws.back().eliminated);
                double best = std::numeric_limits<double>::infinity();
                for (const auto& t : rec.throws) {
                    if (!t.eliminated) {
                        CHECK(t.distance < best);
                        best = t.distance;
                    } else {
                        CHECK(t.distance > best);
                    }
                }
            }
        } while (std::next_permutation(entries.begin(), entries.end()));
    }
}

TEST_CASE("simulate: determinism across runs and thread counts") {
    SimulationResult a = simulate(3, 20000, 42, 1.0, 1);
    SimulationResult b = simulate(3, 20000, 42, 1.0, 4);
    SimulationResult c = simulate(3, 20000, 42, 1.0, 3);
    CHECK(a.win_counts == b.win_counts);
    CHECK(a.win_counts == c.win_counts);
    CHECK(a.length_histogram == b.length_histogram);
    CHECK(a.total_throws == b.total_throws);

    SimulationResult other_seed = simulate(3, 20000, 43, 1.0, 1);
    CHECK(a.win_counts != other_seed.win_counts);
}

TEST_CASE("simulate: two-player frequency near 1 - 1/e") {
    const double p21 = 0.6321205588;
    std::uint64_t games = 1000000;
    SimulationResult res = simulate(2, games, 20240811);
    double freq = res.win_frequency(1);
    double sigma = std::sqrt(p21 * (1 - p21) / static_cast<double>(games));
    CHECK(std::abs(freq - p21) < 4 * sigma);
}

TEST_CASE("simulate: edge cases") {
    SimulationResult solo = simulate(1, 1000, 7);
    CHECK(solo.win_counts[0] == 1000);
    CHECK(solo.mean_length() == 0.0);

    // x0 -> 0+: the game always ends after p-1 throws
    SimulationResult shortgame = simulate(3, 5000, 9, 1e-12);
    CHECK(shortgame.mean_length() == doctest::Approx(2.0));
    CHECK(shortgame.win_counts[2] == 5000);  // last player wins

    CHECK_THROWS_AS(simulate(2, 10, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(simulate(2, 10, 1, 1.5), std::invalid_argument);
}

TEST_CASE("simulate: length distribution at x0 = 1/2 matches the exact table") {
    // P(L_3(1/2) = 3) = Q_{3,3}(1/2) = 2x - 5x^2/2 + 5x^3/6 at x = 1/2
    double expect = 2 * 0.5 - 2.5 * 0.25 + 5.0 / 6.0 * 0.125;
    std::uint64_t games = 400000;
    SimulationResult res = simulate(3, games, 31337, 0.5);
    double freq = static_cast<double>(res.length_histogram[3]) / static_cast<double>(games);
    double sigma = std::sqrt(expect * (1 - expect) / static_cast<double>(games));
    CHECK(std::abs(freq - expect) < 4 * sigma);
}

TEST_CASE("CounterRng: streams are independent of call interleaving") {
    CounterRng a(5, 0), b(5, 1);
    double a1 = a.next_u01(), b1 = b.next_u01();
    CounterRng a2(5, 0), b2(5, 1);
    double b1_again = b2.next_u01(), a1_again = a2.next_u01();
    CHECK(a1 == a1_again);
    CHECK(b1 == b1_again);
    CHECK(a1 != b1);
}

TEST_SUITE_END();
