#include <doctest.h>

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dartline/permcount.hpp"
#include "dartline/stirling.hpp"
#include "dartline/winner.hpp"

using namespace dartline;

TEST_SUITE_BEGIN("permcount");

TEST_CASE("count_by_enumeration basics") {
    auto w22 = count_by_enumeration(2, 2);
    CHECK(w22.size() == 1);
    CHECK(w22[1] == 1);

    auto w63 = count_by_enumeration(6, 3);
    long long total = 0;
    for (auto [k, c] : w63) total += c;
    CHECK(total == 50);  // (n-1) c(n-1, n-p+1) = 5 * 10
    CHECK(w63[1] == 20);
    CHECK(w63[2] == 25);
    CHECK(w63[3] == 5);

    CHECK(count_by_enumeration(2, 3).empty());  // n < p
    CHECK_THROWS_AS(count_by_enumeration(11, 3), std::invalid_argument);
}

TEST_CASE("recurrence base case and small marginals") {
    WinCountTable table(8, 5);
    CHECK(table.refined(2, 2, 1, 1) == 1);
    CHECK(table.refined(2, 2, 1, 2) == 0);
    CHECK(table.count(2, 2, 1) == 1);
    CHECK(table.count(2, 2, 2) == 0);
    CHECK(table.refined(5, 1, 1, 1) == 0);  // out-of-range p clamps to zero
}

TEST_CASE("refined counts sum to the complete-game count") {
    WinCountTable table(9, 5);
    StirlingTable st(9);
    for (int n = 2; n <= 9; ++n) {
        for (int p = 2; p <= 5; ++p) {
            BigInt total = 0;
            for (int k = 1; k <= p; ++k) total += table.count(n, p, k);
            BigInt expect = (n >= p) ? st.complete_game_count(n, p) : BigInt(0);
            CHECK(total == expect);
        }
    }
}

TEST_CASE("recurrence matches enumeration, refined by first entry, n <= 7") {
    WinCountTable table(7, 5);
    for (int n = 2; n <= 7; ++n) {
        for (int p = 2; p <= std::min(n, 5); ++p) {
            for (int s = 1; s <= n; ++s) {
                auto enumerated = count_by_enumeration_first_entry(n, p, s);
                for (int k = 1; k <= p; ++k) {
                    long long expect = enumerated.count(k) ? enumerated[k] : 0;
                    CHECK(table.refined(n, p, k, s) == BigInt(expect));
                }
            }
        }
    }
}

TEST_CASE("triple agreement: enumeration, recurrence, n! R_{n,p,k}(1), n <= 7") {
    WinCountTable table(7, 5);
    RTable r;
    for (int n = 2; n <= 7; ++n) {
        BigInt factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        for (int p = 2; p <= std::min(n, 5); ++p) {
            auto enumerated = count_by_enumeration(n, p);
            for (int k = 1; k <= p; ++k) {
                BigInt via_enum = enumerated.count(k) ? BigInt(enumerated[k]) : BigInt(0);
                CHECK(table.count(n, p, k) == via_enum);
                Rat via_r = Rat(factorial) * r.poly(n, p, k).eval(1);
                CHECK(via_r == Rat(via_enum));
            }
        }
    }
}

TEST_CASE("census partitions the winner sets") {
    WinCountTable table(8, 5);
    for (int n = 4; n <= 8; ++n) {
        for (int p = 2; p <= std::min(n, 5); ++p) {
            for (int k = 1; k < p; ++k) {
                InjectionCensus c = injection_census(n, p, k);
                CHECK(BigInt(c.u + c.u_bar) == table.count(n, p, k + 1));
                CHECK(BigInt(c.v + c.v_bar) == table.count(n, p, k));
            }
        }
    }
}

TEST_CASE("census spot value and the two inequalities") {
    InjectionCensus c = injection_census(5, 3, 1);
    CHECK(c.u == 0);
    CHECK(c.u_bar == 0);
    CHECK(c.v == 6);
    CHECK(c.v_bar == 6);

    for (int n = 3; n <= 8; ++n) {
        for (int p = 2; p <= std::min(n, 5); ++p) {
            for (int k = 1; k < p; ++k) {
                InjectionCensus now = injection_census(n, p, k);
                InjectionCensus prev = injection_census(n - 1, p, k);
                CHECK(now.u <= now.v);
                CHECK(now.u_bar <= static_cast<long long>(n - 1) * prev.v_bar);
            }
        }
    }
    CHECK_THROWS_AS(injection_census(10, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(injection_census(5, 3, 3), std::invalid_argument);
}

namespace {

// All permutations of [n] in a given census class.
std::vector<Perm> collect(int n, int p, int k, CensusSet which) {
    std::vector<Perm> out;
    std::vector<int> entries(static_cast<std::size_t>(n));
    std::iota(entries.begin(), entries.end(), 1);
    do {
        Perm pi{entries};
        if (classify_for_census(pi, p, k) == which) out.push_back(pi);
    } while (std::next_permutation(entries.begin(), entries.end()));
    return out;
}

}  // namespace

TEST_CASE("explicit injections are injective with images in the claimed codomains") {
    for (int n = 3; n <= 7; ++n) {
        for (int p = 2; p <= std::min(n, 4); ++p) {
            for (int k = 1; k < p; ++k) {
                // swap map: u set at (n,p,k+1) -> v set at (n,p,k)
                std::set<std::vector<int>> images;
                for (const Perm& pi : collect(n, p, k, CensusSet::u)) {
                    Perm out = swap_losing_throw(pi, p, k);
                    CHECK(classify_for_census(out, p, k) == CensusSet::v);
                    CHECK(images.insert(out.entries).second);  // injective
                }
                // swap-then-delete-last: u_bar at (n,p,k+1) -> v_bar at (n-1,p,k) x {2..n}
                std::set<std::pair<std::vector<int>, int>> images2;
                for (const Perm& pi : collect(n, p, k, CensusSet::u_bar)) {
                    auto [out, removed] = swap_and_drop_last(pi, p, k);
                    CHECK(out.size() == n - 1);
                    CHECK(removed >= 2);
                    CHECK(removed <= n);
                    CHECK(classify_for_census(out, p, k) == CensusSet::v_bar);
                    CHECK(images2.insert({out.entries, removed}).second);
                }
            }
        }
    }
}

TEST_SUITE_END();
