#include "dartline/stirling.hpp"

#include <sstream>
#include <stdexcept>

#include "dartline/series.hpp"

namespace dartline {

namespace {
const BigInt kZeroInt{};
}

StirlingTable::StirlingTable(int max_n) : max_n_(max_n) {
    if (max_n < 0) throw std::invalid_argument("StirlingTable: negative max_n");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    rows_[0] = {BigInt(1)};  // c(0,0) = 1
    for (int n = 1; n <= max_n; ++n) {
        auto& row = rows_[static_cast<std::size_t>(n)];
        const auto& prev = rows_[static_cast<std::size_t>(n) - 1];
        row.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
        for (int k = 1; k <= n; ++k) {
            // c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
            BigInt v = prev[static_cast<std::size_t>(k) - 1];
            if (k < n) v += BigInt(n - 1) * prev[static_cast<std::size_t>(k)];
            row[static_cast<std::size_t>(k)] = std::move(v);
        }
    }
}

const BigInt& StirlingTable::c(int n, int k) const {
    if (n < 0 || n > max_n_)
        throw std::out_of_range("StirlingTable: n outside table range");
    if (k < 0 || k > n) return kZeroInt;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt StirlingTable::complete_game_count(int n, int p) const {
    if (n < 2 || p < 2)
        throw std::invalid_argument("complete_game_count: requires n >= 2 and p >= 2");
    return BigInt(n - 1) * c(n - 1, n - p + 1);
}

EgfReport verify_stirling_egf(int n_max) {
    StirlingTable table(n_max);
    // exp(v log(1/(1-z))) with v carried on the u-axis of a BiSeries.
    BiSeries s(n_max, n_max);
    for (int m = 1; m <= n_max; ++m) s.set_coeff(1, m, Rat(1, m));
    BiSeries egf = series_exp(s);

    BigInt factorial = 1;
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) factorial *= n;
        for (int k = 0; k <= n_max; ++k) {
            Rat got = Rat(factorial) * egf.coeff(k, n);
            Rat want = (k <= n) ? Rat(table.c(n, k)) : Rat(0);
            if (got != want) {
                std::ostringstream os;
                os << "mismatch at n=" << n << " k=" << k << ": series gives "
                   << got.to_string() << ", recurrence gives " << want.to_string();
                return {false, os.str()};
            }
        }
    }
    std::ostringstream os;
    os << "all rows match up to n=" << n_max;
    return {true, os.str()};
}

}  // namespace dartline
