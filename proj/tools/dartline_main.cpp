// dartline -- exact solver, verifier and simulator for the sequential
// elimination dart game.
//
// Subcommands: length, expected, winprob, curve, simulate, count, verify.
// Exact rationals cross the command line as "a/b" strings; decimals are
// display only. Exit codes: 0 success, 1 verification failure, 2 usage
// error, 3 I/O error.

#include <CLI11.hpp>

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <thread>
#include <vector>

#include "dartline/engine.hpp"
#include "dartline/lengthdist.hpp"
#include "dartline/permcount.hpp"
#include "dartline/stirling.hpp"
#include "dartline/winner.hpp"

namespace {

using dartline::BigInt;
using dartline::Enclosure;
using dartline::QTable;
using dartline::Rat;
using dartline::RTable;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int default_terms(int players) { return 40 + 5 * players; }

int thread_cap() {
    int cap = static_cast<int>(std::thread::hardware_concurrency());
    if (cap < 1) cap = 1;
    if (const char* env = std::getenv("DARTLINE_THREADS")) {
        int requested = std::atoi(env);
        if (requested >= 1 && requested < cap) cap = requested;
    }
    return cap;
}

Rat parse_rational_arg(const std::string& text, const char* flag) {
    Rat x;
    try {
        x = Rat::parse(text);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(std::string(flag) + ": malformed rational '" + text + "'");
    }
    if (x < Rat(0) || x > Rat(1))
        throw CLI::ValidationError(std::string(flag) + ": must lie in [0,1]");
    return x;
}

// Trim trailing zeros of a fixed-point decimal (keeping one digit after the
// point) for compact CSV output.
std::string trim_decimal(std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
    return s;
}

// --- length -----------------------------------------------------------------

struct LengthArgs {
    int players = 2;
    int max_throws = 0;
    std::string x_text = "1";
};

int run_length(const LengthArgs& args) {
    Rat x = parse_rational_arg(args.x_text, "--x");
    int n_max = args.max_throws > 0 ? args.max_throws : default_terms(args.players);
    std::cout << "# dartline length --players " << args.players << " --max-throws " << n_max
              << " --x " << x.to_string() << "\n";
    std::cout << "# provenance: exact\n";
    std::cout << "n\tprobability\n";
    QTable q;
    Rat sum = 0;
    if (args.players == 1) {
        std::cout << 0 << "\t" << q.prob(0, 1).to_string() << "\n";
        sum = q.prob(0, 1);
    } else {
        for (int n = 1; n <= n_max; ++n) {
            Rat value = q.poly(n, args.players).eval(x);
            sum += value;
            std::cout << n << "\t" << value.to_string() << "\n";
        }
    }
    std::cout << "tail\t" << (Rat(1) - sum).to_string() << "\n";
    return 0;
}

// --- expected ---------------------------------------------------------------

int run_expected(int players, const std::string& x_text) {
    Rat x = parse_rational_arg(x_text, "--x");
    std::cout << "# dartline expected --players " << players << " --x " << x.to_string() << "\n";
    std::cout << "# provenance: exact\n";
    dartline::ScaledExact e = dartline::expected_remaining(players, x);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", e.to_double());
    std::cout << "multiplier\t" << e.multiplier.to_string() << "\n";
    std::cout << "exponent\t" << e.exponent.to_string() << "\n";
    std::cout << "value\t" << e.multiplier.to_string() << " * e^" << e.exponent.to_string()
              << " = " << buf << "\n";
    return 0;
}

// --- winprob ----------------------------------------------------------------

struct WinprobArgs {
    int players = 2;
    int terms = 0;
    std::string x_text = "1";
    bool json = false;
};

int run_winprob(const WinprobArgs& args) {
    Rat x = parse_rational_arg(args.x_text, "--x");
    int terms = args.terms > 0 ? args.terms : default_terms(args.players);
    RTable r;
    QTable q;
    std::vector<Enclosure> enc;
    for (int k = 1; k <= args.players; ++k)
        enc.push_back(dartline::win_prob(r, q, args.players, k, x, terms));

    if (args.json) {
        for (int k = 1; k <= args.players; ++k) {
            const Enclosure& e = enc[static_cast<std::size_t>(k) - 1];
            nlohmann::ordered_json rec;
            rec["p"] = args.players;
            rec["x"] = x.to_string();
            rec["k"] = k;
            rec["lo"] = e.lo.to_decimal(12, false);
            rec["hi"] = e.hi.to_decimal(12, true);
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2e", e.width().to_double());
            rec["width"] = buf;
            std::cout << rec.dump() << "\n";
        }
    } else {
        std::cout << "# dartline winprob --players " << args.players << " --terms " << terms
                  << " --x " << x.to_string() << "\n";
        std::cout << "# provenance: enclosure (bounds rounded outward to 12 decimals)\n";
        std::cout << "k\tlo\thi\twidth\n";
        for (int k = 1; k <= args.players; ++k) {
            const Enclosure& e = enc[static_cast<std::size_t>(k) - 1];
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2e", e.width().to_double());
            std::cout << k << "\t" << e.lo.to_decimal(12, false) << "\t"
                      << e.hi.to_decimal(12, true) << "\t" << buf << "\n";
        }
    }
    if (x == Rat(1) &&
        dartline::check_monotonicity(r, q, args.players, terms) !=
            dartline::MonotonicityResult::certified) {
        std::cerr << "warning: enclosures overlap at N = " << terms
                  << "; monotonicity not certified, raise --terms\n";
    }
    return 0;
}

// --- curve ------------------------------------------------------------------

struct CurveArgs {
    int players = 5;
    int samples = 100;
    int terms = 0;
    std::string out;
};

int run_curve(const CurveArgs& args) {
    int terms = args.terms > 0 ? args.terms : default_terms(args.players);
    std::ofstream file(args.out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open '" << args.out << "' for writing\n";
        return kExitIo;
    }
    RTable r;
    QTable q;
    r.ensure(terms, args.players);
    q.ensure(terms, args.players);
    file << "x,k,lo,hi\n";
    for (int j = 0; j <= args.samples; ++j) {
        Rat x(j, args.samples);
        for (int k = 1; k <= args.players; ++k) {
            Enclosure e = dartline::win_prob(r, q, args.players, k, x, terms);
            file << trim_decimal(x.to_decimal(12, false)) << "," << k << ","
                 << e.lo.to_decimal(12, false) << "," << e.hi.to_decimal(12, true) << "\n";
        }
    }
    if (!file.good()) {
        std::cerr << "error: write to '" << args.out << "' failed\n";
        return kExitIo;
    }
    return 0;
}

// --- simulate ---------------------------------------------------------------

struct SimulateArgs {
    int players = 2;
    std::uint64_t games = 1000000;
    std::uint64_t seed = 1;
    double x0 = 1.0;
};

int run_simulate(const SimulateArgs& args) {
    std::cout << "# dartline simulate --players " << args.players << " --games " << args.games
              << " --seed " << args.seed << " --x0 " << args.x0 << "\n";
    std::cout << "# provenance: monte-carlo\n";
    dartline::SimulationResult res =
        dartline::simulate(args.players, args.games, args.seed, args.x0, thread_cap());
    std::cout << "games\t" << res.games << "\n";
    std::cout << "k\twins\tfrequency\tstderr\n";
    double g = static_cast<double>(res.games);
    for (int k = 1; k <= args.players; ++k) {
        double freq = res.win_frequency(k);
        double se = res.games ? std::sqrt(freq * (1.0 - freq) / g) : 0.0;
        char fbuf[32], sbuf[32];
        std::snprintf(fbuf, sizeof fbuf, "%.6f", freq);
        std::snprintf(sbuf, sizeof sbuf, "%.6f", se);
        std::cout << k << "\t" << res.win_counts[static_cast<std::size_t>(k) - 1] << "\t"
                  << fbuf << "\t" << sbuf << "\n";
    }
    double mean = res.mean_length();
    // sample variance of the length from the exact histogram
    double sq = 0;
    for (std::size_t n = 0; n < res.length_histogram.size(); ++n)
        sq += static_cast<double>(res.length_histogram[n]) * static_cast<double>(n) *
              static_cast<double>(n);
    double var = res.games ? sq / g - mean * mean : 0.0;
    if (var < 0) var = 0;
    char mbuf[32], ebuf[32];
    std::snprintf(mbuf, sizeof mbuf, "%.6f", mean);
    std::snprintf(ebuf, sizeof ebuf, "%.6f", res.games ? std::sqrt(var / g) : 0.0);
    std::cout << "mean_length\t" << mbuf << "\n";
    std::cout << "stderr_mean\t" << ebuf << "\n";
    return 0;
}

// --- count ------------------------------------------------------------------

struct CountArgs {
    int length = 2;
    int players = 2;
    bool enumerate = false;
};

int run_count(const CountArgs& args) {
    std::cout << "# dartline count --length " << args.length << " --players " << args.players
              << (args.enumerate ? " --enumerate" : "") << "\n";
    std::cout << "# provenance: exact\n";
    dartline::WinCountTable table(std::max(args.length, 2), std::max(args.players, 2));
    std::map<int, long long> enumerated;
    if (args.enumerate) enumerated = dartline::count_by_enumeration(args.length, args.players);
    std::cout << (args.enumerate ? "k\tcount\tenumerated\n" : "k\tcount\n");
    BigInt total = 0;
    bool consistent = true;
    for (int k = 1; k <= args.players; ++k) {
        BigInt w = table.count(args.length, args.players, k);
        total += w;
        std::cout << k << "\t" << w.str();
        if (args.enumerate) {
            long long brute = enumerated.count(k) ? enumerated[k] : 0;
            std::cout << "\t" << brute;
            if (BigInt(brute) != w) consistent = false;
        }
        std::cout << "\n";
    }
    std::cout << "total\t" << total.str() << "\n";
    if (args.enumerate && !consistent) {
        std::cerr << "FAIL: recurrence and enumeration disagree\n";
        return kExitVerifyFailure;
    }
    return 0;
}

// --- verify -----------------------------------------------------------------

class Verifier {
public:
    bool run(const std::string& suite) {
        if (suite == "all" || suite == "stirling") stirling();
        if (suite == "all" || suite == "tables") tables();
        if (suite == "all" || suite == "gf") gf();
        if (suite == "all" || suite == "counts") counts();
        if (suite == "all" || suite == "injections") injections();
        if (suite == "all" || suite == "rootsofunity") roots_of_unity();
        return failures_ == 0;
    }

    int failures() const { return failures_; }

private:
    void report(bool ok, const std::string& what) {
        if (ok) {
            std::cout << "ok: " << what << "\n";
        } else {
            ++failures_;
            std::cout << "FAIL: " << what << "\n";
        }
    }

    void stirling() {
        dartline::EgfReport egf = dartline::verify_stirling_egf(12);
        report(egf.passed, "stirling generating function identity, n <= 12 (" + egf.message + ")");
        dartline::StirlingTable t(30);
        BigInt factorial = 1;
        bool rows_ok = true;
        for (int n = 0; n <= 30; ++n) {
            if (n > 0) factorial *= n;
            BigInt sum = 0;
            for (int k = 0; k <= n; ++k) sum += t.c(n, k);
            if (sum != factorial) rows_ok = false;
        }
        report(rows_ok, "stirling row sums equal n!, n <= 30");
    }

    void tables() {
        QTable q;
        // published 5x5 table of Q_{n,p}(x), zeros included
        using P = dartline::Poly;
        auto poly = [](std::vector<Rat> c) { return P{std::move(c)}; };
        const P zero{};
        const P table_q[5][5] = {
            {poly({1}), zero, zero, zero, zero},
            {zero, poly({1, -1}), zero, zero, zero},
            {zero, poly({0, 1, Rat(-1, 2)}), poly({1, -2, 1}), zero, zero},
            {zero, poly({0, 0, Rat(1, 2), Rat(-1, 6)}), poly({0, 2, Rat(-5, 2), Rat(5, 6)}),
             poly({1, -3, 3, -1}), zero},
            {zero, poly({0, 0, 0, Rat(1, 6), Rat(-1, 24)}),
             poly({0, 0, Rat(3, 2), Rat(-3, 2), Rat(3, 8)}),
             poly({0, 3, -6, Rat(13, 3), Rat(-13, 12)}), poly({1, -4, 6, -4, 1})},
        };
        bool q_ok = true;
        for (int n = 0; n <= 4; ++n)
            for (int p = 1; p <= 5; ++p)
                if (q.poly(n, p) != table_q[n][p - 1]) q_ok = false;
        report(q_ok, "all 25 published Q_{n,p}(x) cells match exactly (n <= 4, p <= 5)");

        RTable r;
        bool r_ok = true;
        auto check_r = [&](int n, int p, int k, const P& expect) {
            if (r.poly(n, p, k) != expect) r_ok = false;
        };
        // p = 2 block
        check_r(1, 2, 1, zero);
        check_r(1, 2, 2, poly({1, -1}));
        check_r(2, 2, 1, poly({0, 1, Rat(-1, 2)}));
        check_r(2, 2, 2, zero);
        check_r(3, 2, 1, zero);
        check_r(3, 2, 2, poly({0, 0, Rat(1, 2), Rat(-1, 6)}));
        check_r(4, 2, 1, poly({0, 0, 0, Rat(1, 6), Rat(-1, 24)}));
        check_r(4, 2, 2, zero);
        // p = 3 block
        check_r(1, 3, 1, zero);
        check_r(1, 3, 2, zero);
        check_r(1, 3, 3, zero);
        check_r(2, 3, 1, zero);
        check_r(2, 3, 2, zero);
        check_r(2, 3, 3, poly({1, -2, 1}));
        check_r(3, 3, 1, poly({0, 1, -1, Rat(1, 3)}));
        check_r(3, 3, 2, poly({0, 1, Rat(-3, 2), Rat(1, 2)}));
        check_r(3, 3, 3, zero);
        check_r(4, 3, 1, zero);
        check_r(4, 3, 2, poly({0, 0, Rat(1, 2), Rat(-1, 3), Rat(1, 12)}));
        check_r(4, 3, 3, poly({0, 0, 1, Rat(-7, 6), Rat(7, 24)}));
        // p = 4 block
        for (int n = 1; n <= 2; ++n)
            for (int k = 1; k <= 4; ++k) check_r(n, 4, k, zero);
        check_r(3, 4, 1, zero);
        check_r(3, 4, 2, zero);
        check_r(3, 4, 3, zero);
        check_r(3, 4, 4, poly({1, -3, 3, -1}));
        check_r(4, 4, 1, poly({0, 1, Rat(-3, 2), 1, Rat(-1, 4)}));  // x(2-x)(2-2x+x^2)/4
        check_r(4, 4, 2, poly({0, 1, -2, Rat(4, 3), Rat(-1, 3)}));  // x(1-x)(3-3x+x^2)/3
        check_r(4, 4, 3, poly({0, 1, Rat(-5, 2), 2, Rat(-1, 2)})); // x(1-x)^2(2-x)/2
        check_r(4, 4, 4, zero);
        report(r_ok, "all 36 published R_{n,p,k}(x) cells match exactly (n <= 4, p <= 4)");
    }

    void gf() {
        QTable q;
        const int window = 20;
        q.ensure(window, window);
        {
            dartline::BiSeries series = dartline::q_closed_series_standard(window, window);
            bool ok = true;
            for (int n = 0; n <= window; ++n)
                for (int p = 1; p <= window; ++p)
                    if (series.coeff(p, n) != q.prob(n, p)) ok = false;
            report(ok, "closed form of the length gf matches the recurrence on a 20x20 window");
        }
        for (Rat x : {Rat(0), Rat(1, 2), Rat(1)}) {
            dartline::BiSeries series = dartline::q_closed_series(x, window, window);
            bool ok = true;
            for (int n = 0; n <= window; ++n)
                for (int p = 1; p <= window; ++p)
                    if (series.coeff(p, n) != q.poly(n, p).eval(x)) ok = false;
            report(ok, "conditional length gf matches the recurrence at x = " + x.to_string());
        }
    }

    void counts() {
        RTable r;
        dartline::WinCountTable table(9, 5);
        bool ok = true;
        for (int n = 2; n <= 9; ++n) {
            auto enumerated = dartline::winner_counts_sweep(n);
            BigInt factorial = 1;
            for (int i = 2; i <= n; ++i) factorial *= i;
            for (int p = 2; p <= 5; ++p) {
                for (int k = 1; k <= p; ++k) {
                    auto it = enumerated.find({p, k});
                    BigInt brute = (it == enumerated.end()) ? BigInt(0) : BigInt(it->second);
                    if (table.count(n, p, k) != brute) ok = false;
                    if (Rat(factorial) * r.poly(n, p, k).eval(1) != Rat(brute)) ok = false;
                }
            }
        }
        report(ok, "enumeration = first-entry recurrence = n! R_{n,p,k}(1), n <= 9, p <= 5");
    }

    void injections() {
        bool ok = true;
        std::map<int, std::map<std::pair<int, int>, dartline::InjectionCensus>> censuses;
        for (int n = 2; n <= 9; ++n) censuses[n] = dartline::census_sweep(n);
        for (int n = 3; n <= 9; ++n) {
            for (int p = 2; p <= 5; ++p) {
                for (int k = 1; k < p; ++k) {
                    dartline::InjectionCensus now = censuses[n][{p, k}];
                    dartline::InjectionCensus prev = censuses[n - 1][{p, k}];
                    if (now.u > now.v) ok = false;
                    if (now.u_bar > static_cast<long long>(n - 1) * prev.v_bar) ok = false;
                }
            }
        }
        report(ok, "both census inequalities hold for n <= 9, p <= 5");
    }

    void roots_of_unity() {
        RTable r;
        struct Point {
            int p;
            double x;
            std::complex<double> t;
            double z;
        };
        const Point points[] = {
            {2, 0.5, {0.7, 0.0}, 0.4},  {2, 1.0, {0.3, 0.4}, 0.5},
            {2, 0.25, {-0.8, 0.1}, 0.6}, {2, 0.75, {1.3, -0.2}, 0.3},
            {2, 1.0, {0.1, -0.6}, 0.55}, {3, 1.0, {0.5, 0.2}, 0.3},
            {3, 0.5, {0.7, 0.0}, 0.4},  {3, 0.8, {1.2, 0.3}, 0.35},
            {3, 0.25, {-0.4, 0.5}, 0.45},{3, 1.0, {0.9, -0.35}, 0.25},
        };
        bool ok = true;
        double worst = 0;
        for (const Point& pt : points) {
            auto rep = dartline::verify_rp_identity(r, pt.p, pt.x, pt.t, pt.z, 60);
            worst = std::max(worst, rep.residual());
            if (!(rep.residual() < 1e-6)) ok = false;
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2e", worst);
        report(ok, std::string("roots-of-unity recursion residual < 1e-6 at 10 points (max ") +
                       buf + ")");
    }

    int failures_ = 0;
};

int run_verify(const std::string& suite) {
    std::cout << "# dartline verify --suite " << suite << "\n";
    Verifier verifier;
    bool ok = verifier.run(suite);
    std::cout << (ok ? "PASS" : "FAIL") << " " << suite << "\n";
    return ok ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and simulator for the sequential elimination dart game"};
    app.require_subcommand(1);

    LengthArgs length_args;
    auto* length = app.add_subcommand("length", "exact game-length distribution");
    length->add_option("--players", length_args.players, "number of players")
        ->required()
        ->check(CLI::PositiveNumber);
    length->add_option("--max-throws", length_args.max_throws, "rows to print (default 40+5p)");
    length->add_option("--x", length_args.x_text, "distance to beat, as a rational a/b");

    int expected_players = 2;
    std::string expected_x = "1";
    auto* expected = app.add_subcommand("expected", "exact expected game length");
    expected->add_option("--players", expected_players, "number of players")
        ->required()
        ->check(CLI::PositiveNumber);
    expected->add_option("--x", expected_x, "distance to beat, as a rational a/b");

    WinprobArgs winprob_args;
    auto* winprob = app.add_subcommand("winprob", "rigorous winner-probability enclosures");
    winprob->add_option("--players", winprob_args.players, "number of players")
        ->required()
        ->check(CLI::Range(2, 64));
    winprob->add_option("--terms", winprob_args.terms, "partial-sum length (default 40+5p)");
    winprob->add_option("--x", winprob_args.x_text, "distance to beat, as a rational a/b");
    winprob->add_flag("--json", winprob_args.json, "emit one JSON object per line");

    CurveArgs curve_args;
    auto* curve = app.add_subcommand("curve", "CSV of P_{p,k}(x) enclosures over [0,1]");
    curve->add_option("--players", curve_args.players, "number of players")
        ->required()
        ->check(CLI::Range(2, 64));
    curve->add_option("--samples", curve_args.samples, "number of intervals (samples+1 points)")
        ->check(CLI::PositiveNumber);
    curve->add_option("--terms", curve_args.terms, "partial-sum length (default 40+5p)");
    curve->add_option("--out", curve_args.out, "output CSV path")->required();

    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "reproducible Monte Carlo simulation");
    simulate->add_option("--players", sim_args.players, "number of players")
        ->required()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--games", sim_args.games, "number of games");
    simulate->add_option("--seed", sim_args.seed, "RNG seed");
    simulate->add_option("--x0", sim_args.x0, "initial distance to beat in (0,1]")
        ->check(CLI::Range(1e-300, 1.0));

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "winner-encoding permutation counts");
    count->add_option("--length", count_args.length, "permutation length n")
        ->required()
        ->check(CLI::Range(2, 512));
    count->add_option("--players", count_args.players, "number of players")
        ->required()
        ->check(CLI::Range(2, 512));
    count->add_flag("--enumerate", count_args.enumerate,
                    "cross-check against brute-force enumeration (n <= 10)");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run the self-verification suites");
    verify->add_option("--suite", suite, "all|stirling|gf|tables|counts|injections|rootsofunity")
        ->check(CLI::IsMember(
            {"all", "stirling", "gf", "tables", "counts", "injections", "rootsofunity"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (length->parsed()) return run_length(length_args);
        if (expected->parsed()) return run_expected(expected_players, expected_x);
        if (winprob->parsed()) return run_winprob(winprob_args);
        if (curve->parsed()) return run_curve(curve_args);
        if (simulate->parsed()) return run_simulate(sim_args);
        if (count->parsed()) return run_count(count_args);
        if (verify->parsed()) return run_verify(suite);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
