#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "dartline/winner.hpp"

using namespace dartline;

TEST_SUITE_BEGIN("winner");

namespace {

Poly make_poly(std::vector<Rat> coeffs) { return Poly{std::move(coeffs)}; }

// Decimal printed with `digits` fractional digits, as an exact rational.
Rat printed(long long mantissa, int digits) {
    BigInt den = 1;
    for (int i = 0; i < digits; ++i) den *= 10;
    return Rat(BigInt(mantissa), den);
}

// Does the enclosure agree with a printed decimal to within tol?
bool matches(const Enclosure& e, const Rat& value, const Rat& tol) {
    return e.lo - tol <= value && value <= e.hi + tol;
}

}  // namespace

TEST_CASE("r_poly reproduces table entries") {
    RTable r;
    CHECK(r.poly(3, 3, 1) == make_poly({0, 1, -1, Rat(1, 3)}));
    // x(1-x)(3-3x+x^2)/3
    CHECK(r.poly(4, 4, 2) == make_poly({0, 1, -2, Rat(4, 3), Rat(-1, 3)}));
    CHECK(r.poly(2, 3, 3) == make_poly({1, -2, 1}));  // (1-x)^2
    CHECK(r.poly(4, 2, 1) == make_poly({0, 0, 0, Rat(1, 6), Rat(-1, 24)}));
    // the p-th player wins after p-1 throws when x = 0
    for (int p = 2; p <= 6; ++p) {
        CHECK(r.poly(p - 1, p, p).eval(0) == Rat(1));
        for (int k = 1; k < p; ++k) CHECK(r.poly(p - 1, p, k).eval(0) == Rat(0));
    }
    CHECK_THROWS_AS(r.poly(3, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(r.poly(3, 3, 0), std::invalid_argument);
}

TEST_CASE("winner refinement sums to the length distribution") {
    RTable r;
    QTable q;
    for (int n = 0; n <= 14; ++n) {
        for (int p = 1; p <= 6; ++p) {
            Poly sum;
            for (int k = 1; k <= p; ++k) sum += r.poly(n, p, k);
            CHECK(sum == q.poly(n, p));
        }
    }
}

TEST_CASE("win_prob: two-player enclosures pin 1/e") {
    RTable r;
    QTable q;
    Enclosure e = win_prob(r, q, 2, 2, Rat(1), 40);
    CHECK(e.width() < Rat(1, 1000000000000LL));  // < 1e-12
    // 1/e = 0.36787944117144233...; the enclosure must straddle it
    CHECK(e.lo < Rat(36787944117144233LL, 100000000000000000LL) + Rat(1, 100000000000000000LL));
    CHECK(e.hi > Rat(36787944117144233LL, 100000000000000000LL) - Rat(1, 100000000000000000LL));

    Enclosure e1 = win_prob(r, q, 2, 1, Rat(1), 40);
    CHECK(matches(e1, printed(6321205588LL, 10), Rat(1, 10000000000LL)));
}

TEST_CASE("win_prob at x = 0 is exact: the last player wins") {
    RTable r;
    QTable q;
    for (int p = 2; p <= 5; ++p) {
        for (int k = 1; k <= p; ++k) {
            Enclosure e = win_prob(r, q, p, k, Rat(0), p + 3);
            CHECK(e.width() == Rat(0));
            CHECK(e.lo == (k == p ? Rat(1) : Rat(0)));
        }
    }
}

TEST_CASE("win_prob: five-player champion value") {
    RTable r;
    QTable q;
    Enclosure e = win_prob(r, q, 5, 1, Rat(1), 60);
    // printed decimals carry ~1e-8 of rounding noise in the last digits
    CHECK(matches(e, printed(3088745194LL, 10), Rat(1, 100000000)));
    CHECK(e.width() < Rat(1, BigInt("10000000000000000000000000")));
}

TEST_CASE("enclosures shrink as N grows") {
    RTable r;
    QTable q;
    for (int p = 2; p <= 5; ++p)
        for (int k = 1; k <= p; ++k) {
            Rat w20 = win_prob(r, q, p, k, Rat(1), 20).width();
            Rat w30 = win_prob(r, q, p, k, Rat(1), 30).width();
            CHECK(w30 < w20);
        }
}

TEST_CASE("per-p enclosures jointly contain 1") {
    RTable r;
    QTable q;
    for (int p = 2; p <= 6; ++p) {
        Rat lo_sum = 0, hi_sum = 0;
        for (int k = 1; k <= p; ++k) {
            Enclosure e = win_prob(r, q, p, k, Rat(1), 30);
            lo_sum += e.lo;
            hi_sum += e.hi;
        }
        CHECK(lo_sum <= Rat(1));
        CHECK(Rat(1) <= hi_sum);
    }
}

TEST_CASE("check_monotonicity certifies strict ordering") {
    RTable r;
    QTable q;
    CHECK(check_monotonicity(r, q, 2, 40) == MonotonicityResult::certified);
    CHECK(check_monotonicity(r, q, 5, 60) == MonotonicityResult::certified);
    // with far too few terms the enclosures overlap
    CHECK(check_monotonicity(r, q, 5, 5) == MonotonicityResult::indeterminate);
}

TEST_CASE("closed forms match the published values") {
    CHECK(closed_form_p(2, 1, 1.0) == doctest::Approx(0.6321205588).epsilon(1e-9));
    CHECK(closed_form_p(2, 2, 1.0) == doctest::Approx(1.0 / std::exp(1.0)).epsilon(1e-14));
    // published decimals are reliable to about 1e-8
    CHECK(std::abs(closed_form_p(3, 1, 1.0) - 0.4664928047) < 1e-8);
    CHECK(std::abs(closed_form_p(3, 2, 1.0) - 0.2918207124) < 1e-8);
    CHECK(std::abs(closed_form_p(3, 3, 1.0) - 0.2416864833) < 1e-8);
    CHECK(std::abs(closed_form_p(4, 1, 1.0) - 0.3711532353) < 1e-8);
    CHECK(std::abs(closed_form_p(4, 2, 1.0) - 0.242188553) < 1e-8);
    CHECK(std::abs(closed_form_p(4, 3, 1.0) - 0.2032205606) < 1e-8);
    CHECK(std::abs(closed_form_p(4, 4, 1.0) - 0.1834376522) < 1e-8);
    CHECK(std::abs(closed_form_p(5, 1, 1.0) - 0.3088745194) < 1e-8);

    CHECK_THROWS_AS(closed_form_p(5, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_p(5, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_p(6, 1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_p(3, 4, 1.0), std::invalid_argument);
}

TEST_CASE("closed forms agree with enclosures across x") {
    RTable r;
    QTable q;
    for (int p = 2; p <= 4; ++p) {
        for (int k = 1; k <= p; ++k) {
            for (int j = 0; j <= 4; ++j) {
                Rat x(j, 4);
                Enclosure e = win_prob(r, q, p, k, x, 45);
                double cf = closed_form_p(p, k, x.to_double());
                double lo = e.lo.to_double(), hi = e.hi.to_double();
                CHECK(cf > lo - 1e-9);
                CHECK(cf < hi + 1e-9);
            }
        }
    }
    // p = 5 closed form is available at (1, 1) only
    Enclosure e = win_prob(r, q, 5, 1, Rat(1), 60);
    CHECK(std::abs(closed_form_p(5, 1, 1.0) - e.mid_double()) < 1e-12);
}

TEST_CASE("closed forms sum to 1 for every x") {
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (int p = 2; p <= 4; ++p) {
            double sum = 0;
            for (int k = 1; k <= p; ++k) sum += closed_form_p(p, k, x);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("roots-of-unity identity holds numerically") {
    RTable r;
    {
        RpIdentityReport rep = verify_rp_identity(r, 2, 0.5, {0.7, 0.0}, 0.4, 60);
        CHECK(rep.residual() < 1e-6);
    }
    {
        RpIdentityReport rep = verify_rp_identity(r, 3, 1.0, {0.5, 0.2}, 0.3, 60);
        CHECK(rep.residual() < 1e-6);
    }
    // near x = 0 the series side collapses to t^p z^{p-1}
    {
        std::complex<double> t{0.37, 0.2};
        double z = 0.45;
        RpIdentityReport rep = verify_rp_identity(r, 2, 1e-9, t, z, 60);
        CHECK(std::abs(rep.lhs - t * t * z) < 1e-6);
    }
    CHECK_THROWS_AS(verify_rp_identity(r, 2, 0.5, {1.0, 0.0}, 0.4, 40), std::invalid_argument);
    CHECK_THROWS_AS(verify_rp_identity(r, 3, 0.5, {-0.5, std::sqrt(3.0) / 2}, 0.4, 40),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_rp_identity(r, 4, 0.5, {0.7, 0.0}, 0.4, 40), std::invalid_argument);
    CHECK_THROWS_AS(verify_rp_identity(r, 2, 0.5, {0.7, 0.0}, 1.1, 40), std::invalid_argument);
}

TEST_SUITE_END();
