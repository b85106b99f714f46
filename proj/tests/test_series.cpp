// Exact and floating expansion of the profile functions near t = 0.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helix/series.hpp"

#include <array>
#include <cmath>
#include <vector>

using namespace helix;

namespace {

// Closed forms of the first four orders as functions of k (independent of
// the recurrence implementation).
void reference_low_orders(const Rational& k, std::array<Rational, 5>& a,
                          std::array<Rational, 5>& c) {
    const Rational K = 1 + k * k;
    a = {Rational(0), Rational(1), 8 * k / (3 * K), (82 * k * k - 189) / (36 * K * K),
         k * (154 * k * k - 369) / (27 * K * K * K)};
    c = {Rational(1), 2 * k, (10 * k * k - 9) / (3 * K), k * (106 * k * k - 249) / (18 * K * K),
         (3688 * k * k * k * k - 8658 * k * k + 243) / (216 * K * K * K)};
}

} // namespace

TEST_CASE("exact low-order coefficients at k = 1") {
    const SeriesPair sp = expand_profile_series(Rational(1), 4);
    REQUIRE(sp.exact);
    REQUIRE(sp.order == 4);
    CHECK(sp.h_coeffs[0] == Rational(0));
    CHECK(sp.h_coeffs[1] == Rational(1));
    CHECK(sp.h_coeffs[2] == Rational(4, 3));
    CHECK(sp.h_coeffs[3] == Rational(-107, 144));
    CHECK(sp.h_coeffs[4] == Rational(-215, 216));
    CHECK(sp.c_coeffs[0] == Rational(1));
    CHECK(sp.c_coeffs[1] == Rational(2));
    CHECK(sp.c_coeffs[2] == Rational(1, 6));
    CHECK(sp.c_coeffs[3] == Rational(-143, 72));
    CHECK(sp.c_coeffs[4] == Rational(-4727, 1728));
}

TEST_CASE("exact low-order coefficients at k = 0 and k = 2") {
    const SeriesPair s0 = expand_profile_series(Rational(0), 4);
    CHECK(s0.h_coeffs == std::vector<Rational>{0, 1, 0, Rational(-21, 4), 0});
    CHECK(s0.c_coeffs == std::vector<Rational>{1, 0, -3, 0, Rational(9, 8)});

    const SeriesPair s2 = expand_profile_series(Rational(2), 4);
    CHECK(s2.h_coeffs[2] == Rational(16, 15));
    CHECK(s2.h_coeffs[3] == Rational(139, 900));
    CHECK(s2.h_coeffs[4] == Rational(494, 3375));
    CHECK(s2.c_coeffs[1] == Rational(4));
    CHECK(s2.c_coeffs[2] == Rational(31, 15));
    CHECK(s2.c_coeffs[3] == Rational(7, 9));
    CHECK(s2.c_coeffs[4] == Rational(24619, 27000));
}

TEST_CASE("closed forms hold for several rational slopes") {
    for (const Rational& k : {Rational(0), Rational(1, 2), Rational(1), Rational(2),
                              Rational(3, 4)}) {
        const SeriesPair sp = expand_profile_series(k, 4);
        std::array<Rational, 5> ea, ec;
        reference_low_orders(k, ea, ec);
        for (int i = 0; i <= 4; ++i) {
            CHECK(sp.h_coeffs[i] == ea[i]);
            CHECK(sp.c_coeffs[i] == ec[i]);
        }
    }
}

TEST_CASE("leading terms for any slope: a0=0, c0=1, a1=1, c1=2k") {
    for (const Rational& k : {Rational(1, 3), Rational(5), Rational(0)}) {
        const SeriesPair sp = expand_profile_series(k, 1);
        CHECK(sp.h_coeffs[0] == Rational(0));
        CHECK(sp.h_coeffs[1] == Rational(1));
        CHECK(sp.c_coeffs[0] == Rational(1));
        CHECK(sp.c_coeffs[1] == 2 * k);
    }
}

TEST_CASE("circle case parity: even h and odd c orders vanish at k = 0") {
    const SeriesPair sp = expand_profile_series(Rational(0), 12);
    for (int i = 0; i <= 12; ++i) {
        if (i % 2 == 0) CHECK(sp.h_coeffs[i] == Rational(0));
        if (i % 2 == 1) CHECK(sp.c_coeffs[i] == Rational(0));
    }
}

TEST_CASE("prefix stability and frozen order-12 values at k = 1") {
    const SeriesPair lo = expand_profile_series(Rational(1), 8);
    const SeriesPair hi = expand_profile_series(Rational(1), 12);
    for (int i = 0; i <= 8; ++i) {
        CHECK(lo.h_coeffs[i] == hi.h_coeffs[i]);
        CHECK(lo.c_coeffs[i] == hi.c_coeffs[i]);
    }
    // Frozen top-order values (regression pin for the recurrence).
    CHECK(hi.h_coeffs[12] == Rational("-114404749173884003/89393194598400"));
    CHECK(hi.c_coeffs[12] == Rational("-173482844735185027/51081825484800"));
}

TEST_CASE("float expansion tracks the exact one") {
    const SeriesPair ex = expand_profile_series(Rational(1), 12);
    const SeriesPair fl = expand_profile_series(1.0, 12);
    REQUIRE_FALSE(fl.exact);
    for (int i = 0; i <= 12; ++i) {
        const double want = to_double(ex.h_coeffs[i]);
        CHECK(std::fabs(fl.h_dbl[i] - want) <=
              1e-13 * std::max(1.0, std::fabs(want)));
        const double wantc = to_double(ex.c_coeffs[i]);
        CHECK(std::fabs(fl.c_dbl[i] - wantc) <=
              1e-13 * std::max(1.0, std::fabs(wantc)));
    }
}

TEST_CASE("evaluation: initial point, frozen Horner values, S leading term") {
    const SeriesPair sp = expand_profile_series(1.0, 4);
    const SeriesEval at0 = eval_profile_series(sp, 0.0);
    CHECK(at0.h == 0.0);
    CHECK(at0.c == 1.0);
    CHECK(at0.S == 0.0);

    // Frozen oracle: exact rational Horner value of the order-4 series at
    // s = 1/100 (k = 1).
    const SeriesEval v = eval_profile_series(sp, 0.01);
    CHECK(v.h == doctest::Approx(0.010132580324074074).epsilon(1e-14));
    CHECK(v.c == doctest::Approx(1.0200146532002315).epsilon(1e-14));

    // Exact evaluation agrees bit-for-bit with its own rational arithmetic.
    const SeriesPair ex = expand_profile_series(Rational(1), 4);
    Rational h, c, S;
    eval_profile_series_exact(ex, Rational(1, 100), h, c, S);
    CHECK(to_double(h) == doctest::Approx(0.010132580324074074).epsilon(1e-16));
    CHECK(to_double(c) == doctest::Approx(1.0200146532002315).epsilon(1e-16));

    // S = -2(1+k^2) s^2 + O(s^3).
    for (double k : {0.0, 1.0, 2.0}) {
        const SeriesPair q = expand_profile_series(k, 8);
        const double s = 1e-5;
        const double S = eval_profile_series(q, s).S;
        CHECK(S / (s * s) == doctest::Approx(-2.0 * (1.0 + k * k)).epsilon(1e-3));
    }
}

TEST_CASE("cleared-equation residual of the truncated series") {
    const SeriesPair n12 = expand_profile_series(1.0, 12);
    const SeriesPair n4 = expand_profile_series(1.0, 4);
    const SeriesPair n1 = expand_profile_series(1.0, 1);

    const std::array<double, 1> s01{0.1};
    const std::array<double, 1> s001{0.01};
    const std::array<double, 1> s0001{0.001};

    // Monotone improvement with order at fixed s.
    const double r1 = series_ode_residual(1.0, n1, s01);
    const double r4 = series_ode_residual(1.0, n4, s01);
    const double r12 = series_ode_residual(1.0, n12, s01);
    CHECK(r1 > r4);
    CHECK(r4 > r12);

    // Decreases steeply toward the singular point (truncation-order scaling).
    const double a = series_ode_residual(1.0, n4, s01);
    const double b = series_ode_residual(1.0, n4, s001);
    const double c = series_ode_residual(1.0, n4, s0001);
    CHECK(b < 1e-4 * a);
    CHECK(c < 1e-4 * b);

    // Near-machine residual for the order-12 series close to 0.
    CHECK(series_ode_residual(0.0, expand_profile_series(0.0, 12), s001) < 1e-12);

    CHECK_THROWS(series_ode_residual(1.0, n4, std::span<const double>{}));
}
