// The (x, y) <-> (x, t) coordinate change on the cross-section.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helix/map2d.hpp"

#include <cmath>
#include <stdexcept>

using namespace helix;

namespace {

const CrossSectionMap& map_k1_plus() {
    static const CrossSectionMap m = make_standard_map(HelixConfig{});
    return m;
}

} // namespace

TEST_CASE("admissibility threshold t_min") {
    const CrossSectionMap& m = map_k1_plus();

    CHECK(m.t_min_of(1.0) == 0.0);
    CHECK(m.t_min_of(1.03) == doctest::Approx(0.00045383387950141007).epsilon(1e-9));
    CHECK(m.t_min_of(0.97) == doctest::Approx(0.00043363201920910765).epsilon(1e-9));

    // Strictly increasing away from the helix, on both sides.
    CHECK(m.t_min_of(1.005) < m.t_min_of(1.02));
    CHECK(m.t_min_of(1.02) < m.t_min_of(1.05));
    CHECK(m.t_min_of(0.995) < m.t_min_of(0.98));

    // The threshold is the sign change of G: negative below, positive above.
    const double x = 1.02;
    const double tm = m.t_min_of(x);
    CHECK(section_G(x, tm * (1.0 - 1e-6), m.curve()) < 0.0);
    CHECK(section_G(x, tm * (1.0 + 1e-6), m.curve()) > 0.0);

    // Parabolic touching: t_min(1 + d) ~ d^2/2 for small offsets.
    const double d = 1e-3;
    CHECK(m.t_min_of(1.0 + d) / (d * d) == doctest::Approx(0.5).epsilon(0.02));
    CHECK(m.t_min_of(1.0 - d) / (d * d) == doctest::Approx(0.5).epsilon(0.02));

    CHECK_THROWS_AS(m.t_min_of(1.2), std::domain_error);
    CHECK_THROWS_AS(m.t_min_of(0.8), std::domain_error);
}

TEST_CASE("forward map y_from_t") {
    const CrossSectionMap& m = map_k1_plus();

    CHECK(m.y_from_t(1.0, 1e-3) == doctest::Approx(0.06393645839902558).epsilon(1e-9));
    CHECK(m.y_from_t(1.03, 8e-3) == doctest::Approx(0.17622317763034628).epsilon(1e-9));

    // Zero exactly at the threshold; strictly increasing in t.
    const double x = 1.01;
    const double tm = m.t_min_of(x);
    CHECK(m.y_from_t(x, tm) == 0.0);
    double prev = 0.0;
    for (double t : {tm + 1e-5, 1e-3, 4e-3, 1e-2, 1.8e-2}) {
        const double y = m.y_from_t(x, t);
        CHECK(y > prev);
        prev = y;
    }

    CHECK_THROWS_AS(m.y_from_t(1.0, 0.1), std::domain_error);       // above ceiling
    CHECK_THROWS_AS(m.y_from_t(1.03, 1e-4), std::domain_error);     // below threshold
}

TEST_CASE("inverse map t_from_y") {
    const CrossSectionMap& m = map_k1_plus();

    CHECK(m.t_from_y(1.0, 0.05) == doctest::Approx(0.0006145116695741362).epsilon(1e-9));
    CHECK(m.t_from_y(1.02, -0.07) == doctest::Approx(0.0014221138663502646).epsilon(1e-9));

    // Even extension is exact by construction.
    for (double x : {0.97, 1.0, 1.025}) {
        for (double y : {0.01, 0.06, 0.11}) {
            CHECK(m.t_from_y(x, y) == m.t_from_y(x, -y));
        }
    }

    // t(1, y) ~ y^2 * Gt(1,0)/4 = y^2/(2K) near the helix.
    const double y = 1e-3;
    CHECK(m.t_from_y(1.0, y) / (y * y) == doctest::Approx(0.25).epsilon(1e-4));

    CHECK_THROWS_AS(m.t_from_y(1.0, 0.5), std::out_of_range);
    CHECK_THROWS_AS(m.t_from_y(1.2, 0.0), std::domain_error);
}

TEST_CASE("forward and inverse maps are mutually consistent") {
    const CrossSectionMap& m = map_k1_plus();
    for (double x : {0.97, 0.99, 1.0, 1.015, 1.03}) {
        const double tm = m.t_min_of(x);
        for (double f : {0.02, 0.2, 0.6, 0.95}) {
            const double t = tm + f * (m.t_ceiling() - tm);
            const double y = m.y_from_t(x, t);
            CHECK(m.t_from_y(x, y) == doctest::Approx(t).epsilon(1e-9));
        }
    }
}

TEST_CASE("domain bookkeeping") {
    const CrossSectionMap& m = map_k1_plus();

    CHECK(m.x_min() == doctest::Approx(0.9));
    CHECK(m.x_max() == doctest::Approx(1.1));
    CHECK(m.t_ceiling() == 0.02);  // min(0.9 * t_cap, 0.02) with t_cap ~ 0.09

    // y_extent is the image of the ceiling.
    for (double x : {0.98, 1.0, 1.04}) {
        CHECK(m.y_extent(x) ==
              doctest::Approx(m.y_from_t(x, m.t_ceiling())).epsilon(1e-8));
        CHECK(m.t_from_y(x, m.y_extent(x) * 0.999999) < m.t_ceiling());
    }

    CHECK(m.in_domain(1.0, 1e-3));
    CHECK_FALSE(m.in_domain(1.0, 0.05));       // above the ceiling
    CHECK_FALSE(m.in_domain(1.03, 1e-4));      // below the threshold
    CHECK_FALSE(m.in_domain(1.15, 1e-3));      // outside the band
}

TEST_CASE("the two branches give different maps when k > 0, equal at k = 0") {
    HelixConfig plus;  // k = 1, branch = +1
    HelixConfig minus;
    minus.branch = -1;
    const CrossSectionMap mp = make_standard_map(plus);
    const CrossSectionMap mm = make_standard_map(minus);
    const double gap = std::fabs(mp.t_from_y(1.01, 0.05) - mm.t_from_y(1.01, 0.05));
    CHECK(gap > 1e-9);

    HelixConfig c0p, c0m;
    c0p.k = 0.0;
    c0m.k = 0.0;
    c0m.branch = -1;
    const CrossSectionMap zp = make_standard_map(c0p);
    const CrossSectionMap zm = make_standard_map(c0m);
    for (double y : {0.02, 0.08}) {
        CHECK(std::fabs(zp.t_from_y(1.01, y) - zm.t_from_y(1.01, y)) < 1e-10);
    }
}
