// Point evaluation of the raw helical flow and the reference field.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helix/field.hpp"

#include <cmath>
#include <stdexcept>

using namespace helix;

namespace {

const CrossSectionMap& map_k1() {
    static const CrossSectionMap m = make_standard_map(HelixConfig{});
    return m;
}

double speed2(const FlowSample& s) {
    return s.u_rho * s.u_rho + s.u_z * s.u_z + s.u_phi * s.u_phi;
}

} // namespace

TEST_CASE("the flow vanishes on the helix") {
    const CrossSectionMap& m = map_k1();
    for (double phi : {-0.4, 0.0, 0.3}) {
        const FlowSample s = sample_raw(1.0, phi, m.k() * phi, m);
        CHECK(s.t == 0.0);
        CHECK(s.u_rho == 0.0);
        CHECK(s.u_z == 0.0);
        CHECK(s.u_phi == 0.0);
        CHECK(s.p == 0.0);
    }
}

TEST_CASE("pointwise Bernoulli constraint |u|^2 = 3p") {
    const CrossSectionMap& m = map_k1();
    for (double rho : {0.97, 0.99, 1.0, 1.02}) {
        for (double z : {0.04, 0.1, 0.15, 0.3}) {
            const FlowSample s = sample_raw(rho, 0.2, z, m);
            if (s.t <= 0.0) continue;
            CHECK(std::fabs(speed2(s) - 3.0 * s.p) <= 1e-12 * 3.0 * s.p);
        }
    }
}

TEST_CASE("pressure is the stream value over 1 + k^2") {
    const CrossSectionMap& m = map_k1();
    const FlowSample s = sample_raw(1.01, 0.0, 0.07, m);
    CHECK(s.p == doctest::Approx(s.t / 2.0).epsilon(1e-15));
    CHECK(s.t == doctest::Approx(m.t_from_y(1.01, 0.07)).epsilon(1e-14));
}

TEST_CASE("screw invariance: samples repeat along the helical symmetry") {
    const CrossSectionMap& m = map_k1();
    const double k = m.k();
    for (double delta : {-0.7, 0.25, 1.3}) {
        const FlowSample a = sample_raw(1.01, 0.1, 0.03, m);
        const FlowSample b = sample_raw(1.01, 0.1 + delta, 0.03 + k * delta, m);
        CHECK(b.u_rho == doctest::Approx(a.u_rho).epsilon(1e-12));
        CHECK(b.u_z == doctest::Approx(a.u_z).epsilon(1e-12));
        CHECK(b.u_phi == doctest::Approx(a.u_phi).epsilon(1e-12));
        CHECK(b.p == doctest::Approx(a.p).epsilon(1e-12));
    }
}

TEST_CASE("reflection through the invariant plane flips only u_rho") {
    const CrossSectionMap& m = map_k1();
    for (double rho : {0.98, 1.0, 1.03}) {
        for (double y : {0.02, 0.09}) {
            const FlowSample up = sample_raw(rho, 0.0, y, m);
            const FlowSample dn = sample_raw(rho, 0.0, -y, m);
            CHECK(up.u_rho == -dn.u_rho);
            CHECK(up.u_z == dn.u_z);
            CHECK(up.u_phi == dn.u_phi);
            CHECK(up.p == dn.p);
        }
    }
}

TEST_CASE("velocity is tangent to the stream surfaces") {
    const CrossSectionMap& m = map_k1();
    const double k = m.k();
    const double eps = 1e-5;
    for (double rho : {0.99, 1.005}) {
        for (double z : {0.05, 0.1}) {
            const FlowSample s = sample_raw(rho, 0.0, z, m);
            // Advect the sample point by +/- eps along u (angular component
            // u_phi/rho) and difference the stream value.
            auto t_at = [&](double sgn) {
                return sample_raw(rho + sgn * eps * s.u_rho,
                                  sgn * eps * s.u_phi / rho,
                                  z + sgn * eps * s.u_z, m)
                    .t;
            };
            const double dt_along_u = (t_at(+1.0) - t_at(-1.0)) / (2.0 * eps);
            CHECK(std::fabs(dt_along_u) < 1e-6);

            // Whereas t does vary in a generic direction.
            const double dt_z =
                (sample_raw(rho, 0.0, z + eps, m).t - sample_raw(rho, 0.0, z - eps, m).t) /
                (2.0 * eps);
            CHECK(std::fabs(dt_z) > 1e-3);
        }
    }
}

TEST_CASE("points outside the representable region are rejected") {
    const CrossSectionMap& m = map_k1();
    CHECK_THROWS_AS(sample_raw(1.2, 0.0, 0.0, m), std::domain_error);
    CHECK_THROWS_AS(sample_raw(1.0, 0.0, 3.0, m), std::out_of_range);
}

TEST_CASE("reference field: values, divergence, curl") {
    const double k = 1.0;
    const std::array<double, 3> on = reference_field_a(k, 1.0);
    CHECK(on[0] == 0.0);
    CHECK(on[1] == doctest::Approx(k / (1.0 + k * k)).epsilon(1e-15));
    CHECK(on[2] == doctest::Approx(1.0 / (1.0 + k * k)).epsilon(1e-15));

    // Fourth-order finite differences in rho (the only coordinate the field
    // depends on): div a = (1/rho) d(rho a_rho)/drho = 0 and
    // curl a = 2k/(rho^2+k^2) * a.
    const double h = 1e-4;
    for (double k2 : {0.5, 1.0, 2.0}) {
        for (double rho : {0.8, 1.0, 1.3}) {
            auto az = [&](double r) { return reference_field_a(k2, r)[1]; };
            auto ap = [&](double r) { return reference_field_a(k2, r)[2]; };
            auto d4 = [&](auto f) {
                return (-f(rho + 2 * h) + 8 * f(rho + h) - 8 * f(rho - h) + f(rho - 2 * h)) /
                       (12 * h);
            };
            // a_rho = 0 everywhere: divergence reduces to 0 identically; the
            // curl components in the (e_rho, e_z, e_phi) ordering are
            //   (curl a)_rho = 0, (curl a)_z = (1/rho) d(rho a_phi)/drho,
            //   (curl a)_phi = -d(a_z)/drho.
            const double W = rho * rho + k2 * k2;
            const double curl_z = ap(rho) / rho + d4(ap);
            const double curl_p = -d4(az);
            CHECK(curl_z == doctest::Approx(2.0 * k2 / W * az(rho)).epsilon(1e-10));
            CHECK(curl_p == doctest::Approx(2.0 * k2 / W * ap(rho)).epsilon(1e-10));
        }
    }

    CHECK_THROWS_AS(reference_field_a(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(reference_field_a(1.0, -0.5), std::domain_error);
}
