#include "helix/field.hpp"
#include "helix/hermite.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

namespace helix {
namespace {

constexpr int kTableIntervals = 2048;  // dense: step ~ eps/2048 << bump scale

double bump(double eps, double t) {
    if (t <= eps || t >= 2.0 * eps) return 0.0;
    // Peak-normalized: the exponent is 0 at t = 1.5 eps and -> -inf at the
    // edges; exp underflows to an exact 0 well before the edges are reached.
    const double arg = 4.0 / eps - 1.0 / (t - eps) - 1.0 / (2.0 * eps - t);
    return std::exp(arg);
}

double bump_prime(double eps, double t) {
    if (t <= eps || t >= 2.0 * eps) return 0.0;
    const double a = t - eps, b = 2.0 * eps - t;
    return bump(eps, t) * (1.0 / (a * a) - 1.0 / (b * b));
}

} // namespace

double CutoffSpec::omega(double t) const { return bump(eps, t); }
double CutoffSpec::omega_prime(double t) const { return bump_prime(eps, t); }

double CutoffSpec::pressure(double t) const {
    if (t <= eps) return 0.0;
    if (t >= 2.0 * eps) return p_plateau;
    const double u = (t - eps) / t_table_step;
    std::size_t i = static_cast<std::size_t>(u);
    if (i >= table_P.size() - 1) i = table_P.size() - 2;
    const double t0 = eps + static_cast<double>(i) * t_table_step;
    return quintic_hermite(t_table_step, (t - t0) / t_table_step,
                           table_P[i], table_Pp[i], table_Ppp[i],
                           table_P[i + 1], table_Pp[i + 1], table_Ppp[i + 1]);
}

CutoffSpec make_cutoff_spec(const CrossSectionMap& map, double eps) {
    if (!(eps > 0.0))
        throw std::invalid_argument("cutoff window start must be positive");
    CutoffSpec spec;
    spec.eps = eps;
    spec.k = map.k();

    // Containment: the closure of { t <= 2 eps } must be strictly inside the
    // representable region, so that zero-extension outside it is exact.
    if (!(2.0 * eps < map.t_ceiling()))
        throw std::invalid_argument("cutoff window reaches the map ceiling");
    if (!(map.t_min_of(map.x_min()) > 2.0 * eps) ||
        !(map.t_min_of(map.x_max()) > 2.0 * eps))
        throw std::invalid_argument("cutoff support touches the representable band edge");

    const double K = 1.0 + spec.k * spec.k;
    const int n = kTableIntervals;
    spec.t_table_step = eps / n;
    spec.table_P.resize(n + 1);
    spec.table_Pp.resize(n + 1);
    spec.table_Ppp.resize(n + 1);
    auto integrand = [&](double tau) {
        const double w = bump(eps, tau);
        return w * w / K;
    };
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double ti = eps + i * spec.t_table_step;
        if (i > 0) {
            acc += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
                integrand, ti - spec.t_table_step, ti, 10, 1e-15);
        }
        const double w = bump(eps, ti);
        spec.table_P[i] = acc;
        spec.table_Pp[i] = w * w / K;
        spec.table_Ppp[i] = 2.0 * w * bump_prime(eps, ti) / K;
    }
    spec.p_plateau = acc;
    return spec;
}

FlowSample sample_raw(double rho, double phi, double z, const CrossSectionMap& map) {
    const double k = map.k();
    const double x = rho;
    const double y = z - k * phi;
    const double t = map.t_from_y(x, y);

    const SectionValues sv = section_coefficients(x, t, map.curve());
    const double W = x * x + k * k;
    FlowSample s;
    s.rho = rho;
    s.phi = phi;
    s.z = z;
    s.t = t;
    s.p = t / (1.0 + k * k);
    const double sgn = (y > 0.0) ? 1.0 : (y < 0.0 ? -1.0 : 0.0);
    s.u_rho = sgn * std::sqrt(std::max(sv.G, 0.0)) / x;
    s.u_z = (k * sv.h - x * sv.F) / W;
    s.u_phi = (x * sv.h + k * sv.F) / W;
    s.in_support = true;
    return s;
}

FlowSample sample_cutoff(double rho, double phi, double z, const CrossSectionMap& map,
                         const CutoffSpec& cutoff) {
    const double k = map.k();
    const double x = rho;
    const double y = z - k * phi;
    const double two_eps = 2.0 * cutoff.eps;

    bool representable = x >= map.x_min() && x <= map.x_max();
    double t = 0.0;
    if (representable) {
        try {
            t = map.t_from_y(x, y);
        } catch (const std::out_of_range&) {
            representable = false;  // |y| beyond the ceiling image: t > 2 eps
        } catch (const std::domain_error&) {
            representable = false;  // whole radius above the ceiling: t > 2 eps
        }
    }

    FlowSample s;
    s.rho = rho;
    s.phi = phi;
    s.z = z;
    if (!representable) {
        // make_cutoff_spec certified that everything outside the region has
        // t beyond the support window.
        s.t = map.t_ceiling();
        s.p = cutoff.p_plateau;
        s.in_support = false;
        return s;
    }

    s.t = t;
    s.p = cutoff.pressure(t);
    s.in_support = (t > cutoff.eps) && (t < two_eps);
    if (s.in_support) {
        const double w = cutoff.omega(t);
        const FlowSample raw = sample_raw(rho, phi, z, map);
        s.u_rho = w * raw.u_rho;
        s.u_z = w * raw.u_z;
        s.u_phi = w * raw.u_phi;
    }
    return s;
}

BeltramiSample sample_beltrami(double rho, double phi, double z, const CrossSectionMap& map,
                               double t_floor) {
    if (!(t_floor > 0.0))
        throw std::invalid_argument("Beltrami floor must be positive");
    const double k = map.k();
    const double x = rho;
    const double y = z - k * phi;
    const double t = map.t_from_y(x, y);
    if (!(t > t_floor))
        throw std::domain_error("stream value at or below the Beltrami floor");

    const SectionValues sv = section_coefficients(x, t, map.curve());
    const double W = x * x + k * k;
    const double K = 1.0 + k * k;
    const double weight = std::pow(t, -5.0 / 6.0) / 6.0;

    BeltramiSample b;
    b.rho = rho;
    b.phi = phi;
    b.z = z;
    b.t = t;
    const double sgn = (y > 0.0) ? 1.0 : (y < 0.0 ? -1.0 : 0.0);
    b.u_rho = weight * sgn * std::sqrt(std::max(sv.G, 0.0)) / x;
    b.u_z = weight * (k * sv.h - x * sv.F) / W;
    b.u_phi = weight * (x * sv.h + k * sv.F) / W;
    b.psi = std::pow(t, 1.0 / 6.0);
    b.chi = weight * sv.h;
    b.lambda = (5.0 / 6.0) * sv.h / t - sv.hp;
    b.p_tilde = -std::pow(t, -2.0 / 3.0) / (24.0 * K);
    return b;
}

std::array<double, 3> reference_field_a(double k, double rho) {
    if (!(rho > 0.0))
        throw std::domain_error("reference field needs rho > 0");
    const double w = rho * rho + k * k;
    return {0.0, k / w, rho / w};
}

} // namespace helix
