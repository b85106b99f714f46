#include "helix/map2d.hpp"
#include "helix/hermite.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace helix {
namespace {

constexpr double kOnHelixTol = 1e-13;   // |x-1| below this: t_min is exactly 0
constexpr std::size_t kMaxRayNodes = 100000;

} // namespace

CrossSectionMap::CrossSectionMap(ProfileCurve curve, double band_halfwidth, double quad_tol)
    : curve_(std::move(curve)), band_(band_halfwidth), quad_tol_(quad_tol) {
    if (curve_.nodes.empty())
        throw std::invalid_argument("cross-section map needs a continued profile curve");
    if (!(band_ > 0.0) || !(band_ < 0.5))
        throw std::invalid_argument("band halfwidth must lie in (0, 0.5)");
    // Stay well below the continuation cap; 0.02 is already far beyond the
    // support of any cutoff this code produces (eps ~ 1e-3).
    t_hi_ = std::min(0.9 * curve_.t_cap, 0.02);
    if (!(t_hi_ > 0.0))
        throw std::invalid_argument("profile curve too short for a cross-section map");
}

void CrossSectionMap::require_in_band(double x) const {
    if (!(x >= x_min() - 1e-12) || !(x <= x_max() + 1e-12))
        throw std::domain_error("radius outside the representable band around the helix");
}

double CrossSectionMap::t_min_of(double x) const {
    require_in_band(x);
    if (std::fabs(x - 1.0) < kOnHelixTol) return 0.0;

    auto g = [&](double t) { return section_G(x, t, curve_); };

    // G(x, 0) = -x^2 F^2 / (x^2+k^2) < 0 off the helix; expand the upper end
    // geometrically until G turns positive (near 1, t_min ~ (x-1)^2 / 2).
    double lo = 0.0;
    double hi = std::max(0.1 * (x - 1.0) * (x - 1.0), 1e-12);
    double ghi = g(hi);
    while (ghi <= 0.0) {
        lo = hi;
        hi *= 1.7;
        if (hi > 1.2 * t_hi_)
            throw std::domain_error("no admissible stream values at this radius below the ceiling");
        ghi = g(hi);
    }
    double glo = g(lo);
    if (glo >= 0.0) return lo;  // x so close to 1 that G(x, 0+) rounds nonnegative

    std::uintmax_t iters = 200;
    auto win = boost::math::tools::toms748_solve(
        g, lo, hi, glo, ghi, boost::math::tools::eps_tolerance<double>(52), iters);
    return 0.5 * (win.first + win.second);
}

double CrossSectionMap::y_from_t(double x, double t) const {
    require_in_band(x);
    const double tm = t_min_of(x);
    if (t <= tm) {
        if (t < tm - 1e-12 * std::max(1.0, tm))
            throw std::domain_error("stream value below the admissible boundary");
        return 0.0;
    }
    if (t > t_hi_ * (1.0 + 1e-12))
        throw std::domain_error("stream value above the map ceiling");

    const double gt = section_coefficients(x, tm, curve_).Gt;
    if (!(gt > 0.0))
        throw std::runtime_error("boundary zero of G is not simple");
    const double endpoint = 2.0 / std::sqrt(gt);

    // Substituting tau = t_min + sigma^2 removes the inverse-square-root
    // endpoint singularity: the integrand tends to 2/sqrt(G_t) as sigma -> 0.
    auto f = [&](double sigma) {
        const double g = section_G(x, tm + sigma * sigma, curve_);
        if (!(g > 0.0)) return endpoint;
        return 2.0 * sigma / std::sqrt(g);
    };
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, 0.0, std::sqrt(t - tm), 12, quad_tol_);
}

CrossSectionMap::Ray CrossSectionMap::build_ray(double x) const {
    namespace ode = boost::numeric::odeint;
    using State = std::array<double, 2>;  // (t, dt/dy)

    Ray ray;
    ray.t_min = t_min_of(x);
    if (ray.t_min >= t_hi_)
        throw std::domain_error("no admissible stream values at this radius below the ceiling");

    auto accel = [&](double tau) {
        // Clamp trial evaluations into [t_min, t_cap]; extension by the
        // boundary value is harmless for rejected or edge stages.
        const double tc = std::min(std::max(tau, ray.t_min), curve_.t_cap);
        return 0.5 * section_coefficients(x, tc, curve_).Gt;
    };
    if (!(accel(ray.t_min) > 0.0))
        throw std::runtime_error("boundary zero of G is not simple");

    auto rhs = [&](const State& s, State& dsdy, double /*y*/) {
        dsdy[0] = s[1];
        dsdy[1] = accel(s[0]);
    };
    auto push = [&](double yy, const State& s) {
        ray.nodes.push_back({yy, s[0], s[1], accel(s[0])});
    };

    auto stepper = ode::make_controlled(ode_tol_, ode_tol_, ode::runge_kutta_dopri5<State>());
    State s{ray.t_min, 0.0};
    double y = 0.0;
    double dy = 1e-4;
    push(y, s);
    while (s[0] < t_hi_ && ray.nodes.size() < kMaxRayNodes) {
        State s_next = s;
        double y_next = y, dy_next = dy;
        if (stepper.try_step(rhs, s_next, y_next, dy_next) == ode::fail) {
            dy = dy_next;
            if (!(dy > 1e-15))
                throw std::runtime_error("transverse ray step size underflow");
            continue;
        }
        s = s_next;
        y = y_next;
        dy = dy_next;
        push(y, s);
    }
    if (s[0] < t_hi_)
        throw std::runtime_error("transverse ray failed to reach the stream ceiling");

    // Locate y with t(y) = t_hi on the final (overshooting) segment.
    const RayNode& p = ray.nodes[ray.nodes.size() - 2];
    const RayNode& q = ray.nodes.back();
    const double H = q.y - p.y;
    auto t_at = [&](double yy) {
        return quintic_hermite(H, (yy - p.y) / H, p.t, p.v, p.a, q.t, q.v, q.a);
    };
    double loy = p.y, hiy = q.y;
    for (int i = 0; i < 200 && hiy - loy > 1e-17 * std::max(1.0, hiy); ++i) {
        const double mid = 0.5 * (loy + hiy);
        (t_at(mid) < t_hi_ ? loy : hiy) = mid;
    }
    ray.y_max = 0.5 * (loy + hiy);
    return ray;
}

const CrossSectionMap::Ray& CrossSectionMap::ray_for(double x) const {
    auto it = rays_.find(x);
    if (it == rays_.end()) it = rays_.emplace(x, build_ray(x)).first;
    return it->second;
}

double CrossSectionMap::t_from_y(double x, double y) const {
    require_in_band(x);
    const Ray& ray = ray_for(x);
    const double ay = std::fabs(y);  // the section is exactly even in y
    if (ay > ray.y_max * (1.0 + 1e-12))
        throw std::out_of_range("transverse offset beyond the representable range");
    if (ay <= 0.0) return ray.t_min;

    // Binary search for the bracketing node interval, then quintic Hermite.
    const auto& ns = ray.nodes;
    auto it = std::upper_bound(ns.begin(), ns.end(), ay,
                               [](double v, const RayNode& n) { return v < n.y; });
    const std::size_t i1 = std::min<std::size_t>(
        std::max<std::ptrdiff_t>(it - ns.begin(), 1), ns.size() - 1);
    const RayNode& p = ns[i1 - 1];
    const RayNode& q = ns[i1];
    const double H = q.y - p.y;
    const double t = quintic_hermite(H, (ay - p.y) / H, p.t, p.v, p.a, q.t, q.v, q.a);
    return std::min(std::max(t, ray.t_min), t_hi_);
}

double CrossSectionMap::y_extent(double x) const {
    require_in_band(x);
    return ray_for(x).y_max;
}

bool CrossSectionMap::in_domain(double x, double t) const {
    if (!(x >= x_min()) || !(x <= x_max())) return false;
    if (!(t <= t_hi_)) return false;
    try {
        return t >= t_min_of(x);
    } catch (const std::domain_error&) {
        return false;
    }
}

CrossSectionMap make_standard_map(const HelixConfig& config, double t_max) {
    config.validate();
    const SeriesPair series = expand_profile_series(config.k, 12);
    const double s0 = (config.branch > 0 ? 1.0 : -1.0) * 1e-3;
    ProfileCurve curve = continue_profile(config, series, s0, t_max);
    return CrossSectionMap(std::move(curve));
}

} // namespace helix
