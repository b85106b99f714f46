#include "helix/curve.hpp"
#include "helix/hermite.hpp"
#include "helix/profile.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace helix {
namespace {

using State = std::array<double, 2>;  // (h, c)

constexpr double kGuardFraction = 1e-3;  // |D| < fraction * atom scale => stop
constexpr double kMinStep = 1e-14;
constexpr std::size_t kMaxNodes = 200000;

bool guard_ok(double k, double t, double h, double c) {
    const double K = 1.0 + k * k;
    const double S = h * h * K - 3.0 * t * (c + k * k);
    const double D = h * S + 18.0 * k * t * t;
    return std::fabs(D) > kGuardFraction * denominator_guard_scale(k, t, h, c);
}

CurveNode make_node(double k, double t, double h, double c) {
    const ProfileDerivs d = profile_rhs(k, t, h, c);
    return {t, h, c, d.hp, d.cp, d.hpp, d.cpp};
}

const CurveNode* find_interval(const ProfileCurve& curve, double t) {
    // nodes are strictly increasing; return the node starting the bracketing
    // interval (the last node with node.t <= t), or nullptr outside
    const auto& ns = curve.nodes;
    if (ns.empty() || t < ns.front().t || t > ns.back().t) return nullptr;
    auto it = std::upper_bound(ns.begin(), ns.end(), t,
                               [](double v, const CurveNode& n) { return v < n.t; });
    if (it == ns.begin()) return &ns.front();
    return &*(it - 1);
}

} // namespace

ProfileCurve continue_profile(const HelixConfig& config, const SeriesPair& series,
                              double s0, double t_max) {
    config.validate();
    if (s0 == 0.0)
        throw std::invalid_argument("continue_profile: handoff abscissa must be nonzero");
    if ((s0 > 0.0 ? +1 : -1) != config.branch)
        throw std::invalid_argument("continue_profile: sign of s0 must match config.branch");
    if (series.order < 4)
        throw std::invalid_argument("continue_profile: series order must be >= 4");
    if (std::fabs(series.k_value - config.k) > 1e-12 * (1.0 + config.k))
        throw std::invalid_argument("continue_profile: series slope does not match config.k");

    const double k = config.k;
    const double t0 = s0 * s0;
    if (t_max < t0)
        throw std::invalid_argument("continue_profile: t_max before the handoff point");

    ProfileCurve curve;
    curve.k = k;
    curve.branch = config.branch;
    curve.t_start = t0;
    curve.series_h = series.h_dbl;
    curve.series_c = series.c_dbl;

    const SeriesEval init = eval_profile_series(series, s0);
    if (!guard_ok(k, t0, init.h, init.c))
        throw std::runtime_error("continue_profile: handoff too close to singularity");

    curve.nodes.push_back(make_node(k, t0, init.h, init.c));
    if (t_max == t0) {
        curve.t_cap = t0;
        curve.cap_reason = "reached t_max";
        return curve;
    }

    namespace ode = boost::numeric::odeint;
    auto rhs = [k](const State& x, State& dxdt, double t) {
        const ProfileDerivs d = profile_rhs(k, t, x[0], x[1]);
        dxdt[0] = d.hp;
        dxdt[1] = d.cp;
    };
    auto stepper = ode::make_controlled(config.ode_tol, config.ode_tol,
                                        ode::runge_kutta_dopri5<State>());

    double t = t0;
    State x{init.h, init.c};
    double dt = t0;  // conservative first guess; the controller adapts fast
    std::string stop;

    while (t < t_max) {
        dt = std::min(dt, t_max - t);
        if (dt < kMinStep) {
            stop = "step underflow";
            break;
        }
        double t_try = t;
        State x_try = x;
        double dt_try = dt;
        const auto result = stepper.try_step(rhs, x_try, t_try, dt_try);
        if (result == ode::fail) {
            dt = dt_try;  // controller-reduced; retry
            continue;
        }
        if (!guard_ok(k, t_try, x_try[0], x_try[1])) {
            dt *= 0.5;  // approach the degeneration point geometrically
            if (dt < kMinStep) {
                stop = "denominator guard";
                break;
            }
            continue;
        }
        t = t_try;
        x = x_try;
        dt = dt_try;
        curve.nodes.push_back(make_node(k, t, x[0], x[1]));
        if (curve.nodes.size() > kMaxNodes)
            throw std::runtime_error("continue_profile: node budget exceeded");
    }

    curve.t_cap = t;
    curve.cap_reason = stop.empty() ? "reached t_max" : stop;
    return curve;
}

ProfileValues profile_at(const ProfileCurve& curve, double t) {
    const double lo = curve.t_start, hi = curve.t_cap;
    const double slack = 1e-13 * (1.0 + std::fabs(hi));
    if (t < lo - slack || t > hi + slack)
        throw std::out_of_range("profile_at: t outside [t_start, t_cap]");
    return profile_eval_extended(curve, std::clamp(t, lo, hi));
}

ProfileValues profile_eval_extended(const ProfileCurve& curve, double t) {
    const double k = curve.k;
    double h, c;
    if (t < curve.t_start) {
        if (t < 0.0)
            throw std::out_of_range("profile evaluation: t must be >= 0");
        const double s = (curve.branch > 0 ? 1.0 : -1.0) * std::sqrt(t);
        h = 0.0;
        c = 0.0;
        for (std::size_t i = curve.series_h.size(); i-- > 0;) h = h * s + curve.series_h[i];
        for (std::size_t i = curve.series_c.size(); i-- > 0;) c = c * s + curve.series_c[i];
    } else {
        const double tc = std::min(t, curve.t_cap);
        const CurveNode* n0 = find_interval(curve, tc);
        if (n0 == nullptr)
            throw std::out_of_range("profile evaluation: t beyond the continued range");
        const CurveNode* n1 = n0;
        if (n0->t < curve.nodes.back().t) n1 = n0 + 1;
        if (n0 == n1 || n1->t == n0->t) {
            h = n0->h;
            c = n0->c;
        } else {
            const double H = n1->t - n0->t;
            const double u = (tc - n0->t) / H;
            h = quintic_hermite(H, u, n0->h, n0->hp, n0->hpp, n1->h, n1->hp, n1->hpp);
            c = quintic_hermite(H, u, n0->c, n0->cp, n0->cpp, n1->c, n1->cp, n1->cpp);
        }
    }
    ProfileValues v;
    v.h = h;
    v.c = c;
    if (t > 0.0) {
        const ProfileDerivs d = profile_rhs(k, t, h, c);
        v.S = d.S;
        v.hp = d.hp;
        v.cp = d.cp;
    } else {
        v.S = 0.0;
        v.hp = 0.0;  // derivatives diverge at t = 0; callers use closed forms there
        v.cp = 0.0;
    }
    return v;
}

double circle_limit_residual(const ProfileCurve& curve, std::span<const double> t_samples) {
    if (curve.k != 0.0)
        throw std::invalid_argument("circle_limit_residual: curve must have k = 0");
    if (t_samples.empty())
        throw std::invalid_argument("circle_limit_residual: empty sample list");
    double worst = 0.0;
    for (const double t : t_samples) {
        const ProfileValues v = profile_eval_extended(curve, t);
        const ProfileDerivs d = profile_rhs(0.0, t, v.h, v.c);
        const double second = 6.0 * t * d.cpp + 3.0 * t * d.cp * d.cp * d.cp -
                              2.0 * v.c * d.cp * d.cp - 6.0 * d.cp;
        const double S0 = v.h * v.h - 3.0 * t * v.c;
        const double red_h = 2.0 * v.h * d.hp - (v.c + 36.0 * t * t / S0);
        const double red_c = d.cp - 6.0 * t / S0;
        worst = std::max({worst, std::fabs(second), std::fabs(red_h), std::fabs(red_c)});
    }
    return worst;
}

} // namespace helix
