#pragma once
/*
================================================================================
 curve.hpp — adaptive continuation of the profile functions h(t), c(t)
--------------------------------------------------------------------------------
 The square-root series is accurate only near t = 0; from a handoff point
 t0 = s0^2 the profile is continued by an adaptive embedded Runge-Kutta
 integrator. Accepted steps are stored as nodes carrying (t, h, c) together
 with first and second t-derivatives (the latter analytic, see profile.hpp),
 so that dense evaluation between nodes is a quintic Hermite interpolation
 whose data are exact at the nodes.

 Continuation stops at the requested t_max, or earlier at t_cap when either
 the system denominator D = h*S + 18*k*t^2 approaches zero (relative to a
 positive scale of its atoms) or the step size underflows — near a genuine
 square-root-type singularity the solution's derivative blows up before D
 crosses zero, so both stop reasons occur in practice and both are recorded.
================================================================================
*/

#include "helix/config.hpp"
#include "helix/series.hpp"

#include <span>
#include <string>
#include <vector>

namespace helix {

struct CurveNode {
    double t, h, c;
    double hp, cp;    // dh/dt, dc/dt
    double hpp, cpp;  // second derivatives
};

struct ProfileCurve {
    double k = 1.0;
    int    branch = +1;
    double t_start = 0.0;             // handoff point t0 = s0^2
    double t_cap = 0.0;               // largest reached t
    std::string cap_reason;           // "reached t_max" | "denominator guard" | "step underflow"
    std::vector<CurveNode> nodes;     // strictly increasing in t
    std::vector<double> series_h;     // series coefficients (double) for t < t_start
    std::vector<double> series_c;
};

struct ProfileValues {
    double h, c, S;
    double hp, cp;
};

// Integrate from t0 = s0^2 toward t_max. Throws std::invalid_argument when
// t_max < t0, when sign(s0) != config.branch, or when the series order is
// too low; throws std::runtime_error when the handoff point itself sits on
// the denominator zero set. t_max == t0 yields a single-node curve.
ProfileCurve continue_profile(const HelixConfig& config, const SeriesPair& series,
                              double s0, double t_max);

// Dense evaluation on [t_start, t_cap]; derivative values are recomputed from
// the ODE right-hand side at the interpolated state, not interpolated
// independently. Outside the range: std::out_of_range.
ProfileValues profile_at(const ProfileCurve& curve, double t);

// Internal extension used by the cross-section code: below t_start the stored
// series takes over (evaluated at s = branch*sqrt(t)), so evaluation reaches
// all the way to t = 0.
ProfileValues profile_eval_extended(const ProfileCurve& curve, double t);

// k = 0 only: maximum absolute residual, over t_samples, of the second-order
// circle equation 6t*c'' + 3t*(c')^3 - 2c*(c')^2 - 6c' and of the first-order
// reductions d(h^2)/dt = c + 36t^2/(h^2-3tc), dc/dt = 6t/(h^2-3tc).
double circle_limit_residual(const ProfileCurve& curve, std::span<const double> t_samples);

} // namespace helix
