#pragma once
/*
================================================================================
 profile.hpp — right-hand side of the profile ODE system, with derivatives
--------------------------------------------------------------------------------
 Away from t = 0 the profile functions satisfy

     dh/dt = Nh / (2*K*D)         dc/dt = Nc / D

 with K  = 1 + k^2
      S  = h^2*K - 3t*(c + k^2)
      D  = h*S + 18*k*t^2
      Nh = (k^2 + c)*S + 6*t*K*(k*h + 6*t)
      Nc = k*S + 6*t*K*h

 Everything downstream (curvature of the cross-section map, the circle-limit
 residual, quintic dense output) wants second derivatives as well, so this
 header also provides d2h/dt2 and d2c/dt2 obtained by differentiating the
 right-hand side analytically (never by finite differences).

 The denominator D vanishes at t = 0 and again at some t_cap > 0 where the
 construction degenerates; `denominator_guard_scale` provides a positive
 magnitude-scale made of the absolute values of D's atoms, suitable for a
 relative smallness test (|D| itself cannot be compared against |h*S| alone:
 at k = 0 they coincide identically).
================================================================================
*/

#include <cmath>

namespace helix {

struct ProfileDerivs {
    double S  = 0, D = 0;
    double hp = 0, cp = 0;    // dh/dt, dc/dt
    double hpp = 0, cpp = 0;  // d2h/dt2, d2c/dt2
};

inline double denominator_guard_scale(double k, double t, double h, double c) {
    const double K = 1.0 + k * k;
    return std::fabs(h) * std::fabs(h) * std::fabs(h) * K +
           3.0 * t * std::fabs(h) * (std::fabs(c) + k * k) +
           18.0 * std::fabs(k) * t * t + 1e-300;
}

inline ProfileDerivs profile_rhs(double k, double t, double h, double c) {
    const double K  = 1.0 + k * k;
    const double k2 = k * k;

    const double S  = h * h * K - 3.0 * t * (c + k2);
    const double St = -3.0 * (c + k2);
    const double Sh = 2.0 * h * K;
    const double Sc = -3.0 * t;

    const double D  = h * S + 18.0 * k * t * t;
    const double Dt = h * St + 36.0 * k * t;
    const double Dh = S + h * Sh;
    const double Dc = h * Sc;

    const double Nh   = (k2 + c) * S + 6.0 * t * K * (k * h + 6.0 * t);
    const double Nh_t = (k2 + c) * St + 6.0 * K * (k * h + 12.0 * t);
    const double Nh_h = (k2 + c) * Sh + 6.0 * t * K * k;
    const double Nh_c = S + (k2 + c) * Sc;

    const double Nc   = k * S + 6.0 * t * K * h;
    const double Nc_t = k * St + 6.0 * K * h;
    const double Nc_h = k * Sh + 6.0 * t * K;
    const double Nc_c = k * Sc;

    ProfileDerivs d;
    d.S = S;
    d.D = D;
    d.hp = Nh / (2.0 * K * D);
    d.cp = Nc / D;

    // total t-derivatives along the solution
    const double Nh_dot = Nh_t + Nh_h * d.hp + Nh_c * d.cp;
    const double Nc_dot = Nc_t + Nc_h * d.hp + Nc_c * d.cp;
    const double D_dot  = Dt + Dh * d.hp + Dc * d.cp;

    d.hpp = (Nh_dot * D - Nh * D_dot) / (2.0 * K * D * D);
    d.cpp = (Nc_dot * D - Nc * D_dot) / (D * D);
    return d;
}

} // namespace helix
