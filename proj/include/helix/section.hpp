#pragma once
/*
================================================================================
 section.hpp — cross-section profile functions F(x,t), G(x,t)
--------------------------------------------------------------------------------
 In the invariant-plane variables (x, y) = (rho, z - k*phi) the stream value
 t(x, y) is reconstructed from two scalar functions of (x, t):

     F = k*h/x + (x^2+k^2)*(x^2-c) / (2x*(1+k^2))        ( = dt/dx at fixed y )
     G = x^2 * ( 3t/(1+k^2) - (F^2+h^2)/(x^2+k^2) )      ( = (dt/dy)^2 )

 with h = h(t), c = c(t) from the profile curve (series below its handoff
 point). This header evaluates F, G together with the partial derivatives
 needed by the verifier and by the transverse-ray ODE:

     F_t, F_x, F_tt   and   G_t, G_x, G_tt

 all obtained by analytic differentiation (h', c', h'', c'' come from the
 profile system's right-hand side).

 At t <= 0 the profile values collapse to h = 0, c = 1 and F, G take closed
 forms; the t-derivatives of the profile diverge there, so the struct then
 carries only the finite limits (G_t is finite only on the helix x = 1,
 where it equals 2/(1+k^2) — exactly the curvature seed the ray integration
 needs).
================================================================================
*/

#include "helix/curve.hpp"

#include <limits>

namespace helix {

struct SectionValues {
    double h = 0, c = 1;
    double hp = 0, cp = 0, hpp = 0, cpp = 0;
    double S = 0;
    double F = 0, G = 0;
    double Ft = 0, Fx = 0, Ftt = 0;
    double Gt = 0, Gx = 0, Gtt = 0;
};

SectionValues section_coefficients(double x, double t, const ProfileCurve& curve);

// G alone (cheapest form; used heavily by the boundary bracketing).
double section_G(double x, double t, const ProfileCurve& curve);

// Residual of the linear relation F must satisfy in x for ANY profile pair
// (h, c) — an algebra-only property of the F formula itself:
//     F_x - F*(x^2-k^2)/(x*(x^2+k^2)) + 2k*h/(x^2+k^2) - (x^2+k^2)/(1+k^2)
double radial_relation_residual(double k, double x, double h, double c);

// Sign-matched sextic: Q(x; t, h, c) equals -4*(1+k^2)^2 * G identically in
// all four arguments, so the admissible region G >= 0 is exactly {Q <= 0}.
// At h=0, c=1 it factors as (x^2-1)^2 * (x^2+k^2).
double boundary_sextic(double k, double x, double t, double h, double c);

} // namespace helix
