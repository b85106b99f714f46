#pragma once
/*
================================================================================
 field.hpp — point evaluators for the velocity fields in cylindrical frame
--------------------------------------------------------------------------------
 All evaluators work in cylindrical coordinates (rho, phi, z) and reduce to
 the invariant plane through (x, y) = (rho, z - k*phi):

   raw        u_rho = sign(y) sqrt(G)/x,  u_z = (k h - x F)/(x^2+k^2),
              u_phi = (x h + k F)/(x^2+k^2),  p = t/(1+k^2).
              Satisfies |u|^2 = 3p exactly (algebra, not numerics).

   cutoff     u~ = omega(t) u and p~ = P(t) with P' = omega^2/(1+k^2),
              P(0) = 0. omega is the even bump exp(4/eps - 1/(t-eps)
              - 1/(2eps-t)) on (eps, 2eps) (peak value 1 at 1.5 eps), zero
              outside, so the modified flow has compact support inside the
              tube { eps < t < 2eps }. Points outside the representable
              (x, y) region are zero-extended; make_cutoff_spec refuses
              configurations where the 2eps level set is not strictly
              contained in the representable region.

   beltrami   u~ = (1/6) t^{-5/6} u, a constant-rescaled version of the
              pressure-power modification; with psi = t^{1/6} and
              chi = (1/6) t^{-5/6} h the field decomposes as
              u~ = a x grad(psi) + chi a and satisfies curl u~ = lambda u~
              with lambda = (5/6) h/t - h' = -d(chi)/d(psi).

   reference  a = xi/|xi|^2 for the helical Killing field
              xi = rho e_phi + k e_z; divergence-free with
              curl a = 2k |xi|^{-2} a.

 The cutoff pressure P(t) is built once per CutoffSpec as a dense uniform
 table over [eps, 2eps] carrying exact first and second derivatives at the
 nodes (P' = omega^2/(1+k^2), P'' = 2 omega omega'/(1+k^2)) and evaluated by
 quintic Hermite interpolation — the bump is extremely narrow (scale
 sqrt(eps^3/32), about 5.6e-6 at eps = 1e-3), so interpolation quality here
 directly limits finite-difference convergence of the momentum residuals.
================================================================================
*/

#include "helix/map2d.hpp"

#include <array>
#include <vector>

namespace helix {

struct FlowSample {
    double rho = 0, phi = 0, z = 0;
    double u_rho = 0, u_z = 0, u_phi = 0;  // components in the (e_rho, e_z, e_phi) frame
    double p = 0;
    double t = 0;
    bool in_support = false;
};

struct CutoffSpec {
    double eps = 1e-3;
    double k = 1.0;
    double p_plateau = 0.0;          // P(2 eps): the constant pressure outside
    double t_table_step = 0.0;
    std::vector<double> table_P;     // values at eps + i*step, i = 0..n
    std::vector<double> table_Pp;    // exact omega^2/(1+k^2) at the nodes
    std::vector<double> table_Ppp;   // exact 2*omega*omega'/(1+k^2)

    double omega(double t) const;        // the bump itself
    double omega_prime(double t) const;  // d(omega)/dt
    double pressure(double t) const;     // P(t), monotone, P(0) = 0
};

struct BeltramiSample {
    double rho = 0, phi = 0, z = 0;
    double u_rho = 0, u_z = 0, u_phi = 0;
    double t = 0;
    double psi = 0;      // t^{1/6}
    double chi = 0;      // (1/6) t^{-5/6} h(t)
    double lambda = 0;   // analytic candidate (5/6) h/t - h' = -dchi/dpsi
    double p_tilde = 0;  // -(1/2)|u~|^2 = -(1/(24(1+k^2))) t^{-2/3}
};

// Raw helical Euler flow. Throws (domain_error / out_of_range, from the map)
// when (rho, z - k*phi) leaves the representable region.
FlowSample sample_raw(double rho, double phi, double z, const CrossSectionMap& map);

// Builds the bump/pressure table and asserts support containment: 2 eps must
// sit below the map ceiling and below t_min at both band edges, so that every
// point outside the representable region provably has t > 2 eps.
// Violations throw std::invalid_argument.
CutoffSpec make_cutoff_spec(const CrossSectionMap& map, double eps);

// Compactly supported modification; total on all of space (zero-extended
// outside the representable region, which the spec construction guarantees
// lies beyond the support).
FlowSample sample_cutoff(double rho, double phi, double z, const CrossSectionMap& map,
                         const CutoffSpec& cutoff);

// Beltrami modification; throws std::domain_error at t <= t_floor.
BeltramiSample sample_beltrami(double rho, double phi, double z, const CrossSectionMap& map,
                               double t_floor = 1e-6);

// a = xi/|xi|^2 in the (e_rho, e_z, e_phi) component ordering; rho <= 0 is a
// domain error.
std::array<double, 3> reference_field_a(double k, double rho);

} // namespace helix
