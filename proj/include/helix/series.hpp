#pragma once
/*
================================================================================
 series.hpp — square-root series solution of the singular profile problem
--------------------------------------------------------------------------------
 The profile functions h(t), c(t) of the helical flow satisfy a first-order
 ODE system whose right-hand side degenerates at t = 0 (the initial condition
 h(0)=0, c(0)=1 sits exactly on the zero set of the denominator). The system
 nevertheless has a solution analytic in s = ±sqrt(t):

     h = a1*s + a2*s^2 + ...        c = 1 + c1*s + c2*s^2 + ...

 Substituting the expansions into the denominator-cleared equations

     h'(s) * 2*(1+k^2) * D  =  2s * [(k^2+c)*S + 6t*(1+k^2)*(k*h + 6t)]
     c'(s) *              D =  2s * [k*S + 6t*(1+k^2)*h]
     S = h^2*(1+k^2) - 3t*(c + k^2),    D = h*S + 18*k*t^2,    t = s^2

 forces a1^2 = 1 at leading order (we normalize a1 = +1; the a1 = -1 family
 is the relabeling s -> -s) and c1 = 2k at the next order. For every n >= 2
 the pair (a_n, c_n) solves a 2x2 linear system read off from the s^(n+2)
 coefficients of the two cleared equations; the system is probed affinely
 (coefficients are affine in the unknowns), so the expansion needs nothing
 beyond truncated polynomial arithmetic.

 Coefficients are exact rationals when k is given as a rational, plain
 doubles otherwise.
================================================================================
*/

#include "helix/rational.hpp"

#include <span>
#include <vector>

namespace helix {

struct SeriesPair {
    Rational k;        // slope (meaningful when exact == true)
    double   k_value = 0.0;
    int      order   = 0;  // truncation order N: coefficients 0..N
    bool     exact   = false;
    std::vector<Rational> h_coeffs;  // a_0..a_N (empty in float mode)
    std::vector<Rational> c_coeffs;  // c_0..c_N (empty in float mode)
    std::vector<double>   h_dbl;     // same coefficients as doubles
    std::vector<double>   c_dbl;
};

struct SeriesEval {
    double h, c, S;
};

// Exact-rational expansion (bit-for-bit comparable coefficients).
SeriesPair expand_profile_series(const Rational& k, int order);

// Floating expansion (same recurrence carried out in double arithmetic).
SeriesPair expand_profile_series(double k, int order);

// Horner evaluation of the truncated series at signed abscissa s; S from its
// definition with t = s^2.
SeriesEval eval_profile_series(const SeriesPair& series, double s);

// Exact evaluation (only valid for exact series); for oracle tests.
void eval_profile_series_exact(const SeriesPair& series, const Rational& s,
                               Rational& h_out, Rational& c_out, Rational& S_out);

// Maximum absolute residual of the two denominator-cleared equations over the
// samples, evaluated with the truncated series. Scales like s^N near 0.
double series_ode_residual(double k, const SeriesPair& series,
                           std::span<const double> s_samples);

} // namespace helix
