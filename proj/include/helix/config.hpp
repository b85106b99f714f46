#pragma once
/*
================================================================================
 config.hpp — run-wide parameters for the helical-flow construction
--------------------------------------------------------------------------------
 One small aggregate shared by every stage of the pipeline:

   k       slope of the supporting helix (rho = 1, z = k*phi); k >= 0.
           k = 0 degenerates the helix into the unit circle.
   branch  sign of the square-root abscissa s = branch * sqrt(t) used by the
           profile series; the two signs give two genuinely different flows
           when k > 0 and the same flow when k = 0.
   eps     cutoff window parameter: the compact-support modification is
           carried by a bump supported on t in (eps, 2*eps).
   tol     verification tolerance (thresholds for residual suites).
   ode_tol integrator tolerance (much tighter than tol: several residual
           checks are algebra-limited and need the profile solution to be
           accurate to ~1e-12).
================================================================================
*/

#include <stdexcept>

namespace helix {

struct HelixConfig {
    double k       = 1.0;
    int    branch  = +1;
    double eps     = 1e-3;
    double tol     = 1e-8;
    double ode_tol = 1e-12;

    void validate() const {
        if (k < 0.0)
            throw std::invalid_argument("HelixConfig: k must be >= 0");
        if (branch != +1 && branch != -1)
            throw std::invalid_argument("HelixConfig: branch must be +1 or -1");
        if (!(eps > 0.0))
            throw std::invalid_argument("HelixConfig: eps must be > 0");
        if (!(tol > 0.0) || !(ode_tol > 0.0))
            throw std::invalid_argument("HelixConfig: tolerances must be > 0");
    }
};

} // namespace helix
