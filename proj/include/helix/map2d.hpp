#pragma once
/*
================================================================================
 map2d.hpp — the (x, y) <-> (x, t) coordinate change of the cross-section
--------------------------------------------------------------------------------
 For each radius x near 1 the stream value t lives on [t_min(x), t_ceiling]:

   t_min(x)   smallest root of G(x, .) with dG/dt > 0 (G < 0 below it);
              t_min(1) = 0 and t_min(1+X) ~ X^2/2 for small X.

   y_from_t   y(x,t) = Integral_{t_min}^{t} dtau / sqrt(G(x,tau)); the
              square-root endpoint zero is removed by tau = t_min + sigma^2.

   t_from_y   the monotone inverse, extended evenly to y < 0. Implemented by
              integrating the transverse ray ODE  t'' = G_t(x, t)/2  in y from
              (t_min, 0) once per distinct x (cached), with quintic Hermite
              dense output between accepted nodes. On the helix itself the
              curvature seed is the closed-form limit G_t(1, 0) = 2/(1+k^2).

 CrossSectionMap bundles the profile curve, the representable band
 x in [1-dx, 1+dx], the ceiling t_ceiling = min(0.9*t_cap, 0.02), and the
 lazily built per-x ray cache. Ray construction is deterministic; the cache
 is not synchronized (single-threaded usage).
================================================================================
*/

#include "helix/curve.hpp"
#include "helix/section.hpp"

#include <map>
#include <vector>

namespace helix {

class CrossSectionMap {
public:
    explicit CrossSectionMap(ProfileCurve curve, double band_halfwidth = 0.1,
                             double quad_tol = 1e-13);

    const ProfileCurve& curve() const { return curve_; }
    double k() const { return curve_.k; }
    int branch() const { return curve_.branch; }
    double x_min() const { return 1.0 - band_; }
    double x_max() const { return 1.0 + band_; }
    double t_ceiling() const { return t_hi_; }

    // Smallest admissible stream value at radius x (bracketing + root refine).
    double t_min_of(double x) const;

    // Regularized quadrature; y >= 0, strictly increasing in t.
    double y_from_t(double x, double t) const;

    // Even extension of the inverse map; throws std::out_of_range when |y|
    // exceeds the image of t_ceiling at this radius.
    double t_from_y(double x, double y) const;

    // Largest |y| representable at radius x.
    double y_extent(double x) const;

    bool in_domain(double x, double t) const;

private:
    struct RayNode {
        double y, t, v, a;  // v = dt/dy, a = d2t/dy2 = G_t/2 (exact at nodes)
    };
    struct Ray {
        double t_min = 0.0;
        double y_max = 0.0;
        std::vector<RayNode> nodes;
    };

    const Ray& ray_for(double x) const;
    Ray build_ray(double x) const;
    void require_in_band(double x) const;

    ProfileCurve curve_;
    double band_;
    double t_hi_;
    double quad_tol_;
    double ode_tol_ = 1e-12;
    mutable std::map<double, Ray> rays_;
};

// Standard construction chain (used by the CLI and the suites): order-12
// expansion, handoff at |s| = 1e-3, continuation toward t_max (capped early
// near the singularity), default band halfwidth.
CrossSectionMap make_standard_map(const HelixConfig& config, double t_max = 0.2);

} // namespace helix
