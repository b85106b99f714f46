#pragma once
/*
================================================================================
 verify.hpp — quantitative verification suites
--------------------------------------------------------------------------------
 Every checkable structural claim about the constructed flow gets a residual
 suite producing a ResidualReport:

   reduced     analytic residuals of the invariant-plane system: the G
               definition, both transport equations (using the exact
               t-derivative chain t_x = F, t_y^2 = G, t_yy = G_t/2), the
               conservation form G_x + F G_t - 2 G F_t, and the linear radial
               relation that F satisfies for any profile pair.

   fd          central-difference divergence and momentum residuals of the
               3D field (raw or cutoff) in cylindrical coordinates, run at
               stencil strides 1 and 2 over a shared grid interior so the
               stride-2/stride-1 max ratio isolates the h^2 convergence
               order (expected ratio 4).

   beltrami_gs alignment of curl u~ with u~ for the Beltrami variant
               (4th-order stencils at two spacings), consistency of the
               measured proportionality lambda with the analytic candidate,
               and the helical Grad-Shafranov residual for psi = t^{1/6}
               (with its exact axisymmetric reduction at k = 0).

   identities  the vector-calculus identities used by the construction,
               checked on seeded random polynomial fields with symbolic
               derivatives (no FD error), plus the closed-form Killing-field
               identity xi x curl xi = grad |xi|^2.

   asymptotic  the quadratic leading term of t near the helix, exact
               y-evenness, and the branch (s > 0 vs s < 0) comparison.

 Reports follow: passed == (max_residual <= tolerance AND skipped points
 within 20% of the total). Secondary gates (convergence-ratio windows,
 stability factors) set max_residual to a sentinel with an explanatory note
 when violated, so the pass flag always matches the reported numbers.
================================================================================
*/

#include "helix/field.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace helix {

struct ResidualReport {
    std::string suite;
    std::string grid;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::size_t skipped_points = 0;
    std::size_t total_points = 0;
    std::string notes;
};

// Stamps passed from the reported numbers (the only way passed is ever set).
void finalize_report(ResidualReport& r);

// --------------------------------------------------------------- reduced ---

// Deterministic (x, t) samples: nx radii across |x-1| <= x_halfwidth, nt
// stream values per radius in [max(t_floor, 1.02 * t_min(x)), t_hi] — the
// per-radius floor keeps every sample admissible, so nothing is skipped.
std::vector<std::array<double, 2>> reduced_sample_grid(const CrossSectionMap& map,
                                                       std::size_t nx, std::size_t nt,
                                                       double x_halfwidth = 0.05,
                                                       double t_floor = 1e-4,
                                                       double t_hi = 1e-2);

ResidualReport reduced_euler_residuals(const CrossSectionMap& map,
                                       std::span<const std::array<double, 2>> samples,
                                       double tol = 1e-8);

// -------------------------------------------------------------------- fd ---

struct Grid3 {
    double rho0 = 0, rho1 = 0;
    double phi0 = 0, phi1 = 0;
    double z0 = 0, z1 = 0;
    std::size_t n_rho = 0, n_phi = 0, n_z = 0;
};

enum class FieldVariant { raw, cutoff };

struct FdConvergence {
    // Residual types: 0 div, 1 momentum-rho, 2 momentum-z, 3 momentum-phi.
    std::array<double, 4> max_fine{};
    std::array<double, 4> max_coarse{};
    std::array<double, 4> ratio{};     // coarse/fine; ~4 at second order
    double mean_fine = 0.0;
    double max_u_dot_grad_p = 0.0;     // Bernoulli diagnostic (stride 1)
    std::size_t interior_points = 0;
    std::size_t skipped = 0;
};

FdConvergence fd_euler_convergence(const CrossSectionMap& map, FieldVariant variant,
                                   const CutoffSpec* cutoff, const Grid3& grid);

ResidualReport cylindrical_fd_residuals(const CrossSectionMap& map, FieldVariant variant,
                                        const CutoffSpec* cutoff, const Grid3& grid,
                                        double tol, double ratio_lo = 3.2,
                                        double ratio_hi = 4.8);

// Default magnitude tolerances for the FD suite reports. The convergence
// ratios, not these magnitudes, are the structural gate; the magnitudes are
// pinned from measured runs on the standard grids with a ~5x margin
// (raw max ~1.9e-5 on the 64^3 box, cutoff max ~3.4e-3 on the anisotropic
// shell grid — the cutoff bump is orders of magnitude stiffer).
inline constexpr double kRawFdTolerance = 1e-4;
inline constexpr double kCutoffFdTolerance = 2e-2;

// 64^3 box around a helix arc, comfortably inside the representable region.
Grid3 standard_raw_fd_grid();

// Narrow anisotropic box straddling the cutoff support shell near phi = 0.
// The bump is extremely sharp in t, so the stencil spacings must resolve its
// per-axis scales (sigma_y ~ 1.5e-4, sigma_rho ~ 3e-4 at eps = 1e-3) before
// the second-order convergence regime is reachable at all.
Grid3 standard_cutoff_fd_grid(const CrossSectionMap& map, const CutoffSpec& cutoff);

// Coarse wide box (>= 1e5 points) for the support-containment census.
Grid3 standard_cutoff_containment_grid();

struct ContainmentOutcome {
    std::size_t checked = 0;
    std::size_t in_support = 0;   // points with nonzero velocity
    std::size_t violations = 0;   // nonzero velocity outside eps < t < 2 eps
};

ContainmentOutcome cutoff_containment(const CrossSectionMap& map, const CutoffSpec& cutoff,
                                      const Grid3& grid);

// ----------------------------------------------------------- beltrami/gs ---

struct BeltramiGsOutcome {
    double align_max = 0.0;        // at the requested spacing
    double align_max_half = 0.0;   // at half spacing (expect >= 8x smaller)
    double improvement = 0.0;      // align_max / align_max_half
    double lambda_err_max = 0.0;   // relative FD-vs-analytic mismatch
    double lambda_spread = 0.0;    // FD lambda variation along one t level set
    double gs_max = 0.0;           // helical Grad-Shafranov residual
    double gs_mean = 0.0;
    double gs_k0_gap = 0.0;        // k = 0 only: |Eq20 - Eq21| term comparison
    bool k0_compared = false;
    std::size_t points = 0;
    std::size_t skipped = 0;
};

BeltramiGsOutcome beltrami_gs_outcome(const CrossSectionMap& map, double spacing = 1e-3,
                                      double t_floor = 1e-6);

ResidualReport beltrami_gs_residuals(const CrossSectionMap& map, double tol_align = 1e-4,
                                     double tol_gs = 1e-6);

// ------------------------------------------------------------ identities ---

struct IdentityOutcome {
    double gradsq_max = 0.0;    // (1/2) grad |u|^2 = u x curl u + (u.grad) u
    double curl_cross_max = 0.0;// curl(A x B) = (div B)A - (div A)B - [A,B]
    double killing_max = 0.0;   // xi x curl xi = grad |xi|^2, closed form
    std::size_t pairs = 0;
};

IdentityOutcome vector_identity_outcome(unsigned seed, std::size_t pairs, double k);

ResidualReport vector_identity_residuals(unsigned seed, std::size_t pairs, double k,
                                         double tol = 1e-12);

// ------------------------------------------------------------ asymptotic ---

struct AsymptoticOutcome {
    std::array<double, 3> radii{1e-3, 3e-3, 1e-2};
    std::array<double, 3> c_plus{};   // max |t - q| / r^3 on circles, + branch
    std::array<double, 3> c_minus{};  // and - branch
    double variation = 0.0;           // max/min over the six constants
    double evenness_max = 0.0;        // t(x, y) vs t(x, -y); 0 by construction
    double branch_gap_min = 0.0;      // min |t+ - t-| off the y = 0 axis
    double branch_gap_max = 0.0;
};

AsymptoticOutcome asymptotic_outcome(const CrossSectionMap& plus, const CrossSectionMap& minus);

ResidualReport asymptotic_and_symmetry_check(const CrossSectionMap& plus,
                                             const CrossSectionMap& minus);

// -------------------------------------------- series / ode (CLI extras) ---

// Exact rational fidelity of the low-order expansion at k in {0, 1/2, 1, 2}:
// published low-order values, prefix stability under order growth, and
// float-evaluation agreement with the exact evaluation.
ResidualReport series_suite();

// Series/continuation overlap on t in [1e-6, 4e-6] for k in {0, 0.5, 1, 2},
// plus the k = 0 circle-limit equation over t in [1e-4, 1e-2].
ResidualReport ode_overlap_suite(double tol = 1e-8);

} // namespace helix
