#pragma once
/*
================================================================================
 io.hpp — grid/run configuration, field export, verification-report files
--------------------------------------------------------------------------------
 Exports are deliberately dumb and deterministic:

   CSV   header `rho,phi,z,u_rho,u_z,u_phi,p,t,in_support`, one row per grid
         point in row-major (rho, phi, z) order, 17 significant digits, the
         support flag as 0/1. Velocity stays in the cylindrical frame.

   VTK   legacy ASCII structured grid; points and the `velocity` vector
         attribute are converted to Cartesian components for display tools,
         scalars `pressure` and `t` ride along unchanged. The fastest-varying
         export axis (z) maps to the fastest-varying VTK dimension.

   JSON  verification report: { "config": {...}, "suites": [ResidualReport...],
         "overall_passed": bool }. Reports round-trip: reading a written file
         reproduces every suite's pass/fail decision.

 Exporters refuse to emit non-finite values: the first offending sample
 aborts the export with a point diagnosis (the CLI maps this to exit 3).
================================================================================
*/

#include "helix/field.hpp"
#include "helix/verify.hpp"

#include <span>
#include <string>
#include <vector>

namespace helix {

struct GridSpec {
    std::size_t n_rho = 16, n_phi = 16, n_z = 16;
    double rho0 = 0.97, rho1 = 1.03;
    double phi0 = -0.02, phi1 = 0.02;
    double z0 = 0.04, z1 = 0.10;

    void validate() const;
    std::size_t count() const { return n_rho * n_phi * n_z; }
};

struct RunConfig {
    HelixConfig helix;
    std::string subcommand;       // series | profile | field | verify
    GridSpec grid;
    std::string variant = "raw";  // raw | cutoff | beltrami
    std::string suite = "all";
    std::string output;
    std::string format = "csv";   // csv | vtk
    std::string report_path;
    double t_max = 0.2;
    int order = 12;
    bool exact = false;
    unsigned seed = 1234;
};

// Writes the sample set (row-major over grid) as CSV or VTK.
// Throws std::invalid_argument on a format/count mismatch,
// std::runtime_error on non-finite samples or unwritable paths.
void export_samples(std::span<const FlowSample> samples, const GridSpec& grid,
                    const std::string& format, const std::string& path);

// JSON report writer/reader.
void write_report(std::span<const ResidualReport> suites, const RunConfig& config,
                  const std::string& path);

struct ReportFile {
    std::vector<ResidualReport> suites;
    bool overall_passed = false;
};
ReportFile read_report(const std::string& path);

} // namespace helix
