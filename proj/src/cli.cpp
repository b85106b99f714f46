#include "helix/cli.hpp"
#include "helix/io.hpp"
#include "helix/rational.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>

namespace helix {
namespace {

int parse_branch(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1") return +1;
    if (s == "-" || s == "-1") return -1;
    throw CLI::ValidationError("--branch", "expected + or -");
}

void print_series_exact(const SeriesPair& sp) {
    for (int n = 0; n <= sp.order; ++n)
        std::printf("%d %s %s\n", n, to_fraction_string(sp.h_coeffs[n]).c_str(),
                    to_fraction_string(sp.c_coeffs[n]).c_str());
}

void print_series_float(const SeriesPair& sp) {
    for (int n = 0; n <= sp.order; ++n)
        std::printf("%d %.17g %.17g\n", n, sp.h_dbl[n], sp.c_dbl[n]);
}

int cmd_series(const std::string& k_str, int order, bool exact) {
    if (exact) {
        print_series_exact(expand_profile_series(rational_from_string(k_str), order));
    } else {
        print_series_float(expand_profile_series(std::stod(k_str), order));
    }
    return 0;
}

int cmd_profile(const RunConfig& rc) {
    const SeriesPair series = expand_profile_series(rc.helix.k, rc.order);
    const double s0 = (rc.helix.branch > 0 ? 1.0 : -1.0) * 1e-3;
    const ProfileCurve curve = continue_profile(rc.helix, series, s0, rc.t_max);

    std::printf("# k=%.17g branch=%+d t_start=%.17g t_cap=%.17g nodes=%zu stop=\"%s\"\n",
                curve.k, curve.branch, curve.t_start, curve.t_cap, curve.nodes.size(),
                curve.cap_reason.c_str());
    std::printf("t h c S\n");
    const int rows = 25;
    for (int i = 0; i <= rows; ++i) {
        const double t =
            curve.t_start + (curve.t_cap - curve.t_start) * static_cast<double>(i) / rows;
        const ProfileValues v = profile_at(curve, t);
        std::printf("%.17g %.17g %.17g %.17g\n", t, v.h, v.c, v.S);
    }
    return 0;
}

int cmd_field(const RunConfig& rc) {
    rc.grid.validate();
    const CrossSectionMap map = make_standard_map(rc.helix, rc.t_max);

    const GridSpec& g = rc.grid;
    const double dr = (g.rho1 - g.rho0) / static_cast<double>(g.n_rho - 1);
    const double dp = (g.phi1 - g.phi0) / static_cast<double>(g.n_phi - 1);
    const double dz = (g.z1 - g.z0) / static_cast<double>(g.n_z - 1);

    CutoffSpec cutoff;
    if (rc.variant == "cutoff") cutoff = make_cutoff_spec(map, rc.helix.eps);

    std::vector<FlowSample> samples;
    samples.reserve(g.count());
    for (std::size_t i = 0; i < g.n_rho; ++i) {
        const double rho = g.rho0 + static_cast<double>(i) * dr;
        for (std::size_t j = 0; j < g.n_phi; ++j) {
            const double phi = g.phi0 + static_cast<double>(j) * dp;
            for (std::size_t l = 0; l < g.n_z; ++l) {
                const double z = g.z0 + static_cast<double>(l) * dz;
                if (rc.variant == "raw") {
                    samples.push_back(sample_raw(rho, phi, z, map));
                } else if (rc.variant == "cutoff") {
                    samples.push_back(sample_cutoff(rho, phi, z, map, cutoff));
                } else {
                    const BeltramiSample b = sample_beltrami(rho, phi, z, map);
                    FlowSample s;
                    s.rho = b.rho;
                    s.phi = b.phi;
                    s.z = b.z;
                    s.u_rho = b.u_rho;
                    s.u_z = b.u_z;
                    s.u_phi = b.u_phi;
                    s.p = b.p_tilde;
                    s.t = b.t;
                    s.in_support = true;
                    samples.push_back(s);
                }
            }
        }
    }
    export_samples(samples, g, rc.format, rc.output);
    return 0;
}

int cmd_verify(const RunConfig& rc) {
    std::vector<ResidualReport> reports;
    const bool all = rc.suite == "all";

    // Maps are built lazily: the identity suite, for instance, needs none.
    std::unique_ptr<CrossSectionMap> map;
    auto the_map = [&]() -> const CrossSectionMap& {
        if (!map) map = std::make_unique<CrossSectionMap>(make_standard_map(rc.helix));
        return *map;
    };

    if (all || rc.suite == "reduced") {
        const auto samples = reduced_sample_grid(the_map(), 40, 25);
        reports.push_back(reduced_euler_residuals(the_map(), samples, rc.helix.tol));
    }
    if (all || rc.suite == "fd") {
        reports.push_back(cylindrical_fd_residuals(the_map(), FieldVariant::raw, nullptr,
                                                   standard_raw_fd_grid(), kRawFdTolerance));
    }
    if (all || rc.suite == "beltrami" || rc.suite == "gs") {
        reports.push_back(beltrami_gs_residuals(the_map()));
    }
    if (all || rc.suite == "identities") {
        reports.push_back(vector_identity_residuals(rc.seed, 100, rc.helix.k));
    }
    if (all || rc.suite == "asymptotic") {
        HelixConfig plus = rc.helix, minus = rc.helix;
        plus.branch = +1;
        minus.branch = -1;
        reports.push_back(
            asymptotic_and_symmetry_check(make_standard_map(plus), make_standard_map(minus)));
    }
    if (rc.suite == "series") reports.push_back(series_suite());
    if (rc.suite == "ode") reports.push_back(ode_overlap_suite(rc.helix.tol));

    bool ok = true;
    for (const ResidualReport& r : reports) {
        ok = ok && r.passed;
        std::printf("%-12s %s  max %.6g (tol %.6g)  mean %.6g  skipped %zu/%zu  %s\n",
                    r.suite.c_str(), r.passed ? "PASS" : "FAIL", r.max_residual, r.tolerance,
                    r.mean_residual, r.skipped_points, r.total_points, r.notes.c_str());
    }
    if (!rc.report_path.empty()) write_report(reports, rc, rc.report_path);
    return ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"helical Euler flow toolkit"};
    app.require_subcommand(1);

    RunConfig rc;
    std::string k_str = "1";
    std::string branch_str = "+";
    std::vector<std::size_t> grid_counts;
    std::vector<double> extent;

    CLI::App* series = app.add_subcommand("series", "print expansion coefficients");
    series->add_option("--k", k_str, "helix slope (fraction allowed with --exact)");
    series->add_option("--order", rc.order, "truncation order")->check(CLI::PositiveNumber);
    series->add_flag("--exact", rc.exact, "exact rational coefficients");

    CLI::App* profile = app.add_subcommand("profile", "continue the profile functions");
    profile->add_option("--k", rc.helix.k, "helix slope");
    profile->add_option("--branch", branch_str, "series branch sign (+ or -)");
    profile->add_option("--t-max", rc.t_max, "requested continuation endpoint");

    CLI::App* field = app.add_subcommand("field", "sample a velocity field on a grid");
    field->add_option("--k", rc.helix.k, "helix slope");
    field->add_option("--branch", branch_str, "series branch sign (+ or -)");
    field->add_option("--variant", rc.variant, "raw | cutoff | beltrami")
        ->check(CLI::IsMember({"raw", "cutoff", "beltrami"}));
    field->add_option("--eps", rc.helix.eps, "cutoff window start");
    field->add_option("--grid", grid_counts, "counts NR,NP,NZ")->delimiter(',')->expected(3);
    field->add_option("--extent", extent, "rho0,rho1,phi0,phi1,z0,z1")
        ->delimiter(',')
        ->expected(6);
    field->add_option("--output", rc.output, "output path")->required();
    field->add_option("--format", rc.format, "csv | vtk")
        ->check(CLI::IsMember({"csv", "vtk"}));

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--k", rc.helix.k, "helix slope");
    verify->add_option("--branch", branch_str, "series branch sign (+ or -)");
    verify->add_option("--suite", rc.suite, "suite selector")
        ->check(CLI::IsMember({"all", "series", "ode", "reduced", "fd", "beltrami", "gs",
                               "identities", "asymptotic"}));
    verify->add_option("--tol", rc.helix.tol, "tolerance for the analytic suites");
    verify->add_option("--eps", rc.helix.eps, "cutoff window start");
    verify->add_option("--seed", rc.seed, "seed for the identity suite");
    verify->add_option("--report", rc.report_path, "write a JSON report here");

    std::vector<std::string> tokens(args.rbegin(), args.rend());
    try {
        app.parse(tokens);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        rc.helix.branch = parse_branch(branch_str);
        if (series->parsed()) {
            // Surface malformed --k values as usage errors, not numeric ones.
            if (rc.exact)
                (void)rational_from_string(k_str);
            else
                (void)std::stod(k_str);
        }
        if (grid_counts.size() == 3) {
            rc.grid.n_rho = grid_counts[0];
            rc.grid.n_phi = grid_counts[1];
            rc.grid.n_z = grid_counts[2];
        }
        if (extent.size() == 6) {
            rc.grid.rho0 = extent[0];
            rc.grid.rho1 = extent[1];
            rc.grid.phi0 = extent[2];
            rc.grid.phi1 = extent[3];
            rc.grid.z0 = extent[4];
            rc.grid.z1 = extent[5];
        }
        rc.helix.validate();
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    }

    try {
        if (series->parsed()) {
            rc.subcommand = "series";
            return cmd_series(k_str, rc.order, rc.exact);
        }
        if (profile->parsed()) {
            rc.subcommand = "profile";
            return cmd_profile(rc);
        }
        if (field->parsed()) {
            rc.subcommand = "field";
            return cmd_field(rc);
        }
        rc.subcommand = "verify";
        return cmd_verify(rc);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}

} // namespace helix
