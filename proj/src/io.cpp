#include "helix/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace helix {
namespace {

std::string full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void require_finite(const FlowSample& s) {
    for (double v : {s.rho, s.phi, s.z, s.u_rho, s.u_z, s.u_phi, s.p, s.t}) {
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "non-finite sample at rho=" << s.rho << " phi=" << s.phi << " z=" << s.z;
            throw std::runtime_error(os.str());
        }
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

void write_csv(std::span<const FlowSample> samples, std::ostream& out) {
    out << "rho,phi,z,u_rho,u_z,u_phi,p,t,in_support\n";
    for (const FlowSample& s : samples) {
        out << full(s.rho) << ',' << full(s.phi) << ',' << full(s.z) << ',' << full(s.u_rho)
            << ',' << full(s.u_z) << ',' << full(s.u_phi) << ',' << full(s.p) << ','
            << full(s.t) << ',' << (s.in_support ? 1 : 0) << '\n';
    }
}

void write_vtk(std::span<const FlowSample> samples, const GridSpec& grid, std::ostream& out) {
    out << "# vtk DataFile Version 3.0\n";
    out << "helical flow field\n";
    out << "ASCII\n";
    out << "DATASET STRUCTURED_GRID\n";
    // Export order is row-major (rho, phi, z): z varies fastest, matching the
    // fastest-varying (first) VTK dimension.
    out << "DIMENSIONS " << grid.n_z << ' ' << grid.n_phi << ' ' << grid.n_rho << '\n';
    out << "POINTS " << samples.size() << " double\n";
    for (const FlowSample& s : samples) {
        const double cx = s.rho * std::cos(s.phi);
        const double cy = s.rho * std::sin(s.phi);
        out << full(cx) << ' ' << full(cy) << ' ' << full(s.z) << '\n';
    }
    out << "POINT_DATA " << samples.size() << '\n';
    out << "VECTORS velocity double\n";
    for (const FlowSample& s : samples) {
        const double cphi = std::cos(s.phi), sphi = std::sin(s.phi);
        const double ux = s.u_rho * cphi - s.u_phi * sphi;
        const double uy = s.u_rho * sphi + s.u_phi * cphi;
        out << full(ux) << ' ' << full(uy) << ' ' << full(s.u_z) << '\n';
    }
    out << "SCALARS pressure double 1\nLOOKUP_TABLE default\n";
    for (const FlowSample& s : samples) out << full(s.p) << '\n';
    out << "SCALARS t double 1\nLOOKUP_TABLE default\n";
    for (const FlowSample& s : samples) out << full(s.t) << '\n';
}

} // namespace

void GridSpec::validate() const {
    if (n_rho < 2 || n_phi < 2 || n_z < 2)
        throw std::invalid_argument("grid needs at least 2 points per axis");
    if (!(rho0 < rho1) || !(phi0 < phi1) || !(z0 < z1))
        throw std::invalid_argument("grid extents must be non-degenerate");
    if (!(rho0 > 0.0)) throw std::invalid_argument("grid must satisfy rho > 0");
}

void export_samples(std::span<const FlowSample> samples, const GridSpec& grid,
                    const std::string& format, const std::string& path) {
    grid.validate();
    if (samples.size() != grid.count())
        throw std::invalid_argument("sample count does not match the grid");
    for (const FlowSample& s : samples) require_finite(s);

    std::ofstream out = open_out(path);
    if (format == "csv") {
        write_csv(samples, out);
    } else if (format == "vtk") {
        write_vtk(samples, grid, out);
    } else {
        throw std::invalid_argument("unknown export format: " + format);
    }
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_report(std::span<const ResidualReport> suites, const RunConfig& config,
                  const std::string& path) {
    nlohmann::json j;
    j["config"] = {
        {"k", config.helix.k},           {"branch", config.helix.branch},
        {"eps", config.helix.eps},       {"tol", config.helix.tol},
        {"ode_tol", config.helix.ode_tol}, {"subcommand", config.subcommand},
        {"variant", config.variant},     {"suite", config.suite},
        {"seed", config.seed},
    };
    bool overall = true;
    j["suites"] = nlohmann::json::array();
    for (const ResidualReport& r : suites) {
        j["suites"].push_back({
            {"suite", r.suite},
            {"grid", r.grid},
            {"max_residual", r.max_residual},
            {"mean_residual", r.mean_residual},
            {"tolerance", r.tolerance},
            {"passed", r.passed},
            {"skipped_points", r.skipped_points},
            {"total_points", r.total_points},
            {"notes", r.notes},
        });
        overall = overall && r.passed;
    }
    j["overall_passed"] = overall;

    std::ofstream out = open_out(path);
    out << j.dump(2) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

ReportFile read_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open report: " + path);
    nlohmann::json j;
    in >> j;

    ReportFile file;
    file.overall_passed = j.at("overall_passed").get<bool>();
    for (const auto& s : j.at("suites")) {
        ResidualReport r;
        r.suite = s.at("suite").get<std::string>();
        r.grid = s.value("grid", std::string{});
        r.max_residual = s.at("max_residual").get<double>();
        r.mean_residual = s.at("mean_residual").get<double>();
        r.tolerance = s.at("tolerance").get<double>();
        r.passed = s.at("passed").get<bool>();
        r.skipped_points = s.at("skipped_points").get<std::size_t>();
        r.total_points = s.value("total_points", std::size_t{0});
        r.notes = s.value("notes", std::string{});
        file.suites.push_back(std::move(r));
    }
    return file;
}

} // namespace helix
