// io.hpp - run configuration, dataset products, figure pipelines

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "phasespec/params.hpp"

namespace phasespec {

struct GridConfig {
    double omega_min{0.0};       // ignored while omega_defaulted
    double omega_max{0.0};
    double omega_step{0.25};
    double t_max{4.0};
    double t_step{0.05};
    bool omega_defaulted{true};  // axis follows the line positions: +-(omega12/gamma + 15)
};

struct RunConfig {
    SystemParams params;
    GridConfig grid;
    std::vector<std::string> products;  // spectrum populations concurrence holes esd steady
    std::string out_dir{"."};
    std::string prefix{"run"};
    double quadrature_step{0.0};        // 0 = derived from t_step and gamma_d
    bool convergence_check{false};
};

RunConfig parse_config_file(const std::filesystem::path& path);
RunConfig parse_config_text(const std::string& text);
std::string config_to_json(const RunConfig& cfg);  // regenerates the run byte-identically

std::vector<double> omega_axis(const RunConfig& cfg);
std::vector<double> time_axis(const GridConfig& grid);

// Computes the requested products and writes <prefix>_<product>.csv plus a
// <prefix>_meta.json sidecar into out_dir. Returns the written file names.
std::vector<std::string> run_scan(const RunConfig& cfg);

// Canonical dataset for one figure id (fig2..fig9) into out_dir.
std::vector<std::string> reproduce_figure(const std::string& id,
                                          const std::filesystem::path& out_dir);

// Dispatch for the simulate entry point: a config carrying a "figure" key
// runs the named preset (honoring only out_dir), anything else is a plain
// scan config.
std::vector<std::string> run_config_file(const std::filesystem::path& path);

// Fast oracle-equivalence sweep; prints one line per check, returns the
// number of failures.
int selftest(std::ostream& os);

} // namespace phasespec
