// phasespec - command line front end
//
//   phasespec simulate --config run.json
//   phasespec figure fig3 --out datasets/
//   phasespec selftest
//
// exit codes: 0 success, 1 configuration/validation error, 2 quadrature
// convergence failure.

#include <iostream>

#include <CLI11.hpp>

#include "phasespec/io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"transient spectra and entanglement of a driven-by-noise atom pair"};
    app.require_subcommand(1);

    std::string config_path;
    auto* simulate = app.add_subcommand("simulate", "run the products requested by a config file");
    simulate->add_option("--config", config_path, "JSON config file")->required();

    std::string figure_id;
    std::string out_dir = ".";
    auto* figure = app.add_subcommand("figure", "emit a canonical dataset (fig2..fig9)");
    figure->add_option("id", figure_id, "figure id")->required();
    figure->add_option("--out", out_dir, "output directory");

    auto* selftest = app.add_subcommand("selftest", "run the oracle-equivalence checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) {
            for (const auto& f : phasespec::run_config_file(config_path)) std::cout << f << "\n";
        } else if (figure->parsed()) {
            for (const auto& f : phasespec::reproduce_figure(figure_id, out_dir))
                std::cout << f << "\n";
        } else if (selftest->parsed()) {
            return phasespec::selftest(std::cout) == 0 ? 0 : 1;
        }
    } catch (const phasespec::QuadratureNotConverged& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const phasespec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
