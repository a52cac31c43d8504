#include "phasespec/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "phasespec/concurrence.hpp"
#include "phasespec/figures.hpp"
#include "phasespec/geometry.hpp"
#include "phasespec/liouville.hpp"
#include "phasespec/spectrum.hpp"

namespace phasespec {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << text;
}

std::vector<double> linear_axis(double lo, double step, int count) {
    std::vector<double> ax(count);
    for (int k = 0; k < count; ++k) ax[k] = lo + k * step;
    return ax;
}

int axis_count(double lo, double hi, double step) {
    if (!(step > 0.0) || hi < lo) throw ConfigError("bad axis bounds or step");
    return static_cast<int>(std::lround((hi - lo) / step)) + 1;
}

std::string trajectory_csv(const SystemParams& p, const DensityMatrix& rho0,
                           const std::vector<double>& times) {
    std::string out = "gamma_t,rho_ee,rho_ss,rho_aa,rho_u,rho_v,concurrence\n";
    const CollectiveState s0 = rho0.project(p);
    for (double t : times) {
        const CollectiveState s = evolve_populations(p, s0, t);
        out += g9(t) + "," + g9(s.rho_ee) + "," + g9(s.rho_ss) + "," + g9(s.rho_aa) + "," +
               g9(s.rho_u) + "," + g9(s.rho_v) + "," +
               g9(concurrence_branches(s).value()) + "\n";
    }
    return out;
}

std::string concurrence_csv(const SystemParams& p, const DensityMatrix& rho0,
                            const std::vector<double>& times) {
    std::string out = "gamma_t,concurrence\n";
    const CollectiveState s0 = rho0.project(p);
    for (double t : times) {
        const CollectiveState s = evolve_populations(p, s0, t);
        out += g9(t) + "," + g9(concurrence_branches(s).value()) + "\n";
    }
    return out;
}

std::string spectrum_csv(const SpectrumGrid& grid) {
    std::string out = "omega_tilde,gamma_t,S\n";
    for (size_t iw = 0; iw < grid.omega_axis.size(); ++iw)
        for (size_t k = 0; k < grid.time_axis.size(); ++k)
            out += g9(grid.omega_axis[iw]) + "," + g9(grid.time_axis[k]) + "," +
                   g9(grid.values(static_cast<int>(iw), static_cast<int>(k))) + "\n";
    return out;
}

// hole analysis runs on the instantaneous line shapes around each transition
std::string holes_csv(const SystemParams& p, const DensityMatrix& rho0,
                      const std::vector<double>& times) {
    std::string out = "line_center,t_start,t_end\n";
    const double shift = p.omega12 / p.gamma;
    for (double center : {+shift, -shift}) {
        const auto ax = linear_axis(center - 3.0, 0.2, 31);
        const SpectrumGrid g = line_shape_grid(p, rho0, ax, times);
        for (const auto& h : detect_hole(g, center))
            out += g9(center) + "," + g9(h.t_start) + "," + g9(h.t_end) + "\n";
    }
    return out;
}

std::string esd_csv(const SystemParams& p, const DensityMatrix& rho0, double t_max) {
    const EsdTimes e = esd_times(p, rho0, t_max);
    std::string out = "event,value\n";
    for (double t : e.death_times) out += "death," + g9(t) + "\n";
    for (double t : e.revival_times) out += "revival," + g9(t) + "\n";
    out += "steady_concurrence," + g9(e.steady_value) + "\n";
    return out;
}

std::string steady_csv(const SystemParams& p) {
    const SteadyState st = steady_state(p);
    std::string out = "rho_ee,rho_ss,rho_aa,rho_u,re_rho_eg,im_rho_eg,concurrence\n";
    out += g9(st.state.rho_ee) + "," + g9(st.state.rho_ss) + "," + g9(st.state.rho_aa) + "," +
           g9(st.state.rho_u) + "," + g9(st.rho_eg.real()) + "," + g9(st.rho_eg.imag()) + "," +
           g9(concurrence_branches(st.state).value()) + "\n";
    return out;
}

json params_to_json(const SystemParams& p) {
    return json{{"gamma", p.gamma},       {"gamma12", p.gamma12},
                {"omega12", p.omega12},   {"n_photons", p.n_photons},
                {"m_abs", p.m_abs},       {"phi_s", p.phi_s},
                {"phi_b", p.phi_b},       {"gamma_d", p.gamma_d},
                {"dicke", p.dicke}};
}

json config_to_json_obj(const RunConfig& cfg) {
    json j = params_to_json(cfg.params);
    const auto omegas = omega_axis(cfg);
    j["omega_min"] = omegas.front();
    j["omega_max"] = omegas.back();
    j["omega_step"] = cfg.grid.omega_step;
    j["t_max"] = cfg.grid.t_max;
    j["t_step"] = cfg.grid.t_step;
    j["products"] = cfg.products;
    j["out_dir"] = cfg.out_dir;
    j["prefix"] = cfg.prefix;
    if (cfg.quadrature_step > 0.0) j["quadrature_step"] = cfg.quadrature_step;
    j["convergence_check"] = cfg.convergence_check;
    return j;
}

const std::vector<std::string> kKnownProducts = {"spectrum", "populations", "concurrence",
                                                 "holes", "esd", "steady"};

} // namespace

RunConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    RunConfig cfg;
    auto num = [&](const char* key, double fallback) {
        if (!j.contains(key)) return fallback;
        if (!j[key].is_number()) throw ConfigError(std::string(key) + " must be a number");
        return j[key].get<double>();
    };

    SystemParams& p = cfg.params;
    p.gamma = num("gamma", p.gamma);
    p.omega12 = num("omega12", p.omega12);
    p.n_photons = num("n_photons", p.n_photons);
    p.m_abs = num("m_abs", p.m_abs);
    p.phi_s = num("phi_s", p.phi_s);
    p.phi_b = num("phi_b", p.phi_b);
    p.gamma_d = num("gamma_d", p.gamma_d);
    if (j.contains("dicke")) {
        if (!j["dicke"].is_boolean()) throw ConfigError("dicke must be a boolean");
        p.dicke = j["dicke"].get<bool>();
    }
    // direct gamma12 wins over geometry when both are given
    if (j.contains("gamma12")) {
        p.gamma12 = num("gamma12", 0.0);
    } else if (j.contains("kr12")) {
        p.gamma12 = p.gamma * collective_damping({num("kr12", 1.0), num("cos_theta", 0.0)});
    }

    cfg.grid.omega_step = num("omega_step", cfg.grid.omega_step);
    cfg.grid.t_max = num("t_max", cfg.grid.t_max);
    cfg.grid.t_step = num("t_step", cfg.grid.t_step);
    if (j.contains("omega_min") || j.contains("omega_max")) {
        if (!j.contains("omega_min") || !j.contains("omega_max"))
            throw ConfigError("omega_min and omega_max must be given together");
        cfg.grid.omega_min = num("omega_min", 0.0);
        cfg.grid.omega_max = num("omega_max", 0.0);
        cfg.grid.omega_defaulted = false;
    }

    if (j.contains("products")) {
        if (!j["products"].is_array()) throw ConfigError("products must be an array");
        for (const auto& e : j["products"]) {
            if (!e.is_string()) throw ConfigError("products entries must be strings");
            const std::string name = e.get<std::string>();
            if (std::find(kKnownProducts.begin(), kKnownProducts.end(), name) ==
                kKnownProducts.end())
                throw ConfigError("unknown product: " + name);
            cfg.products.push_back(name);
        }
    }
    if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
    if (j.contains("prefix")) cfg.prefix = j["prefix"].get<std::string>();
    cfg.quadrature_step = num("quadrature_step", 0.0);
    if (j.contains("convergence_check")) cfg.convergence_check = j["convergence_check"].get<bool>();

    validate_params(cfg.params);
    if (cfg.products.empty()) throw ConfigError("nothing to compute: products list is empty");
    return cfg;
}

RunConfig parse_config_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string config_to_json(const RunConfig& cfg) {
    return config_to_json_obj(cfg).dump(2) + "\n";
}

std::vector<double> omega_axis(const RunConfig& cfg) {
    const auto& g = cfg.grid;
    double lo = g.omega_min, hi = g.omega_max;
    if (g.omega_defaulted) {
        hi = cfg.params.omega12 / cfg.params.gamma + 15.0;
        lo = -hi;
    }
    return linear_axis(lo, g.omega_step, axis_count(lo, hi, g.omega_step));
}

std::vector<double> time_axis(const GridConfig& g) {
    return linear_axis(0.0, g.t_step, axis_count(0.0, g.t_max, g.t_step));
}

std::vector<std::string> run_scan(const RunConfig& cfg) {
    const SystemParams p = validate_params(cfg.params);
    const DensityMatrix rho0 = bell_initial_state(p.phi_b);
    const auto times = time_axis(cfg.grid);
    const fs::path dir(cfg.out_dir);
    fs::create_directories(dir);

    std::vector<std::string> written;
    auto emit = [&](const std::string& name, const std::string& text) {
        const std::string file = cfg.prefix + "_" + name;
        write_file(dir / file, text);
        written.push_back(file);
    };

    for (const auto& product : cfg.products) {
        if (product == "spectrum") {
            const auto omegas = omega_axis(cfg);
            const double delta_max = std::max(std::abs(omegas.front()), std::abs(omegas.back()));
            const double h = cfg.quadrature_step > 0.0
                                 ? cfg.quadrature_step
                                 : default_quadrature_step(p, cfg.grid.t_step, delta_max * p.gamma);
            const SpectrumGrid grid = physical_spectrum_grid(p, rho0, omegas, times, h);
            if (cfg.convergence_check) {
                const SpectrumGrid fine = physical_spectrum_grid(p, rho0, omegas, times, h / 2.0);
                const double change = max_relative_change(grid, fine);
                if (change > 0.005)
                    throw QuadratureNotConverged("stepsize refinement changes values by " +
                                                 g9(100.0 * change) + "%");
            }
            emit("spectrum.csv", spectrum_csv(grid));
        } else if (product == "populations") {
            emit("populations.csv", trajectory_csv(p, rho0, times));
        } else if (product == "concurrence") {
            emit("concurrence.csv", concurrence_csv(p, rho0, times));
        } else if (product == "holes") {
            emit("holes.csv", holes_csv(p, rho0, times));
        } else if (product == "esd") {
            emit("esd.csv", esd_csv(p, rho0, cfg.grid.t_max));
        } else if (product == "steady") {
            emit("steady.csv", steady_csv(p));
        }
    }

    json meta = config_to_json_obj(cfg);
    meta["files"] = written;
    const std::string meta_file = cfg.prefix + "_meta.json";
    write_file(dir / meta_file, meta.dump(2) + "\n");
    written.push_back(meta_file);
    return written;
}

std::vector<std::string> reproduce_figure(const std::string& id, const fs::path& out_dir) {
    const FigureSpec& spec = figure_spec(id);
    fs::create_directories(out_dir);
    std::vector<std::string> written;
    json curves = json::array();
    for (const auto& curve : spec.curves) {
        RunConfig cfg;
        cfg.params = curve.params;
        cfg.out_dir = out_dir.string();
        cfg.prefix = curve.label.empty() ? spec.id : spec.id + "_" + curve.label;
        if (spec.spectral) {
            cfg.products = {"spectrum", "populations", "holes", "steady"};
        } else {
            cfg.products = {"populations", "esd", "steady"};
            cfg.grid.t_max = 10.0;
            cfg.grid.t_step = 0.01;
        }
        for (const auto& f : run_scan(cfg)) written.push_back(f);
        curves.push_back(config_to_json_obj(cfg));
    }
    if (spec.curves.size() > 1) {
        json meta;
        meta["figure"] = spec.id;
        meta["curves"] = curves;
        const std::string meta_file = spec.id + "_meta.json";
        write_file(out_dir / meta_file, meta.dump(2) + "\n");
        written.push_back(meta_file);
    }
    return written;
}

std::vector<std::string> run_config_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("figure")) {
        if (!j["figure"].is_string()) throw ConfigError("figure must be a string id");
        const std::string out = j.contains("out_dir") ? j["out_dir"].get<std::string>() : ".";
        return reproduce_figure(j["figure"].get<std::string>(), out);
    }
    return run_scan(parse_config_text(text));
}

int selftest(std::ostream& os) {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok, double worst) {
        os << (ok ? "PASS " : "FAIL ") << name << "  (worst " << worst << ")\n";
        if (!ok) ++failures;
    };

    const std::vector<std::pair<std::string, SystemParams>> sets = [] {
        std::vector<std::pair<std::string, SystemParams>> v;
        for (const auto& f : figure_table())
            for (const auto& c : f.curves)
                if (f.id == "fig2" || f.id == "fig3" || f.id == "fig5" || f.id == "fig6" ||
                    f.id == "fig7" || f.id == "fig8")
                    v.emplace_back(f.id, c.params);
        return v;
    }();

    // reduced propagator against the full generator
    double worst = 0.0;
    for (const auto& [id, p] : sets) {
        const Superoperator L = build_liouvillian(p);
        const DensityMatrix rho0 = bell_initial_state(p.phi_b);
        const CollectiveState s0 = rho0.project(p);
        for (double t : {0.3, 1.0, 3.0, 7.5}) {
            const CollectiveState fast = evolve_populations(p, s0, t);
            const CollectiveState exact = evolve_oracle(L, rho0, t).project(p);
            worst = std::max({worst, std::abs(fast.rho_ee - exact.rho_ee),
                              std::abs(fast.rho_ss - exact.rho_ss),
                              std::abs(fast.rho_aa - exact.rho_aa),
                              std::abs(fast.rho_u - exact.rho_u),
                              std::abs(fast.rho_v - exact.rho_v)});
        }
    }
    report("population propagator vs full generator", worst < 1e-8, worst);

    // channel correlation against the regression theorem
    worst = 0.0;
    for (const auto& [id, p] : sets) {
        const Superoperator L = build_liouvillian(p);
        const DensityMatrix rho0 = bell_initial_state(p.phi_b);
        for (double t1 : {0.0, 0.8, 2.0}) {
            const DensityMatrix rho_t = evolve_oracle(L, rho0, t1);
            for (double tau : {0.0, 0.5, 1.5}) {
                const Complex oracle = weighted_correlation_oracle(L, rho_t, tau);
                const Complex fast = correlation(p, rho0, t1, t1 + tau);
                worst = std::max(worst, std::abs(oracle - fast));
            }
        }
    }
    report("two-time correlation vs regression theorem", worst < 1e-8, worst);

    // closed-form concurrence against the general construction
    worst = 0.0;
    {
        const SystemParams p = figure_spec("fig5").curves[0].params;
        const DensityMatrix rho0 = bell_initial_state(p.phi_b);
        const CollectiveState s0 = rho0.project(p);
        for (double t : {0.0, 0.5, 1.5, 4.0}) {
            const CollectiveState s = evolve_populations(p, s0, t);
            const DensityMatrix rho = DensityMatrix::from_state(s, p);
            worst = std::max(worst, std::abs(concurrence_general(rho) -
                                             concurrence_branches(s).value()));
        }
    }
    report("concurrence closed form vs general", worst < 1e-10, worst);

    return failures;
}

} // namespace phasespec
