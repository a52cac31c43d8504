// python bindings for the core operations

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "phasespec/concurrence.hpp"
#include "phasespec/correlation.hpp"
#include "phasespec/figures.hpp"
#include "phasespec/geometry.hpp"
#include "phasespec/io.hpp"
#include "phasespec/liouville.hpp"
#include "phasespec/spectrum.hpp"

namespace py = pybind11;
using namespace phasespec;

PYBIND11_MODULE(_core, m) {
    m.doc() = "transient spectra and entanglement of an atom pair in a squeezed vacuum";

    py::register_exception<PhysicalityViolation>(m, "PhysicalityViolation", PyExc_ValueError);
    py::register_exception<RangeViolation>(m, "RangeViolation", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SingularSystem>(m, "SingularSystem", PyExc_ArithmeticError);
    py::register_exception<NotXState>(m, "NotXState", PyExc_ValueError);
    py::register_exception<QuadratureNotConverged>(m, "QuadratureNotConverged",
                                                   PyExc_ArithmeticError);
    py::register_exception<UnknownFigure>(m, "UnknownFigure", PyExc_KeyError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init([](double gamma, double gamma12, double omega12, double n_photons,
                         double m_abs, double phi_s, double phi_b, double gamma_d, bool dicke) {
                 SystemParams p{gamma, gamma12, omega12, n_photons, m_abs, phi_s, phi_b,
                                gamma_d, dicke};
                 return p;
             }),
             py::kw_only(), py::arg("gamma") = 1.0, py::arg("gamma12") = 0.0,
             py::arg("omega12") = 0.0, py::arg("n_photons") = 0.0, py::arg("m_abs") = 0.0,
             py::arg("phi_s") = 0.0, py::arg("phi_b") = 0.0, py::arg("gamma_d") = 1.0,
             py::arg("dicke") = false)
        .def_readwrite("gamma", &SystemParams::gamma)
        .def_readwrite("gamma12", &SystemParams::gamma12)
        .def_readwrite("omega12", &SystemParams::omega12)
        .def_readwrite("n_photons", &SystemParams::n_photons)
        .def_readwrite("m_abs", &SystemParams::m_abs)
        .def_readwrite("phi_s", &SystemParams::phi_s)
        .def_readwrite("phi_b", &SystemParams::phi_b)
        .def_readwrite("gamma_d", &SystemParams::gamma_d)
        .def_readwrite("dicke", &SystemParams::dicke)
        .def_property_readonly("n", &SystemParams::n)
        .def_property_readonly("a", &SystemParams::a)
        .def_property_readonly("delta_phi", &SystemParams::delta_phi)
        .def_property_readonly("max_m_abs", &SystemParams::max_m_abs)
        .def("__repr__", [](const SystemParams& p) {
            std::ostringstream os;
            os << "SystemParams(gamma=" << p.gamma << ", gamma12=" << p.gamma12
               << ", omega12=" << p.omega12 << ", n_photons=" << p.n_photons
               << ", m_abs=" << p.m_abs << ", phi_s=" << p.phi_s << ", phi_b=" << p.phi_b
               << ", gamma_d=" << p.gamma_d << ", dicke=" << (p.dicke ? "True" : "False") << ")";
            return os.str();
        });
    m.def("validate_params", &validate_params, py::arg("params"));

    py::class_<CollectiveState>(m, "CollectiveState")
        .def(py::init([](double ee, double ss, double aa, double u, double v) {
                 return CollectiveState{ee, ss, aa, u, v};
             }),
             py::arg("rho_ee") = 0.0, py::arg("rho_ss") = 0.0, py::arg("rho_aa") = 0.0,
             py::arg("rho_u") = 0.0, py::arg("rho_v") = 0.0)
        .def_readwrite("rho_ee", &CollectiveState::rho_ee)
        .def_readwrite("rho_ss", &CollectiveState::rho_ss)
        .def_readwrite("rho_aa", &CollectiveState::rho_aa)
        .def_readwrite("rho_u", &CollectiveState::rho_u)
        .def_readwrite("rho_v", &CollectiveState::rho_v)
        .def_property_readonly("rho_gg", &CollectiveState::rho_gg)
        .def("__repr__", [](const CollectiveState& s) {
            std::ostringstream os;
            os << "CollectiveState(rho_ee=" << s.rho_ee << ", rho_ss=" << s.rho_ss
               << ", rho_aa=" << s.rho_aa << ", rho_u=" << s.rho_u << ", rho_v=" << s.rho_v
               << ")";
            return os.str();
        });

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def(py::init([](const Matrix4c& mat) {
                 DensityMatrix d;
                 d.m = mat;
                 return d;
             }),
             py::arg("matrix"))
        .def_property_readonly("matrix", [](const DensityMatrix& d) { return d.m; })
        .def("is_physical", &DensityMatrix::is_physical, py::arg("herm_tol") = 1e-12,
             py::arg("trace_tol") = 1e-10, py::arg("positivity_tol") = 1e-8)
        .def("project", &DensityMatrix::project, py::arg("params"))
        .def_static("from_state", &DensityMatrix::from_state, py::arg("state"), py::arg("params"))
        .def("to_bare", [](const DensityMatrix& d) { return collective_to_bare(d.m); });
    m.def("bell_initial_state", &bell_initial_state, py::arg("phi_b"));

    m.def(
        "collective_damping",
        [](double kr12, double cos_theta) { return collective_damping({kr12, cos_theta}); },
        py::arg("kr12"), py::arg("cos_theta"));

    py::class_<Superoperator>(m, "Superoperator")
        .def_property_readonly("generator",
                               [](const Superoperator& L) { return Eigen::MatrixXcd(L.generator); })
        .def("evolve", &evolve_oracle, py::arg("rho0"), py::arg("t"))
        .def("two_time_correlation", &two_time_correlation_oracle, py::arg("rho_t"),
             py::arg("i"), py::arg("j"), py::arg("tau"))
        .def("weighted_correlation", &weighted_correlation_oracle, py::arg("rho_t"),
             py::arg("tau"));
    m.def("build_liouvillian", &build_liouvillian, py::arg("params"));

    m.def("evolve_populations", &evolve_populations, py::arg("params"), py::arg("state0"),
          py::arg("t"));
    py::enum_<Channel>(m, "Channel")
        .value("symmetric", Channel::symmetric)
        .value("antisymmetric", Channel::antisymmetric);
    py::class_<ChannelCoherenceVector>(m, "ChannelCoherenceVector")
        .def(py::init([](Channel ch, const Vector4c& v) {
                 ChannelCoherenceVector out;
                 out.channel = ch;
                 out.v = v;
                 return out;
             }),
             py::arg("channel"), py::arg("v"))
        .def_readwrite("channel", &ChannelCoherenceVector::channel)
        .def_property(
            "v", [](const ChannelCoherenceVector& c) { return c.v; },
            [](ChannelCoherenceVector& c, const Vector4c& v) { c.v = v; });
    m.def("evolve_channel", &evolve_channel, py::arg("params"), py::arg("channel"),
          py::arg("v0"), py::arg("tau"));
    m.def("regression_seed", &regression_seed, py::arg("channel"), py::arg("state"),
          py::arg("params"));

    py::class_<SteadyState>(m, "SteadyState")
        .def_readonly("state", &SteadyState::state)
        .def_readonly("rho_eg", &SteadyState::rho_eg);
    m.def("steady_state", &steady_state, py::arg("params"));

    m.def("correlation", &correlation, py::arg("params"), py::arg("rho0"), py::arg("t1"),
          py::arg("t2"));

    py::class_<SpectrumGrid>(m, "SpectrumGrid")
        .def_readonly("omega_axis", &SpectrumGrid::omega_axis)
        .def_readonly("time_axis", &SpectrumGrid::time_axis)
        .def_property_readonly("values", [](const SpectrumGrid& g) { return g.values; });
    m.def("physical_spectrum", &physical_spectrum, py::arg("params"), py::arg("rho0"),
          py::arg("omega_tilde"), py::arg("t"), py::arg("step") = 0.0);
    m.def("physical_spectrum_grid", &physical_spectrum_grid, py::arg("params"), py::arg("rho0"),
          py::arg("omega_axis"), py::arg("time_axis"), py::arg("step") = 0.0,
          py::arg("workers") = 0);
    m.def("broadband_spectrum", &broadband_spectrum, py::arg("params"), py::arg("rho0"),
          py::arg("omega_tilde"), py::arg("t"), py::arg("step") = 0.0);
    m.def("line_shape_spectrum", &line_shape_spectrum, py::arg("params"), py::arg("state"),
          py::arg("omega_tilde"));
    m.def("line_shape_grid", &line_shape_grid, py::arg("params"), py::arg("rho0"),
          py::arg("omega_axis"), py::arg("time_axis"));
    m.def("analytic_dicke_spectrum", &analytic_dicke_spectrum, py::arg("params"),
          py::arg("state"), py::arg("omega_tilde"));

    py::class_<HoleInterval>(m, "HoleInterval")
        .def_readonly("t_start", &HoleInterval::t_start)
        .def_readonly("t_end", &HoleInterval::t_end)
        .def("__repr__", [](const HoleInterval& h) {
            std::ostringstream os;
            os << "HoleInterval(t_start=" << h.t_start << ", t_end=" << h.t_end << ")";
            return os.str();
        });
    m.def("detect_hole", &detect_hole, py::arg("grid"), py::arg("line_center"));

    m.def("concurrence_general", &concurrence_general, py::arg("rho"));
    m.def("concurrence_xstate", &concurrence_xstate, py::arg("rho"),
          py::arg("off_x_tol") = 1e-10);
    py::class_<EsdTimes>(m, "EsdTimes")
        .def_readonly("death_times", &EsdTimes::death_times)
        .def_readonly("revival_times", &EsdTimes::revival_times)
        .def_readonly("steady_value", &EsdTimes::steady_value);
    m.def("esd_times", &esd_times, py::arg("params"), py::arg("rho0"), py::arg("t_max"));

    m.def("figure_params", [](const std::string& id) {
        py::dict out;
        for (const auto& c : figure_spec(id).curves)
            out[py::str(c.label.empty() ? "default" : c.label)] = c.params;
        return out;
    });
    m.def("run_scan_config", [](const std::string& text) {
        const RunConfig cfg = parse_config_text(text);
        return run_scan(cfg);
    });
    m.def("reproduce_figure", &reproduce_figure, py::arg("id"), py::arg("out_dir"));
}
