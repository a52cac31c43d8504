#include "phasespec/figures.hpp"

#include <cmath>
#include <numbers>

namespace phasespec {

namespace {

SystemParams base_params() {
    SystemParams p;
    p.gamma = 1.0;
    p.omega12 = 20.0;
    p.n_photons = 0.5;
    p.m_abs = std::sqrt(0.75);  // maximal: sqrt(N(N+1))
    p.phi_s = 0.0;
    p.gamma_d = 2.0;
    return p;
}

SystemParams dicke(double dphi) {
    SystemParams p = base_params();
    p.dicke = true;
    p.gamma12 = 1.0;
    p.phi_b = dphi;
    return p;
}

SystemParams extended(double a, double dphi) {
    SystemParams p = base_params();
    p.gamma12 = a;
    p.phi_b = dphi;
    return p;
}

} // namespace

const std::vector<FigureSpec>& figure_table() {
    static const double pi = std::numbers::pi;
    static const std::vector<FigureSpec> table = {
        {"fig2", true, {{"", dicke(0.0)}}},
        {"fig3", true, {{"", dicke(pi)}}},
        {"fig4", false, {{"phase0", dicke(0.0)}, {"phasepi", dicke(pi)}}},
        {"fig5", true, {{"", extended(0.5, 0.0)}}},
        {"fig6", true, {{"", extended(0.5, pi)}}},
        {"fig7", true, {{"", extended(-0.5, 0.0)}}},
        {"fig8", true, {{"", extended(-0.5, pi)}}},
        {"fig9", false, {{"gneg", extended(-0.5, 0.0)}, {"gpos", extended(0.5, 0.0)}}},
    };
    return table;
}

const FigureSpec& figure_spec(const std::string& id) {
    for (const auto& f : figure_table())
        if (f.id == id) return f;
    throw UnknownFigure("unknown figure id: " + id);
}

} // namespace phasespec
