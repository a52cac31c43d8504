// figures.hpp - canonical parameter sets of the reference dataset family
// fig2..fig9: a Bell pair with N = 0.5, maximal squeezing correlation,
// omega12 = 20, detector half-bandwidth 2, scanned over the relative phase
// and the sign/magnitude of the collective damping.

#pragma once

#include <string>
#include <vector>

#include "phasespec/params.hpp"

namespace phasespec {

struct FigureCurve {
    std::string label;       // file-name suffix for multi-curve figures
    SystemParams params;     // phi_b carries the relative phase (phi_s = 0)
};

struct FigureSpec {
    std::string id;
    bool spectral;           // emits spectrum + hole products
    std::vector<FigureCurve> curves;
};

const std::vector<FigureSpec>& figure_table();
const FigureSpec& figure_spec(const std::string& id);  // throws UnknownFigure

} // namespace phasespec
