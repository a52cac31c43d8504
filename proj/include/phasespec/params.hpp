// params.hpp - physical parameters of one two-atom / squeezed-bath simulation
//
// Everything is expressed in units of the single-atom decay rate Gamma
// (gamma = 1 by convention); times are Gamma*t, frequencies (omega-omega0)/Gamma.
// The squeezed-field carrier is locked to the atomic transition (omega_s = omega_0),
// so the rotating-frame generators are time independent.

#pragma once

#include <cmath>
#include <complex>

#include "phasespec/errors.hpp"

namespace phasespec {

struct SystemParams {
    double gamma{1.0};       // single-atom decay rate (sets the unit system)
    double gamma12{0.0};     // collective damping, signed, |gamma12| <= gamma
    double omega12{0.0};     // dipole-dipole shift
    double n_photons{0.0};   // bath photon number N
    double m_abs{0.0};       // two-photon correlation magnitude |M|
    double phi_s{0.0};       // squeezing phase
    double phi_b{0.0};       // initial-state phase
    double gamma_d{1.0};     // detector half-bandwidth
    bool dicke{false};       // small-sample limit; forces gamma12 = gamma

    // derived quantities
    double n() const { return 2.0 * n_photons + 1.0; }
    double a() const { return effective_gamma12() / gamma; }
    double effective_gamma12() const { return dicke ? gamma : gamma12; }
    double delta_phi() const { return phi_b - phi_s; }
    std::complex<double> squeeze_m() const {
        return std::polar(m_abs, phi_s);
    }
    double max_m_abs() const { return std::sqrt(n_photons * (n_photons + 1.0)); }
};

// Returns the parameters unchanged if physical, otherwise throws.
// Idempotent: a validated set validates again to identical values.
inline SystemParams validate_params(const SystemParams& p) {
    if (!(p.gamma > 0.0))
        throw RangeViolation("gamma must be positive");
    if (p.n_photons < 0.0)
        throw RangeViolation("n_photons must be >= 0");
    if (p.m_abs < 0.0)
        throw RangeViolation("m_abs must be >= 0");
    // small headroom so m_abs = sqrt(N(N+1)) computed in floating point passes
    if (p.m_abs > p.max_m_abs() * (1.0 + 1e-12) + 1e-15)
        throw PhysicalityViolation("m_abs exceeds sqrt(N(N+1))");
    if (std::abs(p.effective_gamma12()) > p.gamma * (1.0 + 1e-12))
        throw RangeViolation("|gamma12| must not exceed gamma");
    if (!(p.gamma_d > 0.0))
        throw RangeViolation("gamma_d must be positive");
    return p;
}

} // namespace phasespec
