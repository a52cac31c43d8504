// spectrum.hpp - transient fluorescence spectra.
//
// Three related objects, all real functions of the detuning
// delta = (omega - omega0)/gamma and time:
//
//  physical_spectrum    detector-filtered double integral over [0,t]^2 with
//                       kernel exp(-(Gd + i d)(t-t1)) exp(-(Gd - i d)(t-t2));
//                       nonnegative by construction (the trapezoid sum is a
//                       positive quadratic form in the filtered amplitudes).
//  broadband_spectrum   Re int_0^t dtau e^{-i d tau} C(t, t+tau); a photon
//                       production rate, may transiently go negative.
//  line_shape_spectrum  the tau -> infinity limit of the broadband form with
//                       the one-time state frozen at t (resolvent evaluation);
//                       pure Lorentzian mixtures, the object hole detection
//                       and the well-separated-line formula describe.
//
// The +omega12 line carries the upper-state population and the two-photon
// coherence, the -omega12 line the symmetric-state population.

#pragma once

#include <optional>
#include <vector>

#include "phasespec/correlation.hpp"

namespace phasespec {

struct SpectrumGrid {
    std::vector<double> omega_axis;  // strictly increasing
    std::vector<double> time_axis;   // strictly increasing, starts at 0
    Eigen::MatrixXd values;          // (omega index, time index)
    SystemParams params;

    double max_value() const { return values.size() ? values.maxCoeff() : 0.0; }
    double min_value() const { return values.size() ? values.minCoeff() : 0.0; }
};

// Largest step that divides t_step exactly and resolves every scale of the
// integrand: the correlation decay (0.02/gamma), the detector memory
// (0.2/gamma_d), and the oscillation of the detuning phase (0.1/|delta|_max,
// which dominates at the far edge of wide scan windows).
double default_quadrature_step(const SystemParams& p, double t_step, double abs_delta_max = 0.0);

double physical_spectrum(const SystemParams& p, const DensityMatrix& rho0,
                         double omega_tilde, double t, double step = 0.0);

// Shared-cache evaluation over a full (omega, t) grid; every time-axis value
// must be a multiple of the quadrature step. Worker count 0 = hardware.
SpectrumGrid physical_spectrum_grid(const SystemParams& p, const DensityMatrix& rho0,
                                    const std::vector<double>& omega_axis,
                                    const std::vector<double>& time_axis,
                                    double step = 0.0, int workers = 0);

double physical_spectrum_from_cache(const CorrelationGrid& grid, double gamma_d,
                                    double omega_tilde, int time_index);

double broadband_spectrum(const SystemParams& p, const DensityMatrix& rho0,
                          double omega_tilde, double t, double step = 0.0);

double line_shape_spectrum(const SystemParams& p, const CollectiveState& s,
                           double omega_tilde);

SpectrumGrid line_shape_grid(const SystemParams& p, const DensityMatrix& rho0,
                             const std::vector<double>& omega_axis,
                             const std::vector<double>& time_axis);

// Well-separated-line closed form for the small-sample limit, in the
// broadband normalization (half the conventional prefactor); the coherence
// weight enters through sqrt(n^2 - 1), the maximal-squeezing value.
double analytic_dicke_spectrum(const SystemParams& p, const CollectiveState& s,
                               double omega_tilde);

bool well_separated(const SystemParams& p);  // omega12 >= 10 gamma n

struct HoleInterval {
    double t_start;
    double t_end;
};

// Maximal time intervals where S(line_center, t) is a strict local minimum
// against the omega neighbors at +-1.0 gamma, with >= 2% relative contrast.
// The grid must cover line_center +- 3 at step <= 0.2.
std::vector<HoleInterval> detect_hole(const SpectrumGrid& grid, double line_center);

// Largest relative change between two evaluations of the same grid
// (refinement convergence measure); denominators are floored at
// 1e-6 * max|value| so empty corners do not dominate.
double max_relative_change(const SpectrumGrid& coarse, const SpectrumGrid& fine);

} // namespace phasespec
