// concurrence.hpp - entanglement measures and sudden-death extraction

#pragma once

#include <vector>

#include "phasespec/dynamics.hpp"

namespace phasespec {

// Wootters concurrence of an arbitrary two-qubit state. The characteristic
// roots are taken as singular values of sqrt(rho) (sy x sy) conj(sqrt(rho))
// in the bare basis, which equals the usual eigenvalue construction but
// avoids the non-Hermitian eigenproblem.
double concurrence_general(const DensityMatrix& rho);

// Direct eigenvalue route over rho (sy x sy) rho* (sy x sy); test-only
// independent path.
double concurrence_general_eig(const DensityMatrix& rho);

// Closed form for X states in the collective basis:
//   C1 = 2|rho_eg| - (rho_ss + rho_aa), C2 = |rho_ss - rho_aa| - 2 sqrt(rho_gg rho_ee)
double concurrence_xstate(const DensityMatrix& rho, double off_x_tol = 1e-10);

// Signed branches (not clipped), for sudden-death diagnostics.
struct ConcurrenceBranches {
    double c1;
    double c2;
    double value() const { return std::max({0.0, c1, c2}); }
};
ConcurrenceBranches concurrence_branches(const CollectiveState& s);

struct EsdTimes {
    std::vector<double> death_times;
    std::vector<double> revival_times;
    double steady_value;  // concurrence at t_max
};

// Zero crossings of max(C1, C2) on a dense grid (step 0.01), bisected to 1e-4.
EsdTimes esd_times(const SystemParams& p, const DensityMatrix& rho0, double t_max);

} // namespace phasespec
