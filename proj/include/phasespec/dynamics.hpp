// dynamics.hpp - reduced propagators for the one-time variables and the
// per-channel coherence vectors. Both are small constant-coefficient linear
// systems propagated exactly through matrix exponentials; unit tests pin
// every coefficient against the 16-dimensional generator projection.

#pragma once

#include <Eigen/Dense>

#include "phasespec/params.hpp"
#include "phasespec/states.hpp"

namespace phasespec {

using Matrix6d = Eigen::Matrix<double, 6, 6>;

// d/dt (rho_ee, rho_ss, rho_aa, rho_u) = A x + b, with rho_gg eliminated
// through the trace. rho_v is carried separately: it decays at n*gamma,
// uncoupled and undriven.
Eigen::Matrix4d population_generator(const SystemParams& p);
Eigen::Vector4d population_drive(const SystemParams& p);

// Augmented generator on (rho_ee, rho_ss, rho_aa, rho_u, 1, rho_v); the
// constant slot turns the affine system into a linear one so exp(A t) is exact.
Matrix6d augmented_population_generator(const SystemParams& p);

CollectiveState evolve_populations(const SystemParams& p, const CollectiveState& s0, double t);

// Generator of the closed 4-vector (rho_es, rho_sg, rho_se, rho_gs) or
// (rho_ea, rho_ag, rho_ae, rho_ga); the squeezing correlation couples the
// conjugate pairs, the dipole-dipole shift rotates them at +-omega12.
Matrix4c channel_generator(const SystemParams& p, Channel ch);

ChannelCoherenceVector evolve_channel(const SystemParams& p, Channel ch,
                                      const ChannelCoherenceVector& v0, double tau);

struct SteadyState {
    CollectiveState state;
    Complex rho_eg;  // rotating-frame two-photon coherence at the fixed point
};

// Fixed point of the population system. In the Dicke degeneracies |a| = 1 one
// population is frozen; it is pinned at the entangled-initial-state value 0
// and the reduced invariant-sector system is solved instead.
SteadyState steady_state(const SystemParams& p);

} // namespace phasespec
