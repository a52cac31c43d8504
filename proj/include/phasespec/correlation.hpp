// correlation.hpp - Gamma_ij-weighted two-time dipole correlation
//   C(t1, t2) = sum_ij Gamma_ij <S_i^+(t1) S_j^-(t2)>
// computed through the channel decomposition: evolve the one-time state to
// t1, seed both channel vectors by the regression rule chi(0) = rho(t1) S_ch^+,
// and propagate the seed by t2 - t1.

#pragma once

#include <vector>

#include "phasespec/dynamics.hpp"

namespace phasespec {

// Regression seeds. The chi(0) = rho S^+ construction fills the slots as
//   symmetric:     (rho_ee, rho_ss, 0,  rho_ge)
//   antisymmetric: (-rho_ee, rho_aa, 0, -rho_ge)
// with rho_ge the rotating-frame coherence conjugate; the third slot is
// genuinely zero, not a conjugated population.
ChannelCoherenceVector regression_seed(Channel ch, const CollectiveState& s,
                                       const SystemParams& p);

// C(t, t + tau) at tau = 0 reduces to
// (gamma + gamma12)(rho_ee + rho_ss) + (gamma - gamma12)(rho_ee + rho_aa).
Complex correlation_from_channels(const SystemParams& p,
                                  const ChannelCoherenceVector& sym,
                                  const ChannelCoherenceVector& asym);

// Hermitian kernel: correlation(t1, t2) = conj(correlation(t2, t1)).
Complex correlation(const SystemParams& p, const DensityMatrix& rho0,
                    double t1, double t2);

// C(i h, j h) cached on the upper triangle of a uniform grid; the one-time
// trajectory is stepped once and reused by every spectrum evaluation.
class CorrelationGrid {
public:
    CorrelationGrid(const SystemParams& p, const DensityMatrix& rho0,
                    double t_max, double step);

    double step() const { return h_; }
    int points() const { return n_; }  // grid has points 0..n_-1
    const SystemParams& params() const { return params_; }

    Complex at(int i, int j) const { return c_[static_cast<size_t>(i) * n_ + j]; }

    // contiguous row i (length points()); entries below the diagonal hold the
    // conjugate-mirrored values
    const Complex* row(int i) const { return c_.data() + static_cast<size_t>(i) * n_; }

    const CollectiveState& state_at(int i) const { return states_[i]; }

private:
    SystemParams params_;
    double h_;
    int n_;
    std::vector<Complex> c_;  // row-major, full matrix (lower = conj upper)
    std::vector<CollectiveState> states_;
};

} // namespace phasespec
