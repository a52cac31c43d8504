// liouville.hpp - exact 16-dimensional generator of the two-atom master
// equation in the rotating frame, used as ground truth for the reduced
// collective-basis propagators and for two-time correlations.

#pragma once

#include <Eigen/Dense>

#include "phasespec/params.hpp"
#include "phasespec/states.hpp"

namespace phasespec {

using Matrix16c = Eigen::Matrix<Complex, 16, 16>;
using Vector16c = Eigen::Matrix<Complex, 16, 1>;

// Atomic raising/lowering operators in the bare product basis.
const Matrix4c& atom_lowering(int atom);  // atom in {0, 1}
const Matrix4c& atom_raising(int atom);

struct Superoperator {
    Matrix16c generator;  // acts on column-major vectorized bare-basis matrices
    SystemParams params;
};

// Time-independent rotating-frame generator. Dissipation carries
// Gamma_ij = [[gamma, gamma12], [gamma12, gamma]]; squeezing enters through
// M = |M| e^{i phi_s}; the dipole-dipole shift through omega12.
Superoperator build_liouvillian(const SystemParams& params);

// exp(L t) by scaling-and-squaring.
Matrix16c propagator(const Superoperator& L, double t);

// exp(L t) through the eigendecomposition of L; agrees with propagator()
// to ~1e-10 and exists only as an independent route for tests.
Matrix16c propagator_eig(const Superoperator& L, double t);

// exp(L t) applied to rho0 (collective basis in/out).
DensityMatrix evolve_oracle(const Superoperator& L, const DensityMatrix& rho0, double t);

// <S_i^+(t) S_j^-(t+tau)> via the regression theorem: the generator is
// applied for tau to rho(t) S_i^+ and S_j^- is traced out.
Complex two_time_correlation_oracle(const Superoperator& L, const DensityMatrix& rho_t,
                                    int i, int j, double tau);

// sum_ij Gamma_ij <S_i^+(t) S_j^-(t+tau)>, the dipole correlation entering
// the spectrum; computed from the four atomic-index terms independently of
// the collective-channel decomposition.
Complex weighted_correlation_oracle(const Superoperator& L, const DensityMatrix& rho_t,
                                    double tau);

// The generator rewritten to act on vectorized collective-basis matrices.
Matrix16c collective_generator(const Superoperator& L);

// vec index of the collective matrix element (row, col), column-major
inline int coll_vec_index(int row, int col) { return 4 * col + row; }

} // namespace phasespec
