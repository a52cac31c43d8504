#include "phasespec/liouville.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace phasespec {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix16c kron(const Matrix4c& a, const Matrix4c& b) {
    Matrix16c k;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            k.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
    return k;
}

// vec(A rho) = (I (x) A) vec(rho), vec(rho B) = (B^T (x) I) vec(rho)
Matrix16c spre(const Matrix4c& a) { return kron(Matrix4c::Identity(), a); }
Matrix16c spost(const Matrix4c& b) { return kron(b.transpose(), Matrix4c::Identity()); }
Matrix16c sandwich(const Matrix4c& a, const Matrix4c& b) { return kron(b.transpose(), a); }

Vector16c vec(const Matrix4c& m) {
    return Eigen::Map<const Vector16c>(m.data());
}

Matrix4c unvec(const Vector16c& v) {
    return Eigen::Map<const Matrix4c>(v.data());
}

} // namespace

const Matrix4c& atom_lowering(int atom) {
    static const Matrix4c s1 = [] {
        Matrix4c m = Matrix4c::Zero();
        m(2, 0) = 1.0;  // e1e2 -> g1e2
        m(3, 1) = 1.0;  // e1g2 -> g1g2
        return m;
    }();
    static const Matrix4c s2 = [] {
        Matrix4c m = Matrix4c::Zero();
        m(1, 0) = 1.0;  // e1e2 -> e1g2
        m(3, 2) = 1.0;  // g1e2 -> g1g2
        return m;
    }();
    return atom == 0 ? s1 : s2;
}

const Matrix4c& atom_raising(int atom) {
    static const Matrix4c p1 = atom_lowering(0).adjoint().eval();
    static const Matrix4c p2 = atom_lowering(1).adjoint().eval();
    return atom == 0 ? p1 : p2;
}

Superoperator build_liouvillian(const SystemParams& params) {
    const SystemParams p = validate_params(params);
    const double N = p.n_photons;
    const Complex M = p.squeeze_m();
    const double g12 = p.effective_gamma12();
    const double G[2][2] = {{p.gamma, g12}, {g12, p.gamma}};

    // carrier terms cancel in the rotating frame; only the exchange part stays
    const Matrix4c H = p.omega12 * (atom_raising(0) * atom_lowering(1) +
                                    atom_raising(1) * atom_lowering(0));

    Matrix4c W = Matrix4c::Zero();
    Matrix16c jumps = Matrix16c::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const Matrix4c& sp_i = atom_raising(i);
            const Matrix4c& sm_i = atom_lowering(i);
            const Matrix4c& sp_j = atom_raising(j);
            const Matrix4c& sm_j = atom_lowering(j);
            W += G[i][j] * ((1.0 + N) * sp_i * sm_j + N * sm_i * sp_j -
                            M * sp_i * sp_j - std::conj(M) * sm_i * sm_j);
            jumps += G[i][j] * ((1.0 + N) * sandwich(sm_i, sp_j) + N * sandwich(sp_i, sm_j) -
                                M * sandwich(sp_i, sp_j) - std::conj(M) * sandwich(sm_i, sm_j));
        }
    }

    Superoperator L;
    L.params = p;
    L.generator = -kI * (spre(H) - spost(H)) - 0.5 * (spre(W) + spost(W)) + jumps;
    return L;
}

Matrix16c propagator(const Superoperator& L, double t) {
    return (L.generator * t).exp();
}

Matrix16c propagator_eig(const Superoperator& L, double t) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Eigen::MatrixXcd(L.generator));
    const Eigen::MatrixXcd V = es.eigenvectors();
    Eigen::VectorXcd ev = es.eigenvalues();
    for (int k = 0; k < ev.size(); ++k) ev[k] = std::exp(ev[k] * t);
    Eigen::MatrixXcd out = V * ev.asDiagonal() * V.inverse();
    return Matrix16c(out);
}

DensityMatrix evolve_oracle(const Superoperator& L, const DensityMatrix& rho0, double t) {
    if (t < 0.0) throw DomainError("evolution time must be >= 0");
    const Matrix4c bare = collective_to_bare(rho0.m);
    const Vector16c out = propagator(L, t) * vec(bare);
    DensityMatrix d;
    d.m = bare_to_collective(unvec(out));
    return d;
}

Complex two_time_correlation_oracle(const Superoperator& L, const DensityMatrix& rho_t,
                                    int i, int j, double tau) {
    if (tau < 0.0) throw DomainError("tau must be >= 0");
    const Matrix4c bare = collective_to_bare(rho_t.m);
    const Matrix4c chi0 = bare * atom_raising(i);
    const Matrix4c chi = unvec(propagator(L, tau) * vec(chi0));
    return (atom_lowering(j) * chi).trace();
}

Complex weighted_correlation_oracle(const Superoperator& L, const DensityMatrix& rho_t,
                                    double tau) {
    const double g12 = L.params.effective_gamma12();
    const double G[2][2] = {{L.params.gamma, g12}, {g12, L.params.gamma}};
    const Matrix4c bare = collective_to_bare(rho_t.m);
    const Matrix16c U = propagator(L, tau);
    Complex total = 0.0;
    for (int i = 0; i < 2; ++i) {
        const Matrix4c chi = unvec(U * vec(Matrix4c(bare * atom_raising(i))));
        for (int j = 0; j < 2; ++j)
            total += G[i][j] * (atom_lowering(j) * chi).trace();
    }
    return total;
}

Matrix16c collective_generator(const Superoperator& L) {
    const Matrix4c T = collective_to_bare_matrix().cast<Complex>();
    const Matrix16c K = kron(T, T);  // vec_bare = K vec_coll for real orthogonal T
    return K.adjoint() * L.generator * K;
}

} // namespace phasespec
