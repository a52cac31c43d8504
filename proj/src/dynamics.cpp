#include "phasespec/dynamics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace phasespec {

Eigen::Matrix4d population_generator(const SystemParams& p) {
    const double g = p.gamma;
    const double n = p.n();
    const double a = p.a();
    const double m = p.m_abs;
    Eigen::Matrix4d A;
    A << -(n + 1) * g, 0.5 * (n - 1) * (1 + a) * g, 0.5 * (n - 1) * (1 - a) * g, 2 * m * a * g,
        (1 + a) * g, -0.5 * (1 + a) * (3 * n - 1) * g, -0.5 * (1 + a) * (n - 1) * g, -2 * (1 + a) * m * g,
        (1 - a) * g, -0.5 * (1 - a) * (n - 1) * g, -0.5 * (1 - a) * (3 * n - 1) * g, 2 * (1 - a) * m * g,
        0.0, -m * (1 + 2 * a) * g, m * (1 - 2 * a) * g, -n * g;
    return A;
}

Eigen::Vector4d population_drive(const SystemParams& p) {
    const double g = p.gamma;
    const double n = p.n();
    const double a = p.a();
    return {0.0, 0.5 * (1 + a) * (n - 1) * g, 0.5 * (1 - a) * (n - 1) * g, a * p.m_abs * g};
}

Matrix6d augmented_population_generator(const SystemParams& p) {
    Matrix6d aug = Matrix6d::Zero();
    aug.topLeftCorner<4, 4>() = population_generator(p);
    aug.block<4, 1>(0, 4) = population_drive(p);
    aug(5, 5) = -p.n() * p.gamma;
    return aug;
}

CollectiveState evolve_populations(const SystemParams& p, const CollectiveState& s0, double t) {
    if (t < 0.0) throw DomainError("evolution time must be >= 0");
    Eigen::Matrix<double, 6, 1> z;
    z << s0.rho_ee, s0.rho_ss, s0.rho_aa, s0.rho_u, 1.0, s0.rho_v;
    const Eigen::Matrix<double, 6, 1> out = (augmented_population_generator(p) * t).exp() * z;
    return {out[0], out[1], out[2], out[3], out[5]};
}

Matrix4c channel_generator(const SystemParams& p, Channel ch) {
    const double g = p.gamma;
    const double n = p.n();
    const double a = p.a();
    const Complex M = p.squeeze_m();
    const Complex iw{0.0, p.omega12};

    // symmetric channel: rates built from (1+a), upper coherence rotates at
    // +omega12; antisymmetric: (1-a), opposite rotation, and both inter-level
    // couplings flip sign with the antisymmetric lowering operator.
    const double c = (ch == Channel::symmetric) ? 1.0 + a : 1.0 - a;
    const double two_pm_a = (ch == Channel::symmetric) ? 2.0 + a : 2.0 - a;
    const double sgn = (ch == Channel::symmetric) ? 1.0 : -1.0;
    const Complex rot = (ch == Channel::symmetric) ? iw : -iw;

    const Complex d_upper = -(0.5 * g * (n * two_pm_a + 1.0) - rot);
    const Complex d_lower = -(0.5 * g * (n * two_pm_a - 1.0) + rot);
    const double k_down = sgn * 0.5 * g * (n - 1.0) * c;  // lower -> upper feed
    const double k_up = sgn * 0.5 * g * (n + 1.0) * c;    // upper -> lower feed

    Matrix4c A;
    A << d_upper, k_down, -M * g * c, M * g * a,
        k_up, d_lower, M * g * a, -M * g * c,
        -std::conj(M) * g * c, std::conj(M) * g * a, std::conj(d_upper), k_down,
        std::conj(M) * g * a, -std::conj(M) * g * c, k_up, std::conj(d_lower);
    return A;
}

ChannelCoherenceVector evolve_channel(const SystemParams& p, Channel ch,
                                      const ChannelCoherenceVector& v0, double tau) {
    if (tau < 0.0) throw DomainError("tau must be >= 0");
    ChannelCoherenceVector out;
    out.channel = ch;
    out.v = (channel_generator(p, ch) * tau).exp() * v0.v;
    return out;
}

SteadyState steady_state(const SystemParams& p) {
    const Eigen::Matrix4d A = population_generator(p);
    const Eigen::Vector4d b = population_drive(p);
    const double a = p.a();

    Eigen::Vector4d x;
    const double degeneracy_tol = 1e-12;
    if (std::abs(1.0 - std::abs(a)) < degeneracy_tol) {
        // one channel is frozen: its population never moves, so the full
        // matrix is singular. Pin that population at 0 and solve the rest.
        const int frozen = (a > 0.0) ? 2 : 1;  // rho_aa for a=+1, rho_ss for a=-1
        Eigen::Matrix3d As;
        Eigen::Vector3d bs;
        int rr = 0;
        for (int r : {0, 1, 2, 3}) {
            if (r == frozen) continue;
            int cc = 0;
            for (int c : {0, 1, 2, 3}) {
                if (c == frozen) continue;
                As(rr, cc++) = A(r, c);
            }
            bs[rr++] = b[r];
        }
        Eigen::FullPivLU<Eigen::Matrix3d> lu(As);
        if (!lu.isInvertible())
            throw SingularSystem("population fixed point is not unique");
        const Eigen::Vector3d xs = lu.solve(-bs);
        x = Eigen::Vector4d::Zero();
        int k = 0;
        for (int r : {0, 1, 2, 3})
            if (r != frozen) x[r] = xs[k++];
    } else {
        Eigen::FullPivLU<Eigen::Matrix4d> lu(A);
        if (!lu.isInvertible())
            throw SingularSystem("population fixed point is not unique");
        x = lu.solve(-b);
    }

    SteadyState out;
    out.state = {x[0], x[1], x[2], x[3], 0.0};  // rho_v relaxes to zero
    out.rho_eg = std::polar(1.0, p.phi_s) * Complex(x[3], 0.0);
    return out;
}

} // namespace phasespec
