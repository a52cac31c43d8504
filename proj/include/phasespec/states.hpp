// states.hpp - collective-basis states, density matrices, channel vectors
//
// Basis conventions (fixed project-wide):
//   bare product basis order: {e1e2, e1g2, g1e2, g1g2}
//   collective basis order:   {e, s, a, g} with
//     |s> = (|e1 g2> + |g1 e2>)/sqrt(2),  |a> = (|e1 g2> - |g1 e2>)/sqrt(2)
// Density matrices are stored in the collective basis and in the frame
// rotating at the squeezed-field carrier.

#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "phasespec/params.hpp"

namespace phasespec {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;

enum CollectiveIndex { IE = 0, IS = 1, IA = 2, IG = 3 };

// collective kets expressed in bare coordinates; orthogonal, T^-1 = T^T
inline const Eigen::Matrix4d& collective_to_bare_matrix() {
    static const Eigen::Matrix4d T = [] {
        const double r = 1.0 / std::numbers::sqrt2;
        Eigen::Matrix4d t = Eigen::Matrix4d::Zero();
        t(0, IE) = 1.0;
        t(1, IS) = r;
        t(2, IS) = r;
        t(1, IA) = r;
        t(2, IA) = -r;
        t(3, IG) = 1.0;
        return t;
    }();
    return T;
}

inline Matrix4c collective_to_bare(const Matrix4c& rho_coll) {
    const auto& T = collective_to_bare_matrix();
    return T * rho_coll * T.transpose();
}

inline Matrix4c bare_to_collective(const Matrix4c& rho_bare) {
    const auto& T = collective_to_bare_matrix();
    return T.transpose() * rho_bare * T;
}

// One-time dynamical variables: three populations plus the rotating-frame
// two-photon coherence split as rho_eg = exp(i phi_s) (rho_u + i rho_v).
// rho_gg is reconstructed from the trace.
struct CollectiveState {
    double rho_ee{0.0};
    double rho_ss{0.0};
    double rho_aa{0.0};
    double rho_u{0.0};
    double rho_v{0.0};

    double rho_gg() const { return 1.0 - rho_ee - rho_ss - rho_aa; }
    double coherence_abs() const { return std::hypot(rho_u, rho_v); }
};

struct DensityMatrix {
    Matrix4c m{Matrix4c::Zero()};  // collective basis, rotating frame

    Complex operator()(int r, int c) const { return m(r, c); }

    double hermiticity_defect() const {
        return (m - m.adjoint()).cwiseAbs().maxCoeff();
    }
    double trace_defect() const { return std::abs(m.trace() - 1.0); }
    double min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<Matrix4c> es(0.5 * (m + m.adjoint()));
        return es.eigenvalues().minCoeff();
    }
    // invariant tolerances: hermitian 1e-12, trace 1e-10, positivity -1e-8
    bool is_physical(double herm_tol = 1e-12, double trace_tol = 1e-10,
                     double positivity_tol = 1e-8) const {
        return hermiticity_defect() <= herm_tol && trace_defect() <= trace_tol &&
               min_eigenvalue() >= -positivity_tol;
    }
    double off_x_defect() const {
        double worst = 0.0;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                const bool on_x = (r == c) || (r == IE && c == IG) || (r == IG && c == IE);
                if (!on_x) worst = std::max(worst, std::abs(m(r, c)));
            }
        return worst;
    }

    CollectiveState project(const SystemParams& p) const {
        const Complex eg_rot = m(IE, IG) * std::polar(1.0, -p.phi_s);
        return {m(IE, IE).real(), m(IS, IS).real(), m(IA, IA).real(),
                eg_rot.real(), eg_rot.imag()};
    }

    static DensityMatrix from_state(const CollectiveState& s, const SystemParams& p) {
        DensityMatrix d;
        d.m(IE, IE) = s.rho_ee;
        d.m(IS, IS) = s.rho_ss;
        d.m(IA, IA) = s.rho_aa;
        d.m(IG, IG) = s.rho_gg();
        d.m(IE, IG) = std::polar(1.0, p.phi_s) * Complex(s.rho_u, s.rho_v);
        d.m(IG, IE) = std::conj(d.m(IE, IG));
        return d;
    }
};

// |psi> = (|g> + e^{i phi_b} |e>)/sqrt(2)
inline DensityMatrix bell_initial_state(double phi_b) {
    DensityMatrix d;
    d.m(IE, IE) = 0.5;
    d.m(IG, IG) = 0.5;
    d.m(IE, IG) = 0.5 * std::polar(1.0, phi_b);
    d.m(IG, IE) = std::conj(d.m(IE, IG));
    return d;
}

enum class Channel { symmetric, antisymmetric };

// Four coherences of one decay cascade, ordered
//   symmetric:     (rho_es, rho_sg, rho_se, rho_gs)
//   antisymmetric: (rho_ea, rho_ag, rho_ae, rho_ga)
// For a physical density-matrix slice the last two are conjugates of the
// first two; regression seeds deliberately break that.
struct ChannelCoherenceVector {
    Channel channel{Channel::symmetric};
    Vector4c v{Vector4c::Zero()};

    double conjugacy_defect() const {
        return std::max(std::abs(v[2] - std::conj(v[0])),
                        std::abs(v[3] - std::conj(v[1])));
    }
};

} // namespace phasespec
