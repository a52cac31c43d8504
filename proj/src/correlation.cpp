#include "phasespec/correlation.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace phasespec {

ChannelCoherenceVector regression_seed(Channel ch, const CollectiveState& s,
                                       const SystemParams& p) {
    const Complex ge = std::polar(1.0, -p.phi_s) * Complex(s.rho_u, -s.rho_v);
    ChannelCoherenceVector out;
    out.channel = ch;
    if (ch == Channel::symmetric)
        out.v << s.rho_ee, s.rho_ss, 0.0, ge;
    else
        out.v << -s.rho_ee, s.rho_aa, 0.0, -ge;
    return out;
}

Complex correlation_from_channels(const SystemParams& p,
                                  const ChannelCoherenceVector& sym,
                                  const ChannelCoherenceVector& asym) {
    const double g12 = p.effective_gamma12();
    return (p.gamma + g12) * (sym.v[0] + sym.v[1]) +
           (p.gamma - g12) * (asym.v[1] - asym.v[0]);
}

Complex correlation(const SystemParams& p, const DensityMatrix& rho0,
                    double t1, double t2) {
    if (t1 < 0.0 || t2 < 0.0) throw DomainError("times must be >= 0");
    if (t2 < t1) return std::conj(correlation(p, rho0, t2, t1));
    const CollectiveState s1 = evolve_populations(p, rho0.project(p), t1);
    const double tau = t2 - t1;
    const auto sym = evolve_channel(p, Channel::symmetric,
                                    regression_seed(Channel::symmetric, s1, p), tau);
    const auto asym = evolve_channel(p, Channel::antisymmetric,
                                     regression_seed(Channel::antisymmetric, s1, p), tau);
    return correlation_from_channels(p, sym, asym);
}

CorrelationGrid::CorrelationGrid(const SystemParams& p, const DensityMatrix& rho0,
                                 double t_max, double step)
    : params_(p), h_(step) {
    if (!(step > 0.0) || t_max < 0.0)
        throw DomainError("correlation grid needs step > 0 and t_max >= 0");
    n_ = static_cast<int>(std::lround(t_max / step)) + 1;
    c_.assign(static_cast<size_t>(n_) * n_, Complex{0.0, 0.0});
    states_.resize(n_);

    const Matrix6d pop_step = (augmented_population_generator(p) * h_).exp();
    const Matrix4c sym_step = (channel_generator(p, Channel::symmetric) * h_).exp();
    const Matrix4c asym_step = (channel_generator(p, Channel::antisymmetric) * h_).exp();

    const CollectiveState s0 = rho0.project(p);
    Eigen::Matrix<double, 6, 1> z;
    z << s0.rho_ee, s0.rho_ss, s0.rho_aa, s0.rho_u, 1.0, s0.rho_v;
    for (int i = 0; i < n_; ++i) {
        states_[i] = {z[0], z[1], z[2], z[3], z[5]};
        z = pop_step * z;
    }

    const double g12 = p.effective_gamma12();
    const double ws = p.gamma + g12;
    const double wa = p.gamma - g12;
    for (int i = 0; i < n_; ++i) {
        Vector4c vs = regression_seed(Channel::symmetric, states_[i], p).v;
        Vector4c va = regression_seed(Channel::antisymmetric, states_[i], p).v;
        c_[static_cast<size_t>(i) * n_ + i] = ws * (vs[0] + vs[1]) + wa * (va[1] - va[0]);
        for (int j = i + 1; j < n_; ++j) {
            vs = sym_step * vs;
            va = asym_step * va;
            const Complex c = ws * (vs[0] + vs[1]) + wa * (va[1] - va[0]);
            c_[static_cast<size_t>(i) * n_ + j] = c;
            c_[static_cast<size_t>(j) * n_ + i] = std::conj(c);
        }
    }
}

} // namespace phasespec
