#include "phasespec/concurrence.hpp"

#include <algorithm>
#include <array>

namespace phasespec {

namespace {

// sigma_y (x) sigma_y in the bare product basis: real anti-diagonal (-1,1,1,-1)
const Matrix4c& spin_flip() {
    static const Matrix4c y = [] {
        Matrix4c m = Matrix4c::Zero();
        m(0, 3) = -1.0;
        m(1, 2) = 1.0;
        m(2, 1) = 1.0;
        m(3, 0) = -1.0;
        return m;
    }();
    return y;
}

Matrix4c psd_sqrt(const Matrix4c& m) {
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(0.5 * (m + m.adjoint()));
    Eigen::Vector4d ev = es.eigenvalues();
    for (int k = 0; k < 4; ++k) ev[k] = std::sqrt(std::max(ev[k], 0.0));
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace

double concurrence_general(const DensityMatrix& rho) {
    const Matrix4c bare = collective_to_bare(rho.m);
    const Matrix4c root = psd_sqrt(bare);
    const Matrix4c b = root * spin_flip() * root.conjugate();
    Eigen::JacobiSVD<Matrix4c> svd(b);
    const Eigen::Vector4d s = svd.singularValues();  // descending
    return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

double concurrence_general_eig(const DensityMatrix& rho) {
    const Matrix4c bare = collective_to_bare(rho.m);
    const Matrix4c r = bare * spin_flip() * bare.conjugate() * spin_flip();
    Eigen::ComplexEigenSolver<Matrix4c> es(r);
    std::array<double, 4> lam{};
    for (int k = 0; k < 4; ++k) lam[k] = std::max(es.eigenvalues()[k].real(), 0.0);
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::max(0.0, std::sqrt(lam[0]) - std::sqrt(lam[1]) - std::sqrt(lam[2]) -
                             std::sqrt(lam[3]));
}

double concurrence_xstate(const DensityMatrix& rho, double off_x_tol) {
    if (rho.off_x_defect() > off_x_tol)
        throw NotXState("density matrix has off-X elements above tolerance");
    const double ee = rho.m(IE, IE).real();
    const double ss = rho.m(IS, IS).real();
    const double aa = rho.m(IA, IA).real();
    const double gg = rho.m(IG, IG).real();
    const double c1 = 2.0 * std::abs(rho.m(IE, IG)) - (ss + aa);
    const double c2 = std::abs(ss - aa) - 2.0 * std::sqrt(std::max(gg * ee, 0.0));
    return std::max({0.0, c1, c2});
}

ConcurrenceBranches concurrence_branches(const CollectiveState& s) {
    const double c1 = 2.0 * s.coherence_abs() - (s.rho_ss + s.rho_aa);
    const double c2 = std::abs(s.rho_ss - s.rho_aa) -
                      2.0 * std::sqrt(std::max(s.rho_gg() * s.rho_ee, 0.0));
    return {c1, c2};
}

EsdTimes esd_times(const SystemParams& p, const DensityMatrix& rho0, double t_max) {
    if (!(t_max > 0.0)) throw DomainError("t_max must be positive");
    const CollectiveState s0 = rho0.project(p);
    auto signed_c = [&](double t) {
        const auto br = concurrence_branches(evolve_populations(p, s0, t));
        return std::max(br.c1, br.c2);
    };
    auto bisect = [&](double lo, double hi) {
        while (hi - lo > 1e-4) {
            const double mid = 0.5 * (lo + hi);
            if ((signed_c(lo) > 0.0) == (signed_c(mid) > 0.0))
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };

    EsdTimes out;
    const double step = 0.01;
    double prev = signed_c(0.0);
    for (double t = step; t <= t_max + 1e-12; t += step) {
        const double cur = signed_c(t);
        if (prev > 0.0 && cur <= 0.0)
            out.death_times.push_back(bisect(t - step, t));
        else if (prev <= 0.0 && cur > 0.0)
            out.revival_times.push_back(bisect(t - step, t));
        prev = cur;
    }
    out.steady_value = std::max(0.0, signed_c(t_max));
    return out;
}

} // namespace phasespec
