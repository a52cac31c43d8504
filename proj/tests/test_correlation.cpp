#include <doctest.h>

#include <random>

#include "phasespec/correlation.hpp"
#include "phasespec/figures.hpp"
#include "phasespec/liouville.hpp"

using namespace phasespec;

namespace {
const SystemParams fig2 = figure_spec("fig2").curves[0].params;
const SystemParams fig5 = figure_spec("fig5").curves[0].params;
} // namespace

TEST_CASE("equal-time value is the weighted emission rate") {
    const DensityMatrix rho0 = bell_initial_state(fig5.phi_b);
    CHECK(std::abs(correlation(fig5, rho0, 0.0, 0.0) - Complex(fig5.gamma)) < 1e-14);

    for (double t : {0.4, 1.3}) {
        const CollectiveState s = evolve_populations(fig5, rho0.project(fig5), t);
        const double g12 = fig5.effective_gamma12();
        const double expect = (fig5.gamma + g12) * (s.rho_ee + s.rho_ss) +
                              (fig5.gamma - g12) * (s.rho_ee + s.rho_aa);
        const Complex got = correlation(fig5, rho0, t, t);
        CHECK(std::abs(got.imag()) < 1e-13);
        CHECK(got.real() == doctest::Approx(expect).epsilon(1e-12));
        CHECK(got.real() >= 0.0);
    }
}

TEST_CASE("regression seeds") {
    const CollectiveState s{0.3, 0.2, 0.1, 0.15, -0.05};
    SystemParams p = fig5;
    p.phi_s = 0.6;
    const auto sym = regression_seed(Channel::symmetric, s, p);
    const auto asym = regression_seed(Channel::antisymmetric, s, p);
    const Complex ge = std::polar(1.0, -p.phi_s) * Complex(0.15, 0.05);
    CHECK(sym.v[0] == Complex(0.3));
    CHECK(sym.v[1] == Complex(0.2));
    CHECK(sym.v[2] == Complex(0.0));  // not a conjugated population
    CHECK(std::abs(sym.v[3] - ge) < 1e-15);
    CHECK(asym.v[0] == Complex(-0.3));
    CHECK(asym.v[1] == Complex(0.1));
    CHECK(asym.v[2] == Complex(0.0));
    CHECK(std::abs(asym.v[3] + ge) < 1e-15);
}

TEST_CASE("hermitian kernel") {
    const DensityMatrix rho0 = bell_initial_state(fig5.phi_b);
    for (auto [t1, t2] : {std::pair{0.2, 1.1}, {1.5, 0.4}, {2.0, 2.0}}) {
        const Complex a = correlation(fig5, rho0, t1, t2);
        const Complex b = correlation(fig5, rho0, t2, t1);
        CHECK(std::abs(a - std::conj(b)) < 1e-15);
    }
}

TEST_CASE("channel route equals the regression theorem") {
    for (const SystemParams& p : {fig2, fig5}) {
        const Superoperator L = build_liouvillian(p);
        const DensityMatrix rho0 = bell_initial_state(p.phi_b);
        double worst = 0.0;
        for (double t1 : {0.0, 0.7, 2.1}) {
            const DensityMatrix rho_t = evolve_oracle(L, rho0, t1);
            for (double tau : {0.0, 0.4, 1.2, 2.6}) {
                const Complex oracle = weighted_correlation_oracle(L, rho_t, tau);
                const Complex fast = correlation(p, rho0, t1, t1 + tau);
                worst = std::max(worst, std::abs(oracle - fast));
            }
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("kernel is positive semidefinite on small grids") {
    const DensityMatrix rho0 = bell_initial_state(fig5.phi_b);
    const int n = 12;
    const double h = 0.25;
    const CorrelationGrid grid(fig5, rho0, (n - 1) * h, h);
    Eigen::MatrixXcd K(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) K(i, j) = grid.at(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(K);
    CHECK(es.eigenvalues().minCoeff() > -1e-8);
}

TEST_CASE("pure exponential envelopes in the plain-vacuum limit") {
    SystemParams p;
    p.gamma12 = 0.4;
    p.omega12 = 5.0;

    // seed the lower symmetric coherence only: single eigenmode, since the
    // upward feed vanishes at zero photon number and there is no squeezing
    const CollectiveState only_ss{0.0, 1.0, 0.0, 0.0, 0.0};
    auto v = regression_seed(Channel::symmetric, only_ss, p);
    const double tau = 1.3;
    const auto out = evolve_channel(p, Channel::symmetric, v, tau);
    CHECK(std::abs(out.v[1] -
                   std::exp(Complex(-0.5 * (1.0 + p.gamma12), -p.omega12) * tau)) < 1e-10);
    CHECK(std::abs(out.v[0]) < 1e-14);

    // upper antisymmetric coherence from the doubly excited population
    const CollectiveState only_ee{1.0, 0.0, 0.0, 0.0, 0.0};
    auto w = regression_seed(Channel::antisymmetric, only_ee, p);
    const auto wout = evolve_channel(p, Channel::antisymmetric, w, tau);
    CHECK(std::abs(wout.v[0] +
                   std::exp(Complex(-0.5 * (3.0 - p.gamma12), -p.omega12) * tau)) < 1e-10);
}

TEST_CASE("grid caching agrees with the single-shot path") {
    const DensityMatrix rho0 = bell_initial_state(fig5.phi_b);
    const CorrelationGrid grid(fig5, rho0, 2.0, 0.1);
    for (auto [i, j] : {std::pair{0, 5}, {3, 17}, {20, 20}, {14, 2}}) {
        const Complex direct = correlation(fig5, rho0, i * 0.1, j * 0.1);
        CHECK(std::abs(grid.at(i, j) - direct) < 1e-12);
    }
}

TEST_CASE("kernel stays positive semidefinite at random parameters") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 3; ++trial) {
        SystemParams p;
        p.n_photons = 1.2 * uni(rng);
        p.m_abs = uni(rng) * p.max_m_abs();
        p.gamma12 = 2.0 * uni(rng) - 1.0;
        p.omega12 = 15.0 * uni(rng);
        p.phi_s = 6.28 * uni(rng);
        p.phi_b = 6.28 * uni(rng);
        const int n = 8;
        const CorrelationGrid grid(p, bell_initial_state(p.phi_b), (n - 1) * 0.3, 0.3);
        Eigen::MatrixXcd K(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) K(i, j) = grid.at(i, j);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(K);
        CHECK(es.eigenvalues().minCoeff() > -1e-8);
    }
}
