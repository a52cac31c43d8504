#include <doctest.h>

#include <numbers>
#include <random>

#include "phasespec/correlation.hpp"
#include "phasespec/figures.hpp"
#include "phasespec/liouville.hpp"

using namespace phasespec;

namespace {

std::mt19937 rng(20260810);

DensityMatrix random_density() {
    std::normal_distribution<double> gauss;
    Matrix4c x;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) x(r, c) = Complex(gauss(rng), gauss(rng));
    Matrix4c rho = x * x.adjoint();
    rho /= rho.trace();
    DensityMatrix d;
    d.m = rho;
    return d;
}

SystemParams random_params() {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    SystemParams p;
    p.n_photons = 1.5 * uni(rng);
    p.m_abs = uni(rng) * p.max_m_abs();
    p.gamma12 = 2.0 * uni(rng) - 1.0;
    p.omega12 = 30.0 * uni(rng);
    p.phi_s = 2.0 * std::numbers::pi * uni(rng);
    p.phi_b = 2.0 * std::numbers::pi * uni(rng);
    return p;
}

const SystemParams fig2 = figure_spec("fig2").curves[0].params;
const SystemParams fig5 = figure_spec("fig5").curves[0].params;

} // namespace

TEST_CASE("generator preserves the trace functional") {
    const Superoperator L = build_liouvillian(fig5);
    // the trace row annihilates every matrix: columns of L summed over the
    // diagonal positions of the output must vanish
    for (int col = 0; col < 16; ++col) {
        Complex sum = 0.0;
        for (int d = 0; d < 4; ++d) sum += L.generator(coll_vec_index(d, d), col);
        CHECK(std::abs(sum) < 1e-12);
    }
}

TEST_CASE("identity propagation and trace conservation") {
    const Superoperator L = build_liouvillian(fig2);
    const DensityMatrix rho0 = bell_initial_state(fig2.phi_b);
    const DensityMatrix same = evolve_oracle(L, rho0, 0.0);
    CHECK((same.m - rho0.m).cwiseAbs().maxCoeff() < 1e-14);

    DensityMatrix mixed;
    mixed.m = 0.25 * Matrix4c::Identity();
    for (double t : {0.5, 2.0, 10.0})
        CHECK(evolve_oracle(L, mixed, t).trace_defect() < 1e-12);
}

TEST_CASE("hermiticity and positivity are preserved") {
    for (int trial = 0; trial < 6; ++trial) {
        const SystemParams p = random_params();
        const Superoperator L = build_liouvillian(p);
        const DensityMatrix rho0 = random_density();
        for (double t : {0.1, 1.0, 5.0, 10.0}) {
            const DensityMatrix rt = evolve_oracle(L, rho0, t);
            CHECK(rt.hermiticity_defect() < 1e-10);
            CHECK(rt.trace_defect() < 1e-10);
            CHECK(rt.min_eigenvalue() > -1e-8);
        }
    }
}

TEST_CASE("uncoupled vacuum limit factorizes") {
    SystemParams p;  // N = M = gamma12 = 0
    const Superoperator L = build_liouvillian(p);

    // product initial state with known single-atom decay
    const Complex c1{0.4, 0.2}, c2{-0.1, 0.3};
    Eigen::Matrix2cd r1, r2;
    r1 << 0.7, c1, std::conj(c1), 0.3;
    r2 << 0.2, c2, std::conj(c2), 0.8;
    auto decay = [](const Eigen::Matrix2cd& r, double t) {
        Eigen::Matrix2cd out;
        out(0, 0) = r(0, 0) * std::exp(-t);
        out(0, 1) = r(0, 1) * std::exp(-t / 2.0);
        out(1, 0) = std::conj(out(0, 1));
        out(1, 1) = 1.0 - out(0, 0);
        return out;
    };
    auto tensor = [](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
        Matrix4c m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        return m;
    };

    DensityMatrix rho0;
    rho0.m = bare_to_collective(tensor(r1, r2));
    for (double t : {0.3, 1.0, 2.5}) {
        const Matrix4c expect = tensor(decay(r1, t), decay(r2, t));
        const Matrix4c got = collective_to_bare(evolve_oracle(L, rho0, t).m);
        CHECK((got - expect).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("scaling-and-squaring agrees with the eigendecomposition route") {
    const Superoperator L = build_liouvillian(fig5);
    for (double t : {0.3, 2.0}) {
        const Matrix16c a = propagator(L, t);
        const Matrix16c b = propagator_eig(L, t);
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("semigroup property") {
    const Superoperator L = build_liouvillian(fig5);
    const Matrix16c u1 = propagator(L, 0.7);
    const Matrix16c u2 = propagator(L, 1.6);
    const Matrix16c u12 = propagator(L, 2.3);
    CHECK((u2 * u1 - u12).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("no coupling between the two cascade channels") {
    for (const SystemParams& p : {fig2, fig5, random_params()}) {
        const Matrix16c G = collective_generator(build_liouvillian(p));
        const int sym[4] = {coll_vec_index(IE, IS), coll_vec_index(IS, IG),
                            coll_vec_index(IS, IE), coll_vec_index(IG, IS)};
        const int asym[4] = {coll_vec_index(IE, IA), coll_vec_index(IA, IG),
                             coll_vec_index(IA, IE), coll_vec_index(IG, IA)};
        for (int r : sym)
            for (int c : asym) {
                CHECK(std::abs(G(r, c)) < 1e-14);
                CHECK(std::abs(G(c, r)) < 1e-14);
            }
    }
}

TEST_CASE("reduced generators match the full generator entry by entry") {
    for (const SystemParams& p : {fig2, fig5, figure_spec("fig7").curves[0].params,
                                  random_params(), random_params()}) {
        const Matrix16c G = collective_generator(build_liouvillian(p));

        // channel blocks
        const int sym[4] = {coll_vec_index(IE, IS), coll_vec_index(IS, IG),
                            coll_vec_index(IS, IE), coll_vec_index(IG, IS)};
        const int asym[4] = {coll_vec_index(IE, IA), coll_vec_index(IA, IG),
                             coll_vec_index(IA, IE), coll_vec_index(IG, IA)};
        const Matrix4c As = channel_generator(p, Channel::symmetric);
        const Matrix4c Aa = channel_generator(p, Channel::antisymmetric);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                CHECK(std::abs(G(sym[r], sym[c]) - As(r, c)) < 1e-12);
                CHECK(std::abs(G(asym[r], asym[c]) - Aa(r, c)) < 1e-12);
            }

        // population block: rotate (eg, ge) into (u, v), eliminate gg by trace
        const int ee = coll_vec_index(IE, IE), ss = coll_vec_index(IS, IS),
                  aa = coll_vec_index(IA, IA), gg = coll_vec_index(IG, IG),
                  eg = coll_vec_index(IE, IG), ge = coll_vec_index(IG, IE);
        const Complex ph = std::polar(1.0, p.phi_s);
        const int vars[4] = {ee, ss, aa, eg};
        const Eigen::Matrix4d A = population_generator(p);
        const Eigen::Vector4d b = population_drive(p);
        for (int r = 0; r < 4; ++r) {
            // d/dt of (ee, ss, aa, u): the u row is Re(e^{-i phi_s} d(eg)/dt)
            auto coeff = [&](int col) {
                Complex out;
                if (r < 3) {
                    out = G(vars[r], col);
                } else {
                    out = 0.5 * (std::conj(ph) * G(eg, col) + ph * G(ge, col));
                }
                return out;
            };
            // columns: ee, ss, aa with gg eliminated; u from (eg, ge)
            for (int c = 0; c < 3; ++c)
                CHECK(std::abs((coeff(vars[c]) - coeff(gg)).real() - A(r, c)) < 1e-12);
            const Complex cu = coeff(eg) * ph + coeff(ge) * std::conj(ph);
            CHECK(std::abs(cu.real() - A(r, 3)) < 1e-12);
            CHECK(std::abs(coeff(gg).real() - b(r)) < 1e-12);
            // the imaginary coherence part never feeds the population block
            const Complex cv = Complex(0, 1) * (coeff(eg) * ph - coeff(ge) * std::conj(ph));
            CHECK(std::abs(cv) < 1e-12);
        }

        // and it relaxes on its own at n * gamma: the v row of the rotated
        // (eg, ge) pair has no source other than itself
        auto row_v = [&](int col) {
            return Complex(0, -0.5) * (std::conj(ph) * G(eg, col) - ph * G(ge, col));
        };
        for (int col : {ee, ss, aa, gg})
            CHECK(std::abs(row_v(col)) < 1e-12);
        const Complex vu = row_v(eg) * ph + row_v(ge) * std::conj(ph);
        const Complex vv = Complex(0, 1) * (row_v(eg) * ph - row_v(ge) * std::conj(ph));
        CHECK(std::abs(vu) < 1e-12);
        CHECK(std::abs(vv.real() + p.n() * p.gamma) < 1e-12);
    }
}

TEST_CASE("regression reduces to one-time averages at tau = 0") {
    const Superoperator L = build_liouvillian(fig5);
    const DensityMatrix rho = evolve_oracle(L, bell_initial_state(fig5.phi_b), 0.8);
    // single-atom excited population
    const Matrix4c bare = collective_to_bare(rho.m);
    for (int i : {0, 1}) {
        const Complex got = two_time_correlation_oracle(L, rho, i, i, 0.0);
        const Complex expect = (atom_raising(i) * atom_lowering(i) * bare).trace();
        CHECK(std::abs(got - expect) < 1e-12);
    }
    // weighted sum against the populations
    const CollectiveState s = rho.project(fig5);
    const double g12 = fig5.effective_gamma12();
    const double expect = (fig5.gamma + g12) * (s.rho_ee + s.rho_ss) +
                          (fig5.gamma - g12) * (s.rho_ee + s.rho_aa);
    CHECK(std::abs(weighted_correlation_oracle(L, rho, 0.0) - expect) < 1e-12);
}

TEST_CASE("steady state forgets the initial state") {
    for (const SystemParams& p : {fig5, figure_spec("fig7").curves[0].params}) {
        const Superoperator L = build_liouvillian(p);
        const DensityMatrix a = evolve_oracle(L, bell_initial_state(0.0), 80.0);
        const DensityMatrix b = evolve_oracle(L, random_density(), 80.0);
        CHECK((a.m - b.m).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("matrix exponential agrees with a fine fixed-step reference integration") {
    const Superoperator L = build_liouvillian(fig2);
    const DensityMatrix rho0 = bell_initial_state(fig2.phi_b);
    Matrix4c bare = collective_to_bare(rho0.m);
    Vector16c v = Eigen::Map<Vector16c>(bare.data());

    const int steps = 20000;
    const double h = 1.0 / steps;
    const Eigen::Matrix<Complex, 16, 16>& G = L.generator;
    for (int k = 0; k < steps; ++k) {
        const Vector16c k1 = G * v;
        const Vector16c k2 = G * (v + 0.5 * h * k1);
        const Vector16c k3 = G * (v + 0.5 * h * k2);
        const Vector16c k4 = G * (v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    const DensityMatrix direct = evolve_oracle(L, rho0, 1.0);
    Matrix4c ref_bare = Eigen::Map<const Matrix4c>(v.data());
    const Matrix4c ref = bare_to_collective(ref_bare);
    CHECK((direct.m - ref).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("consistency away from the unit decay rate") {
    SystemParams p;
    p.gamma = 0.7;
    p.gamma12 = 0.35;
    p.omega12 = 9.0;
    p.n_photons = 0.4;
    p.m_abs = 0.5;
    p.phi_s = 0.3;
    p.phi_b = 1.1;
    const Superoperator L = build_liouvillian(p);
    const DensityMatrix rho0 = bell_initial_state(p.phi_b);
    const CollectiveState s0 = rho0.project(p);
    for (double t : {0.5, 2.0, 6.0}) {
        const CollectiveState fast = evolve_populations(p, s0, t);
        const CollectiveState exact = evolve_oracle(L, rho0, t).project(p);
        CHECK(std::abs(fast.rho_ee - exact.rho_ee) < 1e-10);
        CHECK(std::abs(fast.rho_u - exact.rho_u) < 1e-10);
        CHECK(std::abs(fast.rho_v - exact.rho_v) < 1e-10);
    }
    const DensityMatrix rho_t = evolve_oracle(L, rho0, 0.9);
    const Complex oracle = weighted_correlation_oracle(L, rho_t, 1.2);
    CHECK(std::abs(correlation(p, rho0, 0.9, 2.1) - oracle) < 1e-10);
}
