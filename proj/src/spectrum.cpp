#include "phasespec/spectrum.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include <unsupported/Eigen/MatrixFunctions>

namespace phasespec {

namespace {

constexpr Complex kI{0.0, 1.0};

int worker_count(int requested, int jobs) {
    int n = requested;
    if (n <= 0) {
        if (const char* env = std::getenv("PHASESPEC_THREADS")) n = std::atoi(env);
        if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
        if (n <= 0) n = 1;
    }
    return std::max(1, std::min(n, jobs));
}

void require_increasing(const std::vector<double>& axis, const char* what) {
    for (size_t k = 1; k < axis.size(); ++k)
        if (!(axis[k] > axis[k - 1]))
            throw DomainError(std::string(what) + " must be strictly increasing");
}

int index_multiple(double value, double step, const char* what) {
    const double k = value / step;
    const double r = std::lround(k);
    if (std::abs(k - r) > 1e-6)
        throw DomainError(std::string(what) + " must be a multiple of the quadrature step");
    return static_cast<int>(r);
}

} // namespace

double default_quadrature_step(const SystemParams& p, double t_step, double abs_delta_max) {
    double bound = std::min(0.02 / p.gamma, 0.2 / p.gamma_d);
    if (abs_delta_max > 0.0) bound = std::min(bound, 0.1 / abs_delta_max);
    const int divisions = std::max(1, static_cast<int>(std::ceil(t_step / bound - 1e-12)));
    return t_step / divisions;
}

double physical_spectrum_from_cache(const CorrelationGrid& grid, double gamma_d,
                                    double omega_tilde, int time_index) {
    const int m = time_index;
    if (m == 0) return 0.0;
    const double h = grid.step();
    const double delta = omega_tilde * grid.params().gamma;

    // f_i = w_i exp(-(Gd + i delta)(t - t_i)); all exponents <= 0
    std::vector<Complex> f(m + 1);
    for (int i = 0; i <= m; ++i) {
        const double back = (m - i) * h;
        const double w = (i == 0 || i == m) ? 0.5 * h : h;
        f[i] = w * std::exp(-gamma_d * back) * std::exp(-kI * delta * back);
    }

    double diag = 0.0;
    Complex upper = 0.0;
    for (int i = 0; i <= m; ++i) {
        diag += std::norm(f[i]) * grid.at(i, i).real();
        Complex row = 0.0;
        for (int j = i + 1; j <= m; ++j) row += std::conj(f[j]) * grid.at(i, j);
        upper += f[i] * row;
    }
    return 2.0 * gamma_d * (diag + 2.0 * upper.real());
}

double physical_spectrum(const SystemParams& p, const DensityMatrix& rho0,
                         double omega_tilde, double t, double step) {
    if (t < 0.0) throw DomainError("t must be >= 0");
    if (t == 0.0) return 0.0;
    double h = (step > 0.0) ? step
                            : default_quadrature_step(p, std::min(t, 0.05),
                                                      std::abs(omega_tilde * p.gamma));
    const int m = std::max(1, static_cast<int>(std::ceil(t / h - 1e-9)));
    h = t / m;
    CorrelationGrid grid(p, rho0, t, h);
    return physical_spectrum_from_cache(grid, p.gamma_d, omega_tilde, m);
}

namespace {

// One sweep up the quadrature grid for a fixed detuning, emitting the double
// integral at every requested time index. Running sums carry the kernel's
// decaying exponentials, so the pass is O(points^2) total instead of
// O(points^2) per output time. Trapezoid edge weights are restored from the
// unit-weight accumulators at emission.
void spectrum_column(const CorrelationGrid& grid, double gamma_d, double delta,
                     const std::vector<int>& t_index, double* out, int out_stride) {
    const double h = grid.step();
    const int n = grid.points();
    const Complex zeta = std::exp(Complex(-gamma_d * h, -delta * h));
    const double q = std::norm(zeta);  // |zeta|^2

    Complex tri = 0.0;    // sum_{i<j<=m} zeta^{m-i} conj(zeta)^{m-j} C_ij
    Complex row0 = 0.0;   // i = 0 border of tri
    double diag = grid.at(0, 0).real();
    Complex zeta_m = 1.0; // zeta^m
    double q_m = 1.0;     // q^m

    size_t emit = 0;
    while (emit < t_index.size() && t_index[emit] == 0) {
        out[out_stride * static_cast<int>(emit)] = 0.0;
        ++emit;
    }

    std::vector<Complex> zpow(n);  // zeta^k
    zpow[0] = 1.0;
    for (int k = 1; k < n; ++k) zpow[k] = zpow[k - 1] * zeta;

    for (int m = 1; m < n; ++m) {
        const Complex* row_m = grid.row(m);  // row_m[i] = conj(C_im) for i < m
        Complex col_m = 0.0;
        for (int i = 0; i < m; ++i) col_m += zpow[m - i] * std::conj(row_m[i]);
        tri = q * tri + col_m;
        zeta_m *= zeta;
        q_m *= q;
        row0 = q * row0 + zeta_m * grid.at(0, m);
        diag = q * diag + grid.at(m, m).real();

        if (emit < t_index.size() && t_index[emit] == m) {
            const Complex corner = zeta_m * grid.at(0, m);
            const Complex upper = tri - 0.5 * row0 - 0.5 * col_m + 0.25 * corner;
            const double d = diag - 0.75 * (q_m * grid.at(0, 0).real() + grid.at(m, m).real());
            out[out_stride * static_cast<int>(emit)] =
                2.0 * gamma_d * h * h * (2.0 * upper.real() + d);
            ++emit;
        }
    }
    if (emit != t_index.size())
        throw DomainError("time axis extends past the correlation cache");
}

} // namespace

SpectrumGrid physical_spectrum_grid(const SystemParams& p, const DensityMatrix& rho0,
                                    const std::vector<double>& omega_axis,
                                    const std::vector<double>& time_axis,
                                    double step, int workers) {
    SpectrumGrid out;
    out.omega_axis = omega_axis;
    out.time_axis = time_axis;
    out.params = p;
    out.values.setZero(static_cast<int>(omega_axis.size()), static_cast<int>(time_axis.size()));
    if (omega_axis.empty() || time_axis.empty()) return out;
    require_increasing(omega_axis, "omega axis");
    require_increasing(time_axis, "time axis");

    const double t_max = time_axis.back();
    double delta_max = 0.0;
    for (double w : omega_axis) delta_max = std::max(delta_max, std::abs(w * p.gamma));
    const double h = (step > 0.0)
                         ? step
                         : default_quadrature_step(
                               p, time_axis.size() > 1 ? time_axis[1] - time_axis[0] : 0.05,
                               delta_max);
    std::vector<int> t_index(time_axis.size());
    for (size_t k = 0; k < time_axis.size(); ++k)
        t_index[k] = index_multiple(time_axis[k], h, "time axis value");

    const CorrelationGrid grid(p, rho0, t_max, h);

    const int n_omega = static_cast<int>(omega_axis.size());
    const int n_workers = worker_count(workers, n_omega);
    std::atomic<int> next{0};
    auto run = [&] {
        for (;;) {
            const int iw = next.fetch_add(1);
            if (iw >= n_omega) break;
            spectrum_column(grid, p.gamma_d, omega_axis[iw] * p.gamma, t_index,
                            out.values.data() + iw, n_omega);
        }
    };
    if (n_workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }
    return out;
}

double broadband_spectrum(const SystemParams& p, const DensityMatrix& rho0,
                          double omega_tilde, double t, double step) {
    if (t < 0.0) throw DomainError("t must be >= 0");
    if (t == 0.0) return 0.0;
    double h = (step > 0.0) ? step
                            : default_quadrature_step(p, std::min(t, 0.05),
                                                      std::abs(omega_tilde * p.gamma));
    const int m = std::max(1, static_cast<int>(std::ceil(t / h - 1e-9)));
    h = t / m;
    const double delta = omega_tilde * p.gamma;

    const CollectiveState s = evolve_populations(p, rho0.project(p), t);
    const Matrix4c sym_step = (channel_generator(p, Channel::symmetric) * h).exp();
    const Matrix4c asym_step = (channel_generator(p, Channel::antisymmetric) * h).exp();
    Vector4c vs = regression_seed(Channel::symmetric, s, p).v;
    Vector4c va = regression_seed(Channel::antisymmetric, s, p).v;
    const double g12 = p.effective_gamma12();
    const double ws = p.gamma + g12;
    const double wa = p.gamma - g12;

    Complex total = 0.5 * (ws * (vs[0] + vs[1]) + wa * (va[1] - va[0]));
    for (int k = 1; k <= m; ++k) {
        vs = sym_step * vs;
        va = asym_step * va;
        const Complex c = ws * (vs[0] + vs[1]) + wa * (va[1] - va[0]);
        total += (k == m ? 0.5 : 1.0) * std::exp(-kI * delta * (k * h)) * c;
    }
    return (total * h).real();
}

double line_shape_spectrum(const SystemParams& p, const CollectiveState& s,
                           double omega_tilde) {
    const double delta = omega_tilde * p.gamma;
    const double g12 = p.effective_gamma12();
    const double ws = p.gamma + g12;
    const double wa = p.gamma - g12;
    Complex total = 0.0;
    // a fully degenerate channel (weight 0) can hold a non-decaying mode whose
    // resolvent is singular; it never contributes, so skip it
    if (std::abs(ws) > 1e-14) {
        const Vector4c v = regression_seed(Channel::symmetric, s, p).v;
        const Matrix4c R = kI * delta * Matrix4c::Identity() - channel_generator(p, Channel::symmetric);
        const Vector4c y = R.fullPivLu().solve(v);
        total += ws * (y[0] + y[1]);
    }
    if (std::abs(wa) > 1e-14) {
        const Vector4c v = regression_seed(Channel::antisymmetric, s, p).v;
        const Matrix4c R = kI * delta * Matrix4c::Identity() - channel_generator(p, Channel::antisymmetric);
        const Vector4c y = R.fullPivLu().solve(v);
        total += wa * (y[1] - y[0]);
    }
    return total.real();
}

SpectrumGrid line_shape_grid(const SystemParams& p, const DensityMatrix& rho0,
                             const std::vector<double>& omega_axis,
                             const std::vector<double>& time_axis) {
    SpectrumGrid out;
    out.omega_axis = omega_axis;
    out.time_axis = time_axis;
    out.params = p;
    out.values.setZero(static_cast<int>(omega_axis.size()), static_cast<int>(time_axis.size()));
    require_increasing(omega_axis, "omega axis");
    require_increasing(time_axis, "time axis");
    CollectiveState s0 = rho0.project(p);
    for (size_t k = 0; k < time_axis.size(); ++k) {
        const CollectiveState s = evolve_populations(p, s0, time_axis[k]);
        for (size_t iw = 0; iw < omega_axis.size(); ++iw)
            out.values(static_cast<int>(iw), static_cast<int>(k)) =
                line_shape_spectrum(p, s, omega_axis[iw]);
    }
    return out;
}

bool well_separated(const SystemParams& p) {
    return p.omega12 >= 10.0 * p.gamma * p.n();
}

double analytic_dicke_spectrum(const SystemParams& p, const CollectiveState& s,
                               double omega_tilde) {
    if (!p.dicke)
        throw DomainError("analytic line formula only applies to the small-sample limit");
    if (!well_separated(p)) {
        static std::atomic<bool> warned{false};
        if (!warned.exchange(true))
            std::fprintf(stderr,
                         "warning: omega12 < 10 gamma n; well-separated-line formula degrades\n");
    }
    const double n = p.n();
    const double m16 = std::sqrt(n * n - 1.0);  // coherence weight at maximal squeezing
    const double xp = omega_tilde - p.omega12 / p.gamma;
    const double xm = omega_tilde + p.omega12 / p.gamma;
    return p.gamma * ((2.0 * (n + 1.0) * s.rho_ee - 2.0 * m16 * s.rho_u) / (4.0 * n * n + xp * xp) +
                      ((n - 1.0) * s.rho_ee + m16 * s.rho_u) / (n * n + xp * xp) +
                      s.rho_ss * (2.0 * (n - 1.0) / (4.0 * n * n + xm * xm) +
                                  (n + 1.0) / (n * n + xm * xm)));
}

std::vector<HoleInterval> detect_hole(const SpectrumGrid& grid, double line_center) {
    const auto& ax = grid.omega_axis;
    if (ax.size() < 2) throw DomainError("hole detection needs an omega grid");
    // coverage precondition: center +- 3 present at step <= 0.2
    int ic = -1, il = -1, ir = -1;
    for (size_t i = 0; i < ax.size(); ++i) {
        if (std::abs(ax[i] - line_center) < 1e-6) ic = static_cast<int>(i);
        if (std::abs(ax[i] - (line_center - 1.0)) < 1e-6) il = static_cast<int>(i);
        if (std::abs(ax[i] - (line_center + 1.0)) < 1e-6) ir = static_cast<int>(i);
    }
    if (ic < 0 || il < 0 || ir < 0)
        throw DomainError("omega grid must contain line_center and line_center +- 1");
    bool covered_lo = false, covered_hi = false;
    for (size_t i = 0; i + 1 < ax.size(); ++i) {
        if (ax[i + 1] - ax[i] > 0.2 + 1e-9 &&
            ax[i + 1] > line_center - 3.0 && ax[i] < line_center + 3.0)
            throw DomainError("omega grid step must be <= 0.2 around the line center");
        covered_lo = covered_lo || ax[i] <= line_center - 3.0 + 1e-9;
        covered_hi = covered_hi || ax[i + 1] >= line_center + 3.0 - 1e-9;
    }
    if (!covered_lo || !covered_hi)
        throw DomainError("omega grid must cover line_center +- 3");

    std::vector<HoleInterval> out;
    bool open = false;
    double start = 0.0, last = 0.0;
    for (size_t k = 0; k < grid.time_axis.size(); ++k) {
        const double s0 = grid.values(ic, static_cast<int>(k));
        const double sl = grid.values(il, static_cast<int>(k));
        const double sr = grid.values(ir, static_cast<int>(k));
        const double margin = 0.02 * std::abs(s0);
        const bool hole = sl > s0 && sr > s0 && (sl - s0) >= margin && (sr - s0) >= margin;
        if (hole && !open) {
            open = true;
            start = grid.time_axis[k];
        }
        if (hole) last = grid.time_axis[k];
        if (!hole && open) {
            open = false;
            out.push_back({start, last});
        }
    }
    if (open) out.push_back({start, last});
    return out;
}

double max_relative_change(const SpectrumGrid& coarse, const SpectrumGrid& fine) {
    if (coarse.values.rows() != fine.values.rows() ||
        coarse.values.cols() != fine.values.cols())
        throw DomainError("refinement comparison needs identical grids");
    const double floor = 1e-6 * std::max(coarse.values.cwiseAbs().maxCoeff(),
                                         fine.values.cwiseAbs().maxCoeff());
    double worst = 0.0;
    for (int i = 0; i < coarse.values.rows(); ++i)
        for (int j = 0; j < coarse.values.cols(); ++j) {
            const double a = coarse.values(i, j);
            const double b = fine.values(i, j);
            const double denom = std::max({std::abs(a), std::abs(b), floor});
            if (denom > 0.0) worst = std::max(worst, std::abs(a - b) / denom);
        }
    return worst;
}

} // namespace phasespec
