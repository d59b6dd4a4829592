#include "pairwell/integrator.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pairwell/hamiltonian.hpp"

namespace pairwell {

namespace {

struct ReducedSystem {
    Eigen::MatrixXcd a0;        // -i * static part
    Eigen::VectorXcd d1;        // -i * drive diagonal
    std::vector<int> indices;   // 1-based Fock index per component
};

ReducedSystem reduce(const SystemParams& params, const std::vector<int>& subspace) {
    const HamiltonianParts parts = build_parts(params);
    const int n = static_cast<int>(subspace.size());
    ReducedSystem sys;
    sys.indices = subspace;
    sys.a0.resize(n, n);
    sys.d1.resize(n);
    const Complex minus_i(0.0, -1.0);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            sys.a0(r, c) = minus_i * parts.static_part(subspace[r] - 1, subspace[c] - 1);
        sys.d1(r) = minus_i * parts.drive_diag(subspace[r] - 1);
    }
    return sys;
}

std::vector<int> full_subspace() {
    std::vector<int> all(fock::kDim);
    for (int k = 0; k < fock::kDim; ++k) all[k] = k + 1;
    return all;
}

void check_subspace(const std::vector<int>& subspace) {
    if (subspace.empty()) throw std::invalid_argument("integrate: empty subspace");
    for (int k : subspace)
        if (k < 1 || k > fock::kDim)
            throw std::invalid_argument("integrate: subspace index out of range");
}

// Norm bound max_t ||H(t)||_2 <= max_i sum_j |H0_ij| + |drive_i|.
double spectral_bound(const Eigen::MatrixXcd& a0, const Eigen::VectorXcd& d1) {
    double bound = 0.0;
    for (int r = 0; r < a0.rows(); ++r) {
        double row = std::abs(d1(r));
        for (int c = 0; c < a0.cols(); ++c) row += std::abs(a0(r, c));
        bound = std::max(bound, row);
    }
    return bound;
}

// One classical RK4 step; the cosine table carries the drive phase on the
// half-step grid, so sampling is exactly periodic.
void rk4_step(const Eigen::MatrixXcd& a0, const Eigen::VectorXcd& d1, double h,
              const std::vector<double>& cos_table, std::size_t phase_index,
              Eigen::VectorXcd& y, std::array<Eigen::VectorXcd, 5>& work) {
    const std::size_t table_size = cos_table.size();
    const double c0 = cos_table[phase_index % table_size];
    const double c1 = cos_table[(phase_index + 1) % table_size];
    const double c2 = cos_table[(phase_index + 2) % table_size];

    auto& k1 = work[0];
    auto& k2 = work[1];
    auto& k3 = work[2];
    auto& k4 = work[3];
    auto& tmp = work[4];

    k1.noalias() = a0 * y;
    k1 += c0 * d1.cwiseProduct(y);
    tmp = y + (0.5 * h) * k1;
    k2.noalias() = a0 * tmp;
    k2 += c1 * d1.cwiseProduct(tmp);
    tmp = y + (0.5 * h) * k2;
    k3.noalias() = a0 * tmp;
    k3 += c1 * d1.cwiseProduct(tmp);
    tmp = y + h * k3;
    k4.noalias() = a0 * tmp;
    k4 += c2 * d1.cwiseProduct(tmp);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

std::vector<double> make_cos_table(int steps_per_period) {
    const std::size_t size = 2 * static_cast<std::size_t>(steps_per_period);
    std::vector<double> table(size);
    for (std::size_t j = 0; j < size; ++j)
        table[j] = std::cos(2.0 * M_PI * static_cast<double>(j) / static_cast<double>(size));
    return table;
}

Trajectory run_fixed(const ReducedSystem& sys, const Eigen::VectorXcd& y0, double period,
                     int steps_per_period, double t_end, int stride) {
    const double h = period / steps_per_period;
    const long total_steps =
        static_cast<long>(std::ceil(t_end / (h * static_cast<double>(stride)) - 1e-12)) *
        stride;
    const std::vector<double> cos_table = make_cos_table(steps_per_period);

    Trajectory traj;
    traj.basis_indices = sys.indices;
    traj.step_size = h;
    traj.steps_per_period = steps_per_period;
    traj.sample_stride = stride;
    traj.times.reserve(static_cast<std::size_t>(total_steps / stride) + 1);
    traj.amplitudes.reserve(static_cast<std::size_t>(total_steps / stride) + 1);
    traj.times.push_back(0.0);
    traj.amplitudes.push_back(y0);

    Eigen::VectorXcd y = y0;
    std::array<Eigen::VectorXcd, 5> work;
    for (auto& w : work) w.resize(y.size());
    for (long k = 0; k < total_steps; ++k) {
        rk4_step(sys.a0, sys.d1, h, cos_table, 2 * static_cast<std::size_t>(k), y, work);
        if ((k + 1) % stride == 0) {
            traj.times.push_back(static_cast<double>(k + 1) * h);
            traj.amplitudes.push_back(y);
        }
    }
    return traj;
}

}  // namespace

int resolve_steps_per_period(const SystemParams& params, const std::vector<int>& subspace,
                             double t_end, int requested) {
    if (requested > 0) return std::max(32, requested);
    const ReducedSystem sys = reduce(params, subspace);
    const double lambda = spectral_bound(sys.a0, sys.d1);
    const double period = params.period();
    const double horizon = std::max(t_end, period);
    // Fixed-step RK4 bleeds norm at rate ~ (lambda*h)^6/144 per step; keep
    // the accumulated drift under ~3e-9 per 200 time units.
    const double norm_budget = 3e-9 * std::max(1.0, t_end / 200.0);
    const double from_norm = std::pow(
        horizon * std::pow(lambda, 6) * std::pow(period, 5) / (144.0 * norm_budget), 0.2);
    // Phase error accumulates as t * (lambda*h)^5/(120 h); keep it below
    // 1e-6 rad even at half resolution, so halving-convergence checks see
    // deviations under the 1e-6 probability tolerance.
    const double from_phase = std::pow(
        16.0 * horizon * std::pow(lambda, 5) * std::pow(period, 4) / (120.0 * 1e-6), 0.25);
    const double raw = std::max(from_norm, from_phase);
    const long rounded = 32 * static_cast<long>(std::ceil(raw / 32.0));
    return static_cast<int>(std::clamp(rounded, 256L, 262144L));
}

int resolve_sample_stride(long base_steps, int requested) {
    if (requested > 0) return requested;
    int stride = 1;
    while (static_cast<long>(stride) * 4096 < base_steps && stride < 65536) stride *= 2;
    return stride;
}

Trajectory integrate(const SystemParams& params, const Eigen::VectorXcd& psi0,
                     const IntegratorConfig& cfg,
                     const std::optional<std::vector<int>>& subspace,
                     bool allow_unnormalized) {
    params.validate();
    if (psi0.size() != fock::kDim)
        throw std::invalid_argument("integrate: psi0 must have 10 components");
    if (!(cfg.t_end > 0.0)) throw std::invalid_argument("integrate: t_end must be positive");
    if (cfg.sample_stride < 0)
        throw std::invalid_argument("integrate: sample_stride must be >= 0");
    if (!allow_unnormalized && std::abs(psi0.squaredNorm() - 1.0) > 1e-9)
        throw std::invalid_argument("integrate: psi0 is not normalized");

    const std::vector<int> indices = subspace ? *subspace : full_subspace();
    check_subspace(indices);
    if (subspace) {
        Eigen::VectorXcd outside = psi0;
        for (int k : indices) outside(k - 1) = 0.0;
        if (outside.norm() > 1e-12)
            throw std::invalid_argument("integrate: psi0 has support outside the subspace");
    }

    const ReducedSystem sys = reduce(params, indices);
    Eigen::VectorXcd y0(indices.size());
    for (std::size_t r = 0; r < indices.size(); ++r) y0(r) = psi0(indices[r] - 1);

    const int steps = resolve_steps_per_period(params, indices, cfg.t_end, cfg.steps_per_period);
    const long base_steps = static_cast<long>(std::ceil(cfg.t_end * steps / params.period()));
    const int stride = resolve_sample_stride(base_steps, cfg.sample_stride);
    Trajectory traj = run_fixed(sys, y0, params.period(), steps, cfg.t_end, stride);

    if (cfg.verify_step_halving && steps >= 64) {
        // Half resolution with the same stride samples every other fine
        // sample; compare probabilities at the shared instants.
        Trajectory coarse = run_fixed(sys, y0, params.period(), steps / 2, cfg.t_end, stride);
        double deviation = 0.0;
        for (std::size_t j = 0; j < coarse.size(); ++j) {
            const std::size_t fine = 2 * j;
            if (fine >= traj.size()) break;
            for (int c = 0; c < traj.dim(); ++c)
                deviation = std::max(
                    deviation, std::abs(traj.probability(fine, c) - coarse.probability(j, c)));
        }
        traj.step_deviation = deviation;
        traj.step_warning = deviation > cfg.convergence_tol;
    }
    return traj;
}

double time_avg_probability(const Trajectory& traj, int k, double t_a, double t_b) {
    if (!(t_b > t_a)) throw std::invalid_argument("time_avg_probability: empty window");
    int component = -1;
    for (std::size_t c = 0; c < traj.basis_indices.size(); ++c)
        if (traj.basis_indices[c] == k) component = static_cast<int>(c);
    if (component < 0)
        throw std::invalid_argument("time_avg_probability: state not in trajectory");

    double integral = 0.0;
    double span = 0.0;
    bool any = false;
    for (std::size_t j = 0; j + 1 < traj.size(); ++j) {
        const double ta = traj.times[j];
        const double tb = traj.times[j + 1];
        if (tb < t_a || ta > t_b) continue;
        integral += 0.5 * (traj.probability(j, component) + traj.probability(j + 1, component)) *
                    (tb - ta);
        span += tb - ta;
        any = true;
    }
    if (!any) throw std::invalid_argument("time_avg_probability: window contains no samples");
    return integral / span;
}

double Trajectory::probability_of_state(std::size_t sample, int k) const {
    for (std::size_t c = 0; c < basis_indices.size(); ++c)
        if (basis_indices[c] == k) return probability(sample, static_cast<int>(c));
    return 0.0;
}

double fold_quasienergy(double value, double omega) {
    double folded = std::fmod(value + 0.5 * omega, omega);
    if (folded <= 0.0) folded += omega;
    return folded - 0.5 * omega;
}

std::complex<double> align_quasienergy(std::complex<double> value, std::complex<double> target,
                                       double omega) {
    const double shift = std::round((target.real() - value.real()) / omega);
    return {value.real() + shift * omega, value.imag()};
}

MonodromyResult monodromy(const SystemParams& params, const std::vector<int>& subspace,
                          const IntegratorConfig& cfg) {
    params.validate();
    check_subspace(subspace);
    const ReducedSystem sys = reduce(params, subspace);
    const int n = static_cast<int>(subspace.size());
    const double period = params.period();
    const int steps = resolve_steps_per_period(params, subspace, period, cfg.steps_per_period);
    const double h = period / steps;
    const std::vector<double> cos_table = make_cos_table(steps);

    MonodromyResult result;
    result.matrix.resize(n, n);
    std::array<Eigen::VectorXcd, 5> work;
    for (auto& w : work) w.resize(n);
    for (int column = 0; column < n; ++column) {
        Eigen::VectorXcd y = Eigen::VectorXcd::Zero(n);
        y(column) = 1.0;
        for (int k = 0; k < steps; ++k)
            rk4_step(sys.a0, sys.d1, h, cos_table, 2 * static_cast<std::size_t>(k), y, work);
        result.matrix.col(column) = y;
    }

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(result.matrix);
    result.multipliers = solver.eigenvalues();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(solver.eigenvectors());
    const double smin = svd.singularValues()(svd.singularValues().size() - 1);
    result.eigenvector_condition =
        smin > 0.0 ? svd.singularValues()(0) / smin : std::numeric_limits<double>::infinity();
    result.defective_warning = result.eigenvector_condition > 1e8;

    result.quasienergies.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const Complex lambda = result.multipliers(j);
        const Complex energy = Complex(0.0, 1.0) * std::log(lambda) / period;
        result.quasienergies.push_back(
            {fold_quasienergy(energy.real(), params.omega), energy.imag()});
    }
    return result;
}

}  // namespace pairwell
