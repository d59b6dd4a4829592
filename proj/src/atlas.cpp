#include "pairwell/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "pairwell/effective.hpp"
#include "pairwell/errors.hpp"
#include "pairwell/fock_basis.hpp"
#include "pairwell/root_find.hpp"

namespace pairwell {

void apply_axis(const AxisSpec& axis, double x, SystemParams& params) {
    if (axis.param == "f") params.f = x;
    else if (axis.param == "u1") params.u1 = x;
    else if (axis.param == "u2") params.u2 = x;
    else if (axis.param == "omega_z") params.omega_z = x;
    else if (axis.param == "nu") params.nu = x;
    else if (axis.param == "delta") params.delta = x;
    else if (axis.param == "beta1") params.beta1 = x;
    else if (axis.param == "beta2") params.beta2 = x;
    else if (axis.param == "alpha") params.alpha = x;
    else if (axis.param == "2f/omega") params.f = 0.5 * x * params.omega;
    else if (axis.param == "2u1/omega") params.u1 = 0.5 * x * params.omega;
    else if (axis.param == "2u2/omega") params.u2 = 0.5 * x * params.omega;
    else if (axis.param == "2omega_z/omega") params.omega_z = 0.5 * x * params.omega;
    else throw std::invalid_argument("unknown axis parameter '" + axis.param + "'");
}

double axis_value(const AxisSpec& axis, int index) {
    if (axis.count < 2) return axis.lo;
    return axis.lo + (axis.hi - axis.lo) * static_cast<double>(index) / (axis.count - 1);
}

void GridSpec::validate() const {
    if (x.count < 2 || y.count < 2)
        throw std::invalid_argument("GridSpec: axis counts must be >= 2");
    if (!std::isfinite(x.lo) || !std::isfinite(x.hi) || !std::isfinite(y.lo) ||
        !std::isfinite(y.hi))
        throw std::invalid_argument("GridSpec: axis ranges must be finite");
    if (x.param == y.param)
        throw std::invalid_argument("GridSpec: axis parameters must be distinct");
    fixed.validate();
}

StabilityMap scan(const GridSpec& spec, int workers) {
    spec.validate();
    StabilityMap map;
    map.grid = spec;
    const std::size_t cells =
        static_cast<std::size_t>(spec.x.count) * static_cast<std::size_t>(spec.y.count);
    map.values.assign(cells, 0.0);
    map.verdicts.assign(cells, Verdict::Unstable);
    map.masked.assign(cells, 0);

    auto run_rows = [&](int iy_begin, int iy_end) {
        for (int iy = iy_begin; iy < iy_end; ++iy) {
            for (int ix = 0; ix < spec.x.count; ++ix) {
                SystemParams cell = spec.fixed;
                apply_axis(spec.x, axis_value(spec.x, ix), cell);
                apply_axis(spec.y, axis_value(spec.y, iy), cell);
                const std::size_t at = map.index(iy, ix);
                try {
                    const QuasienergySpectrum spectrum = quasienergies(spec.channel, cell);
                    map.values[at] = spectrum.zeta_or_xi ? spectrum.zeta_or_xi->imag() : 0.0;
                    map.verdicts[at] = spectrum.verdict;
                } catch (const ResonanceError&) {
                    map.masked[at] = 1;
                }
            }
        }
    };

    const int n_workers = std::max(1, std::min(workers, spec.y.count));
    if (n_workers == 1) {
        run_rows(0, spec.y.count);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        const int chunk = (spec.y.count + n_workers - 1) / n_workers;
        for (int w = 0; w < n_workers; ++w) {
            const int begin = w * chunk;
            const int end = std::min(spec.y.count, begin + chunk);
            if (begin < end) pool.emplace_back(run_rows, begin, end);
        }
        for (auto& t : pool) t.join();
    }
    return map;
}

std::vector<CurvePoint> unpaired_average_curve(Channel channel, const SystemParams& fixed,
                                               const AxisSpec& sweep, int k_unpaired,
                                               const IntegratorConfig& cfg, int workers) {
    validate_channel(channel, fixed);
    const std::vector<int> subspace = channel_subspace(channel, fixed, "|0020>");
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(fock::kDim);
    psi0(4) = 1.0;  // |0020>

    std::vector<CurvePoint> curve(static_cast<std::size_t>(sweep.count));
    auto run_points = [&](int begin, int end) {
        for (int j = begin; j < end; ++j) {
            SystemParams point = fixed;
            const double x = axis_value(sweep, j);
            apply_axis(sweep, x, point);
            const Trajectory traj = integrate(point, psi0, cfg, subspace);
            const double pbar = time_avg_probability(traj, k_unpaired, 0.0, cfg.t_end);
            curve[static_cast<std::size_t>(j)] = {x, pbar, pbar > kUnpairedThreshold};
        }
    };
    const int n_workers = std::max(1, std::min(workers, sweep.count));
    if (n_workers == 1) {
        run_points(0, sweep.count);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (sweep.count + n_workers - 1) / n_workers;
        for (int w = 0; w < n_workers; ++w) {
            const int begin = w * chunk;
            const int end = std::min(sweep.count, begin + chunk);
            if (begin < end) pool.emplace_back(run_points, begin, end);
        }
        for (auto& t : pool) t.join();
    }
    return curve;
}

namespace {

double cross_coupling(Channel channel, const SystemParams& params) {
    return couplings(channel, params).rho_b;
}

SolveResult refine_nearest(const std::function<double(double)>& objective, double lo, double hi,
                           double hint) {
    const auto brackets = scan_brackets(objective, lo, hi, 400);
    if (brackets.empty()) throw NoSignChange(lo, hi);
    SolveResult best;
    double best_distance = std::numeric_limits<double>::infinity();
    for (const auto& [a, b] : brackets) {
        const RootResult root = brent(objective, a, b, objective(a), objective(b), 1e-6, 1e-12);
        const double distance = std::abs(root.x - hint);
        if (distance < best_distance) {
            best_distance = distance;
            best = {root.x, root.residual, root.iterations};
        }
    }
    return best;
}

}  // namespace

SolveResult solve_balance_f(Channel channel, const SystemParams& fixed, double f_lo,
                            double f_hi, std::optional<double> hint) {
    if (channel == Channel::IntrawellSpinFlipping)
        throw std::invalid_argument("solve_balance_f: balance condition is defined for the "
                                    "interwell channels");
    validate_channel(channel, fixed);
    const double product = fixed.beta1 * fixed.beta2;
    const double nu2 = fixed.nu * fixed.nu;
    auto objective = [&](double f) {
        SystemParams point = fixed;
        point.f = f;
        const double rho_b = cross_coupling(channel, point);
        if (product == 0.0) return rho_b;  // degenerate balance: any zero of rho_b
        const double coupling = nu2 * rho_b / fixed.omega;
        return coupling * coupling - product;
    };
    return refine_nearest(objective, f_lo, f_hi, hint.value_or(0.5 * (f_lo + f_hi)));
}

SolveResult solve_rho_zero(Channel channel, const SystemParams& fixed,
                           const std::string& free_param, double lo, double hi,
                           std::optional<double> hint) {
    AxisSpec axis;
    axis.param = free_param;
    auto objective = [&](double x) {
        SystemParams point = fixed;
        apply_axis(axis, x, point);
        return cross_coupling(channel, point);
    };
    return refine_nearest(objective, lo, hi, hint.value_or(0.5 * (lo + hi)));
}

}  // namespace pairwell
