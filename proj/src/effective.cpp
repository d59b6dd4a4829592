#include "pairwell/effective.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "pairwell/bessel.hpp"
#include "pairwell/errors.hpp"
#include "pairwell/hamiltonian.hpp"

namespace pairwell {

namespace {

struct SumSpec {
    double argument = 0.0;
    double detuning = 0.0;
};

SumSpec sum_spec(Channel channel, const SystemParams& params) {
    switch (channel) {
        case Channel::InterwellSpinConserving:
            return {2.0 * params.f / params.omega, 2.0 * params.u1 / params.omega};
        case Channel::InterwellSpinFlipping:
            return {2.0 * (params.f - params.omega_z) / params.omega,
                    2.0 * params.u1 / params.omega};
        case Channel::IntrawellSpinFlipping:
            return {2.0 * params.omega_z / params.omega,
                    2.0 * (params.u1 - params.u2) / params.omega};
    }
    throw std::logic_error("sum_spec: unreachable");
}

}  // namespace

EffectiveCouplings couplings(Channel channel, const SystemParams& params) {
    params.validate();
    const SumSpec spec = sum_spec(channel, params);

    int window = static_cast<int>(std::ceil(std::abs(spec.argument))) + 40;
    for (;;) {
        // J_p for p = 0..window; negative orders follow from parity.
        std::vector<double> j(static_cast<std::size_t>(window) + 1);
        for (int p = 0; p <= window; ++p) j[static_cast<std::size_t>(p)] = bessel_j(p, spec.argument);

        double rho_a = 0.0;
        double rho_b = 0.0;
        for (int p = -window; p <= window; ++p) {
            const double denom = p + spec.detuning;
            if (std::abs(denom) < kDenominatorGuard)
                throw ResonanceError(p, denom, kDenominatorGuard);
            const double jp = (p % 2 != 0 && p < 0) ? -j[static_cast<std::size_t>(-p)]
                                                    : j[static_cast<std::size_t>(std::abs(p))];
            const double jm = (p % 2 != 0 && p > 0) ? -j[static_cast<std::size_t>(p)]
                                                    : j[static_cast<std::size_t>(std::abs(p))];
            rho_a += jp * jp / denom;
            rho_b += jp * jm / denom;
        }

        const double edge = j[static_cast<std::size_t>(window)] * j[static_cast<std::size_t>(window)];
        const double tail = edge * (1.0 / std::abs(window + spec.detuning) +
                                    1.0 / std::abs(-window + spec.detuning));
        const double scale = 1.0 + std::max(std::abs(rho_a), std::abs(rho_b));
        if (tail < 1e-14 * scale)
            return {channel, rho_a, rho_b, window, spec.argument, spec.detuning};
        window += 10;
    }
}

Eigen::MatrixXcd effective_generator(Channel channel, const SystemParams& params) {
    return effective_generator(channel, params, couplings(channel, params));
}

Eigen::MatrixXcd effective_generator(Channel channel, const SystemParams& params,
                                     const EffectiveCouplings& rho) {
    const Complex i_unit(0.0, 1.0);
    if (channel == Channel::IntrawellSpinFlipping) {
        // Six intrawell amplitudes (A1..A6) = (c1..c6); Raman-renormalized
        // self/cross terms scale as delta^2, gain acts on well-1 states and
        // loss on well-2 states.
        const double g = params.delta * params.delta / params.omega;
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(6, 6);
        m(0, 0) = -g * rho.rho_a + 2.0 * i_unit * params.beta1;
        m(1, 1) = 0.5 * g * rho.rho_a + 2.0 * i_unit * params.beta1;
        m(1, 2) = 0.5 * g * rho.rho_b;
        m(2, 1) = 0.5 * g * rho.rho_b;
        m(2, 2) = 0.5 * g * rho.rho_a + 2.0 * i_unit * params.beta1;
        m(3, 3) = -g * rho.rho_a - 2.0 * i_unit * params.beta2;
        m(4, 4) = 0.5 * g * rho.rho_a - 2.0 * i_unit * params.beta2;
        m(4, 5) = 0.5 * g * rho.rho_b;
        m(5, 4) = 0.5 * g * rho.rho_b;
        m(5, 5) = 0.5 * g * rho.rho_a - 2.0 * i_unit * params.beta2;
        return m;
    }
    // Interwell channels share one structure in the order (A_pair2,
    // A_unpaired, A_pair1): the paired states couple through rho_b while
    // the unpaired intermediate decouples.
    const double g = 2.0 * params.nu * params.nu / params.omega;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
    m(0, 0) = g * rho.rho_a - 2.0 * i_unit * params.beta2;
    m(0, 2) = g * rho.rho_b;
    m(1, 1) = -2.0 * g * rho.rho_a + i_unit * (params.beta1 - params.beta2);
    m(2, 0) = g * rho.rho_b;
    m(2, 2) = g * rho.rho_a + 2.0 * i_unit * params.beta1;
    return m;
}

Eigen::VectorXcd effective_rhs(Channel channel, const SystemParams& params,
                               const Eigen::VectorXcd& amplitudes) {
    const int expected = channel == Channel::IntrawellSpinFlipping ? 6 : 3;
    if (amplitudes.size() != expected)
        throw std::invalid_argument("effective_rhs: expected " + std::to_string(expected) +
                                    " amplitudes, got " + std::to_string(amplitudes.size()));
    const Eigen::MatrixXcd m = effective_generator(channel, params);
    return Complex(0.0, -1.0) * (m * amplitudes);
}

Trajectory effective_trajectory(Channel channel, const SystemParams& params,
                                const Eigen::VectorXcd& psi0,
                                const std::vector<double>& times) {
    if (psi0.size() != 10)
        throw std::invalid_argument("effective_trajectory: psi0 must have 10 components");
    const std::vector<int> map = effective_amplitude_indices(channel);
    Eigen::VectorXcd a0(map.size());
    for (std::size_t r = 0; r < map.size(); ++r) a0(r) = psi0(map[r] - 1);

    const Eigen::MatrixXcd m = effective_generator(channel, params);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m);
    const Eigen::VectorXcd coeff = solver.eigenvectors().partialPivLu().solve(a0);

    Trajectory traj;
    traj.basis_indices = map;
    traj.times = times;
    traj.amplitudes.reserve(times.size());
    const Complex minus_i(0.0, -1.0);
    for (double t : times) {
        Eigen::VectorXcd phases(coeff.size());
        for (int j = 0; j < coeff.size(); ++j)
            phases(j) = std::exp(minus_i * solver.eigenvalues()(j) * t) * coeff(j);
        traj.amplitudes.push_back(solver.eigenvectors() * phases);
    }
    return traj;
}

bool interwell_suppressed(const SystemParams& params) {
    SystemParams probe = params;
    probe.delta = 0.0;  // the cross coupling itself does not involve delta
    const EffectiveCouplings rho = couplings(Channel::InterwellSpinConserving, probe);
    return std::abs(rho.rho_b) < 1e-6;
}

}  // namespace pairwell
