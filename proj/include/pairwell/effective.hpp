#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "pairwell/channel.hpp"
#include "pairwell/system_params.hpp"
#include "pairwell/trajectory.hpp"

namespace pairwell {

/// Drive-renormalized second-order coupling pair of one channel. rho_a is
/// the direct (self) coupling, rho_b the cross coupling between the two
/// paired configurations; both are photon-number sums of Bessel weights
/// over an interaction detuning.
struct EffectiveCouplings {
    Channel channel;
    double rho_a = 0.0;
    double rho_b = 0.0;
    int truncation_order = 0;  ///< symmetric window |p| <= truncation_order
    double argument = 0.0;     ///< Bessel argument of the channel
    double detuning = 0.0;     ///< denominator offset of the channel
};

/// Guard band for the "p + detuning != 0" exclusion. A retained term whose
/// denominator is smaller in magnitude raises ResonanceError; terms are
/// never silently dropped.
inline constexpr double kDenominatorGuard = 1e-6;

/// Evaluates the coupling sums of a channel:
///   rho_a = sum_p J_p(arg)^2 / (p + detuning)
///   rho_b = sum_p J_p(arg) J_{-p}(arg) / (p + detuning)
/// with argument/detuning 2f/w, 2U1/w (spin-conserving);
/// 2f/w - 2W/w, 2U1/w (spin-flipping); 2W/w, 2(U1-U2)/w (intrawell).
/// The window is extended until the boundary term drops below
/// 1e-14 * (1 + |rho|). Throws ResonanceError near resonant denominators.
EffectiveCouplings couplings(Channel channel, const SystemParams& params);

/// Generator M of the channel's second-order model, i dA/dt = M A, in the
/// amplitude order of effective_amplitude_indices(channel) (dimension 3
/// for the interwell channels, 6 for the intrawell channel).
Eigen::MatrixXcd effective_generator(Channel channel, const SystemParams& params);
Eigen::MatrixXcd effective_generator(Channel channel, const SystemParams& params,
                                     const EffectiveCouplings& rho);

/// Right-hand side dA/dt = -i M A. Throws std::invalid_argument on a
/// dimension mismatch.
Eigen::VectorXcd effective_rhs(Channel channel, const SystemParams& params,
                               const Eigen::VectorXcd& amplitudes);

/// Closed-form solution of the effective model sampled at `times`;
/// psi0 is the full 10-component initial state. The returned trajectory
/// carries the channel's amplitude-to-basis map, so per-state
/// probabilities compare directly against exact propagation.
Trajectory effective_trajectory(Channel channel, const SystemParams& params,
                                const Eigen::VectorXcd& psi0, const std::vector<double>& times);

/// True when the interwell cross coupling at these parameters vanishes
/// within |rho_2| < 1e-6, the precondition for presenting the intrawell
/// model as the physical dynamics.
bool interwell_suppressed(const SystemParams& params);

}  // namespace pairwell
