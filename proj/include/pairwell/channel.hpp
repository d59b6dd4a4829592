#pragma once

#include <string>
#include <vector>

#include "pairwell/system_params.hpp"

namespace pairwell {

/// The three tunneling channels the reduced models describe.
enum class Channel {
    InterwellSpinConserving,  ///< integer alpha, delta = 0
    InterwellSpinFlipping,    ///< half-integer alpha, delta = 0
    IntrawellSpinFlipping,    ///< integer alpha, Raman-driven, cross coupling suppressed
};

std::string to_string(Channel channel);
Channel channel_from_string(const std::string& name);

/// Checks the channel's parameter preconditions (alpha integer vs
/// half-integer, delta = 0 for the interwell channels). Throws
/// std::invalid_argument on mismatch. The intrawell channel additionally
/// requires the interwell cross coupling to vanish; that is a separate,
/// computed check (see interwell_suppressed in effective.hpp).
void validate_channel(Channel channel, const SystemParams& params);

/// Basis indices (1-based) of the closed subspace of a channel, in the
/// reduced-model amplitude order for the interwell channels and in the
/// well-2/well-1 listing order for the intrawell channel:
///   InterwellSpinConserving -> {5, 7, 2}
///   InterwellSpinFlipping   -> {5, 9, 3}
///   IntrawellSpinFlipping   -> {5, 4, 6, 2, 1, 3}
/// `initial` is a basis label (or "superposition" for the intrawell
/// channel); it must name a state inside the subspace.
std::vector<int> channel_subspace(Channel channel, const SystemParams& params,
                                  const std::string& initial);

/// Map from reduced-model amplitude slot to 1-based basis index:
///   interwell channels: (A5, A7, A2) -> {5,7,2} resp. (A5, A9, A3) -> {5,9,3}
///   intrawell: (A1..A6) -> {1,2,3,4,5,6}, i.e. A_k is the amplitude c_k.
std::vector<int> effective_amplitude_indices(Channel channel);

/// Index (1-based) of the unpaired intermediate state of an interwell
/// channel: 7 for spin-conserving, 9 for spin-flipping.
int unpaired_state(Channel channel);

}  // namespace pairwell
