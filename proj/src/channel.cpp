#include "pairwell/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pairwell/fock_basis.hpp"

namespace pairwell {

namespace {

bool is_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }
bool is_half_integer(double x) { return is_integer(2.0 * x) && !is_integer(x); }

}  // namespace

std::string to_string(Channel channel) {
    switch (channel) {
        case Channel::InterwellSpinConserving: return "interwell_spin_conserving";
        case Channel::InterwellSpinFlipping: return "interwell_spin_flipping";
        case Channel::IntrawellSpinFlipping: return "intrawell_spin_flipping";
    }
    throw std::logic_error("to_string(Channel): unreachable");
}

Channel channel_from_string(const std::string& name) {
    if (name == "interwell_spin_conserving") return Channel::InterwellSpinConserving;
    if (name == "interwell_spin_flipping") return Channel::InterwellSpinFlipping;
    if (name == "intrawell_spin_flipping") return Channel::IntrawellSpinFlipping;
    throw std::invalid_argument("unknown channel '" + name + "'");
}

void validate_channel(Channel channel, const SystemParams& params) {
    switch (channel) {
        case Channel::InterwellSpinConserving:
            if (!is_integer(params.alpha))
                throw std::invalid_argument(
                    "spin-conserving channel requires integer alpha, got alpha = " +
                    std::to_string(params.alpha));
            if (params.delta != 0.0)
                throw std::invalid_argument("spin-conserving channel requires delta = 0");
            break;
        case Channel::InterwellSpinFlipping:
            if (!is_half_integer(params.alpha))
                throw std::invalid_argument(
                    "spin-flipping channel requires half-integer alpha, got alpha = " +
                    std::to_string(params.alpha));
            if (params.delta != 0.0)
                throw std::invalid_argument("spin-flipping channel requires delta = 0");
            break;
        case Channel::IntrawellSpinFlipping:
            if (!is_integer(params.alpha))
                throw std::invalid_argument(
                    "intrawell channel requires integer alpha, got alpha = " +
                    std::to_string(params.alpha));
            break;
    }
}

std::vector<int> channel_subspace(Channel channel, const SystemParams& params,
                                  const std::string& initial) {
    validate_channel(channel, params);
    std::vector<int> subspace;
    switch (channel) {
        case Channel::InterwellSpinConserving: subspace = {5, 7, 2}; break;
        case Channel::InterwellSpinFlipping: subspace = {5, 9, 3}; break;
        case Channel::IntrawellSpinFlipping: subspace = {5, 4, 6, 2, 1, 3}; break;
    }
    if (channel == Channel::IntrawellSpinFlipping && initial == "superposition") return subspace;
    const int k = fock::parse_label(initial);
    if (std::find(subspace.begin(), subspace.end(), k) == subspace.end())
        throw std::invalid_argument("initial state " + fock::label(k) +
                                    " lies outside the " + to_string(channel) + " subspace");
    return subspace;
}

std::vector<int> effective_amplitude_indices(Channel channel) {
    switch (channel) {
        case Channel::InterwellSpinConserving: return {5, 7, 2};
        case Channel::InterwellSpinFlipping: return {5, 9, 3};
        case Channel::IntrawellSpinFlipping: return {1, 2, 3, 4, 5, 6};
    }
    throw std::logic_error("effective_amplitude_indices: unreachable");
}

int unpaired_state(Channel channel) {
    switch (channel) {
        case Channel::InterwellSpinConserving: return 7;
        case Channel::InterwellSpinFlipping: return 9;
        case Channel::IntrawellSpinFlipping:
            throw std::invalid_argument("intrawell channel has no unpaired intermediate state");
    }
    throw std::logic_error("unpaired_state: unreachable");
}

}  // namespace pairwell
