#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "pairwell/channel.hpp"
#include "pairwell/effective.hpp"
#include "pairwell/system_params.hpp"

namespace pairwell {

enum class Verdict {
    StableAllReal,      ///< every quasienergy real within tolerance
    StableDissipative,  ///< some real, all others strictly decaying
    Unstable,           ///< at least one growing mode
};

std::string to_string(Verdict verdict);

struct QuasienergySpectrum {
    Channel channel;
    std::vector<std::complex<double>> energies;
    /// Discriminant zeta (spin-conserving) or xi (spin-flipping); absent
    /// for the intrawell channel.
    std::optional<std::complex<double>> zeta_or_xi;
    Verdict verdict = Verdict::Unstable;
};

/// Imaginary-part tolerance used for verdict assignment.
double stability_tolerance(const SystemParams& params);

/// Verdict from a set of complex energies at tolerance tol.
Verdict classify(const std::vector<std::complex<double>>& energies, double tol);

/// Principal-branch discriminant sqrt(coupling^2 - dissipation^2): real
/// nonnegative when the coherent coupling dominates, otherwise purely
/// imaginary with positive imaginary part.
std::complex<double> discriminant(double coupling, double dissipation);

/// Closed-form Floquet quasienergies of a channel's second-order model.
/// Propagates ResonanceError from the coupling sums.
QuasienergySpectrum quasienergies(Channel channel, const SystemParams& params);

/// The six intrawell quasienergies. Exposed unconditionally; presenting it
/// as the physical model additionally requires interwell_suppressed().
QuasienergySpectrum intrawell_spectrum(const SystemParams& params);

}  // namespace pairwell
