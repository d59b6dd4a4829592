#pragma once

#include <cmath>

namespace pairwell {

/// Physical parameters of the driven two-site model. All frequencies and
/// energies are expressed in units of a reference frequency omega0; time
/// is measured in 1/omega0.
struct SystemParams {
    double nu = 1.0;       ///< spin-independent tunneling rate
    double alpha = 1.0;    ///< spin-orbit rotation angle (units of pi)
    double delta = 0.0;    ///< on-site Raman (spin-flip) coupling
    double omega = 40.0;   ///< driving frequency
    double omega_z = 0.0;  ///< Zeeman modulation amplitude
    double f = 0.0;        ///< ac-drive amplitude
    double beta1 = 0.0;    ///< gain coefficient, well 1
    double beta2 = 0.0;    ///< loss coefficient, well 2
    double u1 = 0.0;       ///< same-spin on-site interaction
    double u2 = 0.0;       ///< opposite-spin on-site interaction

    double period() const { return 2.0 * M_PI / omega; }
    double epsilon() const { return nu / omega; }  ///< tunneling/drive ratio
    double theta() const { return delta / omega; } ///< Raman/drive ratio

    /// Throws std::invalid_argument unless omega > 0, nu >= 0, beta1,2 >= 0.
    void validate() const;

    /// Distance of 2*u1 and 2*u2 from the nearest multiple m*omega,
    /// m = 0..M with M = 1 + floor(2*max(u1,u2)/omega). A small margin
    /// signals a resonant process that breaks the second-order reduction.
    double resonance_margin() const;

    /// True when resonance_margin() < 1e-3 * omega. Callers warn, not abort.
    bool near_resonance() const { return resonance_margin() < 1e-3 * omega; }
};

bool operator==(const SystemParams& a, const SystemParams& b);

}  // namespace pairwell
