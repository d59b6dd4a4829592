#include "pairwell/system_params.hpp"

#include <algorithm>
#include <stdexcept>

namespace pairwell {

void SystemParams::validate() const {
    if (!(omega > 0.0)) throw std::invalid_argument("SystemParams: omega must be positive");
    if (nu < 0.0) throw std::invalid_argument("SystemParams: nu must be nonnegative");
    if (beta1 < 0.0 || beta2 < 0.0)
        throw std::invalid_argument("SystemParams: gain/loss coefficients must be nonnegative");
    if (!std::isfinite(nu) || !std::isfinite(alpha) || !std::isfinite(delta) ||
        !std::isfinite(omega) || !std::isfinite(omega_z) || !std::isfinite(f) ||
        !std::isfinite(beta1) || !std::isfinite(beta2) || !std::isfinite(u1) ||
        !std::isfinite(u2))
        throw std::invalid_argument("SystemParams: all parameters must be finite");
}

double SystemParams::resonance_margin() const {
    const int m_max = 1 + static_cast<int>(std::floor(2.0 * std::max(u1, u2) / omega));
    double margin = std::numeric_limits<double>::infinity();
    for (int m = 0; m <= m_max; ++m) {
        margin = std::min(margin, std::abs(2.0 * u1 - m * omega));
        margin = std::min(margin, std::abs(2.0 * u2 - m * omega));
    }
    return margin;
}

bool operator==(const SystemParams& a, const SystemParams& b) {
    return a.nu == b.nu && a.alpha == b.alpha && a.delta == b.delta && a.omega == b.omega &&
           a.omega_z == b.omega_z && a.f == b.f && a.beta1 == b.beta1 && a.beta2 == b.beta2 &&
           a.u1 == b.u1 && a.u2 == b.u2;
}

}  // namespace pairwell
