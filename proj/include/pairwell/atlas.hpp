#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pairwell/channel.hpp"
#include "pairwell/integrator.hpp"
#include "pairwell/quasienergy.hpp"
#include "pairwell/system_params.hpp"

namespace pairwell {

/// One swept parameter. Plain SystemParams fields go by name ("f", "u1",
/// "u2", "omega_z", "nu", "delta", "beta1", "beta2", "alpha"); the scaled
/// figure coordinates "2u1/omega", "2u2/omega", "2f/omega" and
/// "2omega_z/omega" are also accepted.
struct AxisSpec {
    std::string param = "2u1/omega";
    double lo = 0.2;
    double hi = 4.0;
    int count = 400;
};

/// Writes axis value x into the parameter the axis names.
void apply_axis(const AxisSpec& axis, double x, SystemParams& params);
double axis_value(const AxisSpec& axis, int index);

struct GridSpec {
    AxisSpec x;         ///< default 2u1/omega
    AxisSpec y;         ///< default 2f/omega
    SystemParams fixed;
    Channel channel = Channel::InterwellSpinConserving;

    void validate() const;
};

/// Im(zeta/xi) landscape over a parameter grid. Cells are stored row-major
/// with y as the row coordinate and x innermost. Cells whose coupling sums
/// hit a resonant denominator are masked and carry no value.
struct StabilityMap {
    GridSpec grid;
    std::vector<double> values;
    std::vector<Verdict> verdicts;
    std::vector<std::uint8_t> masked;

    std::size_t index(int iy, int ix) const {
        return static_cast<std::size_t>(iy) * grid.x.count + ix;
    }
};

/// Per-cell quasienergy evaluation. Deterministic row-major output for any
/// worker count (workers > 1 split rows; every cell is an independent pure
/// evaluation).
StabilityMap scan(const GridSpec& spec, int workers = 1);

struct CurvePoint {
    double x = 0.0;
    double pbar = 0.0;
    bool above_threshold = false;
};

/// Threshold separating the near-resonance region (unpaired state
/// significantly populated) from the far-resonance region.
inline constexpr double kUnpairedThreshold = 0.02;

/// Time-averaged unpaired-state probability P-bar(k_unpaired) along a
/// sweep, from exact propagation of |0020> over [0, cfg.t_end].
std::vector<CurvePoint> unpaired_average_curve(Channel channel, const SystemParams& fixed,
                                               const AxisSpec& sweep, int k_unpaired,
                                               const IntegratorConfig& cfg, int workers = 1);

struct SolveResult {
    double value = 0.0;      ///< solved parameter value
    double residual = 0.0;   ///< |objective| at the root
    int iterations = 0;
};

/// Solves the unbalanced-stability balance condition
/// beta1*beta2 = nu^4 rho_b(f)^2 / omega^2 for the drive amplitude f on
/// [f_lo, f_hi]. The bracket is coarse-scanned (400 points); of all roots
/// found, the one nearest `hint` (default: bracket midpoint) is returned.
/// With beta1*beta2 = 0 the condition degenerates to rho_b(f) = 0 and a
/// zero of the cross coupling is returned. Throws NoSignChange when the
/// scan finds no root, and propagates ResonanceError.
SolveResult solve_balance_f(Channel channel, const SystemParams& fixed, double f_lo,
                            double f_hi, std::optional<double> hint = std::nullopt);

/// Root of the channel's cross coupling rho_b in the named free parameter.
SolveResult solve_rho_zero(Channel channel, const SystemParams& fixed,
                           const std::string& free_param, double lo, double hi,
                           std::optional<double> hint = std::nullopt);

}  // namespace pairwell
