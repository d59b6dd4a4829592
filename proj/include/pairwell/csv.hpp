#pragma once

#include <string>
#include <vector>

#include "pairwell/atlas.hpp"
#include "pairwell/quasienergy.hpp"
#include "pairwell/trajectory.hpp"

namespace pairwell {
namespace csv {

/// Shortest round-trippable decimal form (17 significant digits).
std::string format(double value);

/// Header t,P1..P10,Ptotal,Re_c1,Im_c1..Re_c10,Im_c10; components absent
/// from a reduced trajectory are written as zeros.
std::string trajectory(const Trajectory& traj);

/// Rows channel,E_re,E_im followed by the zeta_re,zeta_im,verdict footer;
/// the zeta fields stay empty for the intrawell channel.
std::string spectrum(const QuasienergySpectrum& spectrum);

/// Rows x,y,value,verdict,masked in row-major order; masked cells carry
/// empty value/verdict fields.
std::string stability_map(const StabilityMap& map);

/// Rows x,Pbar,above_threshold.
std::string curve(const std::vector<CurvePoint>& points);

/// Rows kind,parameter,value,residual.
std::string solve(const std::string& kind, const std::string& parameter,
                  const SolveResult& result);

void write_file(const std::string& path, const std::string& contents);

}  // namespace csv
}  // namespace pairwell
