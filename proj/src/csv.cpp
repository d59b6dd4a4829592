#include "pairwell/csv.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "pairwell/fock_basis.hpp"

namespace pairwell {
namespace csv {

std::string format(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string trajectory(const Trajectory& traj) {
    std::string out = "t";
    for (int k = 1; k <= fock::kDim; ++k) out += ",P" + std::to_string(k);
    out += ",Ptotal";
    for (int k = 1; k <= fock::kDim; ++k)
        out += ",Re_c" + std::to_string(k) + ",Im_c" + std::to_string(k);
    out += "\n";

    // Component slot per Fock index (-1 where the state is not stored).
    std::array<int, fock::kDim> slot;
    slot.fill(-1);
    for (std::size_t c = 0; c < traj.basis_indices.size(); ++c)
        slot[static_cast<std::size_t>(traj.basis_indices[c] - 1)] = static_cast<int>(c);

    for (std::size_t j = 0; j < traj.size(); ++j) {
        out += format(traj.times[j]);
        for (int k = 0; k < fock::kDim; ++k)
            out += "," + format(slot[static_cast<std::size_t>(k)] >= 0
                                    ? traj.probability(j, slot[static_cast<std::size_t>(k)])
                                    : 0.0);
        out += "," + format(traj.total(j));
        for (int k = 0; k < fock::kDim; ++k) {
            const int c = slot[static_cast<std::size_t>(k)];
            const std::complex<double> amp =
                c >= 0 ? traj.amplitudes[j](c) : std::complex<double>(0.0, 0.0);
            out += "," + format(amp.real()) + "," + format(amp.imag());
        }
        out += "\n";
    }
    return out;
}

std::string spectrum(const QuasienergySpectrum& spectrum) {
    std::string out = "channel,E_re,E_im\n";
    const std::string name = to_string(spectrum.channel);
    for (const auto& e : spectrum.energies)
        out += name + "," + format(e.real()) + "," + format(e.imag()) + "\n";
    out += "zeta_re,zeta_im,verdict\n";
    if (spectrum.zeta_or_xi)
        out += format(spectrum.zeta_or_xi->real()) + "," + format(spectrum.zeta_or_xi->imag());
    else
        out += ",";
    out += "," + to_string(spectrum.verdict) + "\n";
    return out;
}

std::string stability_map(const StabilityMap& map) {
    std::string out = "x,y,value,verdict,masked\n";
    for (int iy = 0; iy < map.grid.y.count; ++iy) {
        const double y = axis_value(map.grid.y, iy);
        for (int ix = 0; ix < map.grid.x.count; ++ix) {
            const double x = axis_value(map.grid.x, ix);
            const std::size_t at = map.index(iy, ix);
            out += format(x) + "," + format(y) + ",";
            if (map.masked[at]) {
                out += ",,1\n";
            } else {
                out += format(map.values[at]) + "," + to_string(map.verdicts[at]) + ",0\n";
            }
        }
    }
    return out;
}

std::string curve(const std::vector<CurvePoint>& points) {
    std::string out = "x,Pbar,above_threshold\n";
    for (const auto& p : points)
        out += format(p.x) + "," + format(p.pbar) + "," + (p.above_threshold ? "1" : "0") + "\n";
    return out;
}

std::string solve(const std::string& kind, const std::string& parameter,
                  const SolveResult& result) {
    return "kind,parameter,value,residual\n" + kind + "," + parameter + "," +
           format(result.value) + "," + format(result.residual) + "\n";
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream stream(path, std::ios::binary | std::ios::trunc);
    if (!stream) throw std::runtime_error("cannot open '" + path + "' for writing");
    stream.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!stream) throw std::runtime_error("short write to '" + path + "'");
}

}  // namespace csv
}  // namespace pairwell
