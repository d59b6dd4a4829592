#include "pairwell/quasienergy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pairwell {

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::StableAllReal: return "StableAllReal";
        case Verdict::StableDissipative: return "StableDissipative";
        case Verdict::Unstable: return "Unstable";
    }
    throw std::logic_error("to_string(Verdict): unreachable");
}

double stability_tolerance(const SystemParams& params) {
    return 1e-10 * std::max(1.0, params.omega);
}

Verdict classify(const std::vector<std::complex<double>>& energies, double tol) {
    bool any_real = false;
    bool all_real = true;
    bool rest_decaying = true;
    for (const auto& e : energies) {
        if (std::abs(e.imag()) < tol) {
            any_real = true;
        } else {
            all_real = false;
            if (e.imag() >= -tol) rest_decaying = false;
        }
    }
    if (all_real) return Verdict::StableAllReal;
    if (any_real && rest_decaying) return Verdict::StableDissipative;
    return Verdict::Unstable;
}

std::complex<double> discriminant(double coupling, double dissipation) {
    const double radicand = coupling * coupling - dissipation * dissipation;
    if (radicand >= 0.0) return {std::sqrt(radicand), 0.0};
    return {0.0, std::sqrt(-radicand)};
}

QuasienergySpectrum quasienergies(Channel channel, const SystemParams& params) {
    if (channel == Channel::IntrawellSpinFlipping) return intrawell_spectrum(params);

    const EffectiveCouplings rho = couplings(channel, params);
    const Complex i_unit(0.0, 1.0);
    const double g = 2.0 * params.nu * params.nu / params.omega;
    const Complex net_gain = i_unit * (params.beta1 - params.beta2);
    const Complex zeta = discriminant(g * rho.rho_b, params.beta1 + params.beta2);

    QuasienergySpectrum spectrum;
    spectrum.channel = channel;
    spectrum.zeta_or_xi = zeta;
    spectrum.energies = {
        net_gain - 2.0 * g * rho.rho_a,
        2.0 * params.u1 + net_gain + g * rho.rho_a - zeta,
        2.0 * params.u1 + net_gain + g * rho.rho_a + zeta,
    };
    spectrum.verdict = classify(spectrum.energies, stability_tolerance(params));
    return spectrum;
}

QuasienergySpectrum intrawell_spectrum(const SystemParams& params) {
    const EffectiveCouplings rho = couplings(Channel::IntrawellSpinFlipping, params);
    const Complex i_unit(0.0, 1.0);
    const double g = params.delta * params.delta / params.omega;
    const Complex gain = 2.0 * i_unit * params.beta1;
    const Complex loss = -2.0 * i_unit * params.beta2;

    QuasienergySpectrum spectrum;
    spectrum.channel = Channel::IntrawellSpinFlipping;
    spectrum.energies = {
        2.0 * params.u2 + gain - g * rho.rho_a,
        2.0 * params.u1 + gain + 0.5 * g * (rho.rho_a - rho.rho_b),
        2.0 * params.u1 + gain + 0.5 * g * (rho.rho_a + rho.rho_b),
        2.0 * params.u2 + loss - g * rho.rho_a,
        2.0 * params.u1 + loss + 0.5 * g * (rho.rho_a - rho.rho_b),
        2.0 * params.u1 + loss + 0.5 * g * (rho.rho_a + rho.rho_b),
    };
    spectrum.verdict = classify(spectrum.energies, stability_tolerance(params));
    return spectrum;
}

}  // namespace pairwell
