#include "pairwell/hamiltonian.hpp"

#include <cmath>

namespace pairwell {

namespace {

// Applies a^dag_{1,s} a_{2,s'} to |occ>, returning the target index (1-based)
// and the bosonic matrix element; index 0 when annihilation hits vacuum.
struct HopResult {
    int target = 0;
    double amplitude = 0.0;
};

int& component(Occupation& occ, int well, int spin) {
    if (well == 1) return spin == 0 ? occ.n1_up : occ.n1_dn;
    return spin == 0 ? occ.n2_up : occ.n2_dn;
}

HopResult apply_transfer(const Occupation& occ, int well_to, int spin_to, int well_from,
                         int spin_from) {
    Occupation result = occ;
    int& nfrom = component(result, well_from, spin_from);
    if (nfrom == 0) return {};
    double amp = std::sqrt(static_cast<double>(nfrom));
    --nfrom;
    int& nto = component(result, well_to, spin_to);
    amp *= std::sqrt(static_cast<double>(nto + 1));
    ++nto;
    return {fock::index_of(result), amp};
}

}  // namespace

HamiltonianParts build_parts(const SystemParams& params) {
    HamiltonianParts parts;
    parts.static_part.setZero();
    parts.drive_diag.setZero();

    // Interwell hopping -nu (a1^dag R(alpha) a2 + H.c.) with the spin
    // rotation R = exp(-i pi alpha sigma_y).
    const double c = std::cos(M_PI * params.alpha);
    const double s = std::sin(M_PI * params.alpha);
    const double rot[2][2] = {{c, -s}, {s, c}};
    for (int k = 1; k <= fock::kDim; ++k) {
        const Occupation& occ = fock::state(k);
        for (int spin_to = 0; spin_to < 2; ++spin_to) {
            for (int spin_from = 0; spin_from < 2; ++spin_from) {
                const HopResult hop = apply_transfer(occ, 1, spin_to, 2, spin_from);
                if (hop.target != 0)
                    parts.static_part(hop.target - 1, k - 1) +=
                        -params.nu * rot[spin_to][spin_from] * hop.amplitude;
            }
        }
        // Raman spin flip (delta/2)(a_{j up}^dag a_{j dn}), both wells.
        for (int well = 1; well <= 2; ++well) {
            const HopResult flip = apply_transfer(occ, well, 0, well, 1);
            if (flip.target != 0)
                parts.static_part(flip.target - 1, k - 1) += 0.5 * params.delta * flip.amplitude;
        }
    }
    // Add Hermitian conjugates of the transfer terms.
    const Matrix10 upper = parts.static_part;
    parts.static_part += upper.adjoint();

    const Complex i_unit(0.0, 1.0);
    for (int k = 1; k <= fock::kDim; ++k) {
        const Occupation& occ = fock::state(k);
        // cos(omega t) coefficient: Zeeman + antisymmetric ac force.
        parts.drive_diag(k - 1) = params.omega_z * occ.spin_z() +
                                  params.f * (occ.well1() - occ.well2());
        // Static diagonal: gain/loss and on-site interactions. The quartic
        // term sums both spin orderings, so doubly occupied same-spin
        // states carry 2*u1 and opposite-spin pairs carry 2*u2.
        Complex diag = i_unit * (params.beta1 * occ.well1() - params.beta2 * occ.well2());
        diag += params.u1 * (occ.n1_up * (occ.n1_up - 1) + occ.n1_dn * (occ.n1_dn - 1) +
                             occ.n2_up * (occ.n2_up - 1) + occ.n2_dn * (occ.n2_dn - 1));
        diag += 2.0 * params.u2 * (occ.n1_up * occ.n1_dn + occ.n2_up * occ.n2_dn);
        parts.static_part(k - 1, k - 1) += diag;
    }
    return parts;
}

Matrix10 build_hamiltonian(const SystemParams& params, double t) {
    const HamiltonianParts parts = build_parts(params);
    Matrix10 h = parts.static_part;
    const double drive = std::cos(params.omega * t);
    for (int k = 0; k < fock::kDim; ++k) h(k, k) += drive * parts.drive_diag(k);
    return h;
}

}  // namespace pairwell
