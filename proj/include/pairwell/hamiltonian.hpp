#pragma once

#include <Eigen/Dense>
#include <complex>

#include "pairwell/fock_basis.hpp"
#include "pairwell/system_params.hpp"

namespace pairwell {

using Complex = std::complex<double>;
using Matrix10 = Eigen::Matrix<Complex, fock::kDim, fock::kDim>;
using Vector10 = Eigen::Matrix<Complex, fock::kDim, 1>;

/// Time decomposition H(t) = static_part + cos(omega t) * diag(drive_diag).
/// The drive vector collects the Zeeman and ac-force diagonal; everything
/// else (hopping, Raman, interactions, gain/loss) is time independent.
struct HamiltonianParts {
    Matrix10 static_part;
    Eigen::Matrix<double, fock::kDim, 1> drive_diag;
};

HamiltonianParts build_parts(const SystemParams& params);

/// Full 10x10 matrix of the two-site Hamiltonian at time t, in the fixed
/// basis order. Total function of validated parameters.
Matrix10 build_hamiltonian(const SystemParams& params, double t);

}  // namespace pairwell
