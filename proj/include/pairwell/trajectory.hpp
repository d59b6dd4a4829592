#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace pairwell {

using Complex = std::complex<double>;

/// Amplitudes at one instant.
struct StateVector {
    Eigen::VectorXcd amplitudes;
    double time = 0.0;

    double probability(int component) const { return std::norm(amplitudes(component)); }
    double total() const { return amplitudes.squaredNorm(); }
};

/// Sampled time series of reduced or full amplitudes. Probabilities and
/// the probability sum are recomputed from the stored amplitudes rather
/// than stored separately, so they cannot drift out of sync.
struct Trajectory {
    std::vector<double> times;                   ///< uniformly spaced sample instants
    std::vector<Eigen::VectorXcd> amplitudes;    ///< one vector per sample
    std::vector<int> basis_indices;              ///< 1-based Fock index per component

    double step_size = 0.0;                      ///< integrator step h
    int steps_per_period = 0;                    ///< resolved substep count
    int sample_stride = 1;                       ///< steps between samples
    bool step_warning = false;                   ///< step-halving check tripped
    double step_deviation = 0.0;                 ///< max probability change under halving

    std::size_t size() const { return times.size(); }
    int dim() const { return amplitudes.empty() ? 0 : static_cast<int>(amplitudes[0].size()); }

    StateVector state(std::size_t sample) const {
        return {amplitudes[sample], times[sample]};
    }

    /// |c|^2 of component `component` (0-based within the stored vector).
    double probability(std::size_t sample, int component) const {
        return std::norm(amplitudes[sample](component));
    }

    /// |c_k|^2 for 1-based Fock index k; zero when k is not represented.
    double probability_of_state(std::size_t sample, int k) const;

    /// Sum of all stored probabilities at one sample.
    double total(std::size_t sample) const {
        return amplitudes[sample].squaredNorm();
    }
};

}  // namespace pairwell
