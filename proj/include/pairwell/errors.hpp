#pragma once

#include <stdexcept>
#include <string>

namespace pairwell {

/// Raised when a retained Bessel-sum term has a near-vanishing denominator,
/// i.e. 2U/omega sits within the guard band of an integer photon number.
/// The perturbative coupling sums are invalid at that parameter point.
class ResonanceError : public std::runtime_error {
  public:
    ResonanceError(int p, double denominator, double guard)
        : std::runtime_error("resonant denominator p + detuning = " +
                             std::to_string(denominator) + " at p = " + std::to_string(p) +
                             " (|.| < " + std::to_string(guard) + ")"),
          p_(p),
          denominator_(denominator) {}

    int p() const { return p_; }
    double denominator() const { return denominator_; }

  private:
    int p_;
    double denominator_;
};

/// Raised by bracketed solvers when the objective does not change sign
/// anywhere on the supplied interval.
class NoSignChange : public std::runtime_error {
  public:
    NoSignChange(double lo, double hi)
        : std::runtime_error("no sign change on bracket [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]") {}
};

/// Configuration ingestion failure (parse error, schema violation,
/// unnormalized initial state, unknown preset, ...).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested product's physical precondition does not hold (e.g. the
/// intrawell spectrum presented as the physical model while the interwell
/// cross coupling is not suppressed).
class PreconditionError : public std::runtime_error {
  public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pairwell
