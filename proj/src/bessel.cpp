#include "pairwell/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace pairwell {

double bessel_j(int order, double x) {
    if (order > 10000 || order < -10000)
        throw std::domain_error("bessel_j: |order| must be <= 10000");
    if (!std::isfinite(x)) throw std::domain_error("bessel_j: x must be finite");

    // Fold order and argument into the first quadrant; each reflection
    // contributes (-1)^n, so the signs cancel when both are flipped.
    double sign = 1.0;
    unsigned n = static_cast<unsigned>(order >= 0 ? order : -order);
    const bool odd = (n % 2) == 1;
    if (order < 0 && odd) sign = -sign;
    if (x < 0.0) {
        x = -x;
        if (odd) sign = -sign;
    }
    return sign * std::cyl_bessel_j(n, x);
}

}  // namespace pairwell
