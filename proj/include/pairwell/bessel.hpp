#pragma once

namespace pairwell {

/// First-kind Bessel function J_n(x) for integer order of either sign and
/// real x of either sign, via the parity identities
/// J_{-n}(x) = (-1)^n J_n(x) and J_n(-x) = (-1)^n J_n(x).
/// Requires |order| <= 10000.
double bessel_j(int order, double x);

}  // namespace pairwell
