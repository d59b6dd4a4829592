#pragma once

#include <array>
#include <string>

namespace pairwell {

/// Occupation numbers (n1_up, n1_dn, n2_up, n2_dn) of one two-particle
/// Fock state.
struct Occupation {
    int n1_up = 0;
    int n1_dn = 0;
    int n2_up = 0;
    int n2_dn = 0;

    int total() const { return n1_up + n1_dn + n2_up + n2_dn; }
    int well1() const { return n1_up + n1_dn; }
    int well2() const { return n2_up + n2_dn; }
    int spin_z() const { return (n1_up - n1_dn) + (n2_up - n2_dn); }

    bool operator==(const Occupation& o) const {
        return n1_up == o.n1_up && n1_dn == o.n1_dn && n2_up == o.n2_up && n2_dn == o.n2_dn;
    }
};

/// The fixed 10-state two-boson basis. State indices are 1-based
/// everywhere in the public API so that index k corresponds to the
/// amplitude c_k: 1 |1100>, 2 |2000>, 3 |0200>, 4 |0011>, 5 |0020>,
/// 6 |0002>, 7 |1010>, 8 |1001>, 9 |0110>, 10 |0101>.
namespace fock {

inline constexpr int kDim = 10;

const std::array<Occupation, kDim>& states();

/// Occupation tuple of 1-based state index k. Throws std::out_of_range.
const Occupation& state(int k);

/// 1-based index of an occupation tuple, or 0 if not a two-particle state
/// of this sector.
int index_of(const Occupation& occ);

/// "|1100>"-style label of 1-based index k.
std::string label(int k);

/// Parses "|1100>", "1100" (with or without decorations) to a 1-based
/// index. Throws std::invalid_argument on malformed or unknown labels.
int parse_label(const std::string& text);

}  // namespace fock
}  // namespace pairwell
