#include "pairwell/fock_basis.hpp"

#include <stdexcept>

namespace pairwell {
namespace fock {

const std::array<Occupation, kDim>& states() {
    static const std::array<Occupation, kDim> table = {{
        {1, 1, 0, 0},  // 1
        {2, 0, 0, 0},  // 2
        {0, 2, 0, 0},  // 3
        {0, 0, 1, 1},  // 4
        {0, 0, 2, 0},  // 5
        {0, 0, 0, 2},  // 6
        {1, 0, 1, 0},  // 7
        {1, 0, 0, 1},  // 8
        {0, 1, 1, 0},  // 9
        {0, 1, 0, 1},  // 10
    }};
    return table;
}

const Occupation& state(int k) {
    if (k < 1 || k > kDim) throw std::out_of_range("fock::state: index must be 1..10");
    return states()[static_cast<std::size_t>(k - 1)];
}

int index_of(const Occupation& occ) {
    const auto& table = states();
    for (int k = 0; k < kDim; ++k)
        if (table[static_cast<std::size_t>(k)] == occ) return k + 1;
    return 0;
}

std::string label(int k) {
    const Occupation& s = state(k);
    return "|" + std::to_string(s.n1_up) + std::to_string(s.n1_dn) + std::to_string(s.n2_up) +
           std::to_string(s.n2_dn) + ">";
}

int parse_label(const std::string& text) {
    std::string digits;
    for (char c : text) {
        if (c >= '0' && c <= '9') digits.push_back(c);
        else if (c == '|' || c == '>' || c == '<' || c == ' ') continue;
        else throw std::invalid_argument("fock::parse_label: malformed label '" + text + "'");
    }
    if (digits.size() != 4)
        throw std::invalid_argument("fock::parse_label: expected four occupation digits in '" +
                                    text + "'");
    Occupation occ{digits[0] - '0', digits[1] - '0', digits[2] - '0', digits[3] - '0'};
    const int k = index_of(occ);
    if (k == 0)
        throw std::invalid_argument("fock::parse_label: '" + text +
                                    "' is not a two-particle basis state");
    return k;
}

}  // namespace fock
}  // namespace pairwell
