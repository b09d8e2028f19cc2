#include "qsurf/pauli.h"

#include <bit>
#include <stdexcept>

namespace qsurf {

namespace {

void check_qubit_count(int n) {
    if (n < 0 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [0, 64]");
    }
}

}  // namespace

PauliOperator::PauliOperator(int n) : n_(n) { check_qubit_count(n); }

PauliOperator::PauliOperator(int n, uint64_t x_mask, uint64_t z_mask) : n_(n), x_(x_mask), z_(z_mask) {
    check_qubit_count(n);
    if (((x_ | z_) & ~low_bits(n)) != 0) {
        throw std::invalid_argument("Pauli mask has bits beyond qubit count");
    }
}

PauliOperator PauliOperator::from_string(std::string_view text) {
    PauliOperator p(static_cast<int>(text.size()));
    for (int q = 0; q < p.n_; ++q) {
        p.set_letter(q, text[q]);
    }
    return p;
}

PauliOperator PauliOperator::single(int n, int qubit, char letter) {
    PauliOperator p(n);
    p.set_letter(qubit, letter);
    return p;
}

char PauliOperator::letter(int qubit) const {
    const bool x = (x_ >> qubit) & 1;
    const bool z = (z_ >> qubit) & 1;
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

void PauliOperator::set_letter(int qubit, char letter) {
    if (qubit < 0 || qubit >= n_) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range");
    }
    const uint64_t bit = uint64_t{1} << qubit;
    x_ &= ~bit;
    z_ &= ~bit;
    switch (letter) {
        case 'I':
        case '_':
            break;
        case 'X':
            x_ |= bit;
            break;
        case 'Z':
            z_ |= bit;
            break;
        case 'Y':
            x_ |= bit;
            z_ |= bit;
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + letter + "'");
    }
}

int PauliOperator::weight() const { return std::popcount(x_ | z_); }

PauliClass PauliOperator::classify() const {
    PauliClass c;
    c.j = weight();
    c.i = std::popcount(z_ & ~x_);
    c.ell = std::popcount(x_ & ~z_);
    return c;
}

PauliOperator PauliOperator::hadamard_conjugated(uint64_t mask) const {
    mask &= low_bits(n_);
    PauliOperator out = *this;
    out.x_ = (x_ & ~mask) | (z_ & mask);
    out.z_ = (z_ & ~mask) | (x_ & mask);
    return out;
}

std::string PauliOperator::str() const {
    std::string s(n_, 'I');
    for (int q = 0; q < n_; ++q) {
        s[q] = letter(q);
    }
    return s;
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("multiply: operators act on " + std::to_string(a.num_qubits()) + " and " +
                                    std::to_string(b.num_qubits()) + " qubits");
    }
    return PauliOperator(a.num_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask());
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("commutes: operators act on " + std::to_string(a.num_qubits()) + " and " +
                                    std::to_string(b.num_qubits()) + " qubits");
    }
    const int overlaps = std::popcount(a.x_mask() & b.z_mask()) + std::popcount(a.z_mask() & b.x_mask());
    return overlaps % 2 == 0;
}

}  // namespace qsurf
