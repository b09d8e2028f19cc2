#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qsurf {

/// Maximum number of qubits a PauliOperator can address.
inline constexpr int kMaxQubits = 64;

/// Error-class indices of a Pauli operator: j letters in total, i of them Z, ell of them X.
/// The remaining j - i - ell are Y.
struct PauliClass {
    int j = 0;
    int i = 0;
    int ell = 0;

    int y_count() const { return j - i - ell; }
    bool operator==(const PauliClass&) const = default;
};

/// n-qubit Pauli operator in binary-symplectic form. Phases are not tracked.
///
/// Bit q of `x` is set where the operator acts as X or Y on qubit q, bit q of `z`
/// where it acts as Z or Y. Bits at positions >= n are always zero.
class PauliOperator {
public:
    PauliOperator() = default;
    explicit PauliOperator(int n);
    PauliOperator(int n, uint64_t x_mask, uint64_t z_mask);

    /// Parses a string over {I,X,Y,Z} (also '_' for identity). Qubit 0 is the leftmost letter.
    static PauliOperator from_string(std::string_view text);
    static PauliOperator single(int n, int qubit, char letter);

    int num_qubits() const { return n_; }
    uint64_t x_mask() const { return x_; }
    uint64_t z_mask() const { return z_; }

    char letter(int qubit) const;
    void set_letter(int qubit, char letter);

    int weight() const;
    bool is_identity() const { return (x_ | z_) == 0; }
    PauliClass classify() const;

    /// Swaps X and Z on every qubit whose bit is set in `mask` (conjugation by Hadamard).
    PauliOperator hadamard_conjugated(uint64_t mask) const;

    std::string str() const;

    bool operator==(const PauliOperator&) const = default;

private:
    int n_ = 0;
    uint64_t x_ = 0;
    uint64_t z_ = 0;
};

/// Product of two Paulis with the phase discarded. Throws std::invalid_argument on size mismatch.
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);

/// True iff the symplectic inner product of a and b is zero.
bool commutes(const PauliOperator& a, const PauliOperator& b);
inline bool anticommutes(const PauliOperator& a, const PauliOperator& b) { return !commutes(a, b); }

inline uint64_t low_bits(int n) { return n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1); }

}  // namespace qsurf
