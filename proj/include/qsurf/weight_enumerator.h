#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qsurf/code_library.h"

namespace qsurf {

/// Weight distributions of a stabilizer code, indexed by weight 0..n.
/// A: stabilizer group, L: undetectable errors (normalizer minus stabilizer), B = A + L: normalizer.
struct WeightEnumerator {
    int n = 0;
    std::vector<uint64_t> A;
    std::vector<uint64_t> L;
    std::vector<uint64_t> B;

    /// Smallest w with L_w > 0, or -1 if L is zero.
    int min_logical_weight() const;
};

/// Histograms of the four logical cosets S, S X_L, S Z_L, S X_L Z_L, plus the lightest logical
/// operators made only of X letters or only of Z letters.
struct CosetEnumeration {
    std::array<std::vector<uint64_t>, 4> histograms;  // coset order: I, X_L, Z_L, Y_L
    int min_pure_x = -1;
    int min_pure_z = -1;
};

/// Largest n - k accepted by the normalizer walk.
inline constexpr int kMaxEnumeratedGenerators = 24;

/// Walks all 2^(n-k) stabilizer elements in Gray-code order (one multiply per step) and bins the weight
/// of every element of each logical coset. Parallel chunks fix the top generator bits.
/// Throws BudgetExceeded (see class_enumerator.h) above kMaxEnumeratedGenerators.
CosetEnumeration enumerate_cosets(const StabilizerCode& code, int workers = 1);

WeightEnumerator coset_enumerate(const StabilizerCode& code, int workers = 1);

/// B(x, y) = 2^(k - n) A(x + 3y, x - y), the quantum MacWilliams transform of the stabilizer
/// enumerator. Returns A, L = B - A and B. Throws std::logic_error if a coefficient is not an integer
/// or L would be negative.
WeightEnumerator macwilliams_check(const std::vector<uint64_t>& A, int n, int k);

/// d over all nontrivial cosets; d_x and d_z from the lightest pure-X and pure-Z logical operators.
CodeDistances true_distances(const StabilizerCode& code, int workers = 1);
CodeDistances true_distances(const CosetEnumeration& cosets);

}  // namespace qsurf
