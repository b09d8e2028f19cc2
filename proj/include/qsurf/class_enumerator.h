#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qsurf/code_library.h"
#include "qsurf/decoder.h"

namespace qsurf {

using Rational = boost::multiprecision::cpp_rational;

/// Non-correctable count for one (j, i, ell) error class.
struct ClassCount {
    int j = 0;
    int i = 0;
    int ell = 0;
    uint64_t failures = 0;
    uint64_t total = 0;

    Rational fraction() const;
    double value() const { return total == 0 ? 0.0 : double(failures) / double(total); }
    /// Letters sorted X, Z, Y: "XY" is one X and one Y, "ZZY" two Z and one Y.
    std::string label() const;
};

std::string class_label(int j, int i, int ell);

/// f_j(i, ell) for j = 1..j_max. Rows are ordered by j, then by descending ell, then descending i,
/// which is the column order XX, XZ, XY, ZZ, ZY, YY.
struct ErrorClassTable {
    std::string code_name;
    int n = 0;
    int j_max = 0;
    std::vector<ClassCount> classes;

    const ClassCount& at(int j, int i, int ell) const;
    const ClassCount* find(int j, int i, int ell) const;
    bool covers(int j) const { return j >= 0 && j <= j_max; }
};

/// Raised when a requested workload exceeds its budget; carries the estimated cost.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, double estimated_cost)
        : std::runtime_error(what), estimated_cost_(estimated_cost) {}
    double estimated_cost() const { return estimated_cost_; }

private:
    double estimated_cost_;
};

struct EnumerationOptions {
    int workers = 1;
    /// Maximum number of decodes, sum over j of C(n, j) 3^j.
    double max_decodes = 2e7;
};

/// Number of weight-j Pauli patterns on n qubits, C(n, j) 3^j.
double pattern_count(int n, int j);
/// Patterns in one class: C(n, j) j! / (i! ell! (j-i-ell)!).
uint64_t class_total(int n, int j, int i, int ell);

/// Decodes every Pauli pattern of weight 1..j_max and counts failures per class. Positions are
/// visited in lexicographic order with letters X, Z, Y per position; chunks are contiguous ranges of
/// position tuples, so the counts do not depend on the worker count.
ErrorClassTable enumerate_classes(const StabilizerCode& code, int j_max, const EnumerationOptions& options = {});

struct SpotCheck {
    Outcome outcome = Outcome::Success;
    DecodeTrace trace;
};

SpotCheck spot_check(const StabilizerCode& code, const PauliOperator& pattern);

}  // namespace qsurf
