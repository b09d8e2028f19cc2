#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsurf/class_enumerator.h"
#include "qsurf/code_library.h"

namespace qsurf {

/// Channel asymmetry A = 2 p_Z / (p - p_Z). Infinity (the phase-flip channel) is a distinct value,
/// not a large number.
class Asymmetry {
public:
    Asymmetry() : value_(1) {}
    explicit Asymmetry(Rational value);
    static Asymmetry infinity();
    /// Parses "inf" or an exact decimal such as "10", "0.5", "1e2".
    static Asymmetry parse(std::string_view text);

    bool is_infinite() const { return infinite_; }
    const Rational& value() const { return value_; }
    double to_double() const;
    std::string str() const;

    bool operator==(const Asymmetry&) const = default;

private:
    Rational value_;
    bool infinite_ = false;
};

/// Independent and identically distributed Pauli channel.
struct ChannelModel {
    double p = 0;
    double p_x = 0;
    double p_y = 0;
    double p_z = 0;
    std::optional<Asymmetry> asymmetry;

    /// p_Z = A p / (A + 2), p_X = p_Y = p / (A + 2).
    static ChannelModel from_asymmetry(double p, const Asymmetry& a);
    static ChannelModel from_probabilities(double p_x, double p_y, double p_z);
};

/// beta_j(A) = 1 - N_j(A) / (A + 2)^j where N_j(A) = sum_i A^i sum_ell C(j,i) C(j-i,ell) f_j(i,ell).
struct BetaPolynomial {
    int j = 0;
    std::vector<Rational> numerator;  // coefficient of A^i, i = 0..j

    Rational failure_numerator(const Asymmetry& a) const;
    Rational beta(const Asymmetry& a) const;
};

BetaPolynomial beta_polynomial(const ErrorClassTable& table, int j);

/// Exact beta_j at asymmetry A. At A = infinity this is 1 - f_j(j, 0).
Rational beta(const ErrorClassTable& table, int j, const Asymmetry& a);
/// beta_j for an arbitrary (p_X, p_Y, p_Z) channel. At p = 0 the asymmetry form is used if known,
/// otherwise the depolarizing weighting.
double beta(const ErrorClassTable& table, int j, const ChannelModel& channel);

/// Distances used by the analytic formulas: enumerated when the normalizer is small enough,
/// declared otherwise.
CodeDistances effective_distances(const StabilizerCode& code);

struct CorrectionCapability {
    int t_x = 0;
    int t_z = 0;
    int e_g = 0;  // min(t_x, t_z)
    int e_z = 0;  // max(0, t_z - e_g)
};
CorrectionCapability correction_capability(const CodeDistances& d);

/// Leading terms coefficient_j * p^j of the small-p logical error rate.
struct AsymptoticTerm {
    int j = 0;
    double coefficient = 0;  // C(n, j) (1 - beta_j)
};

std::vector<AsymptoticTerm> asymptotic_terms(const StabilizerCode& code, const ErrorClassTable& table,
                                             const ChannelModel& channel, const CodeDistances& distances);

/// Single term at t + 1 for codes with e_z == 0; otherwise the two terms at e_g + 1 and e_g + e_z + 1.
double p_logical_asymptotic(const StabilizerCode& code, const ErrorClassTable& table, const ChannelModel& channel,
                            const CodeDistances& distances);

struct Bracket {
    double lower = 0;
    double upper = 0;
};

/// The full binomial sum with known beta_j for j <= j_cut. The remaining weights are bracketed:
/// all corrected (lower) or none corrected (upper).
Bracket p_logical_full(const StabilizerCode& code, const ErrorClassTable& table, const ChannelModel& channel,
                       int j_cut, const CodeDistances& distances);

/// Probability of more than t errors, t from the declared distances. Independent of asymmetry.
double bounded_distance_curve(const StabilizerCode& code, const ChannelModel& channel);

/// r(p, A): ratio of the asymptotic approximations of code1 over code2. r > 1 favours code2.
double compare_ratio(const StabilizerCode& code1, const ErrorClassTable& table1, const CodeDistances& distances1,
                     const StabilizerCode& code2, const ErrorClassTable& table2, const CodeDistances& distances2,
                     double p, const Asymmetry& a);

/// C(n, j) p^j (1 - p)^(n - j).
double binomial_term(int n, int j, double p);

}  // namespace qsurf
