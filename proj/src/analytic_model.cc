#include "qsurf/analytic_model.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "qsurf/weight_enumerator.h"

namespace qsurf {

namespace {

Rational binomial_rational(int n, int k) {
    if (k < 0 || k > n) return 0;
    boost::multiprecision::cpp_int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return Rational(r);
}

double binomial_double(int n, int k) {
    if (k < 0 || k > n) return 0;
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
    return r;
}

Rational pow_rational(const Rational& base, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

void require_probability(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument(std::string(name) + " must be in [0, 1]");
}

int t_of(int d) { return std::max(0, (d - 1) / 2); }

}  // namespace

Asymmetry::Asymmetry(Rational value) : value_(std::move(value)) {
    if (value_ < 0) throw std::invalid_argument("asymmetry must be non-negative");
}

Asymmetry Asymmetry::infinity() {
    Asymmetry a;
    a.value_ = 0;
    a.infinite_ = true;
    return a;
}

Asymmetry Asymmetry::parse(std::string_view text) {
    std::string s(text);
    std::string lower;
    for (char c : s) lower += char(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "inf" || lower == "infinity") return infinity();

    // digits [. digits] [e [+-] digits]
    size_t pos = 0;
    boost::multiprecision::cpp_int mantissa = 0;
    int scale = 0;
    bool any_digit = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        mantissa = mantissa * 10 + (s[pos++] - '0');
        any_digit = true;
    }
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            mantissa = mantissa * 10 + (s[pos++] - '0');
            --scale;
            any_digit = true;
        }
    }
    if (!any_digit) throw std::invalid_argument("cannot parse asymmetry '" + s + "'");
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) sign = s[pos++] == '-' ? -1 : 1;
        int exp = 0;
        bool exp_digit = false;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            exp = exp * 10 + (s[pos++] - '0');
            exp_digit = true;
            if (exp > 1000) throw std::invalid_argument("asymmetry exponent out of range");
        }
        if (!exp_digit) throw std::invalid_argument("cannot parse asymmetry '" + s + "'");
        scale += sign * exp;
    }
    if (pos != s.size()) throw std::invalid_argument("cannot parse asymmetry '" + s + "'");
    Rational v(mantissa);
    boost::multiprecision::cpp_int ten = 10;
    if (scale > 0) v *= Rational(boost::multiprecision::pow(ten, unsigned(scale)));
    if (scale < 0) v /= Rational(boost::multiprecision::pow(ten, unsigned(-scale)));
    return Asymmetry(v);
}

double Asymmetry::to_double() const {
    if (infinite_) return std::numeric_limits<double>::infinity();
    return value_.convert_to<double>();
}

std::string Asymmetry::str() const {
    if (infinite_) return "inf";
    auto num = boost::multiprecision::numerator(value_);
    auto den = boost::multiprecision::denominator(value_);
    if (den == 1) return num.str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", to_double());
    return buf;
}

ChannelModel ChannelModel::from_asymmetry(double p, const Asymmetry& a) {
    require_probability(p, "p");
    ChannelModel m;
    m.p = p;
    m.asymmetry = a;
    if (a.is_infinite()) {
        m.p_z = p;
    } else {
        double av = a.to_double();
        m.p_x = p / (av + 2.0);
        m.p_y = m.p_x;
        m.p_z = av * p / (av + 2.0);
    }
    return m;
}

ChannelModel ChannelModel::from_probabilities(double p_x, double p_y, double p_z) {
    require_probability(p_x, "p_x");
    require_probability(p_y, "p_y");
    require_probability(p_z, "p_z");
    ChannelModel m;
    m.p_x = p_x;
    m.p_y = p_y;
    m.p_z = p_z;
    m.p = p_x + p_y + p_z;
    require_probability(m.p, "p_x + p_y + p_z");
    return m;
}

Rational BetaPolynomial::failure_numerator(const Asymmetry& a) const {
    if (a.is_infinite()) throw std::invalid_argument("failure numerator is unbounded at A = inf");
    Rational sum = 0;
    Rational power = 1;
    for (const auto& c : numerator) {
        sum += c * power;
        power *= a.value();
    }
    return sum;
}

Rational BetaPolynomial::beta(const Asymmetry& a) const {
    if (a.is_infinite()) return 1 - numerator.back();
    return 1 - failure_numerator(a) / pow_rational(a.value() + 2, j);
}

BetaPolynomial beta_polynomial(const ErrorClassTable& table, int j) {
    if (j < 1 || j > table.j_max) {
        throw std::out_of_range("weight " + std::to_string(j) + " not enumerated for " + table.code_name);
    }
    BetaPolynomial poly;
    poly.j = j;
    poly.numerator.assign(j + 1, Rational(0));
    for (int i = 0; i <= j; ++i) {
        for (int ell = 0; ell <= j - i; ++ell) {
            poly.numerator[i] += binomial_rational(j, i) * binomial_rational(j - i, ell) *
                                 table.at(j, i, ell).fraction();
        }
    }
    return poly;
}

Rational beta(const ErrorClassTable& table, int j, const Asymmetry& a) {
    if (j == 0) return 1;
    return beta_polynomial(table, j).beta(a);
}

double beta(const ErrorClassTable& table, int j, const ChannelModel& channel) {
    if (j == 0) return 1.0;
    if (channel.asymmetry) return beta(table, j, *channel.asymmetry).convert_to<double>();
    double px = channel.p_x, py = channel.p_y, pz = channel.p_z;
    if (channel.p <= 0) px = py = pz = 1.0 / 3.0;
    double total = px + py + pz;
    px /= total;
    py /= total;
    pz /= total;
    double fail = 0;
    for (int i = 0; i <= j; ++i) {
        for (int ell = 0; ell <= j - i; ++ell) {
            fail += binomial_double(j, i) * binomial_double(j - i, ell) * table.at(j, i, ell).value() *
                    std::pow(pz, i) * std::pow(px, ell) * std::pow(py, j - i - ell);
        }
    }
    return 1.0 - fail;
}

CodeDistances effective_distances(const StabilizerCode& code) {
    if (code.n - code.k <= kMaxEnumeratedGenerators) return true_distances(code);
    return CodeDistances{std::min(code.d_x, code.d_z), code.d_x, code.d_z};
}

CorrectionCapability correction_capability(const CodeDistances& d) {
    CorrectionCapability c;
    c.t_x = t_of(d.d_x);
    c.t_z = t_of(d.d_z);
    c.e_g = std::min(c.t_x, c.t_z);
    c.e_z = std::max(0, c.t_z - c.e_g);
    return c;
}

double binomial_term(int n, int j, double p) {
    if (j < 0 || j > n) return 0;
    return binomial_double(n, j) * std::pow(p, j) * std::pow(1.0 - p, n - j);
}

std::vector<AsymptoticTerm> asymptotic_terms(const StabilizerCode& code, const ErrorClassTable& table,
                                             const ChannelModel& channel, const CodeDistances& distances) {
    CorrectionCapability cap = correction_capability(distances);
    std::vector<int> weights{cap.e_g + 1};
    if (cap.e_z > 0) weights.push_back(cap.e_g + cap.e_z + 1);
    std::vector<AsymptoticTerm> terms;
    for (int j : weights) {
        if (j > table.j_max) {
            throw std::out_of_range("asymptotic term needs weight " + std::to_string(j) + " but " +
                                    table.code_name + " is enumerated to " + std::to_string(table.j_max));
        }
        terms.push_back({j, binomial_double(code.n, j) * (1.0 - beta(table, j, channel))});
    }
    return terms;
}

double p_logical_asymptotic(const StabilizerCode& code, const ErrorClassTable& table, const ChannelModel& channel,
                            const CodeDistances& distances) {
    double sum = 0;
    for (const auto& term : asymptotic_terms(code, table, channel, distances)) {
        sum += term.coefficient * std::pow(channel.p, term.j);
    }
    return sum;
}

Bracket p_logical_full(const StabilizerCode& code, const ErrorClassTable& table, const ChannelModel& channel,
                       int j_cut, const CodeDistances& distances) {
    int t = correction_capability(distances).e_g;
    if (j_cut < t + 1) {
        throw std::invalid_argument("j_cut " + std::to_string(j_cut) + " is below t + 1 = " + std::to_string(t + 1));
    }
    if (j_cut > table.j_max) {
        throw std::invalid_argument("j_cut " + std::to_string(j_cut) + " exceeds the enumerated weight " +
                                    std::to_string(table.j_max));
    }
    Bracket b;
    for (int j = 1; j <= j_cut; ++j) {
        b.lower += binomial_term(code.n, j, channel.p) * (1.0 - beta(table, j, channel));
    }
    double tail = 0;
    for (int j = j_cut + 1; j <= code.n; ++j) tail += binomial_term(code.n, j, channel.p);
    b.upper = b.lower + tail;
    return b;
}

double bounded_distance_curve(const StabilizerCode& code, const ChannelModel& channel) {
    int t = t_of(std::min(code.d_x, code.d_z));
    double sum = 0;
    for (int j = t + 1; j <= code.n; ++j) sum += binomial_term(code.n, j, channel.p);
    return sum;
}

double compare_ratio(const StabilizerCode& code1, const ErrorClassTable& table1, const CodeDistances& distances1,
                     const StabilizerCode& code2, const ErrorClassTable& table2, const CodeDistances& distances2,
                     double p, const Asymmetry& a) {
    ChannelModel channel = ChannelModel::from_asymmetry(p, a);
    double num = p_logical_asymptotic(code1, table1, channel, distances1);
    double den = p_logical_asymptotic(code2, table2, channel, distances2);
    if (den == 0) throw std::domain_error("compare ratio: denominator code has zero leading term");
    return num / den;
}

}  // namespace qsurf
