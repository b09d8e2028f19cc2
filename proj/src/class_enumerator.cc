#include "qsurf/class_enumerator.h"

#include <algorithm>
#include <cmath>

#include "qsurf/parallel.h"

namespace qsurf {

namespace {

uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * uint64_t(n - k + i) / uint64_t(i);
    return r;
}

uint64_t factorial(int n) {
    uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= uint64_t(i);
    return r;
}

// All j-subsets of [0, n) in lexicographic order, flattened.
std::vector<int> combinations(int n, int j) {
    std::vector<int> out;
    std::vector<int> c(j);
    for (int i = 0; i < j; ++i) c[i] = i;
    if (j > n) return out;
    while (true) {
        out.insert(out.end(), c.begin(), c.end());
        int i = j - 1;
        while (i >= 0 && c[i] == n - j + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int k = i + 1; k < j; ++k) c[k] = c[k - 1] + 1;
    }
    return out;
}

}  // namespace

Rational ClassCount::fraction() const { return total == 0 ? Rational(0) : Rational(failures) / Rational(total); }

std::string class_label(int j, int i, int ell) {
    return std::string(ell, 'X') + std::string(i, 'Z') + std::string(j - i - ell, 'Y');
}

std::string ClassCount::label() const { return class_label(j, i, ell); }

const ClassCount* ErrorClassTable::find(int j, int i, int ell) const {
    for (const auto& c : classes) {
        if (c.j == j && c.i == i && c.ell == ell) return &c;
    }
    return nullptr;
}

const ClassCount& ErrorClassTable::at(int j, int i, int ell) const {
    if (const ClassCount* c = find(j, i, ell)) return *c;
    throw std::out_of_range("class " + class_label(j, i, ell) + " not in table for " + code_name);
}

double pattern_count(int n, int j) { return double(binomial(n, j)) * std::pow(3.0, j); }

uint64_t class_total(int n, int j, int i, int ell) {
    if (i < 0 || ell < 0 || i + ell > j) return 0;
    return binomial(n, j) * (factorial(j) / (factorial(i) * factorial(ell) * factorial(j - i - ell)));
}

ErrorClassTable enumerate_classes(const StabilizerCode& code, int j_max, const EnumerationOptions& options) {
    if (j_max < 1 || j_max > code.n) {
        throw std::invalid_argument("j_max must be in [1, n], got " + std::to_string(j_max));
    }
    double cost = 0;
    for (int j = 1; j <= j_max; ++j) cost += pattern_count(code.n, j);
    if (cost > options.max_decodes) {
        throw BudgetExceeded("enumerating weights up to " + std::to_string(j_max) + " on " + code.label() +
                                 " needs about " + std::to_string(static_cast<uint64_t>(cost)) +
                                 " decodes, budget is " + std::to_string(static_cast<uint64_t>(options.max_decodes)),
                             cost);
    }

    const MatchingDecoder decoder(code);
    ErrorClassTable table;
    table.code_name = code.label();
    table.n = code.n;
    table.j_max = j_max;

    static constexpr char kLetters[3] = {'X', 'Z', 'Y'};
    for (int j = 1; j <= j_max; ++j) {
        const std::vector<int> combos = combinations(code.n, j);
        const uint64_t combo_count = combos.size() / j;
        uint64_t letter_count = 1;
        for (int k = 0; k < j; ++k) letter_count *= 3;

        const int workers = std::max(1, options.workers);
        // failures[w][i * (j + 1) + ell]
        std::vector<std::vector<uint64_t>> failures(workers, std::vector<uint64_t>((j + 1) * (j + 1), 0));
        parallel_ranges(combo_count, workers, [&](uint64_t begin, uint64_t end, int w) {
            auto& counts = failures[w];
            for (uint64_t c = begin; c < end; ++c) {
                const int* pos = &combos[c * j];
                for (uint64_t digits = 0; digits < letter_count; ++digits) {
                    PauliOperator error(code.n);
                    uint64_t rest = digits;
                    for (int k = j - 1; k >= 0; --k) {
                        error.set_letter(pos[k], kLetters[rest % 3]);
                        rest /= 3;
                    }
                    const PauliOperator correction = decoder.decode(extract_syndrome(code, error));
                    if (classify_failure(code, error, correction) != Outcome::Success) {
                        const PauliClass cls = error.classify();
                        counts[cls.i * (j + 1) + cls.ell]++;
                    }
                }
            }
        });

        std::vector<ClassCount> rows;
        for (int ell = j; ell >= 0; --ell) {
            for (int i = j - ell; i >= 0; --i) {
                ClassCount row{j, i, ell, 0, class_total(code.n, j, i, ell)};
                for (const auto& counts : failures) row.failures += counts[i * (j + 1) + ell];
                rows.push_back(row);
            }
        }
        table.classes.insert(table.classes.end(), rows.begin(), rows.end());
    }
    return table;
}

SpotCheck spot_check(const StabilizerCode& code, const PauliOperator& pattern) {
    const MatchingDecoder decoder(code);
    SpotCheck result;
    result.trace = decoder.decode_with_trace(extract_syndrome(code, pattern));
    result.outcome = classify_failure(code, pattern, result.trace.correction);
    return result;
}

}  // namespace qsurf
