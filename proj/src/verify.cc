#include <string>

#include "qsurf/code_library.h"
#include "qsurf/weight_enumerator.h"

namespace qsurf {

CodeReport verify_code(const StabilizerCode& code) {
    CodeReport report;
    auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

    const int expected = code.n - code.k;
    if (static_cast<int>(code.generators.size()) != expected) {
        fail("expected " + std::to_string(expected) + " generators, found " + std::to_string(code.generators.size()));
    }
    for (size_t a = 0; a < code.generators.size(); ++a) {
        if (code.generators[a].num_qubits() != code.n) fail("generator " + std::to_string(a) + " has wrong size");
    }
    if (!report.ok()) return report;

    for (size_t a = 0; a < code.generators.size(); ++a) {
        for (size_t b = a + 1; b < code.generators.size(); ++b) {
            if (!commutes(code.generators[a], code.generators[b])) {
                fail("generators " + std::to_string(a) + " and " + std::to_string(b) + " anticommute");
            }
        }
        if (!commutes(code.generators[a], code.logical_x)) fail("logical X anticommutes with generator " + std::to_string(a));
        if (!commutes(code.generators[a], code.logical_z)) fail("logical Z anticommutes with generator " + std::to_string(a));
    }
    report.generator_rank = symplectic_rank(code.generators);
    if (report.generator_rank != expected) {
        fail("generator rank " + std::to_string(report.generator_rank) + ", expected " + std::to_string(expected));
    }
    if (commutes(code.logical_x, code.logical_z)) fail("logical X and logical Z commute");
    auto with_logicals = code.generators;
    with_logicals.push_back(code.logical_x);
    with_logicals.push_back(code.logical_z);
    if (symplectic_rank(with_logicals) != expected + 2) fail("logical operators lie in the stabilizer span");

    if (code.is_css()) {
        if (code.logical_x.weight() != code.d_x) fail("logical X weight differs from d_x");
        if (code.logical_z.weight() != code.d_z) fail("logical Z weight differs from d_z");
    }

    if (expected <= kMaxEnumeratedGenerators && report.ok()) {
        report.distances = true_distances(code);
        const CodeDistances& d = *report.distances;
        if (d.d_x != code.d_x || d.d_z != code.d_z) {
            fail("true distances " + std::to_string(d.d_x) + "/" + std::to_string(d.d_z) + " differ from declared " +
                 std::to_string(code.d_x) + "/" + std::to_string(code.d_z));
        }
    }
    return report;
}

}  // namespace qsurf
