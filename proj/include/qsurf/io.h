#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "qsurf/analytic_model.h"
#include "qsurf/class_enumerator.h"
#include "qsurf/code_library.h"
#include "qsurf/decoder.h"
#include "qsurf/monte_carlo.h"
#include "qsurf/weight_enumerator.h"

namespace qsurf {

using Json = nlohmann::ordered_json;

/// Code document: name, n, k, distances, family, generators, logicals, Hadamard mask, and the
/// ancilla adjacency of the lattice.
Json describe_json(const StabilizerCode& code);

/// Rebuilds a code from its document and checks that every stored operator matches the rebuild.
/// Throws std::invalid_argument on any mismatch or missing field.
StabilizerCode load_code(const Json& doc);

void write_class_table_csv(std::ostream& out, const ErrorClassTable& table);
Json class_table_json(const ErrorClassTable& table);

Json weight_enumerator_json(const std::string& code_name, const WeightEnumerator& we, const CodeDistances& d);

Json decode_trace_json(const StabilizerCode& code, const PauliOperator& error, const DecodeTrace& trace,
                       Outcome outcome);

struct CurvePoint {
    double p = 0;
    std::string asymmetry;
    std::string code;
    double value = 0;
    std::string kind;  // asymptotic, full_lower, full_upper, bounded_distance
};

void write_curves_csv(std::ostream& out, const std::vector<CurvePoint>& points);
void write_trial_reports_csv(std::ostream& out, const std::vector<TrialReport>& reports);

struct CompareRow {
    double p = 0;
    std::string asymmetry;
    std::string code1;
    std::string code2;
    double ratio = 0;
};

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows);

/// RFC 4180 quoting; code names contain commas.
std::string csv_field(const std::string& text);

/// Shortest round-trip decimal form used in every CSV column.
std::string format_double(double v);

}  // namespace qsurf
