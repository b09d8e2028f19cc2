#include "qsurf/io.h"

#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace qsurf {

namespace {

std::string_view kind_name(AncillaKind kind) { return kind == AncillaKind::Site ? "site" : "plaquette"; }

template <typename T>
T require(const Json& doc, const char* key) {
    if (!doc.contains(key)) throw std::invalid_argument(std::string("code document lacks '") + key + "'");
    try {
        return doc.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("code document field '") + key + "': " + e.what());
    }
}

Json histogram_pairs(const std::vector<uint64_t>& h) {
    Json arr = Json::array();
    for (size_t w = 0; w < h.size(); ++w) {
        if (h[w] != 0) arr.push_back({w, h[w]});
    }
    return arr;
}

}  // namespace

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

std::string format_double(double v) { return fmt::format("{}", v); }

Json describe_json(const StabilizerCode& code) {
    Json doc;
    doc["name"] = code.name;
    doc["n"] = code.n;
    doc["k"] = code.k;
    doc["d_x"] = code.d_x;
    doc["d_z"] = code.d_z;
    doc["family"] = std::string(family_name(code.family()));
    doc["lattice"] = {{"d_x", code.geometry.d_x}, {"d_z", code.geometry.d_z}};
    Json gens = Json::array();
    for (const auto& g : code.generators) gens.push_back(g.str());
    doc["generators"] = gens;
    doc["logical_x"] = code.logical_x.str();
    doc["logical_z"] = code.logical_z.str();
    doc["hadamard_mask"] = fmt::format("{:#x}", code.hadamard_mask);
    Json qubits = Json::array();
    for (size_t q = 0; q < code.geometry.qubit_coords.size(); ++q) {
        const Coord& c = code.geometry.qubit_coords[q];
        qubits.push_back({{"index", q}, {"row", c.row}, {"col", c.col}});
    }
    doc["qubits"] = qubits;
    Json ancillas = Json::array();
    for (size_t a = 0; a < code.geometry.ancillas.size(); ++a) {
        const Ancilla& anc = code.geometry.ancillas[a];
        ancillas.push_back({{"index", a},
                            {"kind", std::string(kind_name(anc.kind))},
                            {"row", anc.position.row},
                            {"col", anc.position.col},
                            {"qubits", anc.qubits}});
    }
    doc["ancillas"] = ancillas;
    return doc;
}

StabilizerCode load_code(const Json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("code document must be a JSON object");
    Family family = parse_family(require<std::string>(doc, "family"));
    const Json& lattice = doc.contains("lattice") ? doc.at("lattice") : doc;
    StabilizerCode code = build_code(family, require<int>(lattice, "d_x"), require<int>(lattice, "d_z"));

    auto mismatch = [&](const std::string& what) {
        throw std::invalid_argument("code document disagrees with the rebuilt " + code.label() + ": " + what);
    };
    if (require<int>(doc, "n") != code.n) mismatch("n");
    if (require<int>(doc, "k") != code.k) mismatch("k");
    if (require<int>(doc, "d_x") != code.d_x) mismatch("d_x");
    if (require<int>(doc, "d_z") != code.d_z) mismatch("d_z");
    auto gens = require<std::vector<std::string>>(doc, "generators");
    if (gens.size() != code.generators.size()) mismatch("generator count");
    for (size_t g = 0; g < gens.size(); ++g) {
        if (PauliOperator::from_string(gens[g]) != code.generators[g]) mismatch("generator " + std::to_string(g));
    }
    if (PauliOperator::from_string(require<std::string>(doc, "logical_x")) != code.logical_x) mismatch("logical_x");
    if (PauliOperator::from_string(require<std::string>(doc, "logical_z")) != code.logical_z) mismatch("logical_z");
    if (std::stoull(require<std::string>(doc, "hadamard_mask"), nullptr, 0) != code.hadamard_mask) {
        mismatch("hadamard_mask");
    }
    return code;
}

void write_class_table_csv(std::ostream& out, const ErrorClassTable& table) {
    out << "code,j,i,ell,class_label,failures,total,fraction\n";
    for (const auto& c : table.classes) {
        out << csv_field(table.code_name) << ',' << c.j << ',' << c.i << ',' << c.ell << ',' << c.label() << ',' << c.failures
            << ',' << c.total << ',' << fmt::format("{:.6f}", c.value()) << '\n';
    }
}

Json class_table_json(const ErrorClassTable& table) {
    Json doc;
    doc["code"] = table.code_name;
    doc["n"] = table.n;
    doc["j_max"] = table.j_max;
    Json rows = Json::array();
    for (const auto& c : table.classes) {
        rows.push_back({{"j", c.j},
                        {"i", c.i},
                        {"ell", c.ell},
                        {"class_label", c.label()},
                        {"failures", c.failures},
                        {"total", c.total},
                        {"fraction", c.value()},
                        {"exact", c.fraction().str()}});
    }
    doc["classes"] = rows;
    return doc;
}

Json weight_enumerator_json(const std::string& code_name, const WeightEnumerator& we, const CodeDistances& d) {
    Json doc;
    doc["code"] = code_name;
    doc["L"] = histogram_pairs(we.L);
    doc["A"] = histogram_pairs(we.A);
    doc["B"] = histogram_pairs(we.B);
    doc["d"] = d.d;
    doc["d_x"] = d.d_x;
    doc["d_z"] = d.d_z;
    return doc;
}

namespace {

Json species_json(const SpeciesTrace& s) {
    Json doc;
    doc["species"] = s.species == Species::ZErrors ? "z_errors" : "x_errors";
    doc["detectors"] = s.graph.detectors;
    doc["weights"] = s.graph.weights;
    doc["boundary_weights"] = s.graph.boundary_weights;
    Json pairs = Json::array();
    const int m = s.graph.real_count();
    for (const auto& [a, b] : s.matching.pairs) {
        if (a >= m && b >= m) continue;  // two virtual nodes, no correction
        Json pr;
        pr["a"] = s.graph.detectors[a];
        if (b < m) {
            pr["b"] = s.graph.detectors[b];
        } else {
            pr["b"] = "boundary";
        }
        pairs.push_back(pr);
    }
    doc["pairs"] = pairs;
    doc["total_weight"] = s.matching.total_weight;
    return doc;
}

}  // namespace

Json decode_trace_json(const StabilizerCode& code, const PauliOperator& error, const DecodeTrace& trace,
                       Outcome outcome) {
    Json doc;
    doc["code"] = code.name;
    doc["error"] = error.str();
    std::string bits;
    for (int g = 0; g < trace.syndrome.size(); ++g) bits += trace.syndrome.bit(g) ? '1' : '0';
    doc["syndrome"] = bits;
    doc["z_errors"] = species_json(trace.z_errors);
    doc["x_errors"] = species_json(trace.x_errors);
    doc["correction"] = trace.correction.str();
    doc["outcome"] = std::string(outcome_name(outcome));
    return doc;
}

void write_curves_csv(std::ostream& out, const std::vector<CurvePoint>& points) {
    out << "p,A,code,value,kind\n";
    for (const auto& pt : points) {
        out << format_double(pt.p) << ',' << pt.asymmetry << ',' << csv_field(pt.code) << ',' << format_double(pt.value) << ','
            << pt.kind << '\n';
    }
}

void write_trial_reports_csv(std::ostream& out, const std::vector<TrialReport>& reports) {
    out << "code,p,A,trials,failures,fx,fy,fz,p_hat,ci_lo,ci_hi,seed\n";
    for (const auto& r : reports) {
        out << csv_field(r.code_name) << ',' << format_double(r.p) << ',' << r.asymmetry << ',' << r.trials << ',' << r.failures
            << ',' << r.failures_x << ',' << r.failures_y << ',' << r.failures_z << ',' << format_double(r.p_hat)
            << ',' << format_double(r.ci.lo) << ',' << format_double(r.ci.hi) << ',' << r.seed << '\n';
    }
}

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows) {
    out << "p,A,code1,code2,r\n";
    for (const auto& r : rows) {
        out << format_double(r.p) << ',' << r.asymmetry << ',' << csv_field(r.code1) << ',' << csv_field(r.code2) << ','
            << format_double(r.ratio) << '\n';
    }
}

}  // namespace qsurf
