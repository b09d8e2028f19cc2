#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qsurf/code_library.h"
#include "qsurf/matching.h"
#include "qsurf/pauli.h"

namespace qsurf {

/// One bit per generator, in StabilizerCode::generators order; bit set = measured -1.
class Syndrome {
public:
    Syndrome() = default;
    Syndrome(int size, uint64_t bits);

    int size() const { return size_; }
    uint64_t bits() const { return bits_; }
    bool bit(int g) const { return (bits_ >> g) & 1; }
    bool is_zero() const { return bits_ == 0; }

    bool operator==(const Syndrome&) const = default;

private:
    int size_ = 0;
    uint64_t bits_ = 0;
};

Syndrome extract_syndrome(const StabilizerCode& code, const PauliOperator& error);

enum class Outcome { Success, LogicalX, LogicalZ, LogicalY };
std::string_view outcome_name(Outcome outcome);

/// Z-type errors (in the CSS frame) are matched on the site graph, X-type on the plaquette graph.
enum class Species { ZErrors, XErrors };

struct SpeciesTrace {
    Species species = Species::ZErrors;
    DetectorGraph graph;
    MatchingResult matching;
};

struct DecodeTrace {
    Syndrome syndrome;
    SpeciesTrace z_errors;
    SpeciesTrace x_errors;
    PauliOperator correction;
};

/// Exact minimum-weight perfect matching decoder for the four planar code families.
///
/// Works in the CSS frame: the syndrome is split into site (X-type) and plaquette (Z-type)
/// detectors, each species is matched on its own lattice graph with one virtual boundary node per
/// triggered detector, and the union of witness paths is mapped back through the Hadamard mask.
/// Edge weights are unweighted shortest-path qubit counts. Shortest paths come from a breadth-first
/// search that expands neighbours in ascending qubit order, so decoding is deterministic. On the
/// unrotated lattices the plaquette species uses column-major order for qubits and detectors instead,
/// which makes the decoder commute with transposition of the lattice.
///
/// The decoder keeps only immutable tables after construction; decode() may be called concurrently.
class MatchingDecoder {
public:
    explicit MatchingDecoder(const StabilizerCode& code);

    const StabilizerCode& code() const { return code_; }

    PauliOperator decode(const Syndrome& syndrome) const;
    DecodeTrace decode_with_trace(const Syndrome& syndrome) const;

private:
    struct SpeciesGraph {
        std::vector<int> checks;            // generator indices of this check type, in tie-break order
        std::vector<int> local_of_generator;  // generator index -> local node, -1 if other type
        int boundary = 0;                   // local index of the boundary node (== checks.size())
        std::vector<int> dist;              // (checks+1)^2, row = BFS source
        std::vector<int> parent_node;       // BFS tree per source
        std::vector<int> parent_qubit;

        int nodes() const { return boundary + 1; }
        std::vector<int> path(int from, int to) const;
    };

    SpeciesGraph build_species(char check_letter, bool column_major) const;
    DetectorGraph detector_graph(const SpeciesGraph& g, uint64_t syndrome_bits, bool with_paths) const;
    uint64_t correction_support(const SpeciesGraph& g, const DetectorGraph& graph, const MatchingResult& m) const;

    StabilizerCode code_;
    SpeciesGraph sites_;
    SpeciesGraph plaquettes_;
};

/// Residual-coset test. Throws std::logic_error if the correction does not clear the error's syndrome.
Outcome classify_failure(const StabilizerCode& code, const PauliOperator& error, const PauliOperator& correction);

}  // namespace qsurf
