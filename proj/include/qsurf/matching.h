#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qsurf {

/// Largest node count accepted by the generic subset DP, and largest number of real detectors
/// accepted per species by the boundary-aware DP.
inline constexpr int kMaxMatchingNodes = 24;

/// Edge weight matrix for a complete graph; kNoEdge marks a forbidden pair.
using WeightMatrix = std::vector<std::vector<int64_t>>;
inline constexpr int64_t kNoEdge = -1;

using Pairing = std::vector<std::pair<int, int>>;

struct MatchingResult {
    Pairing pairs;  // each pair (a, b) with a < b, sorted by a
    int64_t total_weight = 0;
};

/// Thrown when a matching instance exceeds kMaxMatchingNodes.
class MatchingCapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Detector graph for one error species: m triggered detectors (nodes 0..m-1) and one virtual
/// boundary node per detector (node m + i belongs to detector i). Virtual nodes connect only to
/// their own detector and to each other, at weight zero.
struct DetectorGraph {
    std::vector<int> detectors;              // generator index of each real node
    std::vector<std::vector<int>> weights;   // m x m shortest-path qubit counts
    std::vector<int> boundary_weights;       // detector i to its virtual node
    std::vector<std::vector<std::vector<int>>> paths;  // witness qubits between real nodes (i < j filled)
    std::vector<std::vector<int>> boundary_paths;      // witness qubits from detector to boundary

    int real_count() const { return static_cast<int>(detectors.size()); }
    int node_count() const { return 2 * real_count(); }
    /// Weight between any two of the 2m nodes, kNoEdge if not adjacent.
    int64_t weight(int a, int b) const;
    /// The full 2m x 2m matrix, for generic solvers and oracles.
    WeightMatrix to_matrix() const;
};

/// Exact minimum-weight perfect matching on a complete graph by dynamic programming over subsets.
/// Ties go to the lexicographically least pairing: the lowest unmatched node takes the lowest partner
/// among the optimal choices. Throws std::logic_error for an odd node count or when no perfect matching
/// exists, MatchingCapacityError above kMaxMatchingNodes.
MatchingResult min_weight_perfect_matching(const WeightMatrix& weights);

/// Same contract on a detector graph. Real detectors are matched to each other or to their own virtual
/// node; leftover virtual nodes pair among themselves. Runs the DP over real detectors only.
MatchingResult min_weight_perfect_matching(const DetectorGraph& graph);

}  // namespace qsurf
