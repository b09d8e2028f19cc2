#include "qsurf/decoder.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <string>
#include <tuple>

namespace qsurf {

Syndrome::Syndrome(int size, uint64_t bits) : size_(size), bits_(bits) {
    if (size < 0 || size > 64 || (bits & ~low_bits(size)) != 0) {
        throw std::invalid_argument("syndrome bits exceed syndrome length " + std::to_string(size));
    }
}

Syndrome extract_syndrome(const StabilizerCode& code, const PauliOperator& error) {
    if (error.num_qubits() != code.n) {
        throw std::invalid_argument("error acts on " + std::to_string(error.num_qubits()) + " qubits, code has " +
                                    std::to_string(code.n));
    }
    uint64_t bits = 0;
    for (size_t g = 0; g < code.generators.size(); ++g) {
        if (anticommutes(code.generators[g], error)) bits |= uint64_t{1} << g;
    }
    return Syndrome(static_cast<int>(code.generators.size()), bits);
}

std::string_view outcome_name(Outcome outcome) {
    switch (outcome) {
        case Outcome::Success:
            return "success";
        case Outcome::LogicalX:
            return "logical_x";
        case Outcome::LogicalZ:
            return "logical_z";
        case Outcome::LogicalY:
            return "logical_y";
    }
    return "?";
}

MatchingDecoder::MatchingDecoder(const StabilizerCode& code) : code_(code) {
    if (code.generators.size() > 64) throw std::invalid_argument("decoder supports at most 64 generators");
    sites_ = build_species('X', false);
    // On the unrotated lattices transposition swaps sites and plaquettes, so plaquette ties are broken
    // in column-major order to make X decoding the mirror image of Z decoding.
    plaquettes_ = build_species('Z', !is_rotated_family(code.family()));
}

MatchingDecoder::SpeciesGraph MatchingDecoder::build_species(char check_letter, bool column_major) const {
    SpeciesGraph g;
    // Tie-break rank of each qubit: row-major index, or column-major on request.
    std::vector<int> rank(code_.n);
    for (int q = 0; q < code_.n; ++q) rank[q] = q;
    if (column_major) {
        std::vector<int> order(code_.n);
        for (int q = 0; q < code_.n; ++q) order[q] = q;
        const auto& coords = code_.geometry.qubit_coords;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return std::pair(coords[a].col, coords[a].row) < std::pair(coords[b].col, coords[b].row);
        });
        for (int k = 0; k < code_.n; ++k) rank[order[k]] = k;
    }
    g.local_of_generator.assign(code_.generators.size(), -1);
    std::vector<uint64_t> supports;
    for (size_t i = 0; i < code_.generators.size(); ++i) {
        const PauliOperator css = code_.to_css_frame(code_.generators[i]);
        const bool pure_x = css.z_mask() == 0;
        const bool pure_z = css.x_mask() == 0;
        if (!pure_x && !pure_z) {
            throw std::invalid_argument("generator " + std::to_string(i) + " is not CSS in the Hadamard frame");
        }
        if ((check_letter == 'X') == pure_x) g.checks.push_back(static_cast<int>(i));
    }
    if (column_major) {
        const auto& anc = code_.geometry.ancillas;
        std::stable_sort(g.checks.begin(), g.checks.end(), [&](int a, int b) {
            return std::pair(anc[a].position.col, anc[a].position.row) <
                   std::pair(anc[b].position.col, anc[b].position.row);
        });
    }
    for (size_t c = 0; c < g.checks.size(); ++c) {
        const PauliOperator css = code_.to_css_frame(code_.generators[g.checks[c]]);
        g.local_of_generator[g.checks[c]] = static_cast<int>(c);
        supports.push_back(css.x_mask() | css.z_mask());
    }
    g.boundary = static_cast<int>(g.checks.size());
    const int nodes = g.nodes();

    // Each qubit is an edge between the (at most two) checks of this type that contain it.
    std::vector<std::vector<std::tuple<int, int, int>>> adjacency(nodes);  // (rank, qubit, neighbour)
    for (int q = 0; q < code_.n; ++q) {
        std::vector<int> touching;
        for (int c = 0; c < g.boundary; ++c) {
            if ((supports[c] >> q) & 1) touching.push_back(c);
        }
        if (touching.size() > 2) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " is in more than two checks of one type");
        }
        if (touching.empty()) continue;
        const int a = touching[0];
        const int b = touching.size() == 2 ? touching[1] : g.boundary;
        adjacency[a].emplace_back(rank[q], q, b);
        adjacency[b].emplace_back(rank[q], q, a);
    }
    for (auto& list : adjacency) std::sort(list.begin(), list.end());

    g.dist.assign(size_t(nodes) * nodes, -1);
    g.parent_node.assign(size_t(nodes) * nodes, -1);
    g.parent_qubit.assign(size_t(nodes) * nodes, -1);
    for (int src = 0; src < nodes; ++src) {
        int* dist = &g.dist[size_t(src) * nodes];
        int* pnode = &g.parent_node[size_t(src) * nodes];
        int* pqubit = &g.parent_qubit[size_t(src) * nodes];
        std::deque<int> frontier{src};
        dist[src] = 0;
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop_front();
            // Chains end at the boundary; they never pass through it.
            if (u == g.boundary && u != src) continue;
            for (const auto& [r, q, v] : adjacency[u]) {
                if (dist[v] >= 0) continue;
                dist[v] = dist[u] + 1;
                pnode[v] = u;
                pqubit[v] = q;
                frontier.push_back(v);
            }
        }
    }
    return g;
}

std::vector<int> MatchingDecoder::SpeciesGraph::path(int from, int to) const {
    const size_t row = size_t(from) * nodes();
    if (dist[row + to] < 0) {
        throw std::logic_error("no lattice path between check nodes " + std::to_string(from) + " and " +
                               std::to_string(to));
    }
    std::vector<int> qubits;
    for (int v = to; v != from; v = parent_node[row + v]) qubits.push_back(parent_qubit[row + v]);
    std::reverse(qubits.begin(), qubits.end());
    return qubits;
}

DetectorGraph MatchingDecoder::detector_graph(const SpeciesGraph& g, uint64_t syndrome_bits, bool with_paths) const {
    DetectorGraph graph;
    for (int gen : g.checks) {
        if ((syndrome_bits >> gen) & 1) graph.detectors.push_back(gen);
    }
    const int m = graph.real_count();
    if (m > kMaxMatchingNodes) {
        throw MatchingCapacityError(std::to_string(m) + " triggered detectors exceed the matching cap of " +
                                    std::to_string(kMaxMatchingNodes));
    }
    const int nodes = g.nodes();
    graph.weights.assign(m, std::vector<int>(m, 0));
    graph.boundary_weights.assign(m, 0);
    if (with_paths) {
        graph.paths.assign(m, std::vector<std::vector<int>>(m));
        graph.boundary_paths.assign(m, {});
    }
    for (int a = 0; a < m; ++a) {
        const int la = g.local_of_generator[graph.detectors[a]];
        for (int b = a + 1; b < m; ++b) {
            const int lb = g.local_of_generator[graph.detectors[b]];
            const int w = g.dist[size_t(la) * nodes + lb];
            if (w < 0) throw std::logic_error("disconnected detector graph");
            graph.weights[a][b] = graph.weights[b][a] = w;
            if (with_paths) graph.paths[a][b] = g.path(la, lb);
        }
        const int wb = g.dist[size_t(la) * nodes + g.boundary];
        if (wb < 0) throw std::logic_error("detector without a route to the boundary");
        graph.boundary_weights[a] = wb;
        if (with_paths) graph.boundary_paths[a] = g.path(la, g.boundary);
    }
    return graph;
}

uint64_t MatchingDecoder::correction_support(const SpeciesGraph& g, const DetectorGraph& graph,
                                             const MatchingResult& matching) const {
    const int m = graph.real_count();
    uint64_t support = 0;
    for (const auto& [a, b] : matching.pairs) {
        if (a >= m) continue;  // virtual-virtual
        const int la = g.local_of_generator[graph.detectors[a]];
        const int lb = b < m ? g.local_of_generator[graph.detectors[b]] : g.boundary;
        for (int q : g.path(la, lb)) support ^= uint64_t{1} << q;
    }
    return support;
}

PauliOperator MatchingDecoder::decode(const Syndrome& syndrome) const {
    if (syndrome.size() != static_cast<int>(code_.generators.size())) {
        throw std::invalid_argument("syndrome length " + std::to_string(syndrome.size()) + " does not match " +
                                    std::to_string(code_.generators.size()) + " generators");
    }
    const DetectorGraph zg = detector_graph(sites_, syndrome.bits(), false);
    const DetectorGraph xg = detector_graph(plaquettes_, syndrome.bits(), false);
    const uint64_t z_support = correction_support(sites_, zg, min_weight_perfect_matching(zg));
    const uint64_t x_support = correction_support(plaquettes_, xg, min_weight_perfect_matching(xg));
    return PauliOperator(code_.n, x_support, z_support).hadamard_conjugated(code_.hadamard_mask);
}

DecodeTrace MatchingDecoder::decode_with_trace(const Syndrome& syndrome) const {
    if (syndrome.size() != static_cast<int>(code_.generators.size())) {
        throw std::invalid_argument("syndrome length does not match generator count");
    }
    DecodeTrace trace;
    trace.syndrome = syndrome;
    trace.z_errors.species = Species::ZErrors;
    trace.z_errors.graph = detector_graph(sites_, syndrome.bits(), true);
    trace.z_errors.matching = min_weight_perfect_matching(trace.z_errors.graph);
    trace.x_errors.species = Species::XErrors;
    trace.x_errors.graph = detector_graph(plaquettes_, syndrome.bits(), true);
    trace.x_errors.matching = min_weight_perfect_matching(trace.x_errors.graph);
    const uint64_t z_support = correction_support(sites_, trace.z_errors.graph, trace.z_errors.matching);
    const uint64_t x_support = correction_support(plaquettes_, trace.x_errors.graph, trace.x_errors.matching);
    trace.correction = PauliOperator(code_.n, x_support, z_support).hadamard_conjugated(code_.hadamard_mask);
    return trace;
}

Outcome classify_failure(const StabilizerCode& code, const PauliOperator& error, const PauliOperator& correction) {
    const PauliOperator residual = multiply(error, correction);
    if (!extract_syndrome(code, residual).is_zero()) {
        throw std::logic_error("correction " + correction.str() + " does not resolve the syndrome of " + error.str());
    }
    const bool flips_z = anticommutes(residual, code.logical_z);
    const bool flips_x = anticommutes(residual, code.logical_x);
    if (flips_z && flips_x) return Outcome::LogicalY;
    if (flips_z) return Outcome::LogicalX;
    if (flips_x) return Outcome::LogicalZ;
    return Outcome::Success;
}

}  // namespace qsurf
