#include "qsurf/matching.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace qsurf {

int64_t DetectorGraph::weight(int a, int b) const {
    const int m = real_count();
    if (a == b) return kNoEdge;
    if (a < m && b < m) return weights[a][b];
    if (a >= m && b >= m) return 0;
    const int real = a < m ? a : b;
    const int virt = a < m ? b : a;
    return virt - m == real ? boundary_weights[real] : kNoEdge;
}

WeightMatrix DetectorGraph::to_matrix() const {
    const int nodes = node_count();
    WeightMatrix w(nodes, std::vector<int64_t>(nodes, kNoEdge));
    for (int a = 0; a < nodes; ++a) {
        for (int b = 0; b < nodes; ++b) w[a][b] = weight(a, b);
    }
    return w;
}

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

}  // namespace

MatchingResult min_weight_perfect_matching(const WeightMatrix& weights) {
    const int nodes = static_cast<int>(weights.size());
    if (nodes % 2 != 0) {
        throw std::logic_error("perfect matching requested on odd node count " + std::to_string(nodes));
    }
    if (nodes > kMaxMatchingNodes) {
        throw MatchingCapacityError("matching instance has " + std::to_string(nodes) + " nodes, cap is " +
                                    std::to_string(kMaxMatchingNodes));
    }
    MatchingResult result;
    if (nodes == 0) return result;

    const uint32_t full = (uint32_t{1} << nodes) - 1;
    std::vector<int64_t> best(size_t{full} + 1, kInf);
    std::vector<int8_t> partner(size_t{full} + 1, -1);
    best[0] = 0;
    for (uint32_t s = 1; s <= full; ++s) {
        if (std::popcount(s) % 2 != 0) continue;
        const int lo = std::countr_zero(s);
        for (uint32_t rest = s & (s - 1); rest != 0; rest &= rest - 1) {
            const int j = std::countr_zero(rest);
            const int64_t w = weights[lo][j];
            if (w == kNoEdge) continue;
            const int64_t sub = best[s & ~(uint32_t{1} << lo) & ~(uint32_t{1} << j)];
            if (sub >= kInf) continue;
            if (w + sub < best[s]) {
                best[s] = w + sub;
                partner[s] = static_cast<int8_t>(j);
            }
        }
    }
    if (best[full] >= kInf) throw std::logic_error("graph has no perfect matching");

    result.total_weight = best[full];
    for (uint32_t s = full; s != 0;) {
        const int lo = std::countr_zero(s);
        const int j = partner[s];
        result.pairs.emplace_back(lo, j);
        s &= ~(uint32_t{1} << lo) & ~(uint32_t{1} << j);
    }
    return result;
}

MatchingResult min_weight_perfect_matching(const DetectorGraph& graph) {
    const int m = graph.real_count();
    if (m > kMaxMatchingNodes) {
        throw MatchingCapacityError("detector graph has " + std::to_string(m) + " triggered detectors, cap is " +
                                    std::to_string(kMaxMatchingNodes));
    }
    MatchingResult result;
    if (m == 0) return result;

    // best[s]: optimal cost of settling the detectors in s, each paired inside s or sent to its
    // virtual node. choice[s] == m means the lowest detector of s goes to the boundary.
    const uint32_t full = (uint32_t{1} << m) - 1;
    std::vector<int64_t> best(size_t{full} + 1, kInf);
    std::vector<int8_t> choice(size_t{full} + 1, -1);
    best[0] = 0;
    for (uint32_t s = 1; s <= full; ++s) {
        const int lo = std::countr_zero(s);
        const uint32_t without_lo = s & (s - 1);
        for (uint32_t rest = without_lo; rest != 0; rest &= rest - 1) {
            const int j = std::countr_zero(rest);
            const int64_t cost = graph.weights[lo][j] + best[without_lo & ~(uint32_t{1} << j)];
            if (cost < best[s]) {
                best[s] = cost;
                choice[s] = static_cast<int8_t>(j);
            }
        }
        const int64_t to_boundary = graph.boundary_weights[lo] + best[without_lo];
        if (to_boundary < best[s]) {
            best[s] = to_boundary;
            choice[s] = static_cast<int8_t>(m);
        }
    }

    result.total_weight = best[full];
    std::vector<int> unused_virtual;
    for (uint32_t s = full; s != 0;) {
        const int lo = std::countr_zero(s);
        const int j = choice[s];
        if (j == m) {
            result.pairs.emplace_back(lo, m + lo);
            s &= s - 1;
        } else {
            result.pairs.emplace_back(lo, j);
            unused_virtual.push_back(m + lo);
            unused_virtual.push_back(m + j);
            s &= ~(uint32_t{1} << lo) & ~(uint32_t{1} << j);
        }
    }
    std::sort(unused_virtual.begin(), unused_virtual.end());
    for (size_t i = 0; i < unused_virtual.size(); i += 2) {
        result.pairs.emplace_back(unused_virtual[i], unused_virtual[i + 1]);
    }
    std::sort(result.pairs.begin(), result.pairs.end());
    return result;
}

}  // namespace qsurf
