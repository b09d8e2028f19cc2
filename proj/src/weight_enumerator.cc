#include "qsurf/weight_enumerator.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "qsurf/class_enumerator.h"
#include "qsurf/parallel.h"

namespace qsurf {

int WeightEnumerator::min_logical_weight() const {
    for (int w = 0; w <= n; ++w) {
        if (L[w] != 0) return w;
    }
    return -1;
}

namespace {

struct Partial {
    std::array<std::vector<uint64_t>, 4> histograms;
    int min_pure_x = -1;
    int min_pure_z = -1;
};

void take_min(int& slot, int value) {
    if (slot < 0 || value < slot) slot = value;
}

}  // namespace

CosetEnumeration enumerate_cosets(const StabilizerCode& code, int workers) {
    const int m = static_cast<int>(code.generators.size());
    if (m > kMaxEnumeratedGenerators) {
        throw BudgetExceeded(code.label() + " has " + std::to_string(m) + " generators; enumerating 2^" +
                                 std::to_string(m) + " stabilizer elements exceeds the 2^" +
                                 std::to_string(kMaxEnumeratedGenerators) + " limit",
                             std::ldexp(4.0, m));
    }
    const int n = code.n;
    const uint64_t lx[4] = {0, code.logical_x.x_mask(), code.logical_z.x_mask(),
                            code.logical_x.x_mask() ^ code.logical_z.x_mask()};
    const uint64_t lz[4] = {0, code.logical_x.z_mask(), code.logical_z.z_mask(),
                            code.logical_x.z_mask() ^ code.logical_z.z_mask()};

    // Top `prefix_bits` generators are fixed per chunk; the rest are walked in Gray order.
    workers = std::max(1, workers);
    int prefix_bits = 0;
    while ((1 << prefix_bits) < workers * 4 && prefix_bits < m) ++prefix_bits;
    const int walk_bits = m - prefix_bits;
    const uint64_t chunks = uint64_t{1} << prefix_bits;

    std::vector<Partial> partials(chunks);
    parallel_ranges(chunks, workers, [&](uint64_t begin, uint64_t end, int) {
        for (uint64_t chunk = begin; chunk < end; ++chunk) {
            Partial& part = partials[chunk];
            for (auto& h : part.histograms) h.assign(n + 1, 0);
            uint64_t x = 0;
            uint64_t z = 0;
            for (int b = 0; b < prefix_bits; ++b) {
                if ((chunk >> b) & 1) {
                    x ^= code.generators[walk_bits + b].x_mask();
                    z ^= code.generators[walk_bits + b].z_mask();
                }
            }
            const uint64_t steps = uint64_t{1} << walk_bits;
            for (uint64_t s = 0; s < steps; ++s) {
                if (s != 0) {
                    const int flip = std::countr_zero(s);
                    x ^= code.generators[flip].x_mask();
                    z ^= code.generators[flip].z_mask();
                }
                for (int c = 0; c < 4; ++c) {
                    const uint64_t cx = x ^ lx[c];
                    const uint64_t cz = z ^ lz[c];
                    const int w = std::popcount(cx | cz);
                    part.histograms[c][w]++;
                    if (c != 0) {
                        if (cz == 0) take_min(part.min_pure_x, w);
                        if (cx == 0) take_min(part.min_pure_z, w);
                    }
                }
            }
        }
    });

    CosetEnumeration out;
    for (auto& h : out.histograms) h.assign(n + 1, 0);
    for (const Partial& part : partials) {
        for (int c = 0; c < 4; ++c) {
            for (int w = 0; w <= n; ++w) out.histograms[c][w] += part.histograms[c][w];
        }
        if (part.min_pure_x >= 0) take_min(out.min_pure_x, part.min_pure_x);
        if (part.min_pure_z >= 0) take_min(out.min_pure_z, part.min_pure_z);
    }
    return out;
}

WeightEnumerator coset_enumerate(const StabilizerCode& code, int workers) {
    const CosetEnumeration cosets = enumerate_cosets(code, workers);
    WeightEnumerator we;
    we.n = code.n;
    we.A = cosets.histograms[0];
    we.L.assign(code.n + 1, 0);
    for (int c = 1; c < 4; ++c) {
        for (int w = 0; w <= code.n; ++w) we.L[w] += cosets.histograms[c][w];
    }
    we.B.resize(code.n + 1);
    for (int w = 0; w <= code.n; ++w) we.B[w] = we.A[w] + we.L[w];
    return we;
}

WeightEnumerator macwilliams_check(const std::vector<uint64_t>& A, int n, int k) {
    using boost::multiprecision::cpp_int;
    if (static_cast<int>(A.size()) != n + 1) throw std::invalid_argument("A must have n + 1 coefficients");
    if (k < 0 || k > n) throw std::invalid_argument("k out of range");

    // Coefficients in powers of y (x carries the complementary power).
    auto poly_mul = [](const std::vector<cpp_int>& a, const std::vector<cpp_int>& b) {
        std::vector<cpp_int> r(a.size() + b.size() - 1);
        for (size_t i = 0; i < a.size(); ++i) {
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    };
    std::vector<std::vector<cpp_int>> plus_pow(n + 1), minus_pow(n + 1);  // (x+3y)^e, (x-y)^e
    plus_pow[0] = minus_pow[0] = {cpp_int(1)};
    for (int e = 1; e <= n; ++e) {
        plus_pow[e] = poly_mul(plus_pow[e - 1], {cpp_int(1), cpp_int(3)});
        minus_pow[e] = poly_mul(minus_pow[e - 1], {cpp_int(1), cpp_int(-1)});
    }
    std::vector<cpp_int> acc(n + 1);
    for (int w = 0; w <= n; ++w) {
        if (A[w] == 0) continue;
        const auto term = poly_mul(plus_pow[n - w], minus_pow[w]);
        for (int v = 0; v <= n; ++v) acc[v] += cpp_int(A[w]) * term[v];
    }
    const cpp_int scale = cpp_int(1) << (n - k);

    WeightEnumerator we;
    we.n = n;
    we.A = A;
    we.B.resize(n + 1);
    we.L.resize(n + 1);
    for (int v = 0; v <= n; ++v) {
        if (acc[v] % scale != 0 || acc[v] < 0) {
            throw std::logic_error("MacWilliams transform gives a non-integer or negative coefficient at weight " +
                                   std::to_string(v));
        }
        we.B[v] = static_cast<uint64_t>(acc[v] / scale);
        if (we.B[v] < A[v]) {
            throw std::logic_error("MacWilliams transform gives B < A at weight " + std::to_string(v));
        }
        we.L[v] = we.B[v] - A[v];
    }
    return we;
}

CodeDistances true_distances(const CosetEnumeration& cosets) {
    CodeDistances d;
    d.d = -1;
    for (int c = 1; c < 4; ++c) {
        const auto& h = cosets.histograms[c];
        for (size_t w = 0; w < h.size(); ++w) {
            if (h[w] != 0) {
                take_min(d.d, static_cast<int>(w));
                break;
            }
        }
    }
    d.d_x = cosets.min_pure_x;
    d.d_z = cosets.min_pure_z;
    return d;
}

CodeDistances true_distances(const StabilizerCode& code, int workers) {
    return true_distances(enumerate_cosets(code, workers));
}

}  // namespace qsurf
