#include "qsurf/monte_carlo.h"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "qsurf/decoder.h"
#include "qsurf/matching.h"
#include "qsurf/parallel.h"

namespace qsurf {

namespace {

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

TrialRng::TrialRng(uint64_t seed, uint64_t trial) : state_(mix64(seed + kGolden) ^ mix64(trial * kGolden + 1)) {}

uint64_t TrialRng::next() {
    state_ += kGolden;
    return mix64(state_);
}

double TrialRng::uniform() { return double(next() >> 11) * 0x1.0p-53; }

PauliOperator sample_error(const ChannelModel& channel, int n, TrialRng& rng) {
    PauliOperator e(n);
    if (channel.p <= 0) return e;
    const double cx = channel.p_x;
    const double cy = cx + channel.p_y;
    const double cz = cy + channel.p_z;
    for (int q = 0; q < n; ++q) {
        double u = rng.uniform();
        if (u >= cz) continue;
        e.set_letter(q, u < cx ? 'X' : (u < cy ? 'Y' : 'Z'));
    }
    return e;
}

Interval wilson_interval(uint64_t successes, uint64_t trials, double confidence) {
    if (trials == 0) return {0.0, 1.0};
    if (!(confidence > 0 && confidence < 1)) throw std::invalid_argument("confidence must be in (0, 1)");
    const double z = boost::math::quantile(boost::math::normal(), 0.5 + confidence / 2);
    const double n = double(trials);
    const double ph = double(successes) / n;
    const double z2 = z * z;
    const double center = (ph + z2 / (2 * n)) / (1 + z2 / n);
    const double half = z * std::sqrt(ph * (1 - ph) / n + z2 / (4 * n * n)) / (1 + z2 / n);
    Interval iv{std::max(0.0, center - half), std::min(1.0, center + half)};
    // Rounding can push the bound across p_hat at the extremes.
    iv.lo = std::min(iv.lo, ph);
    iv.hi = std::max(iv.hi, ph);
    return iv;
}

TrialReport estimate(const StabilizerCode& code, const ChannelModel& channel, uint64_t trials, uint64_t seed,
                     const EstimateOptions& options) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    MatchingDecoder decoder(code);

    struct Tally {
        uint64_t x = 0, y = 0, z = 0, overflow = 0;
    };
    const int workers = std::max(1, options.workers);
    std::vector<Tally> tallies(workers);
    parallel_ranges(trials, workers, [&](uint64_t begin, uint64_t end, int w) {
        Tally& t = tallies[w];
        for (uint64_t trial = begin; trial < end; ++trial) {
            TrialRng rng(seed, trial);
            PauliOperator error = sample_error(channel, code.n, rng);
            if (error.weight() == 0) continue;
            PauliOperator correction;
            try {
                correction = decoder.decode(extract_syndrome(code, error));
            } catch (const MatchingCapacityError&) {
                ++t.overflow;
                continue;
            }
            switch (classify_failure(code, error, correction)) {
                case Outcome::Success: break;
                case Outcome::LogicalX: ++t.x; break;
                case Outcome::LogicalY: ++t.y; break;
                case Outcome::LogicalZ: ++t.z; break;
            }
        }
    });

    TrialReport r;
    r.code_name = code.label();
    r.p = channel.p;
    r.asymmetry = channel.asymmetry ? channel.asymmetry->str() : "custom";
    r.trials = trials;
    r.seed = seed;
    for (const auto& t : tallies) {
        r.failures_x += t.x;
        r.failures_y += t.y;
        r.failures_z += t.z;
        r.cap_overflows += t.overflow;
    }
    r.failures = r.failures_x + r.failures_y + r.failures_z;
    const uint64_t effective = trials - r.cap_overflows;
    r.p_hat = effective == 0 ? 0.0 : double(r.failures) / double(effective);
    r.ci = wilson_interval(r.failures, effective);
    r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

double trials_for_precision(double p_logical, double relative_precision) {
    if (!(p_logical > 0 && p_logical < 1)) throw std::invalid_argument("p_logical must be in (0, 1)");
    if (!(relative_precision > 0)) throw std::invalid_argument("relative precision must be positive");
    return (1 - p_logical) / (p_logical * relative_precision * relative_precision);
}

}  // namespace qsurf
