#pragma once

#include <cstdint>
#include <string>

#include "qsurf/analytic_model.h"
#include "qsurf/code_library.h"
#include "qsurf/pauli.h"

namespace qsurf {

/// SplitMix64 stream keyed by (seed, trial). Each trial gets an independent stream, so results do
/// not depend on how trials are split across threads.
class TrialRng {
public:
    TrialRng(uint64_t seed, uint64_t trial);
    uint64_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();

private:
    uint64_t state_;
};

/// Each qubit independently: I with 1 - p, otherwise X, Y, Z with p_X, p_Y, p_Z.
PauliOperator sample_error(const ChannelModel& channel, int n, TrialRng& rng);

struct Interval {
    double lo = 0;
    double hi = 0;
};

/// Wilson score interval at the given two-sided confidence.
Interval wilson_interval(uint64_t successes, uint64_t trials, double confidence = 0.95);

struct TrialReport {
    std::string code_name;
    double p = 0;
    std::string asymmetry;  // "inf", a decimal, or "custom" for explicit probabilities
    uint64_t trials = 0;
    uint64_t failures = 0;
    uint64_t failures_x = 0;
    uint64_t failures_y = 0;
    uint64_t failures_z = 0;
    /// Trials whose syndrome exceeded the exact matcher's capacity; these are excluded from
    /// failures and from the estimate's denominator.
    uint64_t cap_overflows = 0;
    double p_hat = 0;
    Interval ci;
    uint64_t seed = 0;
    double runtime_seconds = 0;
};

struct EstimateOptions {
    int workers = 1;
};

TrialReport estimate(const StabilizerCode& code, const ChannelModel& channel, uint64_t trials, uint64_t seed,
                     const EstimateOptions& options = {});

/// Trials needed so one standard error of p_hat is `relative_precision` * p_logical.
double trials_for_precision(double p_logical, double relative_precision);

}  // namespace qsurf
