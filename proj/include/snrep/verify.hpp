#pragma once

#include "snrep/markov.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace snrep {

struct VerificationCase {
    std::string inputs;
    std::string expected;
    std::string actual;
    bool pass = false;
};

/// Result of one verification suite. Failures never abort a suite: every
/// case runs and the report aggregates, so a failure pattern is visible
/// as a whole. passed is true iff every case passed.
struct VerificationReport {
    std::string suite;
    std::vector<VerificationCase> cases;
    bool passed = true;
    double elapsed_seconds = 0.0;
    bool seeded = false;
    std::uint64_t seed = 0;

    void add(VerificationCase c);
};

/// Range policy for the closed-form sweeps: 0 sweeps the full validity
/// range 1..n-λ_2 per shape; a positive cap additionally bounds r.
struct RPolicy {
    int r_cap = 0;
};

/// Closed-form a_multiplicity against the defining-representation oracle,
/// for every n <= n_max, every shape, every r in the validity range.
VerificationReport verify_prop1(int n_max, RPolicy policy = {});

/// Same sweep for b_multiplicity against the standard-representation oracle.
VerificationReport verify_cor2(int n_max, RPolicy policy = {});

struct Prop3Config {
    int n = 6;
    int k_max = 6;
    int chains = 20;
    std::uint64_t seed = 0;
    /// Monte Carlo trials per chain; 0 runs the exact checks only.
    std::uint64_t trials = 10000;
};

/**
 * Random chains whose first step is a random mixture over one-fixed-point
 * classes and whose later steps are arbitrary random class measures:
 * the exact expected fixed-point count must be exactly 1 after every step,
 * and (when trials > 0) the Monte Carlo mean must land within 4 standard
 * errors of 1. Requires n >= 3 so a one-fixed-point class exists.
 */
VerificationReport verify_prop3(const Prop3Config& config);

/// Random class measure with integer weights below 10, normalized exactly.
ClassMeasure random_class_measure(int n, const std::vector<CycleType>& support_pool, Rng& rng);

} // namespace snrep
