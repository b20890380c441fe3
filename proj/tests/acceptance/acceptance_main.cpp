// Acceptance gate: seven checks, one line of output each, exit 0 iff all pass.
// Budgets are enforced wall-clock limits, not advisory.

#include "snrep/characters.hpp"
#include "snrep/markov.hpp"
#include "snrep/numeric.hpp"
#include "snrep/partition.hpp"
#include "snrep/permutation.hpp"
#include "snrep/rng.hpp"
#include "snrep/tensor.hpp"
#include "snrep/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

using namespace snrep;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& message) {
        pass = false;
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += message;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string summarize_failures(const VerificationReport& report) {
    int failures = 0;
    std::string first;
    for (const VerificationCase& c : report.cases) {
        if (!c.pass) {
            if (failures == 0) {
                first = c.inputs + " expected " + c.expected + " got " + c.actual;
            }
            ++failures;
        }
    }
    std::ostringstream out;
    out << failures << " of " << report.cases.size() << " cases failed";
    if (failures > 0) {
        out << ", first: " << first;
    }
    return out.str();
}

// 1. Closed-form a-multiplicities equal the character oracle on the whole
//    validity range, n <= 8 and in under 60 seconds.
Outcome criterion_prop1() {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    const VerificationReport report = verify_prop1(8);
    const double elapsed = seconds_since(start);
    if (!report.passed) {
        outcome.fail(summarize_failures(report));
    }
    if (elapsed > 60.0) {
        outcome.fail("took " + std::to_string(elapsed) + "s, budget 60s");
    }
    return outcome;
}

// 2. Same sweep for the b-multiplicities against the standard-rep oracle.
Outcome criterion_cor2() {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    const VerificationReport report = verify_cor2(8);
    const double elapsed = seconds_since(start);
    if (!report.passed) {
        outcome.fail(summarize_failures(report));
    }
    if (elapsed > 60.0) {
        outcome.fail("took " + std::to_string(elapsed) + "s, budget 60s");
    }
    return outcome;
}

// 3. Oracle decompositions satisfy the dimension identities
//    sum mult*f^lambda = n^r (defining) and (n-1)^r (standard).
Outcome criterion_dimensions() {
    Outcome outcome;
    for (int n = 1; n <= 8; ++n) {
        for (int r = 0; r <= 6; ++r) {
            const BigInt defining =
                decompose(n, r, RepKind::defining, MethodChoice::oracle).dimension_sum();
            if (defining != pow_int(n, r)) {
                outcome.fail("defining n=" + std::to_string(n) + " r=" + std::to_string(r) +
                             ": got " + defining.str());
            }
            const BigInt standard =
                decompose(n, r, RepKind::standard, MethodChoice::oracle).dimension_sum();
            if (standard != pow_int(n - 1, r)) {
                outcome.fail("standard n=" + std::to_string(n) + " r=" + std::to_string(r) +
                             ": got " + standard.str());
            }
        }
    }
    return outcome;
}

// 4. Twenty random chains per n in 3..8 (one-fixed-point first step,
//    arbitrary later steps, k <= 6): exact expectation is the rational 1.
Outcome criterion_prop3_exact() {
    Outcome outcome;
    for (int n = 3; n <= 8; ++n) {
        Prop3Config config;
        config.n = n;
        config.k_max = 6;
        config.chains = 20;
        config.seed = 7000 + static_cast<std::uint64_t>(n);
        config.trials = 0;
        const VerificationReport report = verify_prop3(config);
        if (!report.passed) {
            outcome.fail("n=" + std::to_string(n) + ": " + summarize_failures(report));
        }
    }
    return outcome;
}

// 5. Monte Carlo at n=6, k=5, 10^5 trials, fixed seed: the empirical mean
//    of fix(X_5) lands within 4 standard errors of 1, in under 30 seconds.
Outcome criterion_prop3_monte_carlo() {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();

    const auto first =
        ClassMeasure::uniform_mixture(6, {CycleType{5, 1}, CycleType{3, 2, 1}});
    ClassMeasure::WeightMap second_weights;
    second_weights.emplace(CycleType{6}, BigRat(1, 2));
    second_weights.emplace(CycleType{2, 2, 2}, BigRat(1, 2));
    ClassMeasure::WeightMap fourth_weights;
    fourth_weights.emplace(CycleType{3, 3}, BigRat(1, 3));
    fourth_weights.emplace(CycleType{2, 1, 1, 1, 1}, BigRat(2, 3));
    ClassMeasure::WeightMap fifth_weights;
    fifth_weights.emplace(CycleType{1, 1, 1, 1, 1, 1}, BigRat(1, 4));
    fifth_weights.emplace(CycleType{6}, BigRat(3, 4));
    const ChainSpec chain(6, {first,
                              ClassMeasure(6, std::move(second_weights)),
                              ClassMeasure::point_mass(CycleType{4, 2}),
                              ClassMeasure(6, std::move(fourth_weights)),
                              ClassMeasure(6, std::move(fifth_weights))});

    const BigRat exact = expected_fixed_points(chain);
    if (exact != 1) {
        outcome.fail("exact expectation is " + to_fraction(exact) + ", not 1");
    }

    const SimulationSummary summary = simulate(chain, 100000, 424242);
    const double deviation = std::abs(summary.mean_fixed_points - 1.0);
    if (deviation > 4.0 * summary.std_error) {
        std::ostringstream message;
        message << "mean " << summary.mean_fixed_points << " deviates by " << deviation
                << " > 4 * " << summary.std_error;
        outcome.fail(message.str());
    }

    const double elapsed = seconds_since(start);
    if (elapsed > 30.0) {
        outcome.fail("took " + std::to_string(elapsed) + "s, budget 30s");
    }
    return outcome;
}

int standard_matrix_trace(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    int trace = 0;
    // Basis e_i - e_{n-1}: diagonal entry i is [images[i] == i] - [images[n-1] == i].
    for (int i = 0; i < n - 1; ++i) {
        if (images[static_cast<size_t>(i)] == i) {
            ++trace;
        }
        if (images[static_cast<size_t>(n - 1)] == i) {
            --trace;
        }
    }
    return trace;
}

// 6. Character correctness: the hook rule chi^{(n-1,1)} = fix - 1 and both
//    orthogonality relations exactly for n <= 8; Murnaghan-Nakayama values
//    match traces of explicit permutation matrices for n <= 5.
Outcome criterion_characters() {
    Outcome outcome;
    for (int n = 2; n <= 8; ++n) {
        const auto table = shared_character_table(n);
        const size_t hook = table->shape_index(Partition{n - 1, 1});
        for (size_t c = 0; c < table->classes().size(); ++c) {
            const CycleType& mu = table->classes()[c];
            if (table->value_at(hook, c) != mu.fixed_point_count() - 1) {
                outcome.fail("hook rule fails at n=" + std::to_string(n) + " mu=" + mu.to_string());
            }
        }
    }

    for (int n = 1; n <= 8; ++n) {
        const auto table = shared_character_table(n);
        const size_t count = table->shapes().size();
        const BigInt order = factorial(n);
        for (size_t a = 0; a < count; ++a) {
            for (size_t b = a; b < count; ++b) {
                BigInt inner = 0;
                for (size_t c = 0; c < count; ++c) {
                    inner += class_size(table->classes()[c]) * table->value_at(a, c) *
                             table->value_at(b, c);
                }
                if (inner != (a == b ? order : 0)) {
                    outcome.fail("row orthogonality fails at n=" + std::to_string(n));
                }
            }
        }
        for (size_t c = 0; c < count; ++c) {
            for (size_t d = c; d < count; ++d) {
                BigInt inner = 0;
                for (size_t a = 0; a < count; ++a) {
                    inner += table->value_at(a, c) * table->value_at(a, d);
                }
                if (inner != (c == d ? centralizer_order(table->classes()[c]) : 0)) {
                    outcome.fail("column orthogonality fails at n=" + std::to_string(n));
                }
            }
        }
    }

    for (int n = 2; n <= 5; ++n) {
        const Partition trivial(std::vector<int>{n});
        const Partition hook{n - 1, 1};
        for (const Permutation& sigma : all_permutations(n)) {
            const CycleType mu = sigma.cycle_type();
            const BigInt defining_trace = sigma.fixed_points();
            const BigInt standard_trace = standard_matrix_trace(sigma.images());
            if (mn_character(trivial, mu) + mn_character(hook, mu) != defining_trace) {
                outcome.fail("defining trace mismatch at n=" + std::to_string(n) + " mu=" +
                             mu.to_string());
            }
            if (mn_character(hook, mu) != standard_trace) {
                outcome.fail("standard trace mismatch at n=" + std::to_string(n) + " mu=" +
                             mu.to_string());
            }
        }
    }
    return outcome;
}

// 7. Fourier multiplicativity: scalars of an exact convolution equal the
//    product of scalars, for every shape, on 50 random measure pairs.
Outcome criterion_fourier() {
    Outcome outcome;
    Rng rng(1337);
    for (int n = 2; n <= 6; ++n) {
        const std::vector<CycleType> pool = enumerate_partitions(n);
        for (int pair = 0; pair < 10; ++pair) {
            const ClassMeasure nu = random_class_measure(n, pool, rng);
            const ClassMeasure omega = random_class_measure(n, pool, rng);
            const ClassMeasure product = convolve(nu, omega);
            for (const Partition& shape : pool) {
                const BigRat left = fourier_scalar(product, shape).value;
                const BigRat right =
                    fourier_scalar(nu, shape).value * fourier_scalar(omega, shape).value;
                if (left != right) {
                    outcome.fail("n=" + std::to_string(n) + " pair=" + std::to_string(pair) +
                                 " shape=" + shape.to_string() + ": " + to_fraction(left) +
                                 " != " + to_fraction(right));
                }
            }
        }
    }
    return outcome;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"closed-form defining multiplicities match the oracle (n <= 8)", criterion_prop1},
        {"closed-form standard multiplicities match the oracle (n <= 8)", criterion_cor2},
        {"decomposition dimension sums equal n^r and (n-1)^r (n <= 8, r <= 6)",
         criterion_dimensions},
        {"expected fixed points are exactly 1 on random admissible chains (n = 3..8)",
         criterion_prop3_exact},
        {"Monte Carlo mean within 4 standard errors of 1 (n = 6, k = 5, 10^5 trials)",
         criterion_prop3_monte_carlo},
        {"character values: hook rule, orthogonality, explicit-matrix traces",
         criterion_characters},
        {"Fourier scalars multiply under convolution (50 random pairs, n <= 6)",
         criterion_fourier},
    };

    bool all_passed = true;
    for (const Criterion& criterion : criteria) {
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.fail(std::string("threw: ") + e.what());
        }
        all_passed = all_passed && outcome.pass;
        if (outcome.pass) {
            std::printf("PASS: %s\n", criterion.name);
        } else {
            std::printf("FAIL: %s (%s)\n", criterion.name, outcome.detail.c_str());
        }
    }
    return all_passed ? 0 : 1;
}
