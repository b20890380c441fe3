#include "snrep/markov.hpp"

#include "snrep/characters.hpp"
#include "snrep/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

namespace snrep {

ClassMeasure::ClassMeasure(int n, WeightMap weights) : n_(n), weights_(std::move(weights)) {
    if (n_ < 1) {
        throw SemanticError("class measure: n must be positive, got " + std::to_string(n_));
    }
    BigRat total = 0;
    for (auto it = weights_.begin(); it != weights_.end();) {
        if (it->first.weight() != n_) {
            throw SemanticError("class measure: cycle type " + it->first.to_string() +
                                " is not a partition of n = " + std::to_string(n_));
        }
        if (it->second < 0) {
            throw SemanticError("class measure: weight of class " + it->first.to_string() +
                                " is negative: " + to_fraction(it->second));
        }
        total += it->second;
        if (it->second == 0) {
            it = weights_.erase(it);
        } else {
            ++it;
        }
    }
    if (total != 1) {
        throw SemanticError("class measure: weights sum to " + to_fraction(total) +
                            ", expected exactly 1");
    }
}

ClassMeasure ClassMeasure::point_mass(const CycleType& type) {
    WeightMap weights;
    weights.emplace(type, BigRat(1));
    return ClassMeasure(type.weight(), std::move(weights));
}

ClassMeasure ClassMeasure::uniform_mixture(int n, const std::vector<CycleType>& classes) {
    if (classes.empty()) {
        throw PreconditionError("uniform_mixture: need at least one class");
    }
    WeightMap weights;
    const BigRat share(BigInt(1), BigInt(static_cast<int>(classes.size())));
    for (const CycleType& type : classes) {
        if (!weights.emplace(type, share).second) {
            throw PreconditionError("uniform_mixture: duplicate class " + type.to_string());
        }
    }
    return ClassMeasure(n, std::move(weights));
}

BigRat ClassMeasure::weight(const CycleType& type) const {
    const auto it = weights_.find(type);
    return it == weights_.end() ? BigRat(0) : it->second;
}

std::vector<CycleType> ClassMeasure::support() const {
    std::vector<CycleType> classes;
    classes.reserve(weights_.size());
    for (const auto& [type, weight] : weights_) {
        classes.push_back(type);
    }
    return classes;
}

ChainSpec::ChainSpec(int n_in, std::vector<ClassMeasure> steps_in)
    : n(n_in), steps(std::move(steps_in)) {
    if (steps.empty()) {
        throw PreconditionError("chain spec: need at least one step");
    }
    for (const ClassMeasure& step : steps) {
        if (step.n() != n) {
            throw PreconditionError("chain spec: step measure is on S_" + std::to_string(step.n()) +
                                    ", chain is on S_" + std::to_string(n));
        }
    }
}

FourierScalar fourier_scalar(const ClassMeasure& nu, const Partition& shape) {
    if (shape.weight() != nu.n()) {
        throw PreconditionError("fourier_scalar: shape " + shape.to_string() +
                                " is not a partition of n = " + std::to_string(nu.n()));
    }
    // The class weight already aggregates all class_size(mu) elements.
    BigRat sum = 0;
    for (const auto& [type, weight] : nu.weights()) {
        sum += weight * BigRat(mn_character(shape, type));
    }
    return {shape, sum / BigRat(syt_count(shape))};
}

BigRat expected_fixed_points(const ChainSpec& chain) {
    if (chain.n == 1) {
        return 1; // S_1: the only permutation fixes its one point
    }
    const Partition standard_shape{chain.n - 1, 1};
    BigRat product = 1;
    for (const ClassMeasure& step : chain.steps) {
        product *= fourier_scalar(step, standard_shape).value;
    }
    return 1 + BigRat(chain.n - 1) * product;
}

ClassMeasure convolve(const ClassMeasure& nu, const ClassMeasure& omega, int cap) {
    if (nu.n() != omega.n()) {
        throw PreconditionError("convolve: measures live on different groups");
    }
    const int n = nu.n();
    if (n > cap) {
        throw ResourceGuardError("convolve: n = " + std::to_string(n) + " exceeds the exact-expansion cap " +
                                 std::to_string(cap));
    }

    std::map<CycleType, std::vector<Permutation>, CanonicalLess> buckets;
    for (Permutation& perm : all_permutations(n)) {
        buckets[perm.cycle_type()].push_back(std::move(perm));
    }

    ClassMeasure::WeightMap result;
    for (const auto& [left_type, left_weight] : nu.weights()) {
        const auto& left_class = buckets.at(left_type);
        for (const auto& [right_type, right_weight] : omega.weights()) {
            // Conjugation invariance: one fixed representative of the right
            // class against every element of the left class.
            const Permutation& representative = buckets.at(right_type).front();
            const BigRat mass_per_product =
                left_weight * right_weight / BigRat(class_size(left_type));
            for (const Permutation& left : left_class) {
                result[left.after(representative).cycle_type()] += mass_per_product;
            }
        }
    }
    return ClassMeasure(n, std::move(result));
}

Permutation sample_class(const CycleType& type, Rng& rng) {
    const int n = type.weight();
    std::vector<int> word(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        word[static_cast<size_t>(i)] = i;
    }
    rng.shuffle(word);

    std::vector<int> images(static_cast<size_t>(n));
    size_t offset = 0;
    for (int part : type.parts()) {
        const size_t len = static_cast<size_t>(part);
        for (size_t i = 0; i + 1 < len; ++i) {
            images[static_cast<size_t>(word[offset + i])] = word[offset + i + 1];
        }
        images[static_cast<size_t>(word[offset + len - 1])] = word[offset];
        offset += len;
    }
    return Permutation(std::move(images));
}

namespace {

// Exact class sampling: integer weights over a common denominator, inverse
// lookup of a uniform draw below that denominator. A u64 fast path covers
// every realistic measure; a BigInt path keeps huge denominators exact.
struct StepSampler {
    std::vector<CycleType> classes;
    bool small = true;
    std::vector<uint64_t> cumulative_small;
    uint64_t denominator_small = 1;
    std::vector<BigInt> cumulative_big;
    BigInt denominator_big = 1;

    explicit StepSampler(const ClassMeasure& measure) {
        BigInt denom = 1;
        for (const auto& [type, weight] : measure.weights()) {
            denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(weight));
        }
        BigInt running = 0;
        for (const auto& [type, weight] : measure.weights()) {
            classes.push_back(type);
            running += boost::multiprecision::numerator(weight) *
                       (denom / boost::multiprecision::denominator(weight));
            cumulative_big.push_back(running);
        }
        denominator_big = denom;
        small = denom <= std::numeric_limits<uint64_t>::max();
        if (small) {
            denominator_small = denom.convert_to<uint64_t>();
            for (const BigInt& value : cumulative_big) {
                cumulative_small.push_back(value.convert_to<uint64_t>());
            }
        }
    }

    const CycleType& draw(Rng& rng) const {
        if (classes.size() == 1) {
            return classes.front();
        }
        size_t index;
        if (small) {
            const uint64_t u = rng.below(denominator_small);
            index = static_cast<size_t>(
                std::upper_bound(cumulative_small.begin(), cumulative_small.end(), u) -
                cumulative_small.begin());
        } else {
            const BigInt u = rng.below_big(denominator_big);
            index = static_cast<size_t>(
                std::upper_bound(cumulative_big.begin(), cumulative_big.end(), u) -
                cumulative_big.begin());
        }
        return classes[index];
    }
};

struct LaneTotals {
    std::vector<uint64_t> step_sums;   // Σ fix(X_j) per step
    uint64_t final_square_sum = 0;     // Σ fix(X_k)^2
};

LaneTotals run_lane(const ChainSpec& chain, const std::vector<StepSampler>& samplers,
                    uint64_t lane_trials, Rng rng) {
    LaneTotals totals;
    totals.step_sums.assign(chain.steps.size(), 0);
    for (uint64_t t = 0; t < lane_trials; ++t) {
        Permutation state = Permutation::identity(chain.n);
        for (size_t j = 0; j < chain.steps.size(); ++j) {
            const CycleType& type = samplers[j].draw(rng);
            state = sample_class(type, rng).after(state);
            const uint64_t fix = static_cast<uint64_t>(state.fixed_points());
            totals.step_sums[j] += fix;
            if (j + 1 == chain.steps.size()) {
                totals.final_square_sum += fix * fix;
            }
        }
    }
    return totals;
}

} // namespace

SimulationSummary simulate(const ChainSpec& chain, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) {
        throw PreconditionError("simulate: trials must be at least 1");
    }
    std::vector<StepSampler> samplers;
    samplers.reserve(chain.steps.size());
    for (const ClassMeasure& step : chain.steps) {
        samplers.emplace_back(step);
    }

    // Fixed lane count; trials are dealt into contiguous chunks so the
    // (seed, lane) -> stream mapping never depends on hardware.
    const uint64_t lanes = std::min<uint64_t>(kSimulationLanes, trials);
    std::vector<LaneTotals> lane_totals(lanes);
    std::vector<uint64_t> lane_trials(lanes, trials / lanes);
    for (uint64_t lane = 0; lane < trials % lanes; ++lane) {
        ++lane_trials[lane];
    }

    const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = static_cast<unsigned>(std::min<uint64_t>(hardware, lanes));
    if (workers <= 1) {
        for (uint64_t lane = 0; lane < lanes; ++lane) {
            lane_totals[lane] = run_lane(chain, samplers, lane_trials[lane], Rng::for_lane(seed, lane));
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (uint64_t lane = w; lane < lanes; lane += workers) {
                    lane_totals[lane] =
                        run_lane(chain, samplers, lane_trials[lane], Rng::for_lane(seed, lane));
                }
            });
        }
        for (std::thread& worker : pool) {
            worker.join();
        }
    }

    std::vector<uint64_t> step_sums(chain.steps.size(), 0);
    uint64_t final_square_sum = 0;
    for (const LaneTotals& totals : lane_totals) {
        for (size_t j = 0; j < step_sums.size(); ++j) {
            step_sums[j] += totals.step_sums[j];
        }
        final_square_sum += totals.final_square_sum;
    }

    SimulationSummary summary;
    summary.trials = trials;
    summary.seed = seed;
    summary.per_step_means.reserve(step_sums.size());
    for (const uint64_t sum : step_sums) {
        summary.per_step_means.push_back(static_cast<double>(sum) / static_cast<double>(trials));
    }
    summary.mean_fixed_points = summary.per_step_means.back();

    if (trials > 1) {
        // Unbiased sample variance from exact integer sums:
        //   s^2 = (N * Σx^2 - (Σx)^2) / (N * (N - 1))
        const uint64_t final_sum = step_sums.back();
        const BigInt numerator =
            BigInt(trials) * BigInt(final_square_sum) - BigInt(final_sum) * BigInt(final_sum);
        const double variance = numerator.convert_to<double>() /
                                (static_cast<double>(trials) * static_cast<double>(trials - 1));
        summary.std_error = std::sqrt(variance / static_cast<double>(trials));
    }
    return summary;
}

} // namespace snrep
