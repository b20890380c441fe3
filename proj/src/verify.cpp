#include "snrep/verify.hpp"

#include "snrep/characters.hpp"
#include "snrep/errors.hpp"
#include "snrep/tensor.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace snrep {

void VerificationReport::add(VerificationCase c) {
    passed = passed && c.pass;
    cases.push_back(std::move(c));
}

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerificationReport closed_form_sweep(const std::string& suite, RepKind kind, int n_max,
                                     RPolicy policy) {
    Stopwatch timer;
    VerificationReport report;
    report.suite = suite;
    for (int n = 1; n <= n_max; ++n) {
        const auto table = shared_character_table(n);
        for (const Partition& shape : table->shapes()) {
            int r_max = max_closed_form_r(shape);
            if (policy.r_cap > 0) {
                r_max = std::min(r_max, policy.r_cap);
            }
            for (int r = 1; r <= r_max; ++r) {
                const BigInt closed = kind == RepKind::defining ? a_multiplicity(shape, r)
                                                                : b_multiplicity(shape, r);
                const BigInt oracle = oracle_multiplicity(shape, r, kind, *table);
                VerificationCase c;
                std::ostringstream inputs;
                inputs << "n=" << n << " shape=" << shape.to_string() << " r=" << r;
                c.inputs = inputs.str();
                c.expected = oracle.str();
                c.actual = closed.str();
                c.pass = closed == oracle;
                report.add(std::move(c));
            }
        }
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

} // namespace

VerificationReport verify_prop1(int n_max, RPolicy policy) {
    return closed_form_sweep("prop1", RepKind::defining, n_max, policy);
}

VerificationReport verify_cor2(int n_max, RPolicy policy) {
    return closed_form_sweep("cor2", RepKind::standard, n_max, policy);
}

ClassMeasure random_class_measure(int n, const std::vector<CycleType>& support_pool, Rng& rng) {
    std::vector<int> raw(support_pool.size());
    int total = 0;
    do {
        total = 0;
        for (size_t i = 0; i < raw.size(); ++i) {
            raw[i] = static_cast<int>(rng.below(10));
            total += raw[i];
        }
    } while (total == 0);
    ClassMeasure::WeightMap weights;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] > 0) {
            weights.emplace(support_pool[i], BigRat(raw[i], total));
        }
    }
    return ClassMeasure(n, std::move(weights));
}

VerificationReport verify_prop3(const Prop3Config& config) {
    if (config.n < 3) {
        throw PreconditionError("verify_prop3: n must be at least 3 so a one-fixed-point class "
                                "exists, got " + std::to_string(config.n));
    }
    Stopwatch timer;
    VerificationReport report;
    report.suite = "prop3";
    report.seeded = true;
    report.seed = config.seed;

    const std::vector<CycleType> all_classes = enumerate_partitions(config.n);
    std::vector<CycleType> one_fixed_point;
    for (const CycleType& type : all_classes) {
        if (type.fixed_point_count() == 1) {
            one_fixed_point.push_back(type);
        }
    }

    Rng rng(config.seed);
    for (int chain_index = 0; chain_index < config.chains; ++chain_index) {
        std::vector<ClassMeasure> steps;
        steps.push_back(random_class_measure(config.n, one_fixed_point, rng));
        for (int k = 2; k <= config.k_max; ++k) {
            steps.push_back(random_class_measure(config.n, all_classes, rng));
        }
        const ChainSpec chain(config.n, steps);

        for (int k = 1; k <= config.k_max; ++k) {
            const ChainSpec prefix(config.n,
                                   std::vector<ClassMeasure>(steps.begin(), steps.begin() + k));
            const BigRat exact = expected_fixed_points(prefix);
            VerificationCase c;
            std::ostringstream inputs;
            inputs << "n=" << config.n << " chain=" << chain_index << " k=" << k;
            c.inputs = inputs.str();
            c.expected = "1";
            c.actual = to_fraction(exact);
            c.pass = exact == 1;
            report.add(std::move(c));
        }

        if (config.trials > 0) {
            const std::uint64_t sim_seed =
                mix64(config.seed ^ (static_cast<std::uint64_t>(chain_index) << 20));
            const SimulationSummary summary = simulate(chain, config.trials, sim_seed);
            VerificationCase c;
            std::ostringstream inputs;
            inputs << "n=" << config.n << " chain=" << chain_index << " k=" << config.k_max
                   << " trials=" << config.trials << " seed=" << sim_seed;
            c.inputs = inputs.str();
            c.expected = "1 within 4 std errors";
            std::ostringstream actual;
            actual << "mean=" << summary.mean_fixed_points << " std_error=" << summary.std_error;
            c.actual = actual.str();
            c.pass = std::abs(summary.mean_fixed_points - 1.0) <= 4.0 * summary.std_error;
            report.add(std::move(c));
        }
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

} // namespace snrep
