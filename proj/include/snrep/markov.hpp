#pragma once

#include "snrep/numeric.hpp"
#include "snrep/partition.hpp"
#include "snrep/permutation.hpp"
#include "snrep/rng.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace snrep {

/**
 * Probability measure on S_n constant on conjugacy classes, stored as one
 * exact rational weight per cycle type. Weights are nonnegative and sum to
 * exactly 1; classes with zero weight are dropped at construction.
 *
 * Everything exact stays in this class algebra: the data is p(n)-sized,
 * never n!-sized.
 */
class ClassMeasure {
public:
    using WeightMap = std::map<CycleType, BigRat, CanonicalLess>;

    ClassMeasure(int n, WeightMap weights);

    /// Total mass 1 on a single class (uniform over its elements).
    static ClassMeasure point_mass(const CycleType& type);

    /// Equal class weights 1/k over the given k distinct classes.
    static ClassMeasure uniform_mixture(int n, const std::vector<CycleType>& classes);

    int n() const { return n_; }
    const WeightMap& weights() const { return weights_; }
    BigRat weight(const CycleType& type) const;

    /// Classes with positive weight, in canonical order.
    std::vector<CycleType> support() const;

private:
    int n_;
    WeightMap weights_;
};

/**
 * Increment distributions ν_1, ..., ν_k of a Markov chain on S_n:
 * X_0 = identity and X_j = τ_j · X_{j-1} with τ_j drawn from ν_j
 * (left multiplication: the increment acts after the current state).
 */
struct ChainSpec {
    ChainSpec(int n, std::vector<ClassMeasure> steps);

    int n;
    std::vector<ClassMeasure> steps;
};

/// ν̂(S^λ) = s·I with s = (1/f^λ) Σ_μ ν(μ) χ^λ(μ).
struct FourierScalar {
    Partition shape;
    BigRat value;
};

/// Exact Fourier scalar of a class measure at the irrep S^λ. Requires |λ| = n.
FourierScalar fourier_scalar(const ClassMeasure& nu, const Partition& shape);

/// Exact E[fix(X_k)] = 1 + (n-1) · Π_j fourier_scalar(ν_j, (n-1,1)).
BigRat expected_fixed_points(const ChainSpec& chain);

inline constexpr int kConvolveCap = 7;

/**
 * Exact class measure of the product τσ with τ ~ nu and σ ~ omega,
 * computed by brute force over one class's elements against a fixed
 * representative of the other, weighted by class sizes. Diagnostic tool:
 * enumerates n! elements, hence the hard cap (default 7).
 */
ClassMeasure convolve(const ClassMeasure& nu, const ClassMeasure& omega, int cap = kConvolveCap);

/**
 * Uniformly random permutation of cycle type μ: draws a uniform word of
 * {0,...,n-1}, cuts it into consecutive blocks of lengths μ_1, μ_2, ...,
 * and reads each block as a cycle. Each target permutation arises from
 * exactly z_μ words, so the result is uniform on the class.
 */
Permutation sample_class(const CycleType& type, Rng& rng);

struct SimulationSummary {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double mean_fixed_points = 0.0;      // empirical mean of fix(X_k)
    double std_error = 0.0;              // standard error of that mean
    std::vector<double> per_step_means;  // mean of fix(X_j) for j = 1..k
};

/**
 * Monte Carlo run of the chain. Deterministic for a fixed seed: trials are
 * split over kSimulationLanes fixed lanes, lane `i` draws from the stream
 * Rng::for_lane(seed, i), and lane results are combined in lane order, so
 * the summary does not depend on thread scheduling.
 */
SimulationSummary simulate(const ChainSpec& chain, std::uint64_t trials, std::uint64_t seed);

inline constexpr std::uint64_t kSimulationLanes = 16;

} // namespace snrep
