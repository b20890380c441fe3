#pragma once

#include "snrep/numeric.hpp"
#include "snrep/partition.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace snrep {

/// Memo cache for the Murnaghan-Nakayama recursion, keyed on
/// (shape, remaining cycle-type suffix). Thread-safe: concurrent callers
/// may recompute a value but always store and observe the same result.
class CharacterCache {
public:
    bool find(const Partition& shape, const Partition& suffix, BigInt& out) const;
    void store(const Partition& shape, const Partition& suffix, const BigInt& value);

private:
    struct KeyHash {
        size_t operator()(const std::pair<Partition, Partition>& key) const {
            return PartitionHash{}(key.first) * 0x9E3779B97F4A7C15ull ^ PartitionHash{}(key.second);
        }
    };
    mutable std::mutex mutex_;
    std::unordered_map<std::pair<Partition, Partition>, BigInt, KeyHash> map_;
};

/**
 * χ^λ(μ) by recursive rim-hook removal:
 *
 *   χ^λ(μ) = Σ over rim hooks ξ of length μ_1 of (-1)^{ht(ξ)} χ^{λ∖ξ}(μ∖μ_1)
 *
 * with base case χ^()(()) = 1. Cycle parts are consumed largest first
 * (the stored order), which fixes the recursion tree; the value itself is
 * order-independent. Requires |λ| = |μ|.
 */
BigInt mn_character(const Partition& shape, const CycleType& type);
BigInt mn_character(const Partition& shape, const CycleType& type, CharacterCache& cache);

/// Character of the defining representation: the number of fixed points of the class.
BigInt fixed_point_character(const CycleType& type);

/**
 * Complete exact character table of S_n. Shapes and classes are both
 * listed in canonical order; values[s][c] = χ^{shapes[s]}(classes[c]).
 * Immutable once built and freely shareable.
 */
class CharacterTable {
public:
    int n() const { return n_; }
    const std::vector<Partition>& shapes() const { return shapes_; }
    const std::vector<Partition>& classes() const { return shapes_; }

    size_t shape_index(const Partition& shape) const;
    size_t class_index(const CycleType& type) const { return shape_index(type); }

    const BigInt& value_at(size_t shape_idx, size_t class_idx) const {
        return values_[shape_idx][class_idx];
    }
    const BigInt& value(const Partition& shape, const CycleType& type) const {
        return values_[shape_index(shape)][shape_index(type)];
    }

private:
    friend CharacterTable character_table(int, int);
    int n_ = 0;
    std::vector<Partition> shapes_;
    std::vector<std::vector<BigInt>> values_;
    std::unordered_map<Partition, size_t, PartitionHash> index_;
};

/// Hard cap on table size: SNREP_MAX_N when set to a valid integer, else 12.
int table_cap();

/// Builds the table for S_n; throws ResourceGuardError unless 1 <= n <= cap.
CharacterTable character_table(int n);
CharacterTable character_table(int n, int cap);

/// Process-wide cache of built tables (keyed by n); same cap as character_table.
std::shared_ptr<const CharacterTable> shared_character_table(int n);

} // namespace snrep
