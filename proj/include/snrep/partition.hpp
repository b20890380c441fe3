#pragma once

#include "snrep/numeric.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace snrep {

/**
 * Integer partition: a weakly decreasing sequence of positive integers.
 *
 * A Partition plays two roles. As a shape it indexes an irreducible
 * representation of S_n; as a cycle type it indexes a conjugacy class.
 * The empty partition (weight 0) is a first-class value.
 *
 * Partitions are immutable and usable as map keys.
 */
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Requires parts weakly decreasing and positive; throws PreconditionError otherwise.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](size_t i) const { return parts_[i]; }

    /// λ_2, taken as 0 when there are fewer than two parts.
    int second_part_or_zero() const { return parts_.size() >= 2 ? parts_[1] : 0; }

    /// λ̄ = (λ_2, λ_3, ...): the partition with its first part dropped.
    Partition truncated() const;

    /// Number of parts equal to 1 (cycle-type role: fixed points of the class).
    int fixed_point_count() const;

    Partition conjugate() const;

    /// "(3,1)", "()" for the empty partition.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on the part sequence; see canonical_less for table order.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// A Partition read as the cycle lengths of a conjugacy class of S_n.
using CycleType = Partition;

/// Canonical (reverse lexicographic) order: (n) first, (1,...,1) last.
/// All tables and serialized output list partitions in this order.
struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const { return a.parts() > b.parts(); }
};
inline bool canonical_less(const Partition& a, const Partition& b) {
    return CanonicalLess{}(a, b);
}

struct PartitionHash {
    size_t operator()(const Partition& p) const;
};

/// All partitions of n, each exactly once, in canonical order.
/// n = 0 yields the singleton list containing the empty partition.
std::vector<Partition> enumerate_partitions(int n);

/// f^λ, the number of standard Young tableaux of shape λ, by the hook
/// length formula n! / Π hooks. f of the empty partition is 1.
BigInt syt_count(const Partition& shape);

/// z_μ = Π_i i^{m_i} · m_i! where m_i is the multiplicity of part i.
BigInt centralizer_order(const CycleType& type);

/// |C_μ| = n! / z_μ: the number of elements of S_n with cycle type μ.
BigInt class_size(const CycleType& type);

/// Number of parts of μ equal to 1.
int fixed_points(const CycleType& type);

} // namespace snrep
