#pragma once

#include "snrep/partition.hpp"

#include <vector>

namespace snrep {

/**
 * Permutation of {0, ..., n-1} stored as an array of images: images()[i]
 * is where i is sent.
 *
 * Composition convention: (p.after(q))(i) = p(q(i)), i.e. q acts first.
 * This matches left multiplication p·q of group elements acting on the left.
 */
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    /// this ∘ other: apply other first, then this.
    Permutation after(const Permutation& other) const;

    CycleType cycle_type() const;
    int fixed_points() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// All n! permutations of {0,...,n-1} in lexicographic image order.
/// Guarded: throws ResourceGuardError for n > 9.
std::vector<Permutation> all_permutations(int n);

} // namespace snrep
