#include "snrep/permutation.hpp"

#include "snrep/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace snrep {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<size_t>(v)]) {
            throw PreconditionError("permutation images must be a bijection on {0,...,n-1}");
        }
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::after(const Permutation& other) const {
    if (n() != other.n()) {
        throw PreconditionError("cannot compose permutations of different degree");
    }
    std::vector<int> composed(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) {
        composed[i] = images_[static_cast<size_t>(other.images_[i])];
    }
    return Permutation(std::move(composed));
}

CycleType Permutation::cycle_type() const {
    std::vector<bool> visited(images_.size(), false);
    std::vector<int> lengths;
    for (size_t start = 0; start < images_.size(); ++start) {
        if (visited[start]) {
            continue;
        }
        int length = 0;
        size_t i = start;
        while (!visited[i]) {
            visited[i] = true;
            i = static_cast<size_t>(images_[i]);
            ++length;
        }
        lengths.push_back(length);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return CycleType(std::move(lengths));
}

int Permutation::fixed_points() const {
    int count = 0;
    for (size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] == static_cast<int>(i)) {
            ++count;
        }
    }
    return count;
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 0) {
        throw PreconditionError("all_permutations: n must be nonnegative");
    }
    if (n > 9) {
        throw ResourceGuardError("all_permutations: refusing n = " + std::to_string(n) +
                                 " (limit 9; n! elements would be enumerated)");
    }
    std::vector<int> images(static_cast<size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

} // namespace snrep
