#include "snrep/characters.hpp"

#include "snrep/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace snrep {

bool CharacterCache::find(const Partition& shape, const Partition& suffix, BigInt& out) const {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = map_.find({shape, suffix});
    if (it == map_.end()) {
        return false;
    }
    out = it->second;
    return true;
}

void CharacterCache::store(const Partition& shape, const Partition& suffix, const BigInt& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    map_.emplace(std::make_pair(shape, suffix), value);
}

namespace {

// Beta-numbers (first-column hook lengths) of the shape: beta[i] = λ_i + m-1-i,
// strictly decreasing. Removing a rim hook of length t corresponds to moving
// one beta number down by t onto a free slot; the hook height is the number
// of beta numbers jumped over.
std::vector<int> beta_numbers(const Partition& shape) {
    const int m = shape.size();
    std::vector<int> beta(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        beta[static_cast<size_t>(i)] = shape[static_cast<size_t>(i)] + (m - 1 - i);
    }
    return beta;
}

Partition shape_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int m = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int j = 0; j < m; ++j) {
        const int part = beta[static_cast<size_t>(j)] - (m - 1 - j);
        if (part > 0) {
            parts.push_back(part);
        }
    }
    return Partition(std::move(parts));
}

BigInt mn_recurse(const Partition& shape, const std::vector<int>& type_parts, size_t depth,
                  CharacterCache& cache) {
    if (depth == type_parts.size()) {
        return 1; // shape is empty here: weights stay matched at every level
    }
    const Partition suffix(std::vector<int>(type_parts.begin() + static_cast<long>(depth), type_parts.end()));
    BigInt cached;
    if (cache.find(shape, suffix, cached)) {
        return cached;
    }

    const int hook_length = type_parts[depth];
    const std::vector<int> beta = beta_numbers(shape);
    BigInt total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        const int lowered = beta[i] - hook_length;
        if (lowered < 0 || std::find(beta.begin(), beta.end(), lowered) != beta.end()) {
            continue;
        }
        int height = 0;
        for (size_t j = i + 1; j < beta.size(); ++j) {
            if (beta[j] > lowered) {
                ++height;
            }
        }
        std::vector<int> next_beta = beta;
        next_beta[i] = lowered;
        const BigInt sub = mn_recurse(shape_from_beta(std::move(next_beta)), type_parts, depth + 1, cache);
        total += (height % 2 == 0) ? sub : -sub;
    }

    cache.store(shape, suffix, total);
    return total;
}

CharacterCache& global_character_cache() {
    static CharacterCache cache;
    return cache;
}

} // namespace

BigInt mn_character(const Partition& shape, const CycleType& type, CharacterCache& cache) {
    if (shape.weight() != type.weight()) {
        throw PreconditionError("mn_character: weight mismatch: |shape| = " +
                                std::to_string(shape.weight()) + ", |cycle type| = " +
                                std::to_string(type.weight()));
    }
    return mn_recurse(shape, type.parts(), 0, cache);
}

BigInt mn_character(const Partition& shape, const CycleType& type) {
    return mn_character(shape, type, global_character_cache());
}

BigInt fixed_point_character(const CycleType& type) {
    return type.fixed_point_count();
}

size_t CharacterTable::shape_index(const Partition& shape) const {
    const auto it = index_.find(shape);
    if (it == index_.end()) {
        throw PreconditionError("partition " + shape.to_string() + " is not a partition of " +
                                std::to_string(n_));
    }
    return it->second;
}

int table_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("SNREP_MAX_N")) {
            char* end = nullptr;
            const long value = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && value >= 1 && value <= 1000) {
                return static_cast<int>(value);
            }
        }
        return 12;
    }();
    return cap;
}

CharacterTable character_table(int n) {
    return character_table(n, table_cap());
}

CharacterTable character_table(int n, int cap) {
    if (n < 1 || n > cap) {
        throw ResourceGuardError("character_table: n = " + std::to_string(n) +
                                 " is outside the supported range 1.." + std::to_string(cap) +
                                 " (override with SNREP_MAX_N)");
    }
    CharacterTable table;
    table.n_ = n;
    table.shapes_ = enumerate_partitions(n);
    for (size_t i = 0; i < table.shapes_.size(); ++i) {
        table.index_.emplace(table.shapes_[i], i);
    }
    CharacterCache cache;
    table.values_.resize(table.shapes_.size());
    for (size_t s = 0; s < table.shapes_.size(); ++s) {
        table.values_[s].reserve(table.shapes_.size());
        for (size_t c = 0; c < table.shapes_.size(); ++c) {
            table.values_[s].push_back(mn_character(table.shapes_[s], table.shapes_[c], cache));
        }
    }
    return table;
}

std::shared_ptr<const CharacterTable> shared_character_table(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CharacterTable>> tables;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = tables[n];
    if (!slot) {
        slot = std::make_shared<const CharacterTable>(character_table(n));
    }
    return slot;
}

} // namespace snrep
