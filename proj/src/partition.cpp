#include "snrep/partition.hpp"

#include "snrep/errors.hpp"

#include <numeric>

namespace snrep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw PreconditionError("partition parts must be positive, got " + std::to_string(parts_[i]));
        }
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
            throw PreconditionError("partition parts must be weakly decreasing");
        }
        weight_ += parts_[i];
    }
}

Partition Partition::truncated() const {
    if (parts_.size() <= 1) {
        return Partition{};
    }
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

int Partition::fixed_point_count() const {
    int count = 0;
    for (int p : parts_) {
        if (p == 1) {
            ++count;
        }
    }
    return count;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) {
        return Partition{};
    }
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) {
            ++conj[static_cast<size_t>(j)];
        }
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(parts_[i]);
    }
    out += ")";
    return out;
}

size_t PartitionHash::operator()(const Partition& p) const {
    size_t h = 1469598103934665603ull; // FNV offset basis
    for (int part : p.parts()) {
        h ^= static_cast<size_t>(part);
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        emit_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) {
        throw PreconditionError("enumerate_partitions: n must be nonnegative, got " + std::to_string(n));
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

BigInt syt_count(const Partition& shape) {
    if (shape.empty()) {
        return 1;
    }
    const Partition conj = shape.conjugate();
    BigInt hook_product = 1;
    for (int i = 0; i < shape.size(); ++i) {
        for (int j = 0; j < shape[static_cast<size_t>(i)]; ++j) {
            const int arm = shape[static_cast<size_t>(i)] - j - 1;
            const int leg = conj[static_cast<size_t>(j)] - i - 1;
            hook_product *= arm + leg + 1;
        }
    }
    return factorial(shape.weight()) / hook_product;
}

BigInt centralizer_order(const CycleType& type) {
    BigInt z = 1;
    const auto& parts = type.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        const int multiplicity = static_cast<int>(j - i);
        z *= pow_int(BigInt(parts[i]), multiplicity) * factorial(multiplicity);
        i = j;
    }
    return z;
}

BigInt class_size(const CycleType& type) {
    return factorial(type.weight()) / centralizer_order(type);
}

int fixed_points(const CycleType& type) {
    return type.fixed_point_count();
}

} // namespace snrep
