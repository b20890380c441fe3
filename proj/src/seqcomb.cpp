#include "snrep/seqcomb.hpp"

#include "snrep/errors.hpp"

#include <mutex>
#include <string>

namespace snrep {

StirlingTable::StirlingTable(int max_r) {
    rows_.push_back({BigInt(1)}); // S(0,0) = 1
    grow(max_r);
}

void StirlingTable::grow(int target_r) {
    for (int r = static_cast<int>(rows_.size()); r <= target_r; ++r) {
        std::vector<BigInt> row(static_cast<size_t>(r) + 1);
        row[0] = 0;
        for (int i = 1; i <= r; ++i) {
            const auto& prev = rows_.back();
            const BigInt above = i < r ? prev[static_cast<size_t>(i)] : BigInt(0);
            row[static_cast<size_t>(i)] = i * above + prev[static_cast<size_t>(i) - 1];
        }
        rows_.push_back(std::move(row));
    }
}

const BigInt& StirlingTable::at(int r, int i) {
    if (r < 0 || i < 0) {
        throw PreconditionError("stirling2: arguments must be nonnegative");
    }
    if (i > r) {
        return zero_;
    }
    grow(r);
    return rows_[static_cast<size_t>(r)][static_cast<size_t>(i)];
}

BigInt StirlingTable::row_sum(int r) {
    grow(r);
    BigInt sum = 0;
    for (const BigInt& v : rows_[static_cast<size_t>(r)]) {
        sum += v;
    }
    return sum;
}

namespace {

std::mutex stirling_mutex;
StirlingTable& shared_stirling() {
    static StirlingTable table(16);
    return table;
}

std::mutex binomial_mutex;
std::vector<std::vector<BigInt>>& pascal_rows() {
    static std::vector<std::vector<BigInt>> rows = {{BigInt(1)}};
    return rows;
}

} // namespace

BigInt stirling2(int r, int i) {
    std::lock_guard<std::mutex> lock(stirling_mutex);
    return shared_stirling().at(r, i);
}

BigInt bell(int t) {
    if (t < 0) {
        throw PreconditionError("bell: argument must be nonnegative, got " + std::to_string(t));
    }
    std::lock_guard<std::mutex> lock(stirling_mutex);
    return shared_stirling().row_sum(t);
}

BigInt binomial(int a, int b) {
    if (a < 0) {
        throw PreconditionError("binomial: a must be nonnegative, got " + std::to_string(a));
    }
    if (b < 0 || b > a) {
        return 0;
    }
    std::lock_guard<std::mutex> lock(binomial_mutex);
    auto& rows = pascal_rows();
    for (int n = static_cast<int>(rows.size()); n <= a; ++n) {
        std::vector<BigInt> row(static_cast<size_t>(n) + 1);
        row.front() = 1;
        row.back() = 1;
        for (int k = 1; k < n; ++k) {
            row[static_cast<size_t>(k)] =
                rows.back()[static_cast<size_t>(k) - 1] + rows.back()[static_cast<size_t>(k)];
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

} // namespace snrep
