#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace snrep::testing {

std::vector<std::vector<int>> brute_force_partitions(int n) {
    if (n == 0) {
        return {{}};
    }
    std::vector<std::vector<int>> out;
    // Compositions of n as bitmasks over n-1 gap positions.
    for (long mask = 0; mask < (1L << (n - 1)); ++mask) {
        std::vector<int> composition;
        int run = 1;
        for (int gap = 0; gap < n - 1; ++gap) {
            if (mask & (1L << gap)) {
                composition.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        composition.push_back(run);
        if (std::is_sorted(composition.begin(), composition.end(), std::greater<>())) {
            out.push_back(std::move(composition));
        }
    }
    return out;
}

BigInt euler_partition_count(int n) {
    std::vector<BigInt> p(static_cast<size_t>(n) + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt sum = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) {
                break;
            }
            const int sign = k % 2 == 1 ? 1 : -1;
            if (g1 <= m) {
                sum += sign * p[static_cast<size_t>(m - g1)];
            }
            if (g2 <= m) {
                sum += sign * p[static_cast<size_t>(m - g2)];
            }
        }
        p[static_cast<size_t>(m)] = sum;
    }
    return p[static_cast<size_t>(n)];
}

namespace {

long count_syt_rec(const std::vector<int>& shape, std::vector<int>& filled) {
    // filled[row] = cells already occupied in that row; rows fill left to
    // right, and a cell is placeable iff the row above is strictly longer.
    bool complete = true;
    long total = 0;
    for (size_t row = 0; row < shape.size(); ++row) {
        if (filled[row] == shape[row]) {
            continue;
        }
        complete = false;
        if (row > 0 && filled[row - 1] <= filled[row]) {
            continue;
        }
        ++filled[row];
        total += count_syt_rec(shape, filled);
        --filled[row];
    }
    return complete ? 1 : total;
}

} // namespace

long count_syt_brute(const std::vector<int>& shape) {
    std::vector<int> filled(shape.size(), 0);
    return count_syt_rec(shape, filled);
}

long set_partitions_with_blocks(int r, int blocks) {
    if (r == 0) {
        return blocks == 0 ? 1 : 0;
    }
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    long count = 0;
    std::vector<int> a(static_cast<size_t>(r), 0);
    std::function<void(int, int)> rec = [&](int i, int max_so_far) {
        if (i == r) {
            if (max_so_far + 1 == blocks) {
                ++count;
            }
            return;
        }
        for (int v = 0; v <= max_so_far + 1; ++v) {
            a[static_cast<size_t>(i)] = v;
            rec(i + 1, std::max(max_so_far, v));
        }
    };
    rec(1, 0);
    return count;
}

BigInt bell_triangle(int t) {
    std::vector<BigInt> row = {BigInt(1)};
    BigInt result = 1; // B_0
    for (int i = 1; i <= t; ++i) {
        std::vector<BigInt> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const BigInt& value : row) {
            next.push_back(next.back() + value);
        }
        result = next.front();
        row = std::move(next);
    }
    return result;
}

BigInt pascal_binomial(int a, int b) {
    if (b < 0 || b > a) {
        return 0;
    }
    std::vector<BigInt> row = {BigInt(1)};
    for (int n = 1; n <= a; ++n) {
        std::vector<BigInt> next(static_cast<size_t>(n) + 1, BigInt(1));
        for (int k = 1; k < n; ++k) {
            next[static_cast<size_t>(k)] =
                row[static_cast<size_t>(k) - 1] + row[static_cast<size_t>(k)];
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(b)];
}

std::vector<std::vector<int>> all_perm_images(int n) {
    std::vector<int> images(static_cast<size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::vector<int> cycle_type_of(const std::vector<int>& images) {
    std::vector<bool> seen(images.size(), false);
    std::vector<int> lengths;
    for (size_t start = 0; start < images.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        int length = 0;
        for (size_t i = start; !seen[i]; i = static_cast<size_t>(images[i])) {
            seen[i] = true;
            ++length;
        }
        lengths.push_back(length);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

int defining_matrix_trace(const std::vector<int>& images) {
    const size_t n = images.size();
    std::vector<std::vector<int>> matrix(n, std::vector<int>(n, 0));
    for (size_t j = 0; j < n; ++j) {
        matrix[static_cast<size_t>(images[j])][j] = 1;
    }
    int trace = 0;
    for (size_t i = 0; i < n; ++i) {
        trace += matrix[i][i];
    }
    return trace;
}

std::vector<std::vector<int>> standard_rep_matrix(const std::vector<int>& images) {
    // Basis f_i = e_i - e_{n-1}: sigma maps f_i to f_{sigma(i)} - f_{sigma(n-1)}
    // where f_{n-1} reads as zero.
    const int n = static_cast<int>(images.size());
    std::vector<std::vector<int>> matrix(static_cast<size_t>(n - 1),
                                         std::vector<int>(static_cast<size_t>(n - 1), 0));
    for (int col = 0; col < n - 1; ++col) {
        const int to = images[static_cast<size_t>(col)];
        if (to < n - 1) {
            matrix[static_cast<size_t>(to)][static_cast<size_t>(col)] += 1;
        }
        const int last_to = images[static_cast<size_t>(n - 1)];
        if (last_to < n - 1) {
            matrix[static_cast<size_t>(last_to)][static_cast<size_t>(col)] -= 1;
        }
    }
    return matrix;
}

int matrix_trace(const std::vector<std::vector<int>>& m) {
    int trace = 0;
    for (size_t i = 0; i < m.size(); ++i) {
        trace += m[i][i];
    }
    return trace;
}

} // namespace snrep::testing
