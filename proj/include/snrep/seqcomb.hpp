#pragma once

#include "snrep/numeric.hpp"

#include <vector>

namespace snrep {

/**
 * Triangular table of Stirling numbers of the second kind, grown on demand.
 *
 * Entries satisfy S(0,0) = 1, S(r,0) = 0 for r >= 1, S(r,i) = 0 for i > r,
 * and the recurrence S(r,i) = i*S(r-1,i) + S(r-1,i-1). Everything is
 * computed by recurrence; no floating point anywhere.
 */
class StirlingTable {
public:
    explicit StirlingTable(int max_r = 0);

    void grow(int max_r);
    int max_r() const { return static_cast<int>(rows_.size()) - 1; }

    /// S(r, i); grows the table if needed.
    const BigInt& at(int r, int i);

    /// Row sum Σ_i S(r, i) = B_r.
    BigInt row_sum(int r);

private:
    std::vector<std::vector<BigInt>> rows_;
    BigInt zero_ = 0;
};

// The free functions below are backed by internally synchronized caches;
// concurrent callers observe identical values.

/// Stirling number of the second kind S(r, i).
BigInt stirling2(int r, int i);

/// Bell number B_t = Σ_q S(t, q), with B_0 = 1.
BigInt bell(int t);

/// Binomial coefficient C(a, b); zero when b > a.
BigInt binomial(int a, int b);

} // namespace snrep
