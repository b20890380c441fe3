#include "snrep/tensor.hpp"

#include "snrep/errors.hpp"
#include "snrep/seqcomb.hpp"

#include <string>

namespace snrep {

namespace {

// Guard for closed-form sweeps: a full sweep touches all p(n) shapes.
constexpr int kClosedSweepCap = 64;

void check_closed_form_range(const Partition& shape, int r) {
    const int bound = max_closed_form_r(shape);
    if (r < 1 || r > bound) {
        throw RangeError("closed form is only asserted for 1 <= r <= n - lambda_2 = " +
                         std::to_string(bound) + " for shape " + shape.to_string() + ", got r = " +
                         std::to_string(r));
    }
}

// Σ_{i=|λ̄|}^{r} C(i,|λ̄|) · S(r,i), the inner sum shared by both closed forms.
BigInt truncated_weight_sum(int truncated_weight, int r) {
    BigInt sum = 0;
    for (int i = truncated_weight; i <= r; ++i) {
        sum += binomial(i, truncated_weight) * stirling2(r, i);
    }
    return sum;
}

} // namespace

int max_closed_form_r(const Partition& shape) {
    return shape.weight() - shape.second_part_or_zero();
}

BigInt a_multiplicity(const Partition& shape, int r) {
    check_closed_form_range(shape, r);
    const Partition truncated = shape.truncated();
    return syt_count(truncated) * truncated_weight_sum(truncated.weight(), r);
}

BigInt b_multiplicity(const Partition& shape, int r) {
    check_closed_form_range(shape, r);
    const Partition truncated = shape.truncated();
    const int tw = truncated.weight();
    BigInt sum = 0;
    for (int s = tw; s <= r; ++s) {
        const BigInt term = binomial(r, s) * truncated_weight_sum(tw, s);
        sum += (r - s) % 2 == 0 ? term : -term;
    }
    const BigInt result = syt_count(truncated) * sum;
    if (result < 0) {
        throw InvariantError("b_multiplicity: negative multiplicity " + result.str() +
                             " for shape " + shape.to_string() + ", r = " + std::to_string(r));
    }
    return result;
}

BigInt oracle_multiplicity(const Partition& shape, int r, RepKind kind, const CharacterTable& table) {
    if (shape.weight() != table.n()) {
        throw PreconditionError("oracle_multiplicity: shape " + shape.to_string() +
                                " is not a partition of n = " + std::to_string(table.n()));
    }
    if (r < 0) {
        throw PreconditionError("oracle_multiplicity: r must be nonnegative, got " + std::to_string(r));
    }
    const BigInt group_order = factorial(table.n());
    BigRat sum = 0;
    const size_t shape_idx = table.shape_index(shape);
    for (size_t c = 0; c < table.classes().size(); ++c) {
        const CycleType& type = table.classes()[c];
        BigInt scalar(type.fixed_point_count());
        if (kind == RepKind::standard) {
            scalar -= 1;
        }
        const BigInt term = class_size(type) * pow_int(scalar, r) * table.value_at(shape_idx, c);
        sum += BigRat(term, group_order);
    }
    if (boost::multiprecision::denominator(sum) != 1 || sum < 0) {
        throw InvariantError("oracle_multiplicity: inner product " + to_fraction(sum) +
                             " is not a nonnegative integer for shape " + shape.to_string() +
                             ", r = " + std::to_string(r));
    }
    return boost::multiprecision::numerator(sum);
}

BigInt oracle_multiplicity(const Partition& shape, int r, RepKind kind) {
    return oracle_multiplicity(shape, r, kind, *shared_character_table(shape.weight()));
}

MultiplicityResult multiplicity_auto(const Partition& shape, int r, RepKind kind) {
    if (r >= 1 && r <= max_closed_form_r(shape)) {
        BigInt value =
            kind == RepKind::defining ? a_multiplicity(shape, r) : b_multiplicity(shape, r);
        return {std::move(value), Method::closed_form};
    }
    return {oracle_multiplicity(shape, r, kind), Method::oracle};
}

BigInt DecompositionTable::dimension_sum() const {
    BigInt sum = 0;
    for (const auto& entry : entries) {
        sum += entry.multiplicity * syt_count(entry.shape);
    }
    return sum;
}

DecompositionTable decompose(int n, int r, RepKind kind, MethodChoice method) {
    if (n < 1) {
        throw PreconditionError("decompose: n must be positive, got " + std::to_string(n));
    }
    if (r < 0) {
        throw PreconditionError("decompose: r must be nonnegative, got " + std::to_string(r));
    }
    if (method == MethodChoice::closed && n > kClosedSweepCap) {
        throw ResourceGuardError("decompose: closed-form sweep capped at n = " +
                                 std::to_string(kClosedSweepCap) + ", got n = " + std::to_string(n));
    }

    DecompositionTable table;
    table.n = n;
    table.r = r;
    table.rep_kind = kind;
    table.method = method;

    std::shared_ptr<const CharacterTable> chars;
    if (method != MethodChoice::closed) {
        chars = shared_character_table(n);
    }

    for (Partition& shape : enumerate_partitions(n)) {
        const bool in_range = r >= 1 && r <= max_closed_form_r(shape);
        if (method == MethodChoice::closed && !in_range) {
            table.out_of_range.push_back(std::move(shape));
            continue;
        }
        const bool use_closed = method == MethodChoice::closed ||
                                (method == MethodChoice::auto_select && in_range);
        BigInt value;
        if (use_closed) {
            value = kind == RepKind::defining ? a_multiplicity(shape, r) : b_multiplicity(shape, r);
        } else {
            value = oracle_multiplicity(shape, r, kind, *chars);
        }
        table.entries.push_back({std::move(shape), std::move(value),
                                 use_closed ? Method::closed_form : Method::oracle});
    }
    return table;
}

const char* rep_kind_name(RepKind kind) {
    return kind == RepKind::defining ? "defining" : "standard";
}

const char* method_name(Method method) {
    return method == Method::closed_form ? "closed_form" : "oracle";
}

const char* method_choice_name(MethodChoice method) {
    switch (method) {
    case MethodChoice::closed:
        return "closed";
    case MethodChoice::oracle:
        return "oracle";
    default:
        return "auto";
    }
}

} // namespace snrep
