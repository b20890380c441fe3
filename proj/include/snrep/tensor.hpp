#pragma once

#include "snrep/characters.hpp"
#include "snrep/numeric.hpp"
#include "snrep/partition.hpp"

#include <vector>

namespace snrep {

/// Which representation's tensor power is being decomposed: the n-dimensional
/// defining representation, or its (n-1)-dimensional standard complement.
enum class RepKind { defining, standard };

/// How a multiplicity was computed.
enum class Method { closed_form, oracle };

/// Method requested for a table sweep.
enum class MethodChoice { closed, oracle, auto_select };

/// Largest r for which the closed forms are asserted: n - λ_2
/// (λ_2 taken as 0 when the shape has at most one part).
int max_closed_form_r(const Partition& shape);

/**
 * Multiplicity of S^λ in the r-th tensor power of the defining
 * representation, by the closed form
 *
 *   a_{λ,r} = f^λ̄ · Σ_{i=|λ̄|}^{r} C(i,|λ̄|) · S(r,i).
 *
 * Valid only for 1 <= r <= n - λ_2; outside that range a RangeError names
 * the bound rather than returning a value the formula does not assert.
 */
BigInt a_multiplicity(const Partition& shape, int r);

/**
 * Multiplicity of S^λ in the r-th tensor power of the standard
 * representation, by the closed form
 *
 *   b_{λ,r} = f^λ̄ · Σ_{s=|λ̄|}^{r} (-1)^{r-s} C(r,s) · Σ_{i=|λ̄|}^{s} C(i,|λ̄|) S(s,i).
 *
 * Same validity range as a_multiplicity. A negative result would mean an
 * implementation bug and raises InvariantError.
 */
BigInt b_multiplicity(const Partition& shape, int r);

/**
 * Independent character-inner-product oracle:
 *
 *   (1/n!) Σ_{μ ⊢ n} |C_μ| · c(μ)^r · χ^λ(μ),
 *
 * where c(μ) is the fixed-point count for the defining representation and
 * one less for the standard one. Accepts any r >= 0. Runs in exact rational
 * arithmetic; a non-integral or negative result raises InvariantError.
 */
BigInt oracle_multiplicity(const Partition& shape, int r, RepKind kind);
BigInt oracle_multiplicity(const Partition& shape, int r, RepKind kind, const CharacterTable& table);

struct MultiplicityResult {
    BigInt value;
    Method method;
};

/// Closed form when (shape, r) is in range, oracle otherwise; reports which.
MultiplicityResult multiplicity_auto(const Partition& shape, int r, RepKind kind);

struct DecompositionEntry {
    Partition shape;
    BigInt multiplicity;
    Method method;
};

/**
 * Full decomposition table over all λ ⊢ n, in canonical order.
 * The oracle method covers every shape; the closed method stores only
 * in-range shapes and lists the rest in out_of_range.
 */
struct DecompositionTable {
    int n = 0;
    int r = 0;
    RepKind rep_kind = RepKind::defining;
    MethodChoice method = MethodChoice::oracle;
    std::vector<DecompositionEntry> entries;
    std::vector<Partition> out_of_range;

    /// Σ over stored entries of multiplicity · f^λ.
    BigInt dimension_sum() const;
};

DecompositionTable decompose(int n, int r, RepKind kind, MethodChoice method);

const char* rep_kind_name(RepKind kind);
const char* method_name(Method method);
const char* method_choice_name(MethodChoice method);

} // namespace snrep
