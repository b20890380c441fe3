#pragma once

#include "snrep/characters.hpp"
#include "snrep/markov.hpp"
#include "snrep/tensor.hpp"
#include "snrep/verify.hpp"

#include <json.hpp>

#include <string>

namespace snrep {

// All serialized partitions are integer arrays, all BigInt values decimal
// strings, all rationals "p/q" strings; tables use canonical order.

nlohmann::json partition_to_json(const Partition& p);

nlohmann::json table_to_json(const CharacterTable& table);
std::string table_to_csv(const CharacterTable& table);

nlohmann::json decomposition_to_json(const DecompositionTable& table);
std::string decomposition_to_csv(const DecompositionTable& table);

nlohmann::json measure_to_json(const ClassMeasure& measure);
nlohmann::json chain_to_json(const ChainSpec& chain);

nlohmann::json summary_to_json(const SimulationSummary& summary);
nlohmann::json report_to_json(const VerificationReport& report);

/**
 * Chain document schema:
 *
 *   {"n": int, "steps": [{"classes": [{"type": [ints], "weight": "p/q"}]}]}
 *
 * Weights are exact rational strings. Structural problems raise ParseError
 * naming the offending field; semantically invalid measures (weights not
 * summing to exactly 1, negative weights, types that are not partitions
 * of n) raise SemanticError.
 */
ChainSpec chain_from_json(const nlohmann::json& doc);

/// Reads and parses a chain document; I/O and syntax errors become ParseError.
ChainSpec load_chain_file(const std::string& path);

} // namespace snrep
