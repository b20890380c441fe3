#include "snrep/serialize.hpp"

#include "snrep/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace snrep {

using nlohmann::json;

nlohmann::json partition_to_json(const Partition& p) {
    return json(p.parts());
}

namespace {

std::string csv_cell(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string partition_cell(const Partition& p) {
    std::string text;
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i > 0) {
            text += ',';
        }
        text += std::to_string(p.parts()[i]);
    }
    return csv_cell(text);
}

} // namespace

nlohmann::json table_to_json(const CharacterTable& table) {
    json shapes = json::array();
    for (const Partition& shape : table.shapes()) {
        shapes.push_back(partition_to_json(shape));
    }
    json values = json::array();
    for (size_t s = 0; s < table.shapes().size(); ++s) {
        json row = json::array();
        for (size_t c = 0; c < table.classes().size(); ++c) {
            row.push_back(table.value_at(s, c).str());
        }
        values.push_back(std::move(row));
    }
    return json{{"n", table.n()}, {"shapes", shapes}, {"classes", shapes}, {"values", values}};
}

std::string table_to_csv(const CharacterTable& table) {
    std::ostringstream out;
    out << "shape";
    for (const Partition& cls : table.classes()) {
        out << ',' << partition_cell(cls);
    }
    out << '\n';
    for (size_t s = 0; s < table.shapes().size(); ++s) {
        out << partition_cell(table.shapes()[s]);
        for (size_t c = 0; c < table.classes().size(); ++c) {
            out << ',' << table.value_at(s, c).str();
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json decomposition_to_json(const DecompositionTable& table) {
    json entries = json::array();
    for (const DecompositionEntry& entry : table.entries) {
        entries.push_back(json{{"shape", partition_to_json(entry.shape)},
                               {"multiplicity", entry.multiplicity.str()},
                               {"method", method_name(entry.method)}});
    }
    json doc{{"n", table.n},
             {"r", table.r},
             {"rep", rep_kind_name(table.rep_kind)},
             {"method", method_choice_name(table.method)},
             {"entries", entries}};
    if (!table.out_of_range.empty()) {
        json omitted = json::array();
        for (const Partition& shape : table.out_of_range) {
            omitted.push_back(partition_to_json(shape));
        }
        doc["out_of_range"] = omitted;
        doc["warning"] = "closed form not asserted for " + std::to_string(table.out_of_range.size()) +
                         " shape(s) at r = " + std::to_string(table.r) + "; entries omitted";
    }
    return doc;
}

std::string decomposition_to_csv(const DecompositionTable& table) {
    std::ostringstream out;
    out << "shape,multiplicity,method\n";
    for (const DecompositionEntry& entry : table.entries) {
        out << partition_cell(entry.shape) << ',' << entry.multiplicity.str() << ','
            << method_name(entry.method) << '\n';
    }
    return out.str();
}

nlohmann::json measure_to_json(const ClassMeasure& measure) {
    json classes = json::array();
    for (const auto& [type, weight] : measure.weights()) {
        classes.push_back(json{{"type", partition_to_json(type)}, {"weight", to_fraction(weight)}});
    }
    return json{{"classes", classes}};
}

nlohmann::json chain_to_json(const ChainSpec& chain) {
    json steps = json::array();
    for (const ClassMeasure& step : chain.steps) {
        steps.push_back(measure_to_json(step));
    }
    return json{{"n", chain.n}, {"steps", steps}};
}

nlohmann::json summary_to_json(const SimulationSummary& summary) {
    return json{{"trials", summary.trials},
                {"seed", summary.seed},
                {"mean_fixed_points", summary.mean_fixed_points},
                {"std_error", summary.std_error},
                {"per_step_means", summary.per_step_means}};
}

nlohmann::json report_to_json(const VerificationReport& report) {
    json cases = json::array();
    for (const VerificationCase& c : report.cases) {
        cases.push_back(json{{"inputs", c.inputs},
                             {"expected", c.expected},
                             {"actual", c.actual},
                             {"status", c.pass ? "pass" : "fail"}});
    }
    json doc{{"suite", report.suite},
             {"passed", report.passed},
             {"elapsed_seconds", report.elapsed_seconds},
             {"cases", cases}};
    if (report.seeded) {
        doc["seed"] = report.seed;
    }
    return doc;
}

namespace {

const json& require_field(const json& node, const char* key, const std::string& path) {
    const auto it = node.find(key);
    if (it == node.end()) {
        throw ParseError("chain document: missing field " + path + "." + key);
    }
    return *it;
}

int parse_positive_int(const json& node, const std::string& path) {
    if (!node.is_number_integer() || node.get<long long>() < 1) {
        throw ParseError("chain document: " + path + " must be a positive integer");
    }
    return node.get<int>();
}

CycleType parse_cycle_type(const json& node, const std::string& path) {
    if (!node.is_array() || node.empty()) {
        throw ParseError("chain document: " + path + " must be a nonempty array of positive integers");
    }
    std::vector<int> parts;
    for (size_t i = 0; i < node.size(); ++i) {
        const json& element = node[i];
        if (!element.is_number_integer() || element.get<long long>() < 1) {
            throw ParseError("chain document: " + path + "[" + std::to_string(i) +
                             "] must be a positive integer");
        }
        parts.push_back(element.get<int>());
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return CycleType(std::move(parts));
}

BigRat parse_weight(const json& node, const std::string& path) {
    if (!node.is_string()) {
        throw ParseError("chain document: " + path + " must be an exact rational string like \"1/3\"");
    }
    try {
        return parse_rational(node.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError("chain document: " + path + ": " + e.what());
    }
}

ClassMeasure parse_measure(const json& node, int n, const std::string& path) {
    if (!node.is_object()) {
        throw ParseError("chain document: " + path + " must be an object");
    }
    const json& classes = require_field(node, "classes", path);
    if (!classes.is_array() || classes.empty()) {
        throw ParseError("chain document: " + path + ".classes must be a nonempty array");
    }
    ClassMeasure::WeightMap weights;
    for (size_t i = 0; i < classes.size(); ++i) {
        const std::string class_path = path + ".classes[" + std::to_string(i) + "]";
        const json& entry = classes[i];
        if (!entry.is_object()) {
            throw ParseError("chain document: " + class_path + " must be an object");
        }
        CycleType type = parse_cycle_type(require_field(entry, "type", class_path), class_path + ".type");
        BigRat weight = parse_weight(require_field(entry, "weight", class_path), class_path + ".weight");
        auto [it, inserted] = weights.emplace(std::move(type), std::move(weight));
        if (!inserted) {
            throw SemanticError("chain document: " + class_path + " repeats class " +
                                it->first.to_string());
        }
    }
    try {
        return ClassMeasure(n, std::move(weights));
    } catch (const SemanticError& e) {
        throw SemanticError("chain document: " + path + ": " + e.what());
    }
}

} // namespace

ChainSpec chain_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw ParseError("chain document: top level must be an object");
    }
    const int n = parse_positive_int(require_field(doc, "n", "$"), "$.n");
    const json& steps_node = require_field(doc, "steps", "$");
    if (!steps_node.is_array() || steps_node.empty()) {
        throw ParseError("chain document: $.steps must be a nonempty array");
    }
    std::vector<ClassMeasure> steps;
    for (size_t i = 0; i < steps_node.size(); ++i) {
        steps.push_back(parse_measure(steps_node[i], n, "$.steps[" + std::to_string(i) + "]"));
    }
    return ChainSpec(n, std::move(steps));
}

ChainSpec load_chain_file(const std::string& path) {
    std::ifstream input(path);
    if (!input) {
        throw ParseError("cannot open chain file: " + path);
    }
    json doc;
    try {
        doc = json::parse(input);
    } catch (const json::parse_error& e) {
        throw ParseError("chain file " + path + ": " + e.what());
    }
    return chain_from_json(doc);
}

} // namespace snrep
