#include "snrep/characters.hpp"
#include "snrep/errors.hpp"
#include "snrep/markov.hpp"
#include "snrep/serialize.hpp"
#include "snrep/tensor.hpp"
#include "snrep/verify.hpp"
#include "snrep/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace snrep;

namespace {

py::object to_py_int(const BigInt& value) {
    const std::string text = value.str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(text.c_str(), nullptr, 10));
}

py::object to_py_fraction(const BigRat& value) {
    static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    return fraction_type(to_fraction(value));
}

Partition to_partition(const std::vector<int>& parts) {
    return Partition(std::vector<int>(parts));
}

py::tuple partition_tuple(const Partition& p) {
    py::tuple out(p.parts().size());
    for (size_t i = 0; i < p.parts().size(); ++i) {
        out[i] = p.parts()[i];
    }
    return out;
}

RepKind parse_rep(const std::string& rep) {
    if (rep == "defining") {
        return RepKind::defining;
    }
    if (rep == "standard") {
        return RepKind::standard;
    }
    throw PreconditionError("rep must be \"defining\" or \"standard\", got \"" + rep + "\"");
}

MethodChoice parse_method(const std::string& method) {
    if (method == "closed") {
        return MethodChoice::closed;
    }
    if (method == "oracle") {
        return MethodChoice::oracle;
    }
    if (method == "auto") {
        return MethodChoice::auto_select;
    }
    throw PreconditionError("method must be \"closed\", \"oracle\", or \"auto\", got \"" + method +
                            "\"");
}

// Measures cross the boundary as {cycle_type: weight} dicts; weights may be
// ints, strings, or fractions.Fraction values, anything whose str() is an
// exact "p" or "p/q".
ClassMeasure to_measure(int n, const py::dict& weights) {
    ClassMeasure::WeightMap map;
    for (const auto& item : weights) {
        const auto parts = item.first.cast<std::vector<int>>();
        const std::string text = py::str(item.second);
        map.emplace(to_partition(parts), parse_rational(text));
    }
    return ClassMeasure(n, std::move(map));
}

ChainSpec to_chain(int n, const py::list& steps) {
    std::vector<ClassMeasure> measures;
    measures.reserve(steps.size());
    for (const auto& step : steps) {
        measures.push_back(to_measure(n, step.cast<py::dict>()));
    }
    return ChainSpec(n, std::move(measures));
}

py::dict measure_dict(const ClassMeasure& measure) {
    py::dict out;
    for (const auto& [type, weight] : measure.weights()) {
        out[partition_tuple(type)] = to_py_fraction(weight);
    }
    return out;
}

py::dict summary_dict(const SimulationSummary& summary) {
    py::dict out;
    out["trials"] = summary.trials;
    out["seed"] = summary.seed;
    out["mean_fixed_points"] = summary.mean_fixed_points;
    out["std_error"] = summary.std_error;
    out["per_step_means"] = summary.per_step_means;
    return out;
}

py::dict report_dict(const VerificationReport& report) {
    py::dict out;
    out["suite"] = report.suite;
    out["passed"] = report.passed;
    out["elapsed_seconds"] = report.elapsed_seconds;
    if (report.seeded) {
        out["seed"] = report.seed;
    }
    py::list cases;
    for (const VerificationCase& c : report.cases) {
        py::dict entry;
        entry["inputs"] = c.inputs;
        entry["expected"] = c.expected;
        entry["actual"] = c.actual;
        entry["status"] = c.pass ? "pass" : "fail";
        cases.append(entry);
    }
    out["cases"] = cases;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact representation-theoretic computations for symmetric groups";
    m.attr("__version__") = kVersion;

    static py::exception<Error> base_error(m, "Error");
    py::register_exception<PreconditionError>(m, "PreconditionError", base_error);
    py::register_exception<RangeError>(m, "RangeError", base_error);
    py::register_exception<ResourceGuardError>(m, "ResourceGuardError", base_error);
    py::register_exception<InvariantError>(m, "InvariantError", base_error);
    py::register_exception<ParseError>(m, "ParseError", base_error);
    py::register_exception<SemanticError>(m, "SemanticError", base_error);

    m.def(
        "enumerate_partitions",
        [](int n) {
            py::list out;
            for (const Partition& p : enumerate_partitions(n)) {
                out.append(partition_tuple(p));
            }
            return out;
        },
        py::arg("n"), "All partitions of n in canonical (reverse lexicographic) order");

    m.def(
        "conjugate",
        [](const std::vector<int>& shape) { return partition_tuple(to_partition(shape).conjugate()); },
        py::arg("shape"));

    m.def(
        "syt_count",
        [](const std::vector<int>& shape) { return to_py_int(syt_count(to_partition(shape))); },
        py::arg("shape"), "Number of standard Young tableaux (irrep dimension)");

    m.def(
        "class_size",
        [](const std::vector<int>& type) { return to_py_int(class_size(to_partition(type))); },
        py::arg("cycle_type"));

    m.def(
        "centralizer_order",
        [](const std::vector<int>& type) {
            return to_py_int(centralizer_order(to_partition(type)));
        },
        py::arg("cycle_type"));

    m.def(
        "character",
        [](const std::vector<int>& shape, const std::vector<int>& type) {
            return to_py_int(mn_character(to_partition(shape), to_partition(type)));
        },
        py::arg("shape"), py::arg("cycle_type"),
        "Irreducible character value chi^shape(cycle_type)");

    m.def(
        "character_table",
        [](int n) {
            const auto table = shared_character_table(n);
            py::dict out;
            out["n"] = table->n();
            py::list shapes;
            for (const Partition& shape : table->shapes()) {
                shapes.append(partition_tuple(shape));
            }
            out["shapes"] = shapes;
            out["classes"] = shapes;
            py::list values;
            for (size_t s = 0; s < table->shapes().size(); ++s) {
                py::list row;
                for (size_t c = 0; c < table->classes().size(); ++c) {
                    row.append(to_py_int(table->value_at(s, c)));
                }
                values.append(row);
            }
            out["values"] = values;
            return out;
        },
        py::arg("n"), "Full character table, both axes in canonical order");

    m.def(
        "max_closed_form_r",
        [](const std::vector<int>& shape) { return max_closed_form_r(to_partition(shape)); },
        py::arg("shape"), "Largest tensor power covered by the closed forms: n - shape[1]");

    m.def(
        "a_multiplicity",
        [](const std::vector<int>& shape, int r) {
            return to_py_int(a_multiplicity(to_partition(shape), r));
        },
        py::arg("shape"), py::arg("r"),
        "Closed-form multiplicity of S^shape in the r-th power of the defining rep");

    m.def(
        "b_multiplicity",
        [](const std::vector<int>& shape, int r) {
            return to_py_int(b_multiplicity(to_partition(shape), r));
        },
        py::arg("shape"), py::arg("r"),
        "Closed-form multiplicity of S^shape in the r-th power of the standard rep");

    m.def(
        "oracle_multiplicity",
        [](const std::vector<int>& shape, int r, const std::string& rep) {
            return to_py_int(oracle_multiplicity(to_partition(shape), r, parse_rep(rep)));
        },
        py::arg("shape"), py::arg("r"), py::arg("rep") = "defining",
        "Character-inner-product multiplicity; valid for any r >= 0");

    m.def(
        "decompose",
        [](int n, int r, const std::string& rep, const std::string& method) {
            const DecompositionTable table = decompose(n, r, parse_rep(rep), parse_method(method));
            py::dict out;
            out["n"] = table.n;
            out["r"] = table.r;
            out["rep"] = rep_kind_name(table.rep_kind);
            out["method"] = method_choice_name(table.method);
            py::list entries;
            for (const DecompositionEntry& entry : table.entries) {
                py::dict e;
                e["shape"] = partition_tuple(entry.shape);
                e["multiplicity"] = to_py_int(entry.multiplicity);
                e["method"] = method_name(entry.method);
                entries.append(e);
            }
            out["entries"] = entries;
            py::list omitted;
            for (const Partition& shape : table.out_of_range) {
                omitted.append(partition_tuple(shape));
            }
            out["out_of_range"] = omitted;
            out["dimension_sum"] = to_py_int(table.dimension_sum());
            return out;
        },
        py::arg("n"), py::arg("r"), py::arg("rep") = "defining", py::arg("method") = "auto",
        "Decomposition table over all shapes of n");

    m.def(
        "fourier_scalar",
        [](int n, const py::dict& measure, const std::vector<int>& shape) {
            return to_py_fraction(fourier_scalar(to_measure(n, measure), to_partition(shape)).value);
        },
        py::arg("n"), py::arg("measure"), py::arg("shape"),
        "Scalar by which the measure's Fourier transform acts on S^shape");

    m.def(
        "expected_fixed_points",
        [](int n, const py::list& steps) {
            return to_py_fraction(expected_fixed_points(to_chain(n, steps)));
        },
        py::arg("n"), py::arg("steps"),
        "Exact E[fix(X_k)] for the chain with the given step measures");

    m.def(
        "convolve",
        [](int n, const py::dict& nu, const py::dict& omega) {
            return measure_dict(convolve(to_measure(n, nu), to_measure(n, omega)));
        },
        py::arg("n"), py::arg("nu"), py::arg("omega"),
        "Exact class measure of a product of independent draws (small n only)");

    m.def(
        "sample_permutations",
        [](const std::vector<int>& type, int count, std::uint64_t seed) {
            Rng rng(seed);
            const CycleType cycle_type = to_partition(type);
            py::list out;
            for (int i = 0; i < count; ++i) {
                out.append(sample_class(cycle_type, rng).images());
            }
            return out;
        },
        py::arg("cycle_type"), py::arg("count") = 1, py::arg("seed") = 0,
        "Uniform samples from a conjugacy class, as image arrays");

    m.def(
        "simulate",
        [](int n, const py::list& steps, std::uint64_t trials, std::uint64_t seed) {
            return summary_dict(simulate(to_chain(n, steps), trials, seed));
        },
        py::arg("n"), py::arg("steps"), py::arg("trials") = 10000, py::arg("seed") = 0,
        "Seed-deterministic Monte Carlo run of the chain");

    m.def(
        "verify_prop1",
        [](int n_max, int r_cap) { return report_dict(verify_prop1(n_max, RPolicy{r_cap})); },
        py::arg("n_max") = 6, py::arg("r_cap") = 0,
        "Closed defining multiplicities against the oracle over the validity range");

    m.def(
        "verify_cor2",
        [](int n_max, int r_cap) { return report_dict(verify_cor2(n_max, RPolicy{r_cap})); },
        py::arg("n_max") = 6, py::arg("r_cap") = 0,
        "Closed standard multiplicities against the oracle over the validity range");

    m.def(
        "verify_prop3",
        [](int n, int k_max, int chains, std::uint64_t seed, std::uint64_t trials) {
            Prop3Config config;
            config.n = n;
            config.k_max = k_max;
            config.chains = chains;
            config.seed = seed;
            config.trials = trials;
            return report_dict(verify_prop3(config));
        },
        py::arg("n") = 6, py::arg("k_max") = 6, py::arg("chains") = 20, py::arg("seed") = 0,
        py::arg("trials") = 10000,
        "Random admissible chains: exact expectation 1, Monte Carlo within 4 sigma");
}
