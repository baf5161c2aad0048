// Copyright 2026 The qmax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qmax/cli.hpp"
#include "qmax/errors.hpp"
#include "qmax/grover.hpp"
#include "qmax/knapsack.hpp"

namespace py = pybind11;
using namespace qmax;

namespace {

KnapsackInstance make_instance(const std::vector<std::pair<std::uint64_t, std::uint64_t>> &items,
                               std::uint64_t capacity) {
    KnapsackInstance inst;
    inst.capacity = capacity;
    for (const auto &[w, v] : items) {
        inst.items.push_back({w, v});
    }
    inst.validate();
    return inst;
}

py::dict plan_dict(const RegisterPlan &plan) {
    auto reg = [](const RegisterRef &r) { return py::make_tuple(r.offset, r.width); };
    py::dict d;
    d["q"] = reg(plan.q);
    d["w"] = reg(plan.w);
    d["g"] = reg(plan.g);
    d["f"] = reg(plan.f);
    d["v"] = plan.v;
    d["r"] = plan.r;
    d["total_qubits"] = plan.total_qubits;
    return d;
}

/// Candidate amplitudes after one oracle call at `threshold` on the uniform
/// superposition, optionally followed by one diffusion.
std::vector<Amplitude> oracle_amplitudes(const KnapsackInstance &inst, std::int64_t threshold, bool diffuse,
                                         unsigned qubit_cap) {
    const RegisterPlan plan = plan_registers(inst, qubit_cap);
    const OracleCircuit oracle = compile_oracle(inst, plan, threshold);
    StateVector state(plan.total_qubits, qubit_cap);
    state.apply(build_search_preparation(oracle.q_register, oracle.kickback));
    if (diffuse) {
        grover_iteration(state, oracle, build_diffusion(plan.q));
    } else {
        state.apply(oracle.full());
    }
    return candidate_amplitudes(state, oracle);
}

}  // namespace

PYBIND11_MODULE(_qmax, m) {
    m.doc() = "Gate-level Grover search and knapsack maximization";

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<IntegrityError>(m, "IntegrityError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Item>(m, "Item")
        .def(py::init<>())
        .def(py::init([](std::uint64_t w, std::uint64_t v) { return Item{w, v}; }), py::arg("weight"),
             py::arg("value"))
        .def_readwrite("weight", &Item::weight)
        .def_readwrite("value", &Item::value)
        .def("__eq__", [](const Item &a, const Item &b) { return a == b; })
        .def("__repr__", [](const Item &it) {
            return "Item(weight=" + std::to_string(it.weight) + ", value=" + std::to_string(it.value) + ")";
        });

    py::class_<KnapsackInstance>(m, "KnapsackInstance")
        .def(py::init(&make_instance), py::arg("items"), py::arg("capacity"))
        .def_readonly("items", &KnapsackInstance::items)
        .def_readonly("capacity", &KnapsackInstance::capacity)
        .def("__len__", &KnapsackInstance::size)
        .def_property_readonly("candidate_count", &KnapsackInstance::candidate_count)
        .def_property_readonly("total_weight", &KnapsackInstance::total_weight)
        .def_property_readonly("total_value", &KnapsackInstance::total_value)
        .def("__eq__", [](const KnapsackInstance &a, const KnapsackInstance &b) { return a == b; });

    py::class_<CandidateEvaluation>(m, "CandidateEvaluation")
        .def_readonly("candidate", &CandidateEvaluation::candidate)
        .def_readonly("weight", &CandidateEvaluation::weight)
        .def_readonly("fitness", &CandidateEvaluation::fitness)
        .def_readonly("valid", &CandidateEvaluation::valid)
        .def("__eq__", [](const CandidateEvaluation &a, const CandidateEvaluation &b) { return a == b; })
        .def("__repr__", [](const CandidateEvaluation &e) {
            std::ostringstream s;
            s << "CandidateEvaluation(candidate=" << e.candidate << ", weight=" << e.weight
              << ", fitness=" << e.fitness << ", valid=" << (e.valid ? "True" : "False") << ")";
            return s.str();
        });

    py::class_<TraceStep>(m, "TraceStep")
        .def_readonly("round", &TraceStep::round)
        .def_readonly("m", &TraceStep::m)
        .def_readonly("j", &TraceStep::j)
        .def_readonly("grover_iterations_cumulative", &TraceStep::grover_iterations_cumulative)
        .def_readonly("measured_candidate", &TraceStep::measured_candidate)
        .def_readonly("measured_fitness", &TraceStep::measured_fitness)
        .def_readonly("valid", &TraceStep::valid)
        .def_readonly("accepted", &TraceStep::accepted)
        .def_readonly("threshold_after", &TraceStep::threshold_after);

    py::class_<SearchTrace>(m, "SearchTrace")
        .def_readonly("n_items", &SearchTrace::n_items)
        .def_readonly("initial_threshold", &SearchTrace::initial_threshold)
        .def_readonly("steps", &SearchTrace::steps)
        .def_readonly("final_candidate", &SearchTrace::final_candidate)
        .def_readonly("final_fitness", &SearchTrace::final_fitness)
        .def_readonly("total_grover_iterations", &SearchTrace::total_grover_iterations)
        .def_readonly("rounds", &SearchTrace::rounds)
        .def_property_readonly("stop", [](const SearchTrace &t) {
            return t.stop == StopReason::Exhausted ? "exhausted" : "max-rounds";
        });

    m.def("parse_instance_file", &parse_instance_file, py::arg("path"));
    m.def("parse_instance", [](const std::string &text) {
        std::istringstream in(text);
        return parse_instance(in);
    }, py::arg("text"));

    m.def("format_candidate", &format_candidate, py::arg("candidate"), py::arg("n_items"));
    m.def("parse_candidate", [](const std::string &bits) { return parse_candidate(bits); }, py::arg("bits"));

    m.def("classical_evaluate", &classical_evaluate, py::arg("instance"), py::arg("candidate"));
    m.def("classical_max", &classical_max, py::arg("instance"));
    m.def("enumerate_table", &enumerate_table, py::arg("instance"),
          py::arg("qubit_cap") = StateVector::kDefaultQubitCap);
    m.def("plan_registers", [](const KnapsackInstance &inst, unsigned cap) { return plan_dict(plan_registers(inst, cap)); },
          py::arg("instance"), py::arg("qubit_cap") = StateVector::kDefaultQubitCap);

    m.def("oracle_amplitudes", &oracle_amplitudes, py::arg("instance"), py::arg("threshold"),
          py::arg("diffuse") = false, py::arg("qubit_cap") = StateVector::kDefaultQubitCap);

    m.def("maximize",
          [](const KnapsackInstance &inst, std::uint64_t seed, std::size_t max_rounds,
             std::optional<std::int64_t> initial_threshold, unsigned confirmations, unsigned qubit_cap,
             std::size_t max_steps) {
              MaximizeConfig cfg;
              cfg.seed = seed;
              cfg.max_rounds = max_rounds;
              cfg.initial_threshold = initial_threshold;
              cfg.confirmations = confirmations;
              cfg.qubit_cap = qubit_cap;
              cfg.max_steps = max_steps;
              py::gil_scoped_release release;
              return maximize(inst, cfg);
          },
          py::arg("instance"), py::arg("seed") = 1, py::arg("max_rounds") = 64,
          py::arg("initial_threshold") = py::none(), py::arg("confirmations") = 1,
          py::arg("qubit_cap") = StateVector::kDefaultQubitCap, py::arg("max_steps") = 0);

    m.def("estimate_resources", [](const KnapsackInstance &inst) {
        const ResourceEstimate est = estimate_resources(inst);
        py::dict counts;
        for (const auto &[kind, n] : est.gate_counts) {
            counts[py::str(std::string(gate_kind_name(kind)))] = n;
        }
        py::dict d;
        d["qubits"] = est.qubits;
        d["gate_counts"] = counts;
        d["total_gates"] = est.total_gates;
        d["toffoli_equivalent"] = est.toffoli_equivalent;
        d["grover_iterations_expected"] = est.grover_iterations_expected;
        return d;
    }, py::arg("instance"));

    m.def("iteration_count", &iteration_count, py::arg("n_items"), py::arg("n_solutions"));

    m.def("run_cli", [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
