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

#include "qmax/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "qmax/errors.hpp"

namespace qmax {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line, const char *what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(std::string("invalid ") + what + " '" + std::string(token) + "'", line);
    }
    return v;
}

}  // namespace

KnapsackInstance parse_instance(std::istream &in) {
    KnapsackInstance inst;
    std::optional<std::size_t> capacity_line;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::vector<std::string_view> tok = split_ws(raw);
        if (tok.empty() || tok[0].front() == '#') {
            continue;
        }
        if (tok[0] == "capacity") {
            if (capacity_line) {
                throw ParseError(
                    "duplicate capacity (first given on line " + std::to_string(*capacity_line) + ")", line);
            }
            if (tok.size() != 2) {
                throw ParseError("expected 'capacity <uint>'", line);
            }
            inst.capacity = parse_uint(tok[1], line, "capacity");
            capacity_line = line;
        } else if (tok[0] == "item") {
            if (tok.size() != 3) {
                throw ParseError("expected 'item <weight> <value>'", line);
            }
            if (inst.items.size() == KnapsackInstance::kMaxItems) {
                throw ParseError(
                    "too many items (at most " + std::to_string(KnapsackInstance::kMaxItems) + ")", line);
            }
            inst.items.push_back({parse_uint(tok[1], line, "weight"), parse_uint(tok[2], line, "value")});
        } else {
            throw ParseError("unknown directive '" + std::string(tok[0]) + "'", line);
        }
    }
    if (!capacity_line) {
        throw ParseError("missing capacity", 0);
    }
    if (inst.items.empty()) {
        throw ParseError("no items", 0);
    }
    try {
        inst.validate();
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what(), 0);
    }
    return inst;
}

KnapsackInstance parse_instance_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'", 0);
    }
    return parse_instance(in);
}

namespace {

/// Runs a command body, mapping library errors onto the exit code contract.
template <class Fn>
int guarded(std::ostream &err, Fn &&body) {
    try {
        return body();
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const IntegrityError &e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

std::string spaced(std::uint64_t candidate, std::size_t n) {
    const std::string bits = format_candidate(candidate, n);
    std::string out;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i) {
            out += ' ';
        }
        out += bits[i];
    }
    return out;
}

std::string fixed6(double x) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << x;
    return s.str();
}

void write_trace_human(std::ostream &out, const KnapsackInstance &instance, const SearchTrace &trace,
                       unsigned qubits, double seconds) {
    const std::size_t n = instance.size();
    out << "instance: " << n << " items, capacity " << instance.capacity << ", " << qubits << " qubits\n";
    out << "initial threshold: " << trace.initial_threshold << "\n";
    out << std::setw(5) << "round" << std::setw(9) << "m" << std::setw(5) << "j" << std::setw(8) << "grover"
        << "  " << std::left << std::setw(std::max<std::size_t>(n, 9)) << "candidate" << std::right << std::setw(8)
        << "fitness" << std::setw(7) << "valid" << std::setw(9) << "accepted" << std::setw(10) << "threshold"
        << "\n";
    for (const TraceStep &s : trace.steps) {
        out << std::setw(5) << s.round << std::setw(9) << std::fixed << std::setprecision(3) << s.m
            << std::setw(5) << s.j << std::setw(8) << s.grover_iterations_cumulative << "  " << std::left
            << std::setw(std::max<std::size_t>(n, 9)) << format_candidate(s.measured_candidate, n) << std::right
            << std::setw(8) << s.measured_fitness << std::setw(7) << (s.valid ? "yes" : "no") << std::setw(9)
            << (s.accepted ? "yes" : "no") << std::setw(10) << s.threshold_after << "\n";
    }
    out << "final: candidate "
        << (trace.final_candidate ? format_candidate(*trace.final_candidate, n) : std::string("(none)"))
        << ", fitness " << trace.final_fitness << ", grover iterations " << trace.total_grover_iterations
        << ", rounds " << trace.rounds << ", stop "
        << (trace.stop == StopReason::Exhausted ? "exhausted" : "max-rounds") << "\n";
    out << "wall time: " << std::fixed << std::setprecision(3) << seconds << " s\n";
}

}  // namespace

void write_trace_machine(std::ostream &out, const KnapsackInstance &instance, const RunConfig &config,
                         const SearchTrace &trace) {
    const std::size_t n = instance.size();
    out << "instance n=" << n << " capacity=" << instance.capacity << " seed=" << config.maximize.seed << "\n";
    out << "init threshold=" << trace.initial_threshold << "\n";
    for (const TraceStep &s : trace.steps) {
        out << "step round=" << s.round << " m=" << fixed6(s.m) << " j=" << s.j
            << " grover=" << s.grover_iterations_cumulative << " candidate=" << format_candidate(s.measured_candidate, n)
            << " fitness=" << s.measured_fitness << " valid=" << s.valid << " accepted=" << s.accepted
            << " threshold=" << s.threshold_after << "\n";
    }
    out << "final candidate=" << (trace.final_candidate ? format_candidate(*trace.final_candidate, n) : "-")
        << " fitness=" << trace.final_fitness << " grover_iterations=" << trace.total_grover_iterations
        << " rounds=" << trace.rounds << " stop=" << (trace.stop == StopReason::Exhausted ? "exhausted" : "max-rounds")
        << "\n";
}

int cmd_solve(const std::string &path, const RunConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const KnapsackInstance instance = parse_instance_file(path);
        const RegisterPlan plan = plan_registers(instance, config.maximize.qubit_cap);
        const auto start = std::chrono::steady_clock::now();
        const SearchTrace trace = maximize(instance, config.maximize);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (config.format == OutputFormat::Machine) {
            write_trace_machine(out, instance, config, trace);
        } else {
            write_trace_human(out, instance, trace, plan.total_qubits, elapsed.count());
        }
        return static_cast<int>(kExitOk);
    });
}

int cmd_verify(const std::string &path, unsigned qubit_cap, std::uint64_t seed, std::ostream &out,
               std::ostream &err) {
    return guarded(err, [&]() -> int {
        const KnapsackInstance instance = parse_instance_file(path);
        const RegisterPlan plan = plan_registers(instance, qubit_cap);
        const std::size_t n = instance.size();
        const std::uint64_t count = instance.candidate_count();

        const std::vector<CandidateEvaluation> rows = enumerate_table(instance, qubit_cap);
        for (const CandidateEvaluation &row : rows) {
            const CandidateEvaluation ref = classical_evaluate(instance, row.candidate);
            if (row != ref) {
                err << "MISMATCH candidate " << format_candidate(row.candidate, n) << ": circuit weight=" << row.weight
                    << " fitness=" << row.fitness << " valid=" << row.valid << ", classical weight=" << ref.weight
                    << " fitness=" << ref.fitness << " valid=" << ref.valid << "\n";
                return kExitMismatch;
            }
        }

        RandomStream rng(seed, StreamId::Threshold);
        const GateSequence preparation = build_search_preparation(plan.q, plan.r);
        StateVector state(plan.total_qubits, qubit_cap);
        const double scale = std::sqrt(static_cast<double>(count));
        for (int t = 0; t < 5; ++t) {
            const auto threshold = static_cast<std::int64_t>(rng.uniform_index(instance.total_value() + 1));
            const OracleCircuit oracle = compile_oracle(instance, plan, threshold);
            state.reset();
            state.apply(preparation);
            state.apply(oracle.full());
            const double leaked = state.probability_outside(oracle.work_mask);
            if (leaked > 1e-12) {
                err << "MISMATCH threshold " << threshold << ": " << leaked << " probability left on work qubits\n";
                return kExitMismatch;
            }
            const std::vector<Amplitude> amps = candidate_amplitudes(state, oracle);
            for (std::uint64_t c = 0; c < count; ++c) {
                const CandidateEvaluation ev = classical_evaluate(instance, c);
                const double expected = (ev.valid && ev.fitness > threshold) ? -1.0 : 1.0;
                if (std::abs(amps[c] * scale - expected) > 1e-10) {
                    err << "MISMATCH candidate " << format_candidate(c, n) << " at threshold " << threshold
                        << ": phase " << (amps[c] * scale).real() << ", expected " << expected << "\n";
                    return kExitMismatch;
                }
            }
        }
        out << "OK (" << count << " candidates checked)\n";
        return kExitOk;
    });
}

int cmd_table(const std::string &path, unsigned qubit_cap, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const KnapsackInstance instance = parse_instance_file(path);
        const std::vector<CandidateEvaluation> rows = enumerate_table(instance, qubit_cap);
        const std::uint64_t best = classical_max(instance).candidate;
        const std::size_t n = instance.size();
        const int cw = static_cast<int>(std::max<std::size_t>(9, 2 * n - 1));
        out << std::left << std::setw(cw) << "Candidate" << std::right << " | Fitness |  Weight | Validity\n";
        for (const CandidateEvaluation &row : rows) {
            out << std::left << std::setw(cw) << spaced(row.candidate, n) << std::right << " | " << std::setw(7)
                << row.fitness << " | " << std::setw(7) << row.weight << " | " << (row.valid ? "valid" : "invalid")
                << (row.candidate == best ? " *" : "") << "\n";
        }
        return static_cast<int>(kExitOk);
    });
}

int cmd_estimate(const std::string &path, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const KnapsackInstance instance = parse_instance_file(path);
        const ResourceEstimate est = estimate_resources(instance);
        out << "qubits: " << est.qubits << "\n";
        out << "gates per oracle+diffusion: " << est.total_gates << "\n";
        for (const auto &[kind, count] : est.gate_counts) {
            out << "  " << gate_kind_name(kind) << ": " << count << "\n";
        }
        out << "toffoli-equivalent: " << est.toffoli_equivalent << "\n";
        out << "grover iterations (M=1): " << est.grover_iterations_expected << "\n";
        return static_cast<int>(kExitOk);
    });
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Function maximization by dynamic quantum search on 0/1 knapsack instances", "qmax"};
    app.require_subcommand(1);

    std::string path;
    RunConfig run;
    std::uint64_t seed = 1;
    unsigned qubit_cap = StateVector::kDefaultQubitCap;
    std::int64_t initial_threshold = 0;
    std::string format = "human";

    auto add_cap = [&](CLI::App *sub) {
        sub->add_option("--qubit-cap", qubit_cap, "Largest simulated state, in qubits")
            ->check(CLI::Range(1u, StateVector::kMaxQubits));
    };

    CLI::App *solve = app.add_subcommand("solve", "Maximize with threshold-raising quantum search");
    solve->add_option("instance", path, "Instance file")->required();
    solve->add_option("--seed", seed, "Random seed");
    solve->add_option("--max-rounds", run.maximize.max_rounds, "Upper bound on threshold rounds");
    CLI::Option *threshold_opt =
        solve->add_option("--initial-threshold", initial_threshold, "Start from this fitness threshold");
    solve->add_option("--confirmations", run.maximize.confirmations,
                      "Exhausted searches at one threshold before stopping")
        ->check(CLI::PositiveNumber);
    solve->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine"}));
    add_cap(solve);

    CLI::App *verify = app.add_subcommand("verify", "Check the circuit against the classical evaluation");
    verify->add_option("instance", path, "Instance file")->required();
    verify->add_option("--seed", seed, "Seed for the sampled thresholds");
    add_cap(verify);

    CLI::App *table = app.add_subcommand("table", "Print every candidate as computed by the circuit");
    table->add_option("instance", path, "Instance file")->required();
    add_cap(table);

    CLI::App *estimate = app.add_subcommand("estimate", "Count qubits and gates for one Grover iteration");
    estimate->add_option("instance", path, "Instance file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    if (solve->parsed()) {
        run.maximize.seed = seed;
        run.maximize.qubit_cap = qubit_cap;
        if (threshold_opt->count() > 0) {
            run.maximize.initial_threshold = initial_threshold;
        }
        run.format = format == "machine" ? OutputFormat::Machine : OutputFormat::Human;
        return cmd_solve(path, run, out, err);
    }
    if (verify->parsed()) {
        return cmd_verify(path, qubit_cap, seed, out, err);
    }
    if (table->parsed()) {
        return cmd_table(path, qubit_cap, out, err);
    }
    return cmd_estimate(path, out, err);
}

}  // namespace qmax
