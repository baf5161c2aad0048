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

#ifndef QMAX_CLI_HPP
#define QMAX_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qmax/knapsack.hpp"

namespace qmax {

/// Process exit codes of the command line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitParse = 1,     ///< unreadable file, malformed instance or bad arguments
    kExitCapacity = 2,  ///< instance needs more qubits than the cap allows
    kExitMismatch = 3,  ///< circuit and classical evaluation disagree
};

/// Instance file grammar, one directive per line:
///   capacity <uint>          exactly once
///   item <weight> <value>    one or more, in item order
/// Lines whose first non-blank character is '#' are comments; blank lines are ignored.
/// Throws ParseError carrying the 1-based line number.
KnapsackInstance parse_instance(std::istream &in);
KnapsackInstance parse_instance_file(const std::string &path);

enum class OutputFormat { Human, Machine };

struct RunConfig {
    MaximizeConfig maximize;
    OutputFormat format = OutputFormat::Human;
};

void write_trace_machine(std::ostream &out, const KnapsackInstance &instance, const RunConfig &config,
                         const SearchTrace &trace);

int cmd_solve(const std::string &path, const RunConfig &config, std::ostream &out, std::ostream &err);

/// Circuit-vs-classical agreement: every table row, plus the kickback phase of every
/// candidate at five thresholds drawn from `seed`.
int cmd_verify(const std::string &path, unsigned qubit_cap, std::uint64_t seed, std::ostream &out,
               std::ostream &err);

int cmd_table(const std::string &path, unsigned qubit_cap, std::ostream &out, std::ostream &err);

int cmd_estimate(const std::string &path, std::ostream &out, std::ostream &err);

/// Full command line dispatch. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qmax

#endif
