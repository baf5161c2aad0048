# Copyright 2026 The qmax Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Gate-level Grover search and dynamic-oracle knapsack maximization."""

from ._qmax import (
    CandidateEvaluation,
    CapacityError,
    IntegrityError,
    Item,
    KnapsackInstance,
    ParseError,
    SearchTrace,
    TraceStep,
    classical_evaluate,
    classical_max,
    enumerate_table,
    estimate_resources,
    format_candidate,
    iteration_count,
    maximize,
    oracle_amplitudes,
    parse_candidate,
    parse_instance,
    parse_instance_file,
    plan_registers,
    run_cli,
)

__all__ = [
    "CandidateEvaluation",
    "CapacityError",
    "IntegrityError",
    "Item",
    "KnapsackInstance",
    "ParseError",
    "SearchTrace",
    "TraceStep",
    "classical_evaluate",
    "classical_max",
    "enumerate_table",
    "estimate_resources",
    "format_candidate",
    "iteration_count",
    "maximize",
    "oracle_amplitudes",
    "parse_candidate",
    "parse_instance",
    "parse_instance_file",
    "plan_registers",
    "run_cli",
]

__version__ = "0.1.0"
