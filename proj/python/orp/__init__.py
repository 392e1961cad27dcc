# Copyright 2026 The ORP Authors
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

"""Online replacement paths: routing under edge failures found on arrival."""

from orp._orp import (
    DetourTable,
    DomainError,
    Graph,
    InputError,
    LimitExceeded,
    OrpSolution,
    ParseError,
    build_detour_table,
    evaluate_worst_case,
    execute_walk,
    gen_bad_example,
    gen_random,
    nominal_path,
    oracle,
    parse_graph,
    read_detour_table,
    reconstruct_solution,
    robust_length,
    solve_korp,
    solve_orp,
    solve_pareto,
    write_graph,
)

__all__ = [
    "DetourTable",
    "DomainError",
    "Graph",
    "InputError",
    "LimitExceeded",
    "OrpSolution",
    "ParseError",
    "build_detour_table",
    "evaluate_worst_case",
    "execute_walk",
    "gen_bad_example",
    "gen_random",
    "nominal_path",
    "oracle",
    "parse_graph",
    "read_detour_table",
    "reconstruct_solution",
    "robust_length",
    "solve_korp",
    "solve_orp",
    "solve_pareto",
    "write_graph",
]
