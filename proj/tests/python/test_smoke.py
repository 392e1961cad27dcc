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

import math

import pytest

import orp

TRIANGLE = "p orp 3 3\ne 1 3 1\ne 1 2 1\ne 2 3 1\n"
FOUR_EDGE = "p orp 3 4\ne 1 3 4\ne 1 2 1\ne 2 3 1\ne 2 3 3\n"


def test_parse_and_write_round_trip():
    g = orp.parse_graph(TRIANGLE)
    assert g.num_vertices == 3
    assert g.num_edges == 3
    assert g.edges()[0] == (0, 2, 1.0)
    assert orp.write_graph(g) == TRIANGLE
    assert orp.parse_graph(orp.write_graph(g)) == g


def test_solve_triangle():
    g = orp.parse_graph(TRIANGLE)
    table = orp.build_detour_table(g, 2)
    sol = orp.solve_orp(g, table)
    assert sol.y == [2.0, 2.0, 0.0]
    assert orp.nominal_path(sol, 0) == [0]
    assert table.svalue(0) == 2.0
    assert table.swap_edge(0) == 1
    assert orp.robust_length(g, table, 0, [1, 2]) == 3.0


def test_bridges_give_infinity():
    g = orp.Graph(3, [(0, 1, 1), (1, 2, 1)])
    sol = orp.solve_orp(g, orp.build_detour_table(g, 2))
    assert math.isinf(sol.y[0])
    with pytest.raises(orp.DomainError):
        orp.nominal_path(sol, 0)


def test_table_text_round_trip():
    g = orp.gen_random(40, 120, max_weight=1000, seed=3)
    table = orp.build_detour_table(g, 0)
    sol = orp.solve_orp(g, table)
    text = table.to_text(sol.successor_edge)
    assert text.count("\n") == g.num_vertices + 1
    loaded, successors = orp.read_detour_table(g, text)
    assert successors == sol.successor_edge
    assert [loaded.svalue(v) for v in range(40)] == [
        table.svalue(v) for v in range(40)
    ]
    assert orp.reconstruct_solution(g, loaded, successors).y == sol.y


def test_korp_and_oracle_agree():
    g = orp.parse_graph(FOUR_EDGE)
    for k in range(3):
        y = orp.solve_korp(g, 2, k)["y"]
        for s in range(3):
            assert y[s] == orp.oracle.brute_korp_value(g, s, 2, k)
    with pytest.raises(orp.LimitExceeded):
        orp.solve_korp(g, 2, 4)


def test_pareto():
    g = orp.parse_graph(FOUR_EDGE)
    table = orp.build_detour_table(g, 2)
    result = orp.solve_pareto(g, table, 0, 4)
    assert result["feasible"]
    assert result["path"] == [1, 2]
    assert result["length"] == 2.0
    tight = orp.solve_pareto(g, table, 0, 3)
    assert not tight["feasible"]
    assert tight["status"] == "bound_too_tight"
    assert orp.solve_pareto(g, table, 0, math.inf)["length"] == 2.0


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("scale", [1, 4, 1000])
def test_greedy_is_tight_on_bad_example(k, scale):
    g, s, t = orp.gen_bad_example(k, scale)
    greedy = orp.evaluate_worst_case(g, s, t, "greedy", k)
    assert greedy["cost"] == (2 ** (k + 1) - 1) * scale + 1
    optimal = orp.evaluate_worst_case(g, s, t, "optimal", k)
    assert optimal["cost"] == scale + 1


def test_execute_walk_accounting():
    g = orp.parse_graph(TRIANGLE)
    walk = orp.execute_walk(g, 0, 2, "optimal", 1, failed=[0])
    assert walk["total_cost"] == 2.0
    assert walk["steps"][0]["failed"]
    assert walk["probed_failures"] == [0]


def test_svalues_match_oracle():
    g = orp.gen_random(12, 30, max_weight=5, seed=9)
    table = orp.build_detour_table(g, 4)
    for e, (u, v, _) in enumerate(g.edges()):
        for x in (u, v):
            assert table.query(g, x, e) == orp.oracle.brute_svalue(g, 4, x, e)


def test_errors_map_to_python_exceptions():
    with pytest.raises(orp.ParseError):
        orp.parse_graph("p orp 2 1\ne 1 2 -1\n")
    with pytest.raises(ValueError):
        orp.Graph(2, [(0, 0, 1)])
    with pytest.raises(orp.InputError):
        orp.execute_walk(orp.parse_graph(TRIANGLE), 0, 2, "clever", 1)
