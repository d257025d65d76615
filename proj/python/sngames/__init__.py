# Copyright 2026 The sngames Authors
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

"""Social network games with an opt-out strategy.

Networks are loaded from or written to the JSON network format, profiles are
dicts mapping node id to product id or None, and every payoff is an exact
fractions.Fraction.
"""

from ._core import (
    GuardExceeded,
    Network,
    SngError,
    construct_ne_dag,
    decide_ne_cycle,
    efficiency,
    enumerate_ne,
    find_nontrivial_ne_sourcefree,
    gen_equitable,
    gen_fig1,
    gen_fig3,
    gen_partition_reduction,
    gen_pos_witness,
    gen_random,
    has_fip,
    improvement_graph,
    is_nash,
    is_weakly_acyclic,
    payoff,
    run_cli,
    run_dynamics,
    social_welfare,
    solve_brute_force,
    sustainable_set,
)

__all__ = [
    "GuardExceeded",
    "Network",
    "SngError",
    "construct_ne_dag",
    "decide_ne_cycle",
    "efficiency",
    "enumerate_ne",
    "find_nontrivial_ne_sourcefree",
    "gen_equitable",
    "gen_fig1",
    "gen_fig3",
    "gen_partition_reduction",
    "gen_pos_witness",
    "gen_random",
    "has_fip",
    "improvement_graph",
    "is_nash",
    "is_weakly_acyclic",
    "payoff",
    "run_cli",
    "run_dynamics",
    "social_welfare",
    "solve_brute_force",
    "sustainable_set",
]
__version__ = "0.1.0"
