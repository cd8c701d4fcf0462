# Copyright 2026 The postselect Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Feasibility analysis for postselected measurement statistics.

Thin Python surface over the C++ core: feasibility checks for (T, S, P)
triples, witness construction and evaluation, diversity indices, random
oracle campaigns and region grids.
"""

from ._core import (
    ClosureFailure,
    DegeneratePostselection,
    InfeasibleScenario,
    InvalidWitness,
    NormViolation,
    PolygonViolation,
    PostselectError,
    RegionViolation,
    SearchBudgetExhausted,
    SingularSystem,
    check_dichotomic,
    check_generalized,
    check_projective_chain,
    check_projective_raw,
    check_ternary_disk,
    check_ts_region,
    close_polygon,
    cone_decompose,
    construct_generalized,
    construct_projective,
    diversity,
    diversity_profile,
    emit_region,
    evaluate_witness,
    factor_amplitudes,
    fuzz_projective,
    oracle_max_s,
    oracle_min_s,
    witness_distribution,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
