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

import math

import numpy as np
import pytest

import postselect as ps


def test_diversity():
    assert ps.diversity([0.5, 0.25, 0.25], 0.5) == pytest.approx(2.914213562373095, rel=1e-14)
    assert ps.diversity([0.5, 0.25, 0.25], math.inf) == pytest.approx(2.0)
    prof = ps.diversity_profile([0.5, 0.5])
    assert prof["d_half"] == pytest.approx(2.0)
    assert prof["d_inf"] == pytest.approx(2.0)


def test_checks():
    v = ps.check_projective_raw(0.0, 0.35, [0.5, 0.25, 0.25])
    assert not v["feasible"]
    assert v["violated"] == ["SBound"]
    assert ps.check_projective_chain(0.0, 0.3, [0.5, 0.25, 0.25])["feasible"]
    assert ps.check_generalized(0.0, 0.9, [0.2] * 5)["feasible"]
    assert not ps.check_ts_region(0.8, 0.19, 4)["feasible"]
    assert ps.check_ternary_disk([0.6, 0.2, 0.2])
    assert not ps.check_ternary_disk([0.7, 0.15, 0.15])
    assert ps.check_dichotomic(0.5, 0.0, 0.5)["feasible"]


def test_cone_and_distribution():
    lam = ps.cone_decompose([1 / 3, 1 / 3, 1 / 3])
    assert lam == pytest.approx([0.28867513459481287] * 3)
    with pytest.raises(ps.PolygonViolation):
        ps.cone_decompose([0.7, 0.15, 0.15])
    with pytest.raises(ps.SingularSystem):
        ps.cone_decompose([0.5, 0.5])
    assert ps.witness_distribution(0.0, 0.5, 2) == pytest.approx([0.5, 0.5])
    with pytest.raises(ps.RegionViolation):
        ps.witness_distribution(0.0, 0.6, 2)


def test_polygon_and_factorization():
    zs = ps.close_polygon([3.0, 4.0, 5.0])
    assert abs(sum(zs)) < 1e-12
    assert [abs(z) for z in zs] == pytest.approx([3.0, 4.0, 5.0])
    psi, phi = ps.factor_amplitudes([0.25, 0.25, 0.25])
    assert np.conj(psi) * phi == pytest.approx([0.25, 0.25, 0.25])
    with pytest.raises(ps.NormViolation):
        ps.factor_amplitudes([0.7, 0.7])


@pytest.mark.parametrize(
    "kind,t,s,p",
    [
        ("projective", 0.0, 0.5, [0.5, 0.5]),
        ("projective", 0.3, 0.2, [0.5, 0.3, 0.2]),
        ("generalized", 0.3, 0.7, [0.2, 0.8]),
        ("generalized", 0.0, 0.9, [0.2] * 5),
    ],
)
def test_construct_round_trip(kind, t, s, p):
    build = ps.construct_projective if kind == "projective" else ps.construct_generalized
    w = build(t, s, p)
    assert w["kind"] == kind
    got_t, got_s, got_p = ps.evaluate_witness(w["psi"], w["phi"], w["operators"], kind)
    assert got_t == pytest.approx(t, abs=1e-9)
    assert got_s == pytest.approx(s, abs=1e-9)
    assert got_p == pytest.approx(p, abs=1e-9)


def test_infeasible_construction_raises():
    with pytest.raises(ps.InfeasibleScenario):
        ps.construct_projective(0.0, 0.6, [0.5, 0.5])
    with pytest.raises(ps.PostselectError):
        ps.construct_projective(0.0, 0.6, [0.5, 0.5])


def test_invalid_witness_raises():
    psi = np.array([1, 0], dtype=complex)
    ops = [np.diag([0.9, 0]).astype(complex), np.diag([0, 1]).astype(complex)]
    with pytest.raises(ps.InvalidWitness):
        ps.evaluate_witness(psi, psi, ops)


def test_fuzz_is_deterministic():
    a = ps.fuzz_projective(2, 2, 20000, seed=7)
    b = ps.fuzz_projective(2, 2, 20000, seed=7)
    assert a == b
    assert a["violations"] == 0
    fair = ps.fuzz_projective(2, 2, 5000, seed=1, orthogonal=True)
    assert fair["max_fair_deviation"] <= 1e-9


def test_oracle():
    assert 0.49 <= ps.oracle_max_s(0.0, 2, 2, 5000, seed=3) <= 0.5 + 1e-9


def test_regions():
    ts = ps.emit_region("ts", 200, n=4)
    assert ts["feasible"].shape == (200, 200)
    assert ts["feasible_area_fraction"] == pytest.approx(0.625, rel=0.01)
    ternary = ps.emit_region("ternary", 100)
    assert "disk_boundary" in ternary["curves"]
    pt = ps.emit_region("pt", 100, s=0.8)
    assert {"cut_left", "cut_right"} <= set(pt["curves"])
    with pytest.raises(ValueError):
        ps.emit_region("xy")
