# Copyright 2026 The qmem Authors
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

import json
import math

import pytest

import qmem


def test_surface_code_properties():
    for L in (2, 3):
        m = qmem.build_model("surface2d", L)
        assert m.n == L * L + (L - 1) * (L - 1)
        assert m.k == 1
        assert qmem.code_distance(m) == L
        assert qmem.validate_model(m) == (True, "")


def test_pauli_algebra():
    a = qmem.PauliOperator("XZ")
    b = qmem.PauliOperator("ZX")
    assert a.commutes(b)
    assert not qmem.PauliOperator("X").commutes(qmem.PauliOperator("Z"))
    assert str(a * b) == "YY"
    assert (a * b).weight == 2


def test_barriers():
    assert qmem.exact_barrier(qmem.build_model("ising1d", 6))["barrier"] == 1
    r = qmem.exact_barrier(qmem.build_model("surface2d", 2), "X0")
    assert r["barrier"] == 1
    assert r["witness"]
    m = qmem.build_model("toric3d", 2)
    z = qmem.ordered_flip_barrier(m, "Z0", "annealed", seed=3)
    assert z["barrier"] == 2


def test_refusal_is_an_exception():
    with pytest.raises(qmem.SearchRefused):
        qmem.exact_barrier(qmem.build_model("ising2d", 5), state_cap=1024)


def test_decoders_clear_single_error():
    m = qmem.build_model("surface2d", 3)
    err = qmem.PauliOperator("I" * 6 + "X" + "I" * 6)
    syn = qmem.syndrome(m, err)
    for decoder in ("ml", "greedy", "match2d"):
        corr, cleared, cost = qmem.decode(decoder, m, syn)
        assert cleared
        assert cost == 1
        assert not any(qmem.syndrome(m, err * corr))


def test_sampler_matches_enumeration():
    m = qmem.build_model("ising1d", 8)
    est, err, exact = qmem.equilibrium_energy_check(m, 1.0, sweeps=20000, burn_in=500, seed=5)
    assert abs(est - exact) < 4 * err + 1e-12


def test_lifetime_at_infinite_temperature():
    m = qmem.build_model("surface2d", 3)
    r = qmem.lifetime_trial(m, 0.0, "match2d", t_max=200, seed=2)
    assert set(r) == {"X_ec", "Z_ec"}
    assert r["X_ec"] is not None and r["Z_ec"] is not None


def test_spectrum():
    r = qmem.ground_splitting(qmem.build_model("surface2d", 2), 0.0)
    assert r["ground_degeneracy"] == 2
    assert abs(r["gap"] - 2.0) < 1e-9
    r = qmem.ground_splitting(qmem.build_model("surface2d", 2), 0.1)
    assert r["splitting"] > 0


def test_run_experiment_and_fit():
    cfg = {"kind": "analyze", "family": "surface2d", "sizes": [2, 3]}
    csv, summary, code = qmem.run_experiment(json.dumps(cfg))
    assert code == 0
    assert csv.splitlines()[0] == "kind,family,L,beta,seed,decoder,observable,value,censored,extra_json"
    assert json.loads(summary)["rows"] > 0
    slope, _, stderr = qmem.fit_arrhenius([(b, math.exp(2 * b)) for b in (1.0, 1.5, 2.0)])
    assert abs(slope - 2.0) < 1e-9
    assert stderr < 1e-9
