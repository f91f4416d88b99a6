# Copyright 2026 The vilenkin Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http:#www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import numpy as np
import pytest

import vilenkin as v


def walsh_matrix(depth):
    # Entry (n, x): (-1)^{sum n_k x_k}, x in lexicographic order (digit 0 slowest),
    # n with digit 0 fastest.
    size = 1 << depth
    xs = [[(i >> (depth - 1 - k)) & 1 for k in range(depth)] for i in range(size)]
    ns = [[(n >> k) & 1 for k in range(depth)] for n in range(size)]
    return np.array([[(-1) ** sum(a * b for a, b in zip(n, x)) for x in xs] for n in ns], dtype=float)


def test_generator_ladder():
    g = v.Generator.parse("2,3,2")
    assert g.depth == 3
    assert [g.ladder(n) for n in range(4)] == [1, 2, 6, 12]
    assert not g.is_walsh
    assert v.Generator.walsh(4).is_walsh


def test_bad_generator_raises():
    with pytest.raises(v.VilenkinError):
        v.Generator([2, 1])
    with pytest.raises(ValueError):
        v.Generator.parse("2,x")


def test_analyze_matches_dense_walsh_transform():
    g = v.Generator.walsh(4)
    rng = np.random.default_rng(3)
    vals = rng.normal(size=16) + 1j * rng.normal(size=16)
    f = v.StepFunction(g, 4, vals)
    coeffs = v.analyze(f).coefficients
    np.testing.assert_allclose(coeffs, walsh_matrix(4) @ vals / 16, atol=1e-12)
    back = v.synthesize(v.analyze(f)).values
    np.testing.assert_allclose(back, vals, atol=1e-12)


def test_dirichlet_at_ladder_is_scaled_indicator():
    g = v.Generator.parse("3,2,3")
    d = v.dirichlet(g, 6, 3).values
    expected = np.zeros(18)
    expected[:3] = 6
    np.testing.assert_allclose(d, expected, atol=1e-12)


def test_fejer_equals_constant_norlund_kernel():
    g = v.Generator.walsh(5)
    q = v.make_weights("constant", 64)
    a = v.fejer(g, 11, 5).values
    b = v.norlund_kernel(q, g, 11, 5).values
    np.testing.assert_allclose(a, b, atol=1e-12)
    assert v.fejer(g, 11, 5).integral() == pytest.approx(1.0)


def test_mean_paths_agree():
    g = v.Generator.parse("2,3,2,3")
    rng = np.random.default_rng(5)
    f = v.StepFunction(g, 3, rng.normal(size=12))
    q = v.make_weights("cesaro:0.5", 64)
    ref = v.norlund_mean(q, 9, f).values
    for path in ("partial_sums", "convolution"):
        np.testing.assert_allclose(v.norlund_mean(q, 9, f, path=path).values, ref, atol=1e-10)
    with pytest.raises(v.RangeError):
        v.norlund_mean(q, 9, f, path="nope")


def test_cesaro_order_one_is_fejer_mean():
    g = v.Generator.walsh(4)
    f = v.StepFunction(g, 4, np.arange(16.0))
    a = v.classical_mean("cesaro", 7, f, alpha=1.0).values
    b = v.classical_mean("fejer", 7, f).values
    np.testing.assert_allclose(a, b, atol=1e-12)


def test_atoms_and_norms():
    g = v.Generator.walsh(6)
    atom = v.make_atom(g, 0.5, 2, profile="haar")
    assert atom.support_rank == 2
    report = v.check_atom(atom)
    assert report["passed"]
    vals = atom.function.values
    assert abs(vals.sum()) < 1e-12
    assert np.abs(vals).max() == pytest.approx(4.0 ** 2)
    assert v.lp_quasinorm(atom.function, 1.0) == pytest.approx(np.abs(vals).mean())
    assert v.hardy_norm(atom.function, 0.5) > 0


def test_weights_and_conditions():
    q = v.make_weights("cesaro:0.5", 256)
    assert q.non_increasing
    assert q.Q(3) == pytest.approx(q.q(0) + q.q(1) + q.q(2))
    rep = v.check_6a(v.make_weights("inverse_sqrt", 4096), 0.75, 4096)
    assert rep["verdict"] in ("satisfied", "violated", "inconclusive")
    with pytest.raises(v.VilenkinError):
        v.make_weights("bogus", 16)


def test_lemma2_report_passes():
    g = v.Generator.parse("2,3,2,3")
    q = v.make_weights("cesaro:0.5", 64)
    rep = v.lemma2(q, g, 5, 1, 2, 4)
    assert rep["passed"]


def test_theorem1_small_run_is_deterministic():
    q = v.make_weights("constant", 4096)
    a = v.theorem1(q, 1.0, levels=[1], atoms=3, seed=2)
    b = v.theorem1(q, 1.0, levels=[1], atoms=3, seed=2)
    assert a == b
    assert a["max_value"] > 0


def test_run_suite_closed_forms():
    assert "lemma2" in v.suite_names()
    res = v.run_suite("closed-forms", generators=[v.Generator.parse("2,3")])
    assert res["passed"]
    with pytest.raises(v.RangeError):
        v.run_suite("nope")
