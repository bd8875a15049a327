# Copyright 2026 The gqca Authors
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


import json
import math

import numpy as np
import pytest

import gqca


def test_single_flip_spreads_symmetrically():
    pops = np.array(gqca.evolve("0000100000"[:9], t_max=6))
    assert pops.shape == (7, 9)
    assert pops[0].tolist() == [0, 0, 0, 0, 1, 0, 0, 0, 0]
    np.testing.assert_allclose(pops, pops[:, ::-1], atol=1e-12)
    np.testing.assert_allclose(pops[1, 3], 0.5, atol=1e-12)


def test_statevector_is_normalized():
    amps = gqca.statevector("00100", cycles=3)
    assert amps.shape == (32,)
    assert math.isclose(float(np.vdot(amps, amps).real), 1.0, abs_tol=1e-12)


def test_noiseless_samples_stay_in_sector():
    counts = gqca.sample("0001000", t_max=5, shots=2000, seed=3)
    assert len(counts) == 6
    for table in counts:
        assert sum(table.values()) == 2000
        result = gqca.postselect(table, "0001000")
        assert result["retained_fraction"] == 1.0
        assert not result["discarded"]


def test_noisy_samples_lose_sector():
    counts = gqca.sample("00100", t_max=3, shots=4000, seed=1, noise=gqca.default_noise(), trajectories=20)
    fractions = [gqca.postselect(t, "00100")["retained_fraction"] for t in counts]
    assert all(f < 1.0 for f in fractions)
    assert fractions[-1] < fractions[0]


def test_uniform_network_measures():
    w = np.full((5, 5), 0.25)
    np.fill_diagonal(w, 0.0)
    m = gqca.network_measures(w)
    assert math.isclose(m["clustering"], 0.25, rel_tol=1e-12)
    assert math.isclose(m["path_length"], 4.0, rel_tol=1e-12)


def test_exact_mutual_information_is_symmetric():
    amps = gqca.statevector("0001000", cycles=4)
    for vn in (False, True):
        mi = gqca.exact_mutual_information(amps, von_neumann=vn)
        np.testing.assert_allclose(mi, mi.T, atol=1e-12)
        assert mi.max() > 0.0


def test_sampled_mi_matches_independent_estimate():
    counts = gqca.sample("0001000", t_max=3, shots=5000, seed=9)[3]
    total = sum(counts.values())
    joint = np.zeros((2, 2))
    for bits, n in counts.items():
        joint[int(bits[2]), int(bits[3])] += n / total
    pa, pb = joint.sum(axis=1), joint.sum(axis=0)
    mask = joint > 0
    expected = float((joint[mask] * np.log2(joint[mask] / np.outer(pa, pb)[mask])).sum())
    assert math.isclose(gqca.mutual_information(counts)[2, 3], expected, rel_tol=1e-9, abs_tol=1e-12)


def test_detectability_and_sectors():
    one = gqca.detectability("0000100000000")
    two = gqca.detectability("0010000001000")
    assert one[0] > two[0] and one[1] > two[1]
    assert gqca.sector_dimension(9, 2) == math.comb(10, 4)


def test_compile_stats():
    s = gqca.compile_stats(23, 12)
    assert s["two_qubit_per_cycle"] == 88
    assert s["cumulative_two_qubit"] == 1056


def test_coherence_window():
    assert gqca.coherence_window([0.1, 0.3, 0.4, 0.1], [0.2] * 4) == (1, 2)
    assert gqca.coherence_window([0.1, 0.1], [0.2, 0.2]) is None


def test_run_and_hash(tmp_path):
    config = json.dumps({"L": 7, "t_max": 4, "shots": 1000, "seeds": [0]})
    result = gqca.run(config, str(tmp_path))
    assert result["hash"] == gqca.config_hash(config)
    assert (tmp_path / result["hash"] / "manifest.json").exists()
    assert len(result["clustering"]) == 5


def test_invalid_config_raises_validation_error():
    with pytest.raises(gqca.ValidationError, match="L"):
        gqca.config_hash(json.dumps({"L": 1}))
    with pytest.raises(ValueError):
        gqca.config_hash(json.dumps({"no_such_key": 1}))
