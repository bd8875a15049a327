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


"""Goldilocks quantum cellular automata toolkit."""

from ._gqca import (
    ValidationError,
    coherence_window,
    compile_stats,
    config_hash,
    default_noise,
    detectability,
    evolve,
    exact_mutual_information,
    isolated_flip_sites,
    mutual_information,
    network_measures,
    postselect,
    run,
    sample,
    sector_dimension,
    statevector,
)

__all__ = [
    "ValidationError",
    "coherence_window",
    "compile_stats",
    "config_hash",
    "default_noise",
    "detectability",
    "evolve",
    "exact_mutual_information",
    "isolated_flip_sites",
    "mutual_information",
    "network_measures",
    "postselect",
    "run",
    "sample",
    "sector_dimension",
    "statevector",
]
