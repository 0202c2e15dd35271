# Copyright 2026 The Dislo Authors
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


"""Surface-code patches with dislocation defects.

Builds the lattices, checks them, computes exact code distances under the
full Pauli alphabet or with X and Z errors only, and constructs the
Y-highway error chain along a dislocation.
"""

import csv
import io
import json

from ._core import (
    FormatError,
    GeometryError,
    InvalidCodeError,
    IoError,
    PauliOperator,
    ResourceError,
    StabilizerCode,
    WitnessError,
    build_default_code,
    build_dislocation_code,
    build_plain_patch,
    extract_logicals,
    logical_count,
    qubit_on_dislocation,
    run_cli,
    syndrome,
)
from . import _core

__all__ = [
    "FormatError",
    "GeometryError",
    "InvalidCodeError",
    "IoError",
    "PauliOperator",
    "ResourceError",
    "StabilizerCode",
    "WitnessError",
    "build_default_code",
    "build_dislocation_code",
    "build_plain_patch",
    "classify",
    "distance",
    "extract_logicals",
    "logical_count",
    "qubit_on_dislocation",
    "render_svg",
    "run_cli",
    "scan",
    "syndrome",
    "validate",
    "verify_chain",
    "witness",
]


def _pauli(error):
    return error if isinstance(error, PauliOperator) else PauliOperator(error)


def validate(code):
    """Commutation check, symplectic rank and offending generator pairs."""
    return json.loads(_core._validate(code))


def classify(code, error):
    """Returns {"kind": DETECTED|STABILIZER|LOGICAL, "logical_action": [...]}."""
    return json.loads(_core._classify(code, _pauli(error)))


def distance(code, model="full", engine="mitm", cap=0, threads=1, memory_mb=2048, logical=None):
    """Exact distance; cap=0 picks 2L+8 for dislocation codes and n otherwise.

    The result's "d" is None when nothing was found up to the cap.
    """
    return json.loads(_core._distance(code, model, engine, cap, threads, memory_mb, logical))


def scan(L_values, model="full", cap=0, padding=2, separation=-1, threads=1, memory_mb=2048):
    """Distance of the default two-dislocation code for each L, as CSV rows."""
    text = _core._scan(list(L_values), model, cap, padding, separation, threads, memory_mb)
    return list(csv.DictReader(io.StringIO(text)))


def witness(code, index=0, radius=2):
    """Builds and verifies the Y highway along dislocation `index`."""
    return json.loads(_core._witness(code, index, radius))


def verify_chain(code, chain, radius=2):
    text = chain if isinstance(chain, str) else json.dumps(chain)
    return json.loads(_core._verify_chain(code, text, radius))


def render_svg(code, chain=None, cell_size=40.0, error_color="red", show_indices=False):
    text = None if chain is None else (chain if isinstance(chain, str) else json.dumps(chain))
    return _core._render_svg(code, text, cell_size, error_color, show_indices)
