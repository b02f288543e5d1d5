"""Evaluation codes over one stabilizer orbit.

The generator matrix has one row per basis function and one column per
orbit point, column i holding the value at Q_{i+1}.  With that column
order the omega scaling of the plane realizes the coordinate shift
(c_1, ..., c_n) -> (c_2, ..., c_n, c_1), so shift closure of the row
space certifies that the whole code is cyclic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg, rrspace
from .curve import OrbitSpec, Point, canonical_orbit_spec, orbit_of
from .gf import Field


@dataclass(frozen=True)
class Codeword:
    symbols: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(1 for s in self.symbols if s != 0)


class LinearCode:
    """A [q^2 - 1, m(m-1)/2 + 1] evaluation code over F_{q^2}."""

    def __init__(self, field: Field, m: int, spec: OrbitSpec, gen: np.ndarray, points: list[Point]):
        self.field = field
        self.q = field.q
        self.m = m
        self.spec = spec
        self.gen = gen
        self.points = points
        self.k, self.n = gen.shape
        self.basis = rrspace.basis(field, m)
        self._enum_cache: dict[str, object] = {}

    def __repr__(self) -> str:
        return f"LinearCode(q={self.q}, m={self.m}, n={self.n}, k={self.k})"

    def rows(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.gen]

    def export_dict(self) -> dict:
        """Self-describing generator-matrix payload, every element as
        its integer encoding."""
        f = self.field
        return {
            "q": self.q,
            "p": f.p,
            "k_ext": f.k,
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "irreducible": list(f.irreducible),
            "omega": f.omega,
            "base_point": [self.spec.u, self.spec.v],
            "tau": self.spec.tau,
            "rows": self.rows(),
        }


def _assert_full_rank(field: Field, rows: list[list[int]], context: str) -> None:
    r = linalg.rank(field, rows)
    if r != len(rows):
        raise RuntimeError(
            f"{context}: generator rank {r} < {len(rows)}; evaluation map "
            "should be injective for 2 <= m <= q-1"
        )


def build_code(field: Field, m: int, spec: OrbitSpec | None = None) -> LinearCode:
    """Evaluate the basis over the ordered orbit and check injectivity."""
    if spec is None:
        spec = canonical_orbit_spec(field)
    funcs = rrspace.basis(field, m)
    points = orbit_of(spec)
    gen = np.array(
        [[rrspace.evaluate(f, pt) for pt in points] for f in funcs], dtype=np.int16
    )
    code = LinearCode(field, m, spec, gen, points)
    _assert_full_rank(field, code.rows(), f"build_code(q={field.q}, m={m})")
    return code


def encode(code: LinearCode, msg) -> Codeword:
    if len(msg) != code.k:
        raise ValueError(f"message length {len(msg)} != k={code.k}")
    f = code.field
    acc = np.zeros(code.n, dtype=np.int16)
    for coef, row in zip(msg, code.gen):
        if coef != 0:
            acc = f.add_table[acc, f.mul_table[coef, row]]
    return Codeword(tuple(int(x) for x in acc))


def shift(symbols) -> tuple[int, ...]:
    return tuple(symbols[1:]) + (symbols[0],)


def _shifted_rows(code: LinearCode) -> list[list[int]]:
    return [list(np.roll(row, -1)) for row in code.rows()]


def check_cyclic(code: LinearCode) -> bool:
    """Shift closure of the generator rows, certified by the rank of the
    rows stacked with their shifts staying k."""
    stacked = code.rows() + _shifted_rows(code)
    return linalg.rank(code.field, stacked) == code.k


def shift_message_matrix(code: LinearCode) -> list[list[int]]:
    """Matrix S acting on row-vector messages: the shift of encode(msg)
    equals encode(msg S), with (msg S)_t = sum_r msg_r S[r][t]."""
    mat = linalg.express_rows(code.field, code.rows(), _shifted_rows(code))
    if mat is None:
        raise RuntimeError("code is not shift-closed; no message shift matrix exists")
    return mat


def shift_diagonal(code: LinearCode) -> list[int] | None:
    """Diagonal of the message shift matrix if it is diagonal, else None.

    The basis functions are eigenvectors of the orbit scaling, so this
    is the expected shape.
    """
    s = shift_message_matrix(code)
    k = code.k
    if any(s[i][j] != 0 for i in range(k) for j in range(k) if i != j):
        return None
    return [s[i][i] for i in range(k)]
