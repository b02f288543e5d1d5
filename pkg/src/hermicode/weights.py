"""Exact weight enumerators, minimum distances, distance witnesses, and
root counts of the sparse polynomials that control the low weights.

Two independent enumeration routes exist and must agree wherever both
run:

* exhaustive -- iterate every message, count zero symbols per codeword.
  Ground truth; guarded to message spaces of at most 2^26.

* reduced -- weights are invariant under nonzero scalars and under the
  coordinate shift, and the shift acts diagonally on messages (the
  basis functions are eigenvectors of the orbit scaling).  Both
  symmetries together translate the vector of discrete logs of the
  nonzero message coordinates by a fixed subgroup L of (Z/(q^2-1))^s,
  one subgroup per support pattern.  Orbits are exactly the cosets of
  L, so enumerating one point per coset of L (a box transversal read
  off an integer Hermite normal form) and weighting by |L| gives the
  same counts with roughly (q^2-1)^2 fewer codeword scans.  No free
  action is assumed: coset size is |L| by construction, fixed points
  just live in supports where L collapses.

Counting is chunked; chunk counts merge by integer addition, so results
are identical for any chunking and any worker count.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from math import prod

import numpy as np

from . import agcode, rrspace
from .agcode import Codeword, LinearCode, encode
from .gf import Field
from .rrspace import RRFunction

EXHAUSTIVE_GUARD = 1 << 26
AUTO_EXHAUSTIVE_LIMIT = 1 << 22
_REDUCED_DIM_LIMIT = 12
_REDUCED_REPS_GUARD = 1 << 27
_CHUNK_ELEMS = 1 << 24


class SizeGuardError(ValueError):
    """The requested enumeration exceeds a hard size guard."""


class WeightEnumerator:
    """Exact mapping weight -> codeword count for one code."""

    def __init__(self, q: int, m: int, n: int, k: int, counts: dict[int, int],
                 method: str, elapsed_ms: float):
        self.q = q
        self.m = m
        self.n = n
        self.k = k
        self.counts = {w: int(c) for w, c in sorted(counts.items()) if c}
        self.method = method
        self.elapsed_ms = elapsed_ms

    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def min_distance(self) -> int:
        return min(w for w in self.counts if w > 0)

    def nonzero_weights(self) -> list[int]:
        return sorted(w for w in self.counts if w > 0)

    def count(self, w: int) -> int:
        return self.counts.get(w, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightEnumerator) and self.n == other.n \
            and self.counts == other.counts

    def __repr__(self) -> str:
        return f"WeightEnumerator(q={self.q}, m={self.m}, counts={self.counts})"

    def to_dict(self) -> dict:
        # elapsed_ms is informational only and excluded from determinism
        # comparisons.
        return {
            "q": self.q,
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "counts": {str(w): c for w, c in self.counts.items()},
            "method": self.method,
            "elapsed_ms": self.elapsed_ms,
        }


def default_jobs() -> int:
    env = os.environ.get("HERMICODE_JOBS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _run_tasks(tasks, work, jobs: int, n: int) -> np.ndarray:
    total = np.zeros(n + 1, dtype=np.int64)
    if jobs > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(work, tasks):
                total += part
    else:
        for task in tasks:
            total += work(task)
    return total


# -- vectorized field helpers ------------------------------------------


def _outer_sum(field: Field, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """All pairwise sums of rows: (A, n) x (B, n) -> (A*B, n)."""
    n = x.shape[1]
    if field.p == 2:
        return np.bitwise_xor(x[:, None, :], y[None, :, :]).reshape(-1, n)
    idx = x[:, None, :].astype(np.int32) * field.order + y[None, :, :]
    return field.add_table.ravel()[idx].reshape(-1, n)


def _elem_sum(field: Field, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if field.p == 2:
        return np.bitwise_xor(x, y)
    return field.add_table.ravel()[x.astype(np.int32) * field.order + y]


def _scalar_multiples(field: Field, row: np.ndarray) -> np.ndarray:
    """(Q, n) array of s * row over all scalars s."""
    return field.mul_table[np.arange(field.order)[:, None], row[None, :]]


# -- exhaustive route ---------------------------------------------------


def _half_products(field: Field, gen: np.ndarray, rows: range) -> np.ndarray:
    acc = None
    for r in rows:
        table = _scalar_multiples(field, gen[r])
        acc = table if acc is None else _outer_sum(field, acc, table)
    if acc is None:
        return np.zeros((1, gen.shape[1]), dtype=np.int16)
    return acc


def _exhaustive_counts(code: LinearCode, jobs: int) -> np.ndarray:
    field, gen = code.field, code.gen
    k, n = gen.shape
    space = field.order**k
    if space > EXHAUSTIVE_GUARD:
        raise SizeGuardError(
            f"message space {space} exceeds the exhaustive guard {EXHAUSTIVE_GUARD}; "
            "use the reduced method"
        )
    h = (k + 1) // 2
    left = _half_products(field, gen, range(h))
    right = _half_products(field, gen, range(h, k))
    chunk = max(1, _CHUNK_ELEMS // max(1, right.shape[0] * n))
    tasks = [(lo, min(lo + chunk, left.shape[0])) for lo in range(0, left.shape[0], chunk)]

    def work(task):
        lo, hi = task
        words = _outer_sum(field, left[lo:hi], right)
        weights = n - np.count_nonzero(words == 0, axis=1)
        return np.bincount(weights, minlength=n + 1)

    return _run_tasks(tasks, work, jobs, n)


# -- reduced route ------------------------------------------------------


def _hnf_diagonal(rows: list[list[int]], s: int, modulus: int) -> list[int]:
    """Diagonal of the row Hermite normal form of the lattice spanned by
    ``rows`` together with modulus * e_i.  The box prod [0, diag_i) is a
    transversal of the quotient, of size prod(diag)."""
    mat = [list(r) for r in rows]
    mat += [[modulus if i == j else 0 for j in range(s)] for i in range(s)]
    diag: list[int] = []
    top = 0
    for col in range(s):
        while True:
            live = [i for i in range(top, len(mat)) if mat[i][col] != 0]
            piv = min(live, key=lambda i: abs(mat[i][col]))
            mat[top], mat[piv] = mat[piv], mat[top]
            finished = True
            for i in range(top + 1, len(mat)):
                if mat[i][col]:
                    f = mat[i][col] // mat[top][col]
                    mat[i] = [a - f * b for a, b in zip(mat[i], mat[top])]
                    if mat[i][col]:
                        finished = False
            if finished:
                break
        if mat[top][col] < 0:
            mat[top] = [-a for a in mat[top]]
        diag.append(mat[top][col])
        top += 1
    return diag


def _reduced_counts(code: LinearCode, jobs: int) -> np.ndarray:
    field, gen = code.field, code.gen
    k, n = gen.shape
    big_n = field.order - 1
    eigen = agcode.shift_diagonal(code)
    if eigen is None or any(e == 0 for e in eigen) or k > _REDUCED_DIM_LIMIT:
        # Orbit bookkeeping is impossible or too large for this code;
        # the exhaustive route (with its own guard) is the fallback.
        return _exhaustive_counts(code, jobs)
    shift_logs = [int(field.log_table[e]) for e in eigen]

    supports: list[tuple[tuple[int, ...], list[int], int]] = []
    total_reps = 0
    for mask in range(1, 1 << k):
        coords = tuple(t for t in range(k) if (mask >> t) & 1)
        s = len(coords)
        diag = _hnf_diagonal([[1] * s, [shift_logs[t] for t in coords]], s, big_n)
        reps = prod(diag)
        orbit_size, rem = divmod(big_n**s, reps)
        if rem:
            raise RuntimeError("transversal size does not divide the support class")
        total_reps += reps
        if total_reps > _REDUCED_REPS_GUARD:
            raise SizeGuardError(
                f"reduced enumeration needs more than {_REDUCED_REPS_GUARD} "
                "representatives; the code is too large to enumerate"
            )
        supports.append((coords, diag, orbit_size))

    tasks = []
    for coords, diag, orbit_size in supports:
        reps = prod(diag)
        chunk = max(1, _CHUNK_ELEMS // (8 * max(1, n)))
        for lo in range(0, reps, chunk):
            tasks.append((coords, diag, orbit_size, lo, min(lo + chunk, reps)))

    def work(task):
        coords, diag, orbit_size, lo, hi = task
        idx = np.arange(lo, hi, dtype=np.int64)
        strides = [prod(diag[i + 1:]) for i in range(len(diag))]
        acc = None
        for pos, t in enumerate(coords):
            logs = (idx // strides[pos]) % diag[pos]
            encs = field.exp_table[logs].astype(np.int16)
            term = field.mul_table[encs[:, None], gen[t][None, :]]
            acc = term if acc is None else _elem_sum(field, acc, term)
        weights = n - np.count_nonzero(acc == 0, axis=1)
        return orbit_size * np.bincount(weights, minlength=n + 1)

    counts = _run_tasks(tasks, work, jobs, n)
    counts[0] += 1  # zero message
    expected = field.order**k
    if int(counts.sum()) != expected:
        raise RuntimeError(
            f"reduced enumeration lost codewords: {int(counts.sum())} != {expected}"
        )
    return counts


# -- public enumeration API ---------------------------------------------


def resolve_method(code: LinearCode, method: str) -> str:
    if method not in ("auto", "exhaustive", "reduced"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        space = code.field.order**code.k
        return "exhaustive" if space <= AUTO_EXHAUSTIVE_LIMIT else "reduced"
    return method


def weight_enumerator(code: LinearCode, method: str = "auto", jobs: int | None = None) -> WeightEnumerator:
    """Exact weight enumerator; results are cached per code and method."""
    resolved = resolve_method(code, method)
    cached = code._enum_cache.get(resolved)
    if cached is not None:
        return cached
    jobs = default_jobs() if jobs is None else max(1, jobs)
    start = time.perf_counter()
    if resolved == "exhaustive":
        raw = _exhaustive_counts(code, jobs)
    else:
        raw = _reduced_counts(code, jobs)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    counts = {w: int(c) for w, c in enumerate(raw) if c}
    enum = WeightEnumerator(code.q, code.m, code.n, code.k, counts, resolved, elapsed_ms)
    if enum.total() != code.field.order**code.k:
        raise RuntimeError("enumerator total does not match the message space")
    if enum.count(0) != 1:
        raise RuntimeError("enumerator must see exactly one zero codeword")
    code._enum_cache[resolved] = enum
    return enum


def min_distance(code: LinearCode, method: str = "auto", jobs: int | None = None) -> int:
    """Smallest positive weight, from the (cached) enumerator."""
    return weight_enumerator(code, method, jobs).min_distance


# -- distance upper-bound witness ----------------------------------------


def upper_bound_witness(code: LinearCode) -> tuple[RRFunction, Codeword]:
    """A function whose codeword has weight exactly n - (m-2)(q+1).

    g is a product of m - 2 factors (y - tau*c) over distinct nonzero
    subfield elements c, and eps = 0.  Each factor vanishes on the q + 1
    orbit points whose norm equals c, so the zero sets are disjoint and
    the weight meets the distance upper bound.  For m = 2 the product is
    empty: g = 1 gives a codeword of full weight q^2 - 1.
    """
    field, m = code.field, code.m
    picks = [c for c in field.subfield_elements() if c != 0][: m - 2]
    if len(picks) < m - 2:
        raise ValueError("not enough subfield elements for the witness")
    coeffs = [1]
    for c in picks:
        root = field.mul(code.spec.tau, c)
        nxt = [0] * (len(coeffs) + 1)
        for j, old in enumerate(coeffs):
            nxt[j + 1] = field.add(nxt[j + 1], old)
            nxt[j] = field.sub(nxt[j], field.mul(root, old))
        coeffs = nxt
    gcoeffs = tuple((((0, j), c) for j, c in enumerate(coeffs) if c != 0))
    func = RRFunction(field, m, gcoeffs, 0)
    msg = _message_of(code, func)
    word = encode(code, msg)
    expected = code.n - (m - 2) * (field.q + 1)
    if word.weight != expected:
        raise AssertionError(
            f"witness weight {word.weight} != {expected} at q={field.q}, m={m}"
        )
    return func, word


def _message_of(code: LinearCode, func: RRFunction) -> list[int]:
    coords = [func.eps]
    for ij in rrspace.monomials(code.m):
        coords.append(func.gcoeff(*ij))
    return coords


def min_weight_characterization(code: LinearCode) -> list[tuple[int, ...]]:
    """For m = 3: the messages of the form y*(b0 + b2*y)/x^3 with b2
    nonzero and b0/(tau*b2) a nonzero subfield element.  There are
    (q^2 - 1)(q - 1) of them."""
    if code.m != 3:
        raise ValueError("the characterization applies to m = 3 only")
    field = code.field
    mons = rrspace.monomials(3)
    pos_b0 = 1 + mons.index((0, 0))
    pos_b2 = 1 + mons.index((0, 1))
    out = []
    subfield_units = [c for c in field.subfield_elements() if c != 0]
    for b2 in field.nonzero():
        scale = field.mul(code.spec.tau, b2)
        for c in subfield_units:
            msg = [0] * code.k
            msg[pos_b0] = field.mul(scale, c)
            msg[pos_b2] = b2
            out.append(tuple(msg))
    return out


# -- zero counts through the univariate polynomial -----------------------


def orbit_zero_polynomial(code: LinearCode, msg) -> dict[int, int]:
    """Exponent -> coefficient of the polynomial whose nonzero roots are
    exactly the orbit x-coordinates where the message's function
    vanishes: substitute y = tau*x^(q+1), divide by x^m."""
    field, m, q = code.field, code.m, code.q
    tau = code.spec.tau
    poly: dict[int, int] = {}
    eps = msg[0]
    if eps != 0:
        poly[0] = eps
    for (i, j), coef in zip(rrspace.monomials(m), msg[1:]):
        if coef == 0:
            continue
        e = q + 1 - m + i + j * (q + 1)
        c = field.mul(coef, field.pow(tau, j + 1))
        poly[e] = field.add(poly.get(e, 0), c)
    return {e: c for e, c in poly.items() if c != 0}


def zero_count_via_roots(code: LinearCode, msg) -> int:
    """Number of orbit points where the message's function vanishes,
    counted by scanning nonzero roots of the substituted polynomial."""
    field = code.field
    poly = orbit_zero_polynomial(code, msg)
    count = 0
    for x in field.nonzero():
        acc = 0
        for e, c in poly.items():
            acc = field.add(acc, field.mul(c, field.pow(x, e)))
        if acc == 0:
            count += 1
    return count


# -- sparse (lacunary) polynomial root counts -----------------------------


def roots_of_lacunary(field: Field, kind: str, *, a: int | None = None,
                      b: int | None = None, b0: int | None = None,
                      b1: int | None = None, b2: int | None = None,
                      tau: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Exact root count (and roots) in F_{q^2} of one of the sparse forms.

    * ``general``: x^(q+1) + a*x + b         (count is always 0, 1, 2 or q+1)
    * ``scaled``:  tau*b2*x^(q+1) + b1*x + b0 with b2 != 0
    * ``shifted``: b1*tau*x^(q-1) + 1 with b1 != 0 (q-1 roots exactly
      when b1*tau has norm 1, else none)
    """
    q = field.q
    if kind == "general":
        if a is None or b is None:
            raise ValueError("general form needs coefficients a and b")
        terms = {q + 1: 1}
        _add_term(field, terms, 1, a)
        _add_term(field, terms, 0, b)
        roots = _scan_roots(field, terms, include_zero=True)
    elif kind == "scaled":
        if b0 is None or b1 is None or b2 is None or tau is None:
            raise ValueError("scaled form needs b0, b1, b2 and tau")
        lead = field.mul(tau, b2)
        if lead == 0:
            raise ValueError("scaled form is degenerate: tau*b2 = 0")
        terms = {q + 1: lead}
        _add_term(field, terms, 1, b1)
        _add_term(field, terms, 0, b0)
        roots = _scan_roots(field, terms, include_zero=True)
    elif kind == "shifted":
        if b1 is None or tau is None:
            raise ValueError("shifted form needs b1 and tau")
        lead = field.mul(b1, tau)
        if lead == 0:
            raise ValueError("shifted form is degenerate: b1*tau = 0")
        terms = {q - 1: lead, 0: 1}
        roots = _scan_roots(field, terms, include_zero=True)
    else:
        raise ValueError(f"unknown lacunary kind {kind!r}")
    return len(roots), roots


def _add_term(field: Field, terms: dict[int, int], e: int, c: int) -> None:
    if c:
        terms[e] = field.add(terms.get(e, 0), c)


def _scan_roots(field: Field, terms: dict[int, int], include_zero: bool) -> tuple[int, ...]:
    roots = []
    start = 0 if include_zero else 1
    for x in range(start, field.order):
        acc = 0
        for e, c in terms.items():
            acc = field.add(acc, field.mul(c, field.pow(x, e)))
        if acc == 0:
            roots.append(x)
    return tuple(roots)
