"""Weight enumeration: the vectorized exhaustive route is checked
against a from-scratch function-evaluation enumerator, the reduced
route against the exhaustive one, and the distributions against their
closed forms."""

import itertools

import numpy as np
import pytest

from hermicode.agcode import encode
from hermicode.curve import canonical_orbit_spec, orbit_of
from hermicode.gf import field_for_q
from hermicode.rrspace import evaluate, function_from_coeffs
from hermicode.verify import code_for as _code
from hermicode.weights import (
    SizeGuardError,
    min_distance,
    min_weight_characterization,
    orbit_zero_polynomial,
    roots_of_lacunary,
    upper_bound_witness,
    weight_enumerator,
    zero_count_via_roots,
)


def _naive_enumerator(q, m):
    """Independent oracle: iterate every coefficient vector, build the
    function itself, and evaluate it point by point."""
    f = field_for_q(q)
    spec = canonical_orbit_spec(f)
    points = orbit_of(spec)
    k = m * (m - 1) // 2 + 1
    counts: dict[int, int] = {}
    for coords in itertools.product(f.elements(), repeat=k):
        fn = function_from_coeffs(f, m, list(coords))
        weight = sum(1 for p in points if evaluate(fn, p) != 0)
        counts[weight] = counts.get(weight, 0) + 1
    return counts


@pytest.mark.parametrize("q,m", [(3, 2), (4, 2)])
def test_exhaustive_matches_naive_function_evaluation(q, m):
    enum = weight_enumerator(_code(q, m), "exhaustive")
    assert enum.counts == _naive_enumerator(q, m)


# Closed-form two-weight distributions for m = 2.
TWO_WEIGHT = {
    3: {0: 1, 6: 32, 8: 48},
    4: {0: 1, 12: 75, 15: 180},
    5: {0: 1, 20: 144, 24: 480},
    7: {0: 1, 42: 384, 48: 2016},
    8: {0: 1, 56: 567, 63: 3528},
}


@pytest.mark.parametrize("q", sorted(TWO_WEIGHT))
def test_two_weight_distributions(q):
    enum = weight_enumerator(_code(q, 2), "exhaustive")
    assert enum.counts == TWO_WEIGHT[q]
    assert enum.min_distance == q * q - q
    n2 = q * q - 1
    assert enum.count(q * q - q) == n2 * (q + 1)
    assert enum.count(n2) == q * (q - 1) * n2


@pytest.mark.parametrize("q,m", [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3), (7, 3)])
def test_reduced_equals_exhaustive(q, m):
    code = _code(q, m)
    assert weight_enumerator(code, "reduced") == weight_enumerator(code, "exhaustive")


def test_enumerator_bookkeeping():
    enum = weight_enumerator(_code(4, 3), "exhaustive")
    assert enum.total() == 16**4
    assert enum.count(0) == 1
    assert enum.nonzero_weights() == sorted(w for w in enum.counts if w)


def test_jobs_do_not_change_counts():
    code = _code(5, 3)
    base = weight_enumerator(code, "exhaustive", jobs=1)
    code._enum_cache.clear()
    par = weight_enumerator(code, "exhaustive", jobs=4)
    assert base == par
    code._enum_cache.clear()
    red1 = weight_enumerator(code, "reduced", jobs=1)
    code._enum_cache.clear()
    red8 = weight_enumerator(code, "reduced", jobs=8)
    assert red1 == red8


def test_exhaustive_guard():
    code = _code(5, 4)  # 25^7 messages
    with pytest.raises(SizeGuardError):
        weight_enumerator(code, "exhaustive")


def test_reduced_handles_the_largest_small_code():
    enum = weight_enumerator(_code(5, 4), "reduced")
    assert enum.total() == 25**7
    assert enum.min_distance == 12  # hits the upper bound 24 - 2*6


@pytest.mark.parametrize(
    "q,m,expected_d",
    [(3, 2, 6), (4, 2, 12), (4, 3, 10), (5, 2, 20), (5, 3, 18), (7, 3, 40), (8, 3, 54)],
)
def test_min_distance(q, m, expected_d):
    code = _code(q, m)
    d = min_distance(code)
    assert d == expected_d
    lower = q * q - q * (m - 1)
    upper = q * q - 1 - (m - 2) * (q + 1)
    assert lower <= d <= upper


@pytest.mark.parametrize("q,m", [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3), (5, 4), (7, 3), (8, 3)])
def test_upper_bound_witness(q, m):
    code = _code(q, m)
    fn, word = upper_bound_witness(code)
    assert word.weight == q * q - 1 - (m - 2) * (q + 1)
    assert fn.eps == 0
    # the witness factors are distinct scalings of subfield units
    f = code.field
    if m > 2:
        roots = set()
        for x in f.elements():
            acc = 0
            for (i, j), c in fn.gcoeffs:
                assert i == 0
                acc = f.add(acc, f.mul(c, f.pow(x, j)))
            if acc == 0:
                roots.add(x)
        assert len(roots) == m - 2
        for r in roots:
            assert f.in_subfield(f.div(r, code.spec.tau))


def test_cubic_code_distributions():
    e5 = weight_enumerator(_code(5, 3), "exhaustive")
    assert e5.min_distance == 18
    assert e5.count(18) == 672
    assert e5.nonzero_weights()[1] == 19
    e7 = weight_enumerator(_code(7, 3), "reduced")
    assert e7.min_distance == 40
    assert e7.count(40) == 288 == 6 * 48
    assert e7.nonzero_weights()[1] == 42
    assert e7.count(42) == 4992
    e8 = weight_enumerator(_code(8, 3), "reduced")
    assert e8.min_distance == 54
    assert e8.count(54) == 441 == 7 * 63
    assert e8.count(56) == 567 == 9 * 63
    assert e8.nonzero_weights()[2] >= 57
    assert len(e8.nonzero_weights()) <= 9


@pytest.mark.parametrize("q,m", [(3, 2), (4, 3), (5, 3)])
def test_weight_equals_orbit_size_minus_polynomial_roots(q, m):
    code = _code(q, m)
    f = code.field
    rng = np.random.default_rng(q * 100 + m)
    for _ in range(60):
        msg = [int(x) for x in rng.integers(0, f.order, code.k)]
        word = encode(code, msg)
        assert word.weight == code.n - zero_count_via_roots(code, msg)


def test_orbit_zero_polynomial_degree_bound():
    # deg <= q(m-1) - 1, which is where the distance lower bound comes from.
    for (q, m) in [(4, 3), (5, 3), (5, 4)]:
        code = _code(q, m)
        f = code.field
        rng = np.random.default_rng(q + m)
        for _ in range(20):
            msg = [int(x) for x in rng.integers(0, f.order, code.k)]
            poly = orbit_zero_polynomial(code, msg)
            if poly:
                assert max(poly) <= q * (m - 1) - 1


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8])
def test_lacunary_general_trichotomy(q):
    f = field_for_q(q)
    rng = np.random.default_rng(q)
    allowed = {0, 1, 2, q + 1}
    seen = set()
    for _ in range(500):
        a = int(rng.integers(0, f.order))
        b = int(rng.integers(0, f.order))
        count, roots = roots_of_lacunary(f, "general", a=a, b=b)
        assert count in allowed
        assert len(roots) == count == len(set(roots))
        seen.add(count)
    assert seen <= allowed


@pytest.mark.parametrize("q", [3, 4])
def test_lacunary_scaled_full_root_criterion(q):
    # tau b2 x^(q+1) + b1 x + b0 has q + 1 roots exactly when b1 = 0 and
    # b0/(tau b2) is a nonzero subfield element.
    f = field_for_q(q)
    tau = canonical_orbit_spec(f).tau
    for b2 in f.nonzero():
        for b1 in f.elements():
            for b0 in f.elements():
                count, _ = roots_of_lacunary(f, "scaled", b0=b0, b1=b1, b2=b2, tau=tau)
                ratio = f.div(b0, f.mul(tau, b2))
                full = b1 == 0 and ratio != 0 and f.in_subfield(ratio)
                assert (count == q + 1) == full


@pytest.mark.parametrize("q", [3, 4, 5])
def test_lacunary_shifted_all_coefficients(q):
    f = field_for_q(q)
    tau = canonical_orbit_spec(f).tau
    hits = 0
    for b1 in f.nonzero():
        count, roots = roots_of_lacunary(f, "shifted", b1=b1, tau=tau)
        if f.norm(f.mul(b1, tau)) == 1:
            assert count == q - 1
            hits += 1
        else:
            assert count == 0
        assert all(r != 0 for r in roots)
    assert hits == q + 1  # norm-1 coefficients come from one fiber of the norm


def test_lacunary_degenerate_forms_rejected():
    f = field_for_q(3)
    tau = canonical_orbit_spec(f).tau
    with pytest.raises(ValueError):
        roots_of_lacunary(f, "scaled", b0=1, b1=0, b2=0, tau=tau)
    with pytest.raises(ValueError):
        roots_of_lacunary(f, "shifted", b1=0, tau=tau)
    with pytest.raises(ValueError):
        roots_of_lacunary(f, "unknown", a=1, b=1)
    with pytest.raises(ValueError):
        roots_of_lacunary(f, "general", a=1)


@pytest.mark.parametrize("q", [7, 8, 9])
def test_min_weight_characterization_large_q(q):
    code = _code(q, 3)
    enum = weight_enumerator(code, "reduced")
    d = enum.min_distance
    msgs = min_weight_characterization(code)
    assert len(set(msgs)) == (q * q - 1) * (q - 1)
    assert all(encode(code, list(msg)).weight == d for msg in msgs)
    assert enum.count(d) == len(msgs)


def test_min_weight_characterization_fails_at_q5():
    code = _code(5, 3)
    enum = weight_enumerator(code, "exhaustive")
    msgs = min_weight_characterization(code)
    assert len(msgs) == 96
    assert all(encode(code, list(msg)).weight == 18 for msg in msgs)
    assert enum.count(18) == 672  # 576 minimum-weight words beyond the characterized ones


def test_characterization_needs_m3():
    with pytest.raises(ValueError):
        min_weight_characterization(_code(4, 2))


def test_weight_enumerator_to_dict():
    enum = weight_enumerator(_code(3, 2), "exhaustive")
    payload = enum.to_dict()
    assert payload["q"] == 3 and payload["m"] == 2
    assert payload["n"] == 8 and payload["k"] == 2
    assert payload["counts"] == {"0": 1, "6": 32, "8": 48}
    assert payload["method"] == "exhaustive"
    assert "elapsed_ms" in payload
