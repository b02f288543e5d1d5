"""One check per quantitative claim about the codes, each returning a
structured report comparing the closed-form value against enumeration.

Statuses:

* ``pass`` / ``fail``   -- expected equals observed, or not.
* ``paper-inconsistent`` -- the mismatch is a documented exception (the
  q = 5 minimum-weight count 672 and second weight 19, the q = 7
  second-weight count 4992); the exceptional value itself is asserted
  by its own ``exception.*`` claim.
* ``skipped(hypothesis)`` -- the claim's stated range excludes this q;
  the observation is still recorded in the detail.

Brute-force enumeration is the arbiter throughout.  At q <= 5 (and for
the q = 7 cubic code) the reduced enumerator is never trusted alone:
the exhaustive one must agree exactly before any claim is judged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from . import agcode, weights
from .curve import HermitianCurve, all_orbit_specs, on_c_tau, orbit_of
from .gf import field_for_q
from .weights import weight_enumerator

SUITE_QS = (3, 4, 5, 7, 8)

# (q, m) pairs whose full weight enumerator is computed in the suite.
ENUMERABLE = {(3, 2), (4, 2), (4, 3), (5, 2), (5, 3), (5, 4), (7, 2), (7, 3), (8, 2), (8, 3)}


@dataclass
class ClaimReport:
    claim_id: str
    params: dict
    expected: object
    observed: object
    status: str
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "params": self.params,
            "expected": self.expected,
            "observed": self.observed,
            "status": self.status,
            "detail": self.detail,
        }


def _judge(claim_id: str, params: dict, expected, observed, detail: str = "") -> ClaimReport:
    status = "pass" if expected == observed else "fail"
    return ClaimReport(claim_id, params, expected, observed, status, detail)


@lru_cache(maxsize=None)
def code_for(q: int, m: int) -> agcode.LinearCode:
    return agcode.build_code(field_for_q(q), m)


def checked_enumerator(code: agcode.LinearCode, jobs: int | None = None) -> weights.WeightEnumerator:
    """Enumerator with the cross-check policy: wherever the exhaustive
    route is feasible for a small-q code, run both routes and insist on
    exact agreement."""
    q, k = code.q, code.k
    space = code.field.order**k
    cross_check = q <= 5 or (q == 7 and code.m == 3)
    if cross_check and space <= weights.EXHAUSTIVE_GUARD:
        ex = weight_enumerator(code, "exhaustive", jobs)
        red = weight_enumerator(code, "reduced", jobs)
        if ex != red:
            raise RuntimeError(
                f"enumerator mismatch at q={q}, m={code.m}: "
                f"exhaustive {ex.counts} vs reduced {red.counts}"
            )
        return ex
    return weight_enumerator(code, "auto", jobs)


# -- orbit containment ----------------------------------------------------


def check_orbit_containment(q: int, tau: int | None = None, jobs: int | None = None) -> ClaimReport:
    """Every point of every stabilizer orbit lies on the Hermitian curve
    and on the companion curve for that orbit's tau (or a supplied tau,
    which the perturbation tests use)."""
    fld = field_for_q(q)
    curve = HermitianCurve(fld)
    specs = all_orbit_specs(fld)
    violations = 0
    points_seen = 0
    for spec in specs:
        t = spec.tau if tau is None else tau
        for point in orbit_of(spec):
            points_seen += 1
            if not (curve.membership(point) and on_c_tau(fld, t, point)):
                violations += 1
    detail = f"{len(specs)} orbits x {fld.order - 1} points, {points_seen} points checked"
    return _judge(
        f"orbit.on-both-curves.q{q}", {"q": q},
        {"points_off_either_curve": 0},
        {"points_off_either_curve": violations},
        detail,
    )


# -- code parameters -------------------------------------------------------


def check_code_parameters(q: int, m: int, jobs: int | None = None) -> ClaimReport:
    code = code_for(q, m)
    expected = {"n": q * q - 1, "k": m * (m - 1) // 2 + 1, "cyclic": True}
    observed = {"n": code.n, "k": code.k, "cyclic": agcode.check_cyclic(code)}
    return _judge(f"code.params.q{q}.m{m}", {"q": q, "m": m}, expected, observed)


# -- distance bounds -------------------------------------------------------


def check_distance_bounds(q: int, m: int, jobs: int | None = None) -> ClaimReport:
    """The enumerated minimum distance sits inside the proven window,
    the witness codeword attains the upper end, and the improvement on
    the designed distance is at least q + 1 - m."""
    code = code_for(q, m)
    enum = checked_enumerator(code, jobs)
    d = enum.min_distance
    lower = q * q - q * (m - 1)
    upper = q * q - 1 - (m - 2) * (q + 1)
    designed = code.n - m * (q - 1)
    _, word = weights.upper_bound_witness(code)
    expected = {"within_bounds": True, "witness_weight": upper, "improvement_ok": True}
    observed = {
        "within_bounds": lower <= d <= upper,
        "witness_weight": word.weight,
        "improvement_ok": d - designed >= q + 1 - m,
    }
    detail = f"d={d}, bounds=[{lower},{upper}], designed={designed}, method={enum.method}"
    return _judge(f"distance.bounds.q{q}.m{m}", {"q": q, "m": m}, expected, observed, detail)


# -- the two-weight codes (m = 2) -----------------------------------------


def check_two_weight(q: int, jobs: int | None = None) -> ClaimReport:
    code = code_for(q, 2)
    enum = checked_enumerator(code, jobs)
    n2 = q * q - 1
    expected = {
        "weights": {q * q - q: n2 * (q + 1), n2: q * (q - 1) * n2},
        "cyclic": True,
    }
    observed = {
        "weights": {w: enum.count(w) for w in enum.nonzero_weights()},
        "cyclic": agcode.check_cyclic(code),
    }
    return _judge(f"two-weight.distribution.q{q}", {"q": q, "m": 2}, expected, observed,
                  f"method={enum.method}")


# -- the m = 3 codes -------------------------------------------------------

_Q5_MIN_COUNT = 672
_Q5_SECOND_WEIGHT = 19
_Q7_SECOND_COUNT = 4992


def check_cubic_weights(q: int, jobs: int | None = None) -> list[ClaimReport]:
    """Weight-distribution facts of the m = 3 code: distance, counts at
    the two lowest weights, the third-weight bound, the bound on the
    number of distinct weights, and the documented q = 5 / q = 7
    exceptional values."""
    params = {"q": q, "m": 3}
    code = code_for(q, 3)
    enum = checked_enumerator(code, jobs)
    n2 = q * q - 1
    nz = enum.nonzero_weights()
    d = enum.min_distance
    second = nz[1] if len(nz) > 1 else None
    third = nz[2] if len(nz) > 2 else None
    claims = [
        _judge(f"m3.distance.q{q}", params, q * q - q - 2, d, f"method={enum.method}")
    ]

    min_count_formula = (q - 1) * n2
    observed_min_count = enum.count(d)
    rep = _judge(f"m3.min-count.q{q}", params, min_count_formula, observed_min_count)
    if rep.status == "fail" and q == 5 and observed_min_count == _Q5_MIN_COUNT:
        rep.status = "paper-inconsistent"
        rep.detail = "documented exception: 672 observed against the formula value 96"
    claims.append(rep)

    second_formula = q * q - q
    if q >= 7:
        claims.append(_judge(f"m3.second-weight.q{q}", params, second_formula, second))
    else:
        claims.append(ClaimReport(
            f"m3.second-weight.q{q}", params, second_formula, second,
            "skipped(hypothesis)", f"stated for q >= 7 only; observed {second}"))
    if q == 5:
        claims.append(_judge(f"m3.exception.q5.second-weight", params,
                             _Q5_SECOND_WEIGHT, second,
                             "documented exceptional second weight"))
        claims.append(_judge(f"m3.exception.q5.min-count", params,
                             _Q5_MIN_COUNT, observed_min_count,
                             "documented exceptional minimum-weight count (672 > 96)"))

    second_count_formula = (q + 1) * n2
    observed_second_count = enum.count(second) if second is not None else 0
    if q >= 8:
        claims.append(_judge(f"m3.second-count.q{q}", params,
                             second_count_formula, observed_second_count))
    else:
        claims.append(ClaimReport(
            f"m3.second-count.q{q}", params, second_count_formula, observed_second_count,
            "skipped(hypothesis)",
            f"stated for q >= 8 only; observed {observed_second_count}"))
    if q == 7:
        claims.append(_judge(f"m3.exception.q7.second-count", params,
                             _Q7_SECOND_COUNT, observed_second_count,
                             "documented exceptional second-weight count (4992 > 384); "
                             f"the minimum-weight count itself is {observed_min_count}"))

    if q >= 8:
        claims.append(_judge(
            f"m3.third-weight.q{q}", params, {"third_ge_bound": True},
            {"third_ge_bound": third is not None and third >= q * q - 7},
            f"third weight observed {third}, bound {q * q - 7}; equality not asserted"))
    else:
        claims.append(ClaimReport(
            f"m3.third-weight.q{q}", params, {"third_ge_bound": True},
            {"third_ge_bound": third is not None and third >= q * q - 7},
            "skipped(hypothesis)", f"stated for q >= 8 only; observed third weight {third}"))

    claims.append(_judge(
        f"m3.weight-variety.q{q}", params, {"at_most_nine_distinct": True},
        {"at_most_nine_distinct": len(nz) <= 9},
        f"{len(nz)} distinct nonzero weights; read as a bound on distinct weights"))
    return claims


# -- minimum-weight characterization (m = 3) -------------------------------


def check_min_weight_characterization(q: int, jobs: int | None = None) -> ClaimReport:
    """The minimum-weight codewords of the m = 3 code are exactly the
    evaluations of y(b0 + b2 y)/x^3 with b2 != 0 and b0/(tau b2) a
    nonzero subfield element: every characterized word has minimum
    weight, they are pairwise distinct, and their number (q^2-1)(q-1)
    exhausts the enumerated count.  Stated for q > 5; fails at q = 5
    where 672 > 96, which is the documented exception."""
    params = {"q": q, "m": 3}
    code = code_for(q, 3)
    enum = checked_enumerator(code, jobs)
    d = enum.min_distance
    msgs = weights.min_weight_characterization(code)
    formula = (q * q - 1) * (q - 1)
    all_min = all(agcode.encode(code, list(msg)).weight == d for msg in msgs)
    distinct = len(set(msgs))
    observed_count = enum.count(d)
    expected = {"size": formula, "all_min_weight": True, "count_at_min": formula}
    observed = {"size": distinct, "all_min_weight": all_min, "count_at_min": observed_count}
    rep = _judge(f"min-weight.characterization.q{q}", params, expected, observed,
                 f"d={d}, characterized={distinct}, enumerated={observed_count}")
    if rep.status == "fail" and q == 5 and observed_count == _Q5_MIN_COUNT:
        rep.status = "paper-inconsistent"
        rep.detail += "; documented exception at q=5 (672 > 96)"
    return rep


# -- orbit-choice observation ----------------------------------------------


def check_orbit_choice_enumerators(q: int, jobs: int | None = None) -> ClaimReport:
    """Record the weight enumerators obtained from every stabilizer
    orbit as the evaluation set; report whether they coincide without
    asserting either outcome."""
    fld = field_for_q(q)
    specs = all_orbit_specs(fld)
    outcomes = {}
    for m in range(2, q):
        per_orbit = []
        for spec in specs:
            code = agcode.build_code(fld, m, spec)
            per_orbit.append(weight_enumerator(code, "exhaustive", jobs).counts)
        outcomes[m] = all(c == per_orbit[0] for c in per_orbit)
    verdict = {f"m={m}": ("identical" if same else "differs") for m, same in outcomes.items()}
    detail = (f"{len(specs)} orbit choices per m; equality recorded as an observation, "
              "not asserted")
    return ClaimReport(f"orbit-choice.enumerators.q{q}", {"q": q},
                       {"recorded": True}, {"recorded": True, **verdict}, "pass", detail)


# -- suite ------------------------------------------------------------------


def run_suite(qs=SUITE_QS, jobs: int | None = None) -> list[ClaimReport]:
    claims: list[ClaimReport] = []
    for q in qs:
        claims.append(check_orbit_containment(q, jobs=jobs))
        for m in range(2, q):
            claims.append(check_code_parameters(q, m, jobs=jobs))
            if (q, m) in ENUMERABLE:
                claims.append(check_distance_bounds(q, m, jobs=jobs))
        claims.append(check_two_weight(q, jobs=jobs))
        if q >= 4:
            claims.extend(check_cubic_weights(q, jobs=jobs))
        if q >= 5:
            claims.append(check_min_weight_characterization(q, jobs=jobs))
        if q in (3, 4):
            claims.append(check_orbit_choice_enumerators(q, jobs=jobs))
    return claims


def checks_for(q: int, m: int | None, jobs: int | None = None) -> list[ClaimReport]:
    """The claims touching one (q, m); with m omitted, everything for q."""
    if m is None:
        return run_suite((q,), jobs=jobs)
    claims = [check_orbit_containment(q, jobs=jobs), check_code_parameters(q, m, jobs=jobs)]
    if (q, m) in ENUMERABLE:
        claims.append(check_distance_bounds(q, m, jobs=jobs))
    if m == 2:
        claims.append(check_two_weight(q, jobs=jobs))
    if m == 3:
        claims.extend(check_cubic_weights(q, jobs=jobs))
        if q >= 5:
            claims.append(check_min_weight_characterization(q, jobs=jobs))
    return claims


def exit_status(claims: list[ClaimReport]) -> int:
    return 1 if any(c.status == "fail" for c in claims) else 0


def claims_to_json(claims: list[ClaimReport]) -> str:
    return json.dumps([c.to_dict() for c in claims], sort_keys=True, separators=(",", ":")) + "\n"
