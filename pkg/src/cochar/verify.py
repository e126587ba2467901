"""Checks of shape bounds, product formulas and invariant degrees on computed data.

Shape quantities (omega0, s2, ...) are never estimated from data.  They are
assigned from known formulas by :func:`profile_for_spec` and the truncated
data is checked against them.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import InsufficientTruncation
from .freealg import WorkLimits, ideal_inclusion_witnesses, relfree_hilbert
from .partitions import BoundProfile, is_rectangle, satisfies_profile, step_bounds_for
from .series import IdealSpec, formanek_product_many
from .symfunc import SchurExpansion, schur_expand

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

# Conjugate-side cap lambda'_2 <= s1 for a single factor I_{p+1}, where known:
# commutative (p=1), Grassmann (p=2) and I_4 (p=3).
_SINGLE_S1 = {1: 1, 2: 1, 3: 3}


def _plain(x):
    if isinstance(x, (tuple, list)):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, IdealSpec):
        return x.cli_form()
    return x


@dataclass
class VerificationReport:
    """Outcome of one check; a failing verdict always carries witnesses."""

    claim: str
    params: dict
    verdict: str
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    observations: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in (PASS, FAIL, SKIPPED):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == FAIL and not self.witnesses:
            raise ValueError("a failing report needs witnesses")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json(self) -> dict:
        out = {"claim": self.claim, "params": _plain(self.params),
               "verdict": self.verdict, "witnesses": _plain(self.witnesses)}
        if self.notes:
            out["notes"] = list(self.notes)
        if self.observations:
            out["observations"] = _plain(self.observations)
        return out

    def to_text(self) -> str:
        params = " ".join(f"{k}={_fmt(v)}" for k, v in self.params.items())
        lines = [f"{self.claim:<14} {self.verdict:<8} {params}"]
        if self.witnesses:
            lines.append("  witnesses: " + "; ".join(_fmt(w) for w in self.witnesses))
        for k, v in self.observations.items():
            lines.append(f"  {k}: {_fmt(v)}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


def _fmt(x) -> str:
    if isinstance(x, IdealSpec):
        return x.cli_form()
    if isinstance(x, dict):
        return "{" + ", ".join(f"{k}: {_fmt(v)}" for k, v in x.items()) + "}"
    if isinstance(x, (tuple, list)):
        return "(" + ",".join(_fmt(y) for y in x) + ")"
    return str(x)


def reports_to_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2)


# ----------------------------------------------------------------- profiles


def _conj_caps(p: int) -> list[tuple[int, int]]:
    half = p // 2
    if p % 2 == 0:
        return [(half + 1, 2 * half - 1)]
    if half == 0:
        return []
    return [(half + 1, 2 * half + 1)]


def profile_for_spec(spec) -> BoundProfile:
    """Shape caps for the product ``I_{p_1+1} ... I_{p_k+1}``.

    ``omega0 = k`` and ``s2 = sum p - 1``, with ``lambda_{2k} <= sum p - k``.
    ``omega1 = k`` is exact only when every ``p_i >= 2``; otherwise it is an
    upper bound (``omega1_exact`` False).  ``s1`` is the sum of the known
    single-factor values plus ``k - 1``, or None if a factor has none.
    """
    spec = IdealSpec.parse(spec)
    k, total = spec.k, spec.total
    steps = {(2 * k, total - k)}
    conj: list[tuple[int, int]] = []
    if k == 1:
        p = spec.factors[0]
        steps.update(step_bounds_for(p))
        conj = _conj_caps(p)
    singles = [_SINGLE_S1.get(p) for p in spec.factors]
    s1 = None if None in singles else sum(singles) + k - 1
    return BoundProfile(
        omega0=k, omega1=k, s1=s1, s2=total - 1,
        step_bounds=tuple(sorted(steps)), conj_bounds=tuple(conj),
        omega1_exact=all(p >= 2 for p in spec.factors))


def _profile_params(b: BoundProfile) -> dict:
    out = {"omega0": b.omega0, "omega1": b.omega1, "s2": b.s2}
    if b.s1 is not None:
        out["s1"] = b.s1
    if b.step_bounds:
        out["step_bounds"] = [list(x) for x in b.step_bounds]
    if b.conj_bounds:
        out["conj_bounds"] = [list(x) for x in b.conj_bounds]
    return out


def _observed_rows(expansion: SchurExpansion, b: BoundProfile) -> dict:
    rows = sorted({b.omega0 + 1} | {r for r, _ in b.step_bounds})
    return {f"max lambda_{r}": max((lam.part(r) for lam in expansion), default=0)
            for r in rows}


def check_bounds(expansion: SchurExpansion, profile: BoundProfile) -> VerificationReport:
    """Every partition in the support satisfies the profile."""
    bad = [lam for lam in expansion if not satisfies_profile(lam, profile)]
    return VerificationReport(
        "bounds", _profile_params(profile), FAIL if bad else PASS, bad,
        observations=_observed_rows(expansion, profile))


def check_volichenko_conditional(expansion: SchurExpansion) -> VerificationReport:
    """For I_4: ``lambda_2 = 2`` forces ``lambda_4 = 0`` and ``lambda_4 = 1`` forces ``lambda_2 = 1``."""
    bad = []
    for lam in expansion:
        if lam.part(2) == 2 and lam.part(4) != 0:
            bad.append(lam)
        elif lam.part(4) == 1 and lam.part(2) != 1:
            bad.append(lam)
    return VerificationReport("volichenko", {"spec": "3"}, FAIL if bad else PASS, bad)


def check_formanek(spec, n: int, D: int, limits: WorkLimits | None = None) -> VerificationReport:
    """Brute-force series of the product equals the product formula on its factors."""
    spec = IdealSpec.parse(spec)
    direct = relfree_hilbert(spec, n, D, limits).poly
    parts = [relfree_hilbert((p,), n, D, limits) for p in spec.factors]
    formula = formanek_product_many(parts, n, D).poly
    diff = direct - formula
    bad = sorted(diff.terms, key=lambda e: (sum(e), e))
    return VerificationReport("formanek", {"spec": spec, "n": n, "D": D},
                              FAIL if bad else PASS, bad)


# ---------------------------------------------------------------- invariants


def sl_invariant_series(expansion: SchurExpansion, n: int) -> list[int]:
    """Coefficients of the SL(n)-invariant Hilbert polynomial (index = degree).

    Sums the multiplicities of rectangular partitions of height n, the empty
    partition included.  Trailing zeros are dropped.
    """
    coeffs: dict[int, int] = {}
    for lam, c in expansion.items():
        if is_rectangle(lam, n):
            coeffs[lam.weight] = coeffs.get(lam.weight, 0) + c
    out = [coeffs.get(i, 0) for i in range(max(coeffs, default=-1) + 1)]
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_degree(coeffs: list[int]) -> int:
    """Degree of a coefficient list; -1 for the zero polynomial."""
    return len(coeffs) - 1


def format_univariate(coeffs: list[int], var: str = "t") -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"


def sl_degree_bounds(spec, n: int) -> list[tuple[str, int]]:
    """Applicable degree bounds ``(name, value)`` for the invariant polynomial."""
    spec = IdealSpec.parse(spec)
    prof = profile_for_spec(spec)
    out = []
    if n > prof.omega0:
        out.append(("n*s2", n * prof.s2))
    if n > spec.k and prof.s1 is not None and n > prof.s1:
        out.append(("n*omega1", n * prof.omega1))
    if spec.k <= n - 1:
        out.append(("n*(sum p - k)", n * (spec.total - spec.k)))
    return out


def check_sl_degree_bounds(spec, n: int, D: int,
                           limits: WorkLimits | None = None) -> VerificationReport:
    """Degree of the truncated invariant polynomial against the known bounds."""
    spec = IdealSpec.parse(spec)
    params = {"spec": spec, "n": n, "D": D}
    if spec.k > n - 1:
        return VerificationReport("sl-invariants", params, SKIPPED,
                                  notes=[f"needs k <= n - 1, got k={spec.k}, n={n}"])
    bounds = sl_degree_bounds(spec, n)
    main = dict(bounds)["n*(sum p - k)"]
    if D < main:
        raise InsufficientTruncation(f"D={D} is below the degree bound {main}")
    coeffs = sl_invariant_series(schur_expand(relfree_hilbert(spec, n, D, limits).poly), n)
    deg = poly_degree(coeffs)
    failed = [(name, b) for name, b in bounds if deg > b]
    witnesses = []
    if failed:
        lowest = min(b for _, b in failed)
        witnesses = [i for i, c in enumerate(coeffs) if c and i > lowest]
    notes = [f"bound {name} = {b} violated" for name, b in failed]
    return VerificationReport(
        "sl-invariants", params, FAIL if failed else PASS, witnesses, notes,
        observations={"series": format_univariate(coeffs), "degree": deg,
                      "bounds": {name: b for name, b in bounds}})


# ---------------------------------------------------------------- products


def product_profile(a: BoundProfile, b: BoundProfile) -> BoundProfile:
    """Caps for a product of two T-ideals from the caps of the factors."""
    s1 = None if a.s1 is None or b.s1 is None else a.s1 + b.s1 + 1
    return BoundProfile(a.omega0 + b.omega0, a.omega1 + b.omega1, s1, a.s2 + b.s2 + 1,
                        omega1_exact=a.omega1_exact and b.omega1_exact)


def check_product_additivity(spec_a, spec_b, n: int, D: int,
                             limits: WorkLimits | None = None) -> VerificationReport:
    """Support of the product's expansion lies in the additive profile.

    The verdict is decided by containment.  Whether the rows up to omega0
    reach ``D - 2`` somewhere in the support (a truncation stand-in for
    "arbitrarily large") is reported under ``observations`` only, since at
    small D that row value may not fit in any partition of weight <= D.
    """
    a, b = IdealSpec.parse(spec_a), IdealSpec.parse(spec_b)
    params = {"specA": a, "specB": b, "n": n, "D": D}
    if a.k >= n or b.k >= n:
        return VerificationReport("additivity", params, SKIPPED,
                                  notes=["factor profiles need k < n"])
    prof = product_profile(profile_for_spec(a), profile_for_spec(b))
    product = IdealSpec(a.factors + b.factors)
    expansion = schur_expand(relfree_hilbert(product, n, D, limits).poly)
    bad = [lam for lam in expansion if not satisfies_profile(lam, prof)]
    target = D - 2
    attained = {}
    for row in range(1, min(prof.omega0, n) + 1):
        wit = [lam for lam in expansion if lam.part(row) >= target]
        attained[f"lambda_{row} >= {target}"] = wit[0] if wit else None
    obs = {"profile": _profile_params(prof),
           "max rows": {f"lambda_{r}": max((lam.part(r) for lam in expansion), default=0)
                        for r in range(1, min(prof.omega0, n) + 1)},
           "attainment": attained,
           "all attained": all(w is not None for w in attained.values())}
    return VerificationReport("additivity", params, FAIL if bad else PASS, bad,
                              observations=obs)


def check_inclusion(spec_a, spec_b, n: int, D: int,
                    limits: WorkLimits | None = None) -> VerificationReport:
    a, b = IdealSpec.parse(spec_a), IdealSpec.parse(spec_b)
    bad = ideal_inclusion_witnesses(a, b, n, D, limits)
    return VerificationReport("inclusion", {"specA": a, "specB": b, "n": n, "D": D},
                              FAIL if bad else PASS, bad)


def bounds_suite(spec, n: int, D: int, limits: WorkLimits | None = None) -> list[VerificationReport]:
    """Profile check for ``spec`` plus the I_4 conditionals when they apply."""
    spec = IdealSpec.parse(spec)
    params = {"spec": spec, "n": n, "D": D}
    if spec.k >= n:
        return [VerificationReport("bounds", params, SKIPPED,
                                   notes=[f"profile needs k < n, got k={spec.k}, n={n}"])]
    expansion = schur_expand(relfree_hilbert(spec, n, D, limits).poly)
    rep = check_bounds(expansion, profile_for_spec(spec))
    rep.params = {**params, **rep.params}
    out = [rep]
    if spec.factors == (3,):
        vol = check_volichenko_conditional(expansion)
        vol.params = dict(params)
        out.append(vol)
    return out

