"""Acceptance criteria, all exact comparisons.

Each criterion is a function returning ``(passed, detail)``.  Under pytest one
line per criterion is collected and printed in the terminal summary; running
this file directly prints the same lines.
"""
import random
import sys
from fractions import Fraction
from math import factorial

import pytest

from cochar.freealg import (berele_drensky_crosscheck, drensky_factorization_check,
                            ideal_inclusion_witnesses, proper_dims, relfree_hilbert)
from cochar.partitions import BoundProfile, partitions_of, partitions_up_to, satisfies_profile
from cochar.series import boumova_drensky_series, formanek_product_many
from cochar.symfunc import (SchurExpansion, character_table, class_size,
                            lr_conjugate_symmetry_check, schur_expand)
from cochar.verify import (check_volichenko_conditional, poly_degree, profile_for_spec,
                           sl_invariant_series)

RESULTS: dict[int, str] = {}


def expansion(spec, n, D):
    return schur_expand(relfree_hilbert(spec, n, D).poly)


def max_part(exp, row):
    return max((lam.part(row) for lam in exp), default=0)


def hook_bound():
    seen = []
    for p in (1, 2, 3, 4):
        e = expansion((p,), 4, 6)
        seen.append(f"p={p}: max lambda_2={max_part(e, 2)}")
        if max_part(e, 2) > p - 1:
            return False, "; ".join(seen)
    return True, "; ".join(seen)


def step_bounds():
    e3, e4 = expansion((3,), 4, 6), expansion((4,), 4, 6)
    obs = (max_part(e3, 2), max_part(e3, 4), max_part(e4, 2), max_part(e4, 4))
    ok = obs[0] <= 2 and obs[1] <= 1 and obs[2] <= 3 and obs[3] <= 2
    return ok, "I_4 (l2,l4)=({},{}) I_5 (l2,l4)=({},{})".format(*obs)


def volichenko():
    rep = check_volichenko_conditional(expansion((3,), 4, 6))
    return rep.passed, f"witnesses={rep.witnesses}"


def formanek():
    bad = []
    for spec in [(1, 1), (2, 1), (2, 2), (1, 1, 1)]:
        direct = relfree_hilbert(spec, 2, 5).poly
        parts = [relfree_hilbert((p,), 2, 5) for p in spec]
        if direct != formanek_product_many(parts, 2, 5).poly:
            bad.append(spec)
    return not bad, f"mismatches={bad}"


def boumova_drensky():
    bad = []
    for k in (2, 3):
        for n in (2, 3):
            if relfree_hilbert((1,) * k, n, 6).poly != boumova_drensky_series(k, n, 6).poly:
                bad.append((k, n))
    return not bad, f"mismatches={bad}"


def factorization():
    bad = [s for s in [(1,), (2,), (3,), (2, 1)] if not drensky_factorization_check(s, 2, 5)]
    return not bad, f"mismatches={bad}"


def berele_drensky():
    bad = [(s, m) for s in [(1,), (2,), (1, 1)] for m in range(1, 6)
           if not berele_drensky_crosscheck(s, m)]
    return not bad, f"mismatches={bad}"


def inclusions():
    forward = {"I3I2 in I4": ((2, 1), (3,)), "I3I3 in I5": ((2, 2), (4,))}
    details, ok = [], True
    for name, (a, b) in forward.items():
        held = not ideal_inclusion_witnesses(a, b, 2, 6)
        reverse = ideal_inclusion_witnesses(b, a, 2, 6)
        ok = ok and held and bool(reverse)
        details.append(f"{name}: {held}, reverse witness {reverse[0] if reverse else None}")
    return ok, "; ".join(details)


def finiteness():
    details, ok = [], True
    for n in (2, 3):
        dims = proper_dims((2,), n, 8).by_degree()
        last = max(d for d, v in enumerate(dims) if v)
        ok = ok and last < 8
        details.append(f"I_3 n={n} zero from degree {last + 1}")
    dims = proper_dims((1, 1), 2, 8).by_degree()
    even = all(dims[d] for d in range(0, 9, 2))
    ok = ok and even
    details.append(f"I_2I_2 even degrees {[dims[d] for d in range(0, 9, 2)]}")
    return ok, "; ".join(details)


def invariants():
    grassmann = sl_invariant_series(expansion((2,), 2, 4), 2)
    prof = profile_for_spec((2,))
    ok = grassmann == [1, 0, 1] and poly_degree(grassmann) <= 2 * prof.s2
    commutative = [sl_invariant_series(expansion((1,), n, 6), n) for n in (2, 3)]
    ok = ok and all(c == [1] for c in commutative)
    return ok, f"I_3 n=2: {grassmann}; I_2 n=2,3: {commutative}"


def symmetric_core():
    rng = random.Random(20261016)
    for _ in range(60):
        n = rng.randint(1, 4)
        pool = partitions_up_to(8, n)
        coeffs = {rng.choice(pool): rng.randint(1, 4) for _ in range(rng.randint(1, 4))}
        e = SchurExpansion(n, coeffs)
        if schur_expand(e.to_sympoly()) != e:
            return False, f"round trip failed for {coeffs}"
    for total in range(9):
        for a in range(total + 1):
            for mu in partitions_of(a):
                for nu in partitions_of(total - a):
                    if not lr_conjugate_symmetry_check(mu, nu):
                        return False, f"LR symmetry failed for {mu}, {nu}"
    for m in range(1, 8):
        classes = partitions_of(m)
        table = character_table(m)
        for x in classes:
            for y in classes:
                s = sum(table[lam][x] * table[lam][y] for lam in classes)
                if s != (Fraction(factorial(m), class_size(x)) if x == y else 0):
                    return False, f"orthogonality failed at m={m}"
    return True, "round trip x60, LR symmetry |mu|+|nu|<=8, orthogonality m<=7"


def product_additivity():
    D = 6
    e = expansion((2, 2), 3, D)
    prof = BoundProfile(omega0=2, omega1=2, s1=None, s2=3)
    contained = all(satisfies_profile(lam, prof) for lam in e)
    witnesses = {row: [lam for lam in e if lam.part(row) >= D - 2] for row in (1, 2)}
    attained = all(witnesses.values())
    detail = (f"support in profile: {contained}; "
              f"max lambda_2={max_part(e, 2)} (needs >= {D - 2}); "
              f"witness lambda_1: {witnesses[1][0] if witnesses[1] else None}")
    return contained and attained, detail


CRITERIA = {
    1: ("hook bound for Lie nilpotent varieties", hook_bound),
    2: ("step bounds lambda_2, lambda_4", step_bounds),
    3: ("I_4 conditionals", volichenko),
    4: ("product series formula", formanek),
    5: ("closed form for powers of I_2", boumova_drensky),
    6: ("proper factorization", factorization),
    7: ("S_m and GL routes agree", berele_drensky),
    8: ("ideal inclusions", inclusions),
    9: ("proper subalgebra finiteness", finiteness),
    10: ("SL(n) invariants", invariants),
    11: ("symmetric function core", symmetric_core),
    12: ("product additivity of shapes", product_additivity),
}


def run_criterion(number):
    name, fn = CRITERIA[number]
    ok, detail = fn()
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {name}: {detail}"
    RESULTS[number] = line
    print(line)
    return ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, line = run_criterion(number)
    assert ok, line


if __name__ == "__main__":
    failures = 0
    for number in sorted(CRITERIA):
        failures += not run_criterion(number)[0]
    sys.exit(1 if failures else 0)
