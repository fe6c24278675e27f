"""Acceptance suite: one PASS/FAIL line per criterion, with its runtime.

Run with ``pytest tests/test_acceptance.py -v`` (lines are printed even
without ``-s``) or directly with ``python3 tests/test_acceptance.py``.
Set BRAUERC_SLOW=1 to include the rank 4 cover check of criterion 5.
"""

import os
import time

import pytest

from brauerc.diagrams import Monomial, enumerate_diagrams, evaluate_word, is_symmetric
from brauerc.relations import relation_suite_A, relation_suite_C
from brauerc.roots import act_left, act_word, act_word_right, act_right, all_admissible_sets, is_admissible_C, make_root_c, top
from brauerc.structure import check_decomposition, check_filtration, decompose, parabolic_rank, tl_subalgebra
from brauerc.typec.counting import count_closed, count_recursion, count_symmetric_matchings
from brauerc.typec.normal_form import normal_form_basis
from brauerc.typec.weyl import orbit_size, parities, stabilizer_and_cosets
from brauerc.typec.words import B_set, eval_C

from oracles import bfs_orbit

TABLE = [1, 1, 3, 7, 25, 81, 331, 1303, 5937]
SLOW = os.environ.get("BRAUERC_SLOW") == "1"

# the 25 spanning monomials for rank 2, written out from the brace notation
GOLDEN_WORDS = (
    ["", "r0", "r1", "r0,r1", "r1,r0", "r1,r0,r1", "r0,r1,r0,r1", "r0,r1,r0"]
    + [
        ",".join(filter(None, (a, "e0", b, c)))
        for a in ("", "r1")
        for b in ("", "r1,r0,r1")
        for c in ("", "r1")
    ]
    + [",".join(filter(None, (a, "e1", b))) for a in ("", "r0", "e0") for b in ("", "r0", "e0")]
)


def _emit(line):
    print(line, flush=True)


@pytest.fixture
def criterion(capsys):
    def run(k, title, check, limit):
        start = time.perf_counter()
        try:
            ok, detail = check()
        except Exception as exc:  # report, then fail below
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        seconds = time.perf_counter() - start
        in_time = seconds < limit
        status = "PASS" if ok and in_time else "FAIL"
        line = f"{status} criterion {k}: {title}; {detail} ({seconds:.2f}s, limit {limit:g}s)"
        with capsys.disabled():
            _emit("\n" + line)
        assert ok, line
        assert in_time, line

    return run


def check_counting():
    rec = [count_recursion(k) for k in range(9)]
    closed = [count_closed(n) for n in range(5)]
    ok = rec == TABLE and closed == TABLE[::2]
    return ok, f"recursion {rec}, closed {closed}"


def check_symmetric_enumeration():
    counts = [sum(1 for d in enumerate_diagrams(2 * n) if is_symmetric(d)) for n in range(1, 5)]
    return counts == [3, 25, 331, 5937], f"counts {counts}"


def check_relations():
    failures = 0
    checks = 0
    for n in range(2, 6):
        for report in (relation_suite_C(n), relation_suite_A(2 * n)):
            failures += len(report.failures)
            checks += len(report.checks)
    return failures == 0, f"{checks} instances, {failures} failures"


def check_golden_basis():
    monomials = [eval_C(w, 2) for w in GOLDEN_WORDS]
    diagrams = {m.diagram for m in monomials}
    layers = [0, 0, 0]
    for m in monomials:
        layers[len(top(m))] += 1
    symmetric = {d for d in enumerate_diagrams(4) if is_symmetric(d)}
    ok = len(GOLDEN_WORDS) == 25 and len(diagrams) == 25 and layers == [8, 8, 9] and diagrams == symmetric
    return ok, f"{len(diagrams)} distinct diagrams, layers {layers}"


def check_normal_forms(ranks, full_cover):
    sizes = []
    ok = True
    for n in ranks:
        basis = normal_form_basis(n)
        diagrams = {m.diagram for _, m in basis}
        ok &= len(diagrams) == len(basis) == count_symmetric_matchings(2 * n) == TABLE[2 * n]
        ok &= all(is_symmetric(d) for d in diagrams)
        if full_cover:
            ok &= diagrams == {d for d in enumerate_diagrams(2 * n) if is_symmetric(d)}
        sizes.append(len(diagrams))
    return ok, f"ranks {list(ranks)} give {sizes} distinct symmetric diagrams"


def check_orbits():
    cases = 0
    ok = True
    for n in range(1, 5):
        moves = [eval_C([f"r{j}"], n).diagram for j in range(n)]
        for i in range(n + 1):
            for p in parities(i):
                orbit = bfs_orbit(B_set(i, p, n), [lambda S, g=g: frozenset(act_left(g, S)) for g in moves])
                ok &= len(orbit) == orbit_size(n, i, p) == len(stabilizer_and_cosets(n, i, p).D)
                cases += 1
    return ok, f"{cases} (n, i, p) cases"


def check_uvw():
    totals = []
    bad = 0
    for N in (4, 6):
        count = 0
        for d in enumerate_diagrams(N):
            a = Monomial(0, d)
            dec = decompose(a)
            bad += bool(check_decomposition(a, dec)) or dec.k != len(dec.B)
            count += 1
        totals.append(count)
    return totals == [105, 10395] and bad == 0, f"{totals} diagrams, {bad} failures"


def check_admissibility():
    mk = make_root_c
    got = [
        is_admissible_C([mk((0, 1)), mk((1, 1))], 2),
        is_admissible_C([mk((1, 0)), mk((1, 2))], 2),
        is_admissible_C([mk((0, 1, 0, 0)), mk((0, 0, 0, 1))], 4),
    ]
    return got == [False, True, True], f"results {got}"


def check_filtrations():
    parts = []
    ok = True
    for n in (2, 3):
        report = check_filtration(n)
        ok &= report.ok and not check_filtration(n, corrupt=True).ok
        parts.append(f"n={n}: {report.checks} checks")
    return ok, ", ".join(parts) + ", corrupted datum rejected"


def check_parabolic():
    ranks = [parabolic_rank(2, [1]), parabolic_rank(3, [1, 2]), parabolic_rank(3, [0, 1])]
    tl = tl_subalgebra(2)
    return ranks == [3, 15, 25] and tl.size == 6 and tl.ok, f"ranks {ranks}, TL size {tl.size}"


def check_two_actions():
    cases = 0
    bad = 0
    for N in range(2, 7):
        for B in all_admissible_sets(N):
            for i in range(1, N):
                for letter in "RE":
                    token = f"{letter}{i}"
                    g = evaluate_word(token, N)
                    bad += act_word(token, B, N) != act_left(g, B)
                    bad += act_word_right(B, token, N) != act_right(B, g)
                    cases += 1
    return bad == 0, f"{cases} (generator, set) pairs on up to 6 strands, {bad} mismatches"


def test_criterion_1_counting(criterion):
    criterion(1, "counting table", check_counting, 1)


def test_criterion_2_symmetric_enumeration(criterion):
    criterion(2, "symmetric enumeration", check_symmetric_enumeration, 30)


def test_criterion_3_relations(criterion):
    criterion(3, "homomorphism relation suite", check_relations, 60)


def test_criterion_4_golden_basis(criterion):
    criterion(4, "rank 2 spanning monomials", check_golden_basis, 10)


def test_criterion_5_normal_forms(criterion):
    criterion(5, "normal form bijection n=2,3", lambda: check_normal_forms((2, 3), True), 10)


@pytest.mark.slow
def test_criterion_5_normal_forms_rank_4(criterion):
    criterion(5, "normal form bijection n=4", lambda: check_normal_forms((4,), True), 300)


def test_criterion_6_orbits(criterion):
    criterion(6, "orbit sizes", check_orbits, 60)


def test_criterion_7_uvw(criterion):
    criterion(7, "UVW decomposition", check_uvw, 60)


def test_criterion_8_admissibility(criterion):
    criterion(8, "admissibility examples", check_admissibility, 10)


def test_criterion_9_filtration(criterion):
    criterion(9, "filtration structure", check_filtrations, 120)


def test_criterion_10_parabolic(criterion):
    criterion(10, "parabolic ranks and TL dimension", check_parabolic, 60)


def test_criterion_11_two_actions(criterion):
    criterion(11, "two implementations of the root set action", check_two_actions, 60)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
