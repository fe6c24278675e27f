"""Command line entry point: ``brauerc <verb> [options]``, JSON on stdout.

Exit status is 0 on success, 1 when a verification fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from . import roots, structure
from .diagrams import (
    Monomial,
    double_factorial_odd,
    enumerate_diagrams,
    evaluate_word,
    height,
    is_symmetric,
    multiply,
)
from .relations import relation_suite_A, relation_suite_C
from .typec import counting, normal_form, weyl, words


class UsageError(Exception):
    pass


def _monomial_json(m: Monomial) -> dict:
    out = m.to_json()
    out["height"] = height(m)
    out["symmetric"] = is_symmetric(m.diagram)
    return out


def _evaluate(kind: str, n: int, word: str) -> Monomial:
    if kind == "C":
        return words.eval_C(word, n)
    return evaluate_word(word, n)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for '{args.verb}'")


# verbs --------------------------------------------------------------------------

def cmd_eval(args) -> tuple[dict, bool]:
    _need(args, "n", "word")
    return {"monomial": _monomial_json(_evaluate(args.type, args.n, args.word[0]))}, True


def cmd_mul(args) -> tuple[dict, bool]:
    _need(args, "n", "word")
    if len(args.word) < 2:
        raise UsageError("'mul' needs at least two --word options")
    strands = 2 * args.n if args.type == "C" else args.n
    result = Monomial.identity(strands)
    for w in args.word:
        result = multiply(result, _evaluate(args.type, args.n, w))
    return {"monomial": _monomial_json(result)}, True


def cmd_phi(args) -> tuple[dict, bool]:
    _need(args, "n", "word")
    image = words.phi_word(args.word[0], args.n)
    return {"word": image, "monomial": _monomial_json(evaluate_word(image, 2 * args.n))}, True


def cmd_count(args) -> tuple[dict, bool]:
    _need(args, "n")
    if args.type == "C":
        a = counting.count_recursion(2 * args.n)
        return {"a": a, "closed": counting.count_closed(args.n)}, a == counting.count_closed(args.n)
    return {"a": double_factorial_odd(args.n), "symmetric": counting.count_recursion(args.n)}, True


def cmd_basis(args) -> tuple[dict, bool]:
    _need(args, "n")
    basis = normal_form.normal_form_basis(args.n)
    return {
        "n": args.n,
        "size": len(basis),
        "basis": [{"normal_form": nf.to_json(), "diagram": m.diagram.to_json()} for nf, m in basis],
    }, True


def cmd_orbit(args) -> tuple[dict, bool]:
    _need(args, "n", "i", "p")
    data = weyl.stabilizer_and_cosets(args.n, args.i, args.p)
    return {
        "n": args.n,
        "i": args.i,
        "p": args.p,
        "B": [list(r) for r in sorted(data.B)],
        "size": len(data.D),
        "formula": weyl.orbit_size(args.n, args.i, args.p),
        "D": [list(u.word) for u in data.D],
        "A_order": len(data.A),
        "L_order": len(data.L),
    }, len(data.D) == weyl.orbit_size(args.n, args.i, args.p)


def cmd_decompose(args) -> tuple[dict, bool]:
    _need(args, "n", "word")
    a = evaluate_word(args.word[0], args.n)
    dec = structure.decompose(a)
    problems = structure.check_decomposition(a, dec)
    return {
        "k": dec.k,
        "B": [list(r) for r in sorted(dec.B)],
        "U": _monomial_json(dec.U),
        "V": _monomial_json(dec.V),
        "W": _monomial_json(dec.W),
        "problems": problems,
    }, not problems


def cmd_cell(args) -> tuple[dict, bool]:
    _need(args, "n")
    datum = structure.build_cell_datum(args.n)
    problems = structure.check_star(datum) + structure.check_basis_image(datum)
    out = datum.to_json()
    out["problems"] = problems
    return out, not problems


def cmd_parabolic(args) -> tuple[dict, bool]:
    _need(args, "n", "nodes")
    nodes = [int(x) for x in args.nodes.split(",") if x.strip()]
    return {"n": args.n, "nodes": nodes, "rank": structure.parabolic_rank(args.n, nodes)}, True


# verification suites -------------------------------------------------------------

def suite_counting(n: int) -> dict:
    table = [1, 1, 3, 7, 25, 81, 331, 1303, 5937]
    rec = [counting.count_recursion(k) for k in range(max(9, 2 * n + 1))]
    closed = [counting.count_closed(k) for k in range(n + 1)]
    ok = rec[:9] == table and all(closed[k] == rec[2 * k] for k in range(n + 1))
    return {"ok": ok, "recursion": rec, "closed": closed}


def suite_symmetric(n: int) -> dict:
    count = sum(1 for d in enumerate_diagrams(2 * n) if is_symmetric(d))
    return {"ok": count == counting.count_recursion(2 * n), "count": count}


def suite_relations(n: int) -> dict:
    c = relation_suite_C(max(n, 2))
    a = relation_suite_A(2 * n)
    return {"ok": c.ok and a.ok, "type_C": c.to_json(), "type_A": a.to_json()}


def suite_actions(n: int) -> dict:
    N = 2 * n
    mismatches = []
    for B in roots.all_admissible_sets(N):
        for i in range(1, N):
            for letter in "RE":
                token = f"{letter}{i}"
                if roots.act_word([token], B, N) != roots.act_left(evaluate_word([token], N), B):
                    mismatches.append([token, [list(r) for r in sorted(B)]])
    return {"ok": not mismatches, "mismatches": mismatches}


def suite_basis(n: int) -> dict:
    basis = normal_form.normal_form_basis(n)
    diagrams = {m.diagram for _, m in basis}
    symmetric = {d for d in enumerate_diagrams(2 * n) if is_symmetric(d)}
    layers = {}
    for nf, _ in basis:
        layers[nf.i] = layers.get(nf.i, 0) + 1
    return {"ok": diagrams == symmetric and len(basis) == len(diagrams), "size": len(basis), "layers": layers}


def suite_orbits(n: int) -> dict:
    rows = []
    ok = True
    for i in range(n + 1):
        for p in weyl.parities(i):
            data = weyl.stabilizer_and_cosets(n, i, p)
            good = len(data.D) == weyl.orbit_size(n, i, p)
            ok &= good
            rows.append({"i": i, "p": p, "size": len(data.D), "ok": good})
    return {"ok": ok, "orbits": rows}


def suite_uvw(n: int) -> dict:
    bad = 0
    total = 0
    for d in enumerate_diagrams(2 * n):
        a = Monomial(0, d)
        total += 1
        bad += bool(structure.check_decomposition(a, structure.decompose(a)))
    return {"ok": bad == 0, "diagrams": total, "failures": bad}


def suite_filtration(n: int) -> dict:
    datum = structure.build_cell_datum(n)
    report = structure.check_filtration(n, datum)
    extra = structure.check_star(datum) + structure.check_basis_image(datum)
    return {"ok": report.ok and not extra, "filtration": report.to_json(), "problems": extra}


def _expected_parabolic(nodes: list[int]) -> int:
    k = len(nodes)
    return counting.count_recursion(2 * k) if 0 in nodes else double_factorial_odd(k + 1)


def suite_parabolic(n: int) -> dict:
    rows = []
    ok = True
    for start in range(n):
        for stop in range(start + 1, n + 1):
            nodes = list(range(start, stop))
            rank = structure.parabolic_rank(n, nodes)
            good = rank == _expected_parabolic(nodes)
            ok &= good
            rows.append({"nodes": nodes, "rank": rank, "ok": good})
    return {"ok": ok, "parabolic": rows}


def suite_tl(n: int) -> dict:
    report = structure.tl_subalgebra(n)
    return {"ok": report.ok, **report.to_json()}


def suite_admissibility(n: int) -> dict:
    mk = roots.make_root_c
    got = [
        roots.is_admissible_C([mk((0, 1)), mk((1, 1))], 2),
        roots.is_admissible_C([mk((1, 0)), mk((1, 2))], 2),
        roots.is_admissible_C([mk((0, 1, 0, 0)), mk((0, 0, 0, 1))], 4),
    ]
    return {"ok": got == [False, True, True], "results": got}


SUITES: dict[str, tuple[Callable[[int], dict], int]] = {
    # name -> (suite, largest rank it is run at)
    "counting": (suite_counting, 10**6),
    "symmetric": (suite_symmetric, 4),
    "relations": (suite_relations, 5),
    "actions": (suite_actions, 3),
    "basis": (suite_basis, 4),
    "orbits": (suite_orbits, 4),
    "uvw": (suite_uvw, 3),
    "filtration": (suite_filtration, 3),
    "parabolic": (suite_parabolic, 3),
    "tl": (suite_tl, 3),
    "admissibility": (suite_admissibility, 10**6),
}


def _run_suite(name: str, n: int) -> dict:
    func, limit = SUITES[name]
    if n > limit:
        return {"ok": True, "skipped": f"rank {n} above the limit {limit} for this suite"}
    start = time.perf_counter()
    out = func(n)
    out["seconds"] = round(time.perf_counter() - start, 3)
    return out


def cmd_verify(args) -> tuple[dict, bool]:
    _need(args, "n")
    if args.all:
        names = list(SUITES)
    elif args.suite:
        names = [s.strip() for s in args.suite.split(",") if s.strip()]
    else:
        raise UsageError("'verify' needs --suite NAME or --all")
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from {sorted(SUITES)}")
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_suite, names, [args.n] * len(names)))
    else:
        results = [_run_suite(name, args.n) for name in names]
    suites = dict(zip(names, results))
    ok = all(r["ok"] for r in results)
    return {"ok": ok, "n": args.n, "suites": suites}, ok


VERBS = {
    "eval": cmd_eval,
    "mul": cmd_mul,
    "phi": cmd_phi,
    "count": cmd_count,
    "basis": cmd_basis,
    "orbit": cmd_orbit,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "cell": cmd_cell,
    "parabolic": cmd_parabolic,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brauerc", description=__doc__.splitlines()[0])
    parser.add_argument("verb", choices=sorted(VERBS))
    parser.add_argument("--type", choices=["A", "C"], default="C", help="A: n strands; C: rank n on 2n strands")
    parser.add_argument("--n", type=int)
    parser.add_argument("--word", action="append", help="comma-separated tokens such as r0,e1,d")
    parser.add_argument("--suite", help="comma-separated suite names for 'verify'")
    parser.add_argument("--all", action="store_true", help="run every verification suite")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--out", help="write the JSON result to this path")
    parser.add_argument("--i", type=int)
    parser.add_argument("--p", type=int)
    parser.add_argument("--nodes", help="comma-separated node list for 'parabolic'")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, ok = VERBS[args.verb](args)
    except (UsageError, ValueError) as exc:
        print(f"brauerc: error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(payload, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
