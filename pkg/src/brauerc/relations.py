"""Relation suites: evaluate both sides of each relation as diagram monomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .diagrams import Monomial, evaluate_word

Evaluator = Callable[[Sequence[str]], Monomial]


@dataclass(frozen=True)
class RelationCheck:
    name: str
    lhs: tuple[str, ...]
    rhs: tuple[str, ...]
    passed: bool

    def instance(self) -> str:
        return f"{' '.join(self.lhs) or '1'} = {' '.join(self.rhs) or '1'}"


@dataclass
class RelationReport:
    checks: list[RelationCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.passed]

    def names(self) -> list[str]:
        seen: dict[str, None] = {}
        for c in self.checks:
            seen.setdefault(c.name)
        return list(seen)

    def by_name(self) -> dict[str, tuple[int, int]]:
        """``name -> (passed, total)`` in first-seen order."""
        out: dict[str, list[int]] = {}
        for c in self.checks:
            tally = out.setdefault(c.name, [0, 0])
            tally[0] += c.passed
            tally[1] += 1
        return {k: (v[0], v[1]) for k, v in out.items()}

    def lines(self) -> list[str]:
        return [
            f"{'PASS' if p == t else 'FAIL'} {name} [{p}/{t}]" for name, (p, t) in self.by_name().items()
        ]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "relations": [
                {"name": name, "passed": p, "total": t} for name, (p, t) in self.by_name().items()
            ],
            "failures": [{"name": c.name, "instance": c.instance()} for c in self.failures],
        }


def _words(template: str, **idx) -> tuple[str, ...]:
    return tuple(template.format(**idx).split())


class _Suite:
    def __init__(self, evaluate: Evaluator):
        self.evaluate = evaluate
        self.report = RelationReport()

    def check(self, name: str, lhs: str, rhs: str, **idx) -> None:
        left, right = _words(lhs, **idx), _words(rhs, **idx)
        passed = self.evaluate(left) == self.evaluate(right)
        self.report.checks.append(RelationCheck(name, left, right, passed))


# type A ------------------------------------------------------------------------

def relation_suite_A(n: int) -> RelationReport:
    """All defining and derived relations of the type A_{n-1} Brauer monoid on n strands."""
    suite = _Suite(lambda w: evaluate_word(w, n))
    nodes = range(1, n)
    for i in nodes:
        suite.check("R_i R_i = 1", "R{i} R{i}", "", i=i)
        suite.check("E_i E_i = d E_i", "E{i} E{i}", "d E{i}", i=i)
        suite.check("R_i E_i = E_i", "R{i} E{i}", "E{i}", i=i)
        suite.check("E_i R_i = E_i", "E{i} R{i}", "E{i}", i=i)
    for i in nodes:
        for j in nodes:
            if abs(i - j) > 1:
                suite.check("R_i R_j = R_j R_i (i, j apart)", "R{i} R{j}", "R{j} R{i}", i=i, j=j)
                suite.check("E_i R_j = R_j E_i (i, j apart)", "E{i} R{j}", "R{j} E{i}", i=i, j=j)
                suite.check("E_i E_j = E_j E_i (i, j apart)", "E{i} E{j}", "E{j} E{i}", i=i, j=j)
            elif abs(i - j) == 1:
                suite.check("R_i R_j R_i = R_j R_i R_j (i~j)", "R{i} R{j} R{i}", "R{j} R{i} R{j}", i=i, j=j)
                suite.check("R_j R_i E_j = E_i E_j (i~j)", "R{j} R{i} E{j}", "E{i} E{j}", i=i, j=j)
                suite.check("R_i E_j R_i = R_j E_i R_j (i~j)", "R{i} E{j} R{i}", "R{j} E{i} R{j}", i=i, j=j)
                _derived_A(suite, "R", "E", i, j)
    for j in nodes:
        for i, k in ((j - 1, j + 1), (j + 1, j - 1)):
            if i in nodes and k in nodes:
                _chain_A(suite, "R", "E", i, j, k)
    return suite.report


def _derived_A(suite: _Suite, R: str, E: str, i: int, j: int) -> None:
    # the first of these is the op-dual of R_j R_i E_j = E_i E_j
    suite.check(f"{E}_i {R}_j {R}_i = {E}_i {E}_j (i~j)", "{E}{i} {R}{j} {R}{i}", "{E}{i} {E}{j}", i=i, j=j, R=R, E=E)
    suite.check(f"{R}_j {E}_i {E}_j = {R}_i {E}_j (i~j)", "{R}{j} {E}{i} {E}{j}", "{R}{i} {E}{j}", i=i, j=j, R=R, E=E)
    suite.check(f"{E}_i {R}_j {E}_i = {E}_i (i~j)", "{E}{i} {R}{j} {E}{i}", "{E}{i}", i=i, j=j, R=R, E=E)
    suite.check(f"{E}_j {E}_i {R}_j = {E}_j {R}_i (i~j)", "{E}{j} {E}{i} {R}{j}", "{E}{j} {R}{i}", i=i, j=j, R=R, E=E)
    suite.check(f"{E}_i {E}_j {E}_i = {E}_i (i~j)", "{E}{i} {E}{j} {E}{i}", "{E}{i}", i=i, j=j, R=R, E=E)


def _chain_A(suite: _Suite, R: str, E: str, i: int, j: int, k: int) -> None:
    suite.check(
        f"{E}_j {E}_i {R}_k {E}_j = {E}_j {R}_i {E}_k {E}_j (i~j~k)",
        "{E}{j} {E}{i} {R}{k} {E}{j}", "{E}{j} {R}{i} {E}{k} {E}{j}", i=i, j=j, k=k, R=R, E=E,
    )
    suite.check(
        f"{E}_j {R}_i {R}_k {E}_j = {E}_j {E}_i {E}_k {E}_j (i~j~k)",
        "{E}{j} {R}{i} {R}{k} {E}{j}", "{E}{j} {E}{i} {E}{k} {E}{j}", i=i, j=j, k=k, R=R, E=E,
    )


# type C ------------------------------------------------------------------------

DEFINING_C = (
    "r_i r_i = 1",
    "r_i e_i = e_i r_i = e_i",
    "e_i e_i = d^2 e_i (i>0)",
    "e_0 e_0 = d e_0",
    "r_i r_j = r_j r_i (i, j apart)",
    "e_i r_j = r_j e_i (i, j apart)",
    "e_i e_j = e_j e_i (i, j apart)",
    "r_i r_j r_i = r_j r_i r_j (i~j, i,j>0)",
    "r_j r_i e_j = e_i e_j (i~j, i,j>0)",
    "r_i e_j r_i = r_j e_i r_j (i~j, i,j>0)",
    "r_1 r_0 r_1 r_0 = r_0 r_1 r_0 r_1",
    "r_1 r_0 e_1 = r_0 e_1",
    "r_1 e_0 r_1 e_0 = e_0 e_1 e_0",
    "r_1 r_0 r_1 e_0 = e_0 r_1 r_0 r_1",
    "e_1 r_0 e_1 = d e_1",
    "e_1 e_0 e_1 = d e_1",
    "e_1 r_0 r_1 = e_1 r_0",
    "e_1 e_0 r_1 = e_1 e_0",
)


def relation_suite_C(
    n: int,
    evaluate: Evaluator | None = None,
    corrupt: bool = False,
    derived: bool = True,
) -> RelationReport:
    """Defining relations of the type C_n Brauer monoid, plus derived families.

    ``evaluate`` maps a token word to a monomial (default: through phi onto
    2n strands). ``corrupt`` adds the false relation ``e_0 e_0 = d^2 e_0`` as
    a negative control.
    """
    if n < 2:
        raise ValueError("the relation suite needs n >= 2")
    if evaluate is None:
        from .typec.words import eval_C

        def evaluate(w):
            return eval_C(w, n)

    suite = _Suite(evaluate)
    nodes = range(n)
    for i in nodes:
        suite.check(DEFINING_C[0], "r{i} r{i}", "", i=i)
        suite.check(DEFINING_C[1], "r{i} e{i}", "e{i}", i=i)
        suite.check(DEFINING_C[1], "e{i} r{i}", "e{i}", i=i)
        if i > 0:
            suite.check(DEFINING_C[2], "e{i} e{i}", "d d e{i}", i=i)
    suite.check(DEFINING_C[3], "e0 e0", "d e0")
    for i in nodes:
        for j in nodes:
            if abs(i - j) > 1:
                suite.check(DEFINING_C[4], "r{i} r{j}", "r{j} r{i}", i=i, j=j)
                suite.check(DEFINING_C[5], "e{i} r{j}", "r{j} e{i}", i=i, j=j)
                suite.check(DEFINING_C[6], "e{i} e{j}", "e{j} e{i}", i=i, j=j)
            elif abs(i - j) == 1 and i > 0 and j > 0:
                suite.check(DEFINING_C[7], "r{i} r{j} r{i}", "r{j} r{i} r{j}", i=i, j=j)
                suite.check(DEFINING_C[8], "r{j} r{i} e{j}", "e{i} e{j}", i=i, j=j)
                suite.check(DEFINING_C[9], "r{i} e{j} r{i}", "r{j} e{i} r{j}", i=i, j=j)
    suite.check(DEFINING_C[10], "r1 r0 r1 r0", "r0 r1 r0 r1")
    suite.check(DEFINING_C[11], "r1 r0 e1", "r0 e1")
    suite.check(DEFINING_C[12], "r1 e0 r1 e0", "e0 e1 e0")
    suite.check(DEFINING_C[13], "r1 r0 r1 e0", "e0 r1 r0 r1")
    suite.check(DEFINING_C[14], "e1 r0 e1", "d e1")
    suite.check(DEFINING_C[15], "e1 e0 e1", "d e1")
    suite.check(DEFINING_C[16], "e1 r0 r1", "e1 r0")
    suite.check(DEFINING_C[17], "e1 e0 r1", "e1 e0")
    if corrupt:
        suite.check("e_0 e_0 = d^2 e_0 (negative control)", "e0 e0", "d d e0")
    if derived:
        _derived_C(suite, n)
    return suite.report


def _derived_C(suite: _Suite, n: int) -> None:
    suite.check("r_1 e_0 e_1 = e_0 e_1", "r1 e0 e1", "e0 e1")
    suite.check("e_0 e_1 e_0 = e_0 r_1 e_0", "e0 e1 e0", "e0 r1 e0")
    suite.check("e_1 r_0 r_1 e_0 = e_1 e_0", "e1 r0 r1 e0", "e1 e0")
    suite.check("r_0 r_1 e_0 r_1 = r_1 e_0 r_1 r_0", "r0 r1 e0 r1", "r1 e0 r1 r0")
    suite.check("e_0 r_1 e_0 r_1 = e_0 e_1 e_0", "e0 r1 e0 r1", "e0 e1 e0")
    # the simply laced derived relations on the type A part r_1..r_{n-1}
    nodes = range(1, n)
    for i in nodes:
        for j in nodes:
            if abs(i - j) == 1:
                _derived_A(suite, "r", "e", i, j)
    for j in nodes:
        for i, k in ((j - 1, j + 1), (j + 1, j - 1)):
            if i in nodes and k in nodes:
                _chain_A(suite, "r", "e", i, j, k)
    from .typec.words import z_word

    def z(i):
        return " ".join(z_word(i))

    for i in range(2, n):
        suite.check("e_i z_{i+1} = e_i z_i", f"e{i} {z(i + 1)}", f"e{i} {z(i)}")
        suite.check(
            "e_{i-1} z_{i+1} z_i z_{i-1} = r_i r_{i-1} e_i z_i z_{i+1} z_{i-1}",
            f"e{i - 1} {z(i + 1)} {z(i)} {z(i - 1)}",
            f"r{i} r{i - 1} e{i} {z(i)} {z(i + 1)} {z(i - 1)}",
        )
        suite.check("e_i z_{i+1} z_i e_i = d^2 e_i", f"e{i} {z(i + 1)} {z(i)} e{i}", f"d d e{i}")


def run_checks(evaluate: Evaluator, pairs: Iterable[tuple[str, str, str]]) -> RelationReport:
    """Evaluate ad hoc ``(name, lhs, rhs)`` triples with the given evaluator."""
    suite = _Suite(evaluate)
    for name, lhs, rhs in pairs:
        suite.check(name, lhs, rhs)
    return suite.report
