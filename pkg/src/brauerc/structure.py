"""Structure of the diagram monoids: UVW factorization, the groups K_B, cell data, subalgebras."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product as cartesian
from math import factorial
from typing import Iterable, Sequence

from .diagrams import (
    Diagram,
    Monomial,
    evaluate_word,
    height,
    is_symmetric,
    multiply,
    op,
    sigma,
)
from .roots import (
    E_hat,
    E_product,
    RootA,
    bottom,
    canonical_diagram,
    fp_set,
    height_set,
    sigma_admissible_sets,
    top,
)
from .typec.normal_form import b_monomial, e_set, normal_form_basis
from .typec.weyl import WeylElement, parities, stabilizer_and_cosets, weyl_group
from .typec.words import B_i, eval_C, y_word, z_word

MAX_CLOSURE = 200_000


# UVW ------------------------------------------------------------------------------

def central_set(size: int, n: int) -> frozenset[RootA]:
    """Nested arcs around the middle of n dots: ``(m+1-j, m+j)`` with m = n // 2."""
    m = n // 2
    if size > m:
        raise ValueError(f"{size} nested arcs do not fit on {n} dots")
    return frozenset((m + 1 - j, m + j) for j in range(1, size + 1))


@dataclass(frozen=True)
class UVWDecomposition:
    """``d^k a = U V W`` with V in K_B written as ``d^-|B|`` times its diagram."""

    k: int
    U: Monomial
    V: Monomial
    W: Monomial
    B: frozenset[RootA]

    def recompose(self) -> Monomial:
        return multiply(multiply(self.U, self.V), self.W)


def decompose(a: Monomial | Diagram, B: Iterable[RootA] | None = None) -> UVWDecomposition:
    """Factor a monomial through the height-zero set ``B`` of the same size as its top."""
    if isinstance(a, Diagram):
        a = Monomial(0, a)
    n = a.diagram.n
    T, S = top(a), bottom(a)
    B = central_set(len(T), n) if B is None else frozenset(B)
    if len(B) != len(T):
        raise ValueError(f"|B| = {len(B)} but the top has {len(T)} strands")
    if height_set(B, n) != 0:
        raise ValueError(f"{sorted(B)} has nonzero height")
    U = Monomial(0, canonical_diagram(T, B, n))
    W = Monomial(0, canonical_diagram(B, S, n))
    middle = multiply(multiply(op(U), a), op(W))
    V = Monomial(-len(B), middle.diagram)
    k = multiply(multiply(U, V), W).delta_exp - a.delta_exp
    return UVWDecomposition(k, U, V, W, B)


def check_decomposition(a: Monomial, dec: UVWDecomposition) -> list[str]:
    """Violated invariants of a decomposition (empty when all hold)."""
    problems = []
    rec = dec.recompose()
    if rec.diagram != a.diagram or rec.delta_exp != a.delta_exp + dec.k:
        problems.append("U V W != d^k a")
    if height(a) != height(dec.U) + height(dec.V) + height(dec.W):
        problems.append("heights are not additive")
    if top(dec.U) != top(a) or bottom(dec.W) != bottom(a):
        problems.append("outer strands do not match")
    if top(dec.V) != dec.B or bottom(dec.V) != dec.B:
        problems.append("V does not have top and bottom B")
    unit = E_hat(dec.B, a.diagram.n)
    if multiply(unit, dec.V) != dec.V or multiply(dec.V, unit) != dec.V:
        problems.append("V is not in K_B")
    return problems


# K_B ------------------------------------------------------------------------------

@dataclass
class KGroup:
    B: frozenset[RootA]
    n: int
    unit: Monomial
    generators: list[Monomial]
    elements: list[Monomial] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def order(self) -> int:
        return len(self.elements)

    def coxeter_relations_hold(self) -> bool:
        """Type A_r braid and commutation relations among the generators."""
        g = self.generators
        for s in range(len(g)):
            if multiply(g[s], g[s]) != self.unit:
                return False
            for t in range(s + 1, len(g)):
                st = multiply(g[s], g[t])
                ts = multiply(g[t], g[s])
                if t == s + 1:
                    if multiply(st, g[s]) != multiply(ts, g[t]):
                        return False
                elif st != ts:
                    return False
        return True


def _closure(generators: Sequence[Monomial], start: Monomial, limit: int = MAX_CLOSURE) -> list[Monomial]:
    seen = {start}
    queue = deque([start])
    order = [start]
    while queue:
        x = queue.popleft()
        for g in generators:
            y = multiply(x, g)
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
                if len(seen) > limit:
                    raise ValueError(f"closure exceeds {limit} elements")
    return order


def k_group(B: Iterable[RootA], n: int) -> KGroup:
    """The group of diagrams with top and bottom B, unit ``d^-|B| E_B``."""
    B = frozenset(B)
    if height_set(B, n) != 0:
        raise ValueError(f"{sorted(B)} has nonzero height")
    used = {x for r in B for x in r}
    free = [x for x in range(1, n + 1) if x not in used]
    unit = E_hat(B, n)
    gens = []
    for t in range(len(free) - 1):
        pairs = list(B) + [(a + n, b + n) for a, b in B]
        for s, x in enumerate(free):
            y = free[s + 1] if s == t else free[s - 1] if s == t + 1 else x
            pairs.append((x, y + n))
        gens.append(Monomial(-len(B), Diagram.from_pairs(n, pairs)))
    group = KGroup(B, n, unit, gens)
    group.elements = _closure(gens, unit)
    expected = factorial(len(free))
    if group.order() != expected:
        raise AssertionError(f"K_B has order {group.order()}, expected {expected}")
    return group


def sigma_fixed(group: KGroup) -> list[Monomial]:
    return [g for g in group.elements if sigma(g) == g]


def k_i_sigma_check(n: int, i: int) -> tuple[int, bool]:
    """Order of the sigma-fixed part of K_{B_i} and whether it equals ``E_hat^(i) phi(L_i)``."""
    K = k_group(B_i(i, n), 2 * n)
    fixed = set(sigma_fixed(K))
    unit = K.unit
    L = stabilizer_and_cosets(n, i, i).L
    image = {multiply(unit, v.monomial) for v in L}
    return len(fixed), fixed == image


# cell datum ---------------------------------------------------------------------

@dataclass
class CellDatum:
    """Layers ordered by ``B_i > B_j`` iff ``i < j``.

    A basis element is indexed by ``(i, x, y, v)`` where x and y run over
    ``T[i]`` (pairs ``(p, u)`` with u a coset representative for B_{i,p})
    and v over the group ``L[i]``; it evaluates to ``u b_{p,i,p'} v w^op``.
    """

    n: int
    order: list[int]
    T: dict[int, list[tuple[int, WeylElement]]]
    L: dict[int, list[WeylElement]]
    C: dict[tuple[int, int, int, int], Monomial]

    def greater(self, i: int, j: int) -> bool:
        """``B_i > B_j`` in the poset."""
        return i < j

    def star(self, a: Monomial) -> Monomial:
        return op(a)

    def layer_size(self, i: int) -> int:
        return len(self.T[i]) ** 2 * len(self.L[i])

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "order": self.order,
            "layers": [
                {
                    "i": i,
                    "T": [{"p": p, "u_word": list(u.word)} for p, u in self.T[i]],
                    "L": [list(v.word) for v in self.L[i]],
                    "C": [
                        {"x": x, "y": y, "v": v, **self.C[(i, x, y, v)].to_json()}
                        for x in range(len(self.T[i]))
                        for y in range(len(self.T[i]))
                        for v in range(len(self.L[i]))
                    ],
                }
                for i in self.order
            ],
        }


def build_cell_datum(n: int) -> CellDatum:
    T: dict[int, list[tuple[int, WeylElement]]] = {}
    L: dict[int, list[WeylElement]] = {}
    C: dict[tuple[int, int, int, int], Monomial] = {}
    for i in range(n + 1):
        T[i] = [(p, u) for p in parities(i) for u in stabilizer_and_cosets(n, i, p).D]
        L[i] = list(stabilizer_and_cosets(n, i, parities(i)[0]).L)
        for (x, (p, u)), (y, (pp, w)) in cartesian(enumerate(T[i]), repeat=2):
            ub = multiply(u.monomial, b_monomial(p, i, pp, n))
            for s, v in enumerate(L[i]):
                C[(i, x, y, s)] = multiply(multiply(ub, v.monomial), op(w.monomial))
    return CellDatum(n, list(range(n + 1)), T, L, C)


@dataclass
class FiltrationReport:
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": self.checks, "failures": self.failures[:50]}


def check_star(datum: CellDatum) -> list[str]:
    """``C(x, y; v)^op = C(y, x; v^-1)``."""
    W = weyl_group(datum.n)
    bad = []
    for (i, x, y, s), m in datum.C.items():
        v_inv = W.inverse(datum.L[i][s])
        t = datum.L[i].index(v_inv)
        if op(m) != datum.C[(i, y, x, t)]:
            bad.append(f"star fails at layer {i}, x={x}, y={y}, v={s}")
    return bad


def check_basis_image(datum: CellDatum) -> list[str]:
    """The diagrams of C are distinct and are exactly the normal form basis."""
    diagrams = [m.diagram for m in datum.C.values()]
    expected = {m.diagram for _, m in normal_form_basis(datum.n)}
    bad = []
    if len(set(diagrams)) != len(diagrams):
        bad.append("C is not injective")
    if set(diagrams) != expected:
        bad.append("image of C differs from the symmetric diagrams")
    return bad


def check_filtration(n: int, datum: CellDatum | None = None, corrupt: bool = False) -> FiltrationReport:
    """Left multiplication by each generator respects the layer order and is independent of y.

    ``g C(x, y; v) = d^c C(x', y; v' v)`` within the same layer, where
    ``(c, x', v')`` may depend on g and x only; everything else must fall into
    a layer with more central arcs. ``corrupt`` swaps two row labels for one
    column as a negative control.
    """
    datum = datum or build_cell_datum(n)
    W = weyl_group(n)
    lookup: dict[Diagram, tuple[int, int, int, int, int]] = {}
    for (i, x, y, s), m in datum.C.items():
        lookup[m.diagram] = (i, x, y, s, m.delta_exp)
    if corrupt:
        i = next(i for i in datum.order if len(datum.T[i]) >= 2)
        a, b = datum.C[(i, 0, 0, 0)].diagram, datum.C[(i, 1, 0, 0)].diagram
        lookup[a], lookup[b] = (i, 1) + lookup[a][2:], (i, 0) + lookup[b][2:]
    report = FiltrationReport()
    generators = [(f"{c}{j}", eval_C([f"{c}{j}"], n)) for c in "re" for j in range(n)]
    for name, g in generators:
        seen: dict[tuple[int, int], tuple[int, int, int]] = {}
        for (i, x, y, s), m in datum.C.items():
            report.checks += 1
            gm = multiply(g, m)
            j, x2, y2, s2, e2 = lookup[gm.diagram]
            if j != i:
                if not datum.greater(i, j):
                    report.failures.append(f"{name} moves layer {i} up to layer {j}")
                continue
            if y2 != y:
                report.failures.append(f"{name} changes the column in layer {i} (x={x}, y={y})")
                continue
            v_factor = W.mul(datum.L[i][s2], W.inverse(datum.L[i][s])).diagram
            data = (x2, v_factor, gm.delta_exp - e2)
            key = (i, x)
            if seen.setdefault(key, data) != data:
                report.failures.append(f"{name} coefficient depends on y in layer {i} (x={x}, y={y})")
    return report


# subalgebras -----------------------------------------------------------------------

def _diagram_closure(gens: Sequence[Monomial], n: int, limit: int = MAX_CLOSURE) -> set[Diagram]:
    start = Diagram.identity(n)
    seen = {start}
    queue = deque([start])
    while queue:
        x = Monomial(0, queue.popleft())
        for g in gens:
            y = multiply(x, g).diagram
            if y not in seen:
                seen.add(y)
                queue.append(y)
                if len(seen) > limit:
                    raise ValueError(f"closure exceeds {limit} diagrams")
    return seen


def parabolic_closure(n: int, J: Iterable[int], limit: int = MAX_CLOSURE) -> set[Diagram]:
    J = sorted(set(J))
    if any(not 0 <= j < n for j in J):
        raise ValueError(f"nodes {J} outside 0..{n - 1}")
    gens = [eval_C([f"{c}{j}"], n) for j in J for c in "re"]
    return _diagram_closure(gens, 2 * n, limit)


def parabolic_rank(n: int, J: Iterable[int], limit: int = MAX_CLOSURE) -> int:
    """Number of distinct diagrams in the submonoid generated by r_j, e_j for j in J."""
    return len(parabolic_closure(n, J, limit))


@dataclass
class TLReport:
    size: int
    symmetric_tl_size: int
    equal: bool
    eb_matches: bool
    planar_eb_inside: bool

    @property
    def ok(self) -> bool:
        return self.equal and self.eb_matches and self.planar_eb_inside

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "symmetric_tl_size": self.symmetric_tl_size,
            "equal": self.equal,
            "eb_matches": self.eb_matches,
            "planar_eb_inside": self.planar_eb_inside,
            "ok": self.ok,
        }


def tl_subalgebra(n: int) -> TLReport:
    """Compare the monoid of the e_j with the symmetric planar (Temperley-Lieb) diagrams."""
    C = _diagram_closure([eval_C([f"e{j}"], n) for j in range(n)], 2 * n)
    A = _diagram_closure([evaluate_word([f"E{j}"], 2 * n) for j in range(1, 2 * n)], 2 * n)
    symmetric_tl = {d for d in A if is_symmetric(d)}
    eb_ok = True
    planar_ok = True
    for B in sigma_admissible_sets(n):
        E = E_product(B, 2 * n)
        if e_set(fp_set(B, n), n) != E:
            eb_ok = False
        if height_set(B, 2 * n) == 0 and E.diagram not in C:
            planar_ok = False
    return TLReport(len(C), len(symmetric_tl), C == symmetric_tl, eb_ok, planar_ok)


def rank_one_step_decomposition(n: int) -> bool:
    """Whether the monoid on 2n strands equals ``M' X M'`` with M' the rank n-1 submonoid
    and X = {1, e_{n-1}, r_{n-1}, y_n, z_n}, compared as diagram sets."""
    if n < 2:
        raise ValueError("needs n >= 2")
    sub = [Monomial(0, d) for d in parabolic_closure(n, range(n - 1))]
    middle = [eval_C(w, n) for w in ([], [f"e{n - 1}"], [f"r{n - 1}"], y_word(n), z_word(n))]
    products = set()
    for a in sub:
        for x in middle:
            ax = multiply(a, x)
            for b in sub:
                products.add(multiply(ax, b).diagram)
    return products == {m.diagram for _, m in normal_form_basis(n)}
