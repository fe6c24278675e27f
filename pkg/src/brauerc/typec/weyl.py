"""The Weyl group W(C_n) inside the symmetric Brauer monoid, stabilizers and cosets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from ..diagrams import Diagram, Monomial, multiply
from ..roots import RootA, act_left
from .words import B_set, eval_C, y_word

MAX_WEYL_RANK = 5


@dataclass(frozen=True)
class WeylElement:
    diagram: Diagram
    word: tuple[str, ...]

    @property
    def monomial(self) -> Monomial:
        return Monomial(0, self.diagram)

    @property
    def length(self) -> int:
        return len(self.word)

    def inverse_word(self) -> tuple[str, ...]:
        return self.word[::-1]


class WeylGroup:
    """All elements of W(C_n) with shortlex-minimal words (order r0 < r1 < ...)."""

    def __init__(self, n: int, elements: list[WeylElement]):
        self.n = n
        self.elements = elements
        self._index = {g.diagram: k for k, g in enumerate(elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, d: Diagram) -> bool:
        return d in self._index

    def index(self, d: Diagram) -> int:
        return self._index[d]

    def element(self, d: Diagram) -> WeylElement:
        return self.elements[self._index[d]]

    def identity(self) -> WeylElement:
        return self.elements[0]

    def mul(self, g: WeylElement, h: WeylElement) -> WeylElement:
        return self.element(multiply(g.monomial, h.monomial).diagram)

    def inverse(self, g: WeylElement) -> WeylElement:
        # permutation diagrams: op is the inverse
        return self.element(Diagram.from_pairs(g.diagram.n, _swap_rows(g.diagram)))

    def closure(self, generators: Iterable[Diagram]) -> list[WeylElement]:
        """The subgroup generated by ``generators``, in W's shortlex order."""
        gens = [Monomial(0, d) for d in generators]
        seen = {self.identity().diagram}
        queue = deque([self.identity().monomial])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = multiply(x, g).diagram
                if y not in seen:
                    seen.add(y)
                    queue.append(Monomial(0, y))
        return sorted((self.element(d) for d in seen), key=lambda g: self._index[g.diagram])


def _swap_rows(d: Diagram) -> list[tuple[int, int]]:
    n = d.n

    def flip(x):
        return x + n if x <= n else x - n

    return [(flip(a), flip(b)) for a, b in d.pairs()]


@lru_cache(maxsize=None)
def weyl_group(n: int, bound: int = MAX_WEYL_RANK) -> WeylGroup:
    """Breadth-first closure of phi(r_0), ..., phi(r_{n-1}); order 2^n n!."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    if n > bound:
        raise ValueError(f"rank {n} exceeds the enumeration bound {bound}")
    gens = [(f"r{j}", eval_C([f"r{j}"], n)) for j in range(n)]
    start = Monomial.identity(2 * n)
    elements = [WeylElement(start.diagram, ())]
    seen = {start.diagram}
    queue = deque(elements)
    while queue:
        g = queue.popleft()
        for token, m in gens:
            d = multiply(g.monomial, m).diagram
            if d not in seen:
                seen.add(d)
                h = WeylElement(d, g.word + (token,))
                elements.append(h)
                queue.append(h)
    expected = 2**n * factorial(n)
    if len(elements) != expected:
        raise AssertionError(f"W(C_{n}) has {len(elements)} elements, expected {expected}")
    return WeylGroup(n, elements)


# stabilizers ----------------------------------------------------------------------

def A_generators(i: int, p: int, n: int) -> list[list[str]]:
    """Generator words of the subgroup fixing the arcs of B_{i,p} (first factor)."""
    q = (i - p) // 2
    gens = [[f"r{j}"] for j in range(p)]
    gens += [[f"r{p + 2 * k - 1}"] for k in range(1, q + 1)]
    if q >= 1:
        y = y_word(p + 1, n)
        gens.append(y + [f"r{p + 1}"] + y)
    for k in range(1, q):
        a = p + 2 * k
        gens.append([f"r{a}", f"r{a - 1}", f"r{a + 1}", f"r{a}"])
    return gens


def L_generators(i: int, n: int) -> list[list[str]]:
    """Generator words of the type C_{n-i} group acting on the free strands."""
    if i >= n:
        return []
    return [y_word(i + 1, n)] + [[f"r{j}"] for j in range(i + 1, n)]


@dataclass(frozen=True)
class CosetData:
    i: int
    p: int
    A: tuple[WeylElement, ...]
    L: tuple[WeylElement, ...]
    D: tuple[WeylElement, ...]
    B: frozenset[RootA]


def orbit_size(n: int, i: int, p: int) -> int:
    q = (i - p) // 2
    return factorial(n) // (factorial(p) * factorial(q) * factorial(n - i))


@lru_cache(maxsize=None)
def stabilizer_and_cosets(n: int, i: int, p: int) -> CosetData:
    """Stabilizer factors A_{i,p}, L_i and shortlex-first coset representatives D_{i,p}."""
    if not 0 <= p <= i <= n or (i - p) % 2:
        raise ValueError(f"need 0 <= p <= i <= n with i - p even, got i={i}, p={p}, n={n}")
    W = weyl_group(n)
    B = B_set(i, p, n)
    A = W.closure(eval_C(w, n).diagram for w in A_generators(i, p, n))
    L = W.closure(eval_C(w, n).diagram for w in L_generators(i, n))
    for g in list(A) + list(L):
        if act_left(g.diagram, B) != B:
            raise AssertionError(f"{g.word} does not fix B_{{{i},{p}}}")
    images: dict[frozenset, WeylElement] = {}
    for g in W:
        images.setdefault(act_left(g.diagram, B), g)
    D = tuple(images.values())
    q = (i - p) // 2
    if len(A) != 2**i * factorial(p) * factorial(q):
        raise AssertionError(f"|A_{{{i},{p}}}| = {len(A)}")
    if len(L) != 2 ** (n - i) * factorial(n - i):
        raise AssertionError(f"|L_{i}| = {len(L)}")
    if len(D) != orbit_size(n, i, p) or len(A) * len(L) * len(D) != len(W):
        raise AssertionError(f"|D_{{{i},{p}}}| = {len(D)}, expected {orbit_size(n, i, p)}")
    return CosetData(i, p, tuple(A), tuple(L), D, B)


def parities(i: int) -> list[int]:
    return list(range(i % 2, i + 1, 2))


def coset_decomposition(n: int, i: int, p: int, r: Diagram | Sequence[str]) -> tuple[WeylElement, WeylElement, WeylElement]:
    """Write ``r = u v a`` with ``u`` in D_{i,p}, ``v`` in L_i and ``a`` in A_{i,p}."""
    W = weyl_group(n)
    d = r if isinstance(r, Diagram) else eval_C(r, n).diagram
    data = stabilizer_and_cosets(n, i, p)
    target = act_left(d, data.B)
    u = next(x for x in data.D if act_left(x.diagram, data.B) == target)
    rest = W.mul(W.inverse(u), W.element(d))
    for v in data.L:
        a = W.mul(W.inverse(v), rest)
        if a in data.A:
            return u, v, a
    raise AssertionError("coset decomposition failed")
