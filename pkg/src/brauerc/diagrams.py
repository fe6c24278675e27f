"""Brauer diagrams on ``N`` strands and the monoid/algebra they span.

Dots are numbered 1..N along the top row (left to right) and N+1..2N along
the bottom row (left to right).  Internally a :class:`Diagram` keeps a
0-based partner table ``match`` of length 2N; the public surface
(:meth:`Diagram.pairs`, JSON) is 1-based.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .laurent import LaurentPoly, ZERO

MAX_ENUMERATION_STRANDS = 8


class Diagram:
    """A perfect matching on the 2N dots of a Brauer diagram."""

    __slots__ = ("n", "match", "_hash")

    def __init__(self, n: int, match: Sequence[int]):
        match = tuple(match)
        if n < 1:
            raise ValueError("a diagram needs at least one strand")
        if len(match) != 2 * n:
            raise ValueError(f"expected {2 * n} partner entries, got {len(match)}")
        for d, e in enumerate(match):
            if not 0 <= e < 2 * n or e == d or match[e] != d:
                raise ValueError(f"not a fixed-point-free involution at dot {d + 1}")
        self.n = n
        self.match = match
        self._hash = None

    @classmethod
    def _raw(cls, n: int, match: tuple[int, ...]) -> Diagram:
        obj = cls.__new__(cls)
        obj.n = n
        obj.match = match
        obj._hash = None
        return obj

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Sequence[int]]) -> Diagram:
        match = [-1] * (2 * n)
        for a, b in pairs:
            for x in (a, b):
                if not 1 <= x <= 2 * n or match[x - 1] != -1:
                    raise ValueError(f"bad or repeated dot {x}")
            match[a - 1], match[b - 1] = b - 1, a - 1
        if -1 in match:
            raise ValueError("pairs do not cover every dot")
        return cls(n, match)

    @classmethod
    def identity(cls, n: int) -> Diagram:
        return cls._raw(n, tuple(range(n, 2 * n)) + tuple(range(n)))

    def pairs(self) -> list[tuple[int, int]]:
        return [(d + 1, e + 1) for d, e in enumerate(self.match) if d < e]

    def key(self) -> tuple[int, ...]:
        """Sort key agreeing with the lexicographic order on :meth:`pairs`."""
        return self.match

    def top_arcs(self) -> list[tuple[int, int]]:
        """Horizontal strands of the top row as 1-based column pairs."""
        n = self.n
        return [(d + 1, e + 1) for d, e in enumerate(self.match[:n]) if d < e < n]

    def bottom_arcs(self) -> list[tuple[int, int]]:
        """Horizontal strands of the bottom row as 1-based column pairs."""
        n = self.n
        return [(d - n + 1, e - n + 1) for d, e in enumerate(self.match) if n <= d < e]

    def is_permutation(self) -> bool:
        n = self.n
        return all(e >= n for e in self.match[:n])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.n == other.n and self.match == other.match

    def __lt__(self, other: Diagram) -> bool:
        return (self.n, self.match) < (other.n, other.match)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.match))
        return self._hash

    def __repr__(self) -> str:
        return f"Diagram({self.n}, {self.pairs()})"

    def to_json(self) -> dict:
        return {"n": self.n, "pairs": [list(p) for p in self.pairs()]}

    @classmethod
    def from_json(cls, data: Mapping) -> Diagram:
        return cls.from_pairs(int(data["n"]), data["pairs"])


def compose(upper: tuple[int, ...], lower: tuple[int, ...], n: int) -> tuple[tuple[int, ...], int]:
    """Stack ``upper`` on top of ``lower``; return the partner table and the loop count."""
    res = [-1] * (2 * n)
    seen = [False] * n
    for start in range(2 * n):
        if res[start] != -1:
            continue
        if start < n:
            # enter upper from its top row
            y = upper[start]
            while True:
                if y < n:
                    end = y
                    break
                c = y - n
                seen[c] = True
                z = lower[c]
                if z >= n:
                    end = z
                    break
                seen[z] = True
                y = upper[z + n]
        else:
            y = lower[start]
            while True:
                if y >= n:
                    end = y
                    break
                seen[y] = True
                z = upper[y + n]
                if z < n:
                    end = z
                    break
                c = z - n
                seen[c] = True
                y = lower[c]
        res[start] = end
        res[end] = start
    loops = 0
    for c in range(n):
        if seen[c]:
            continue
        loops += 1
        x = c
        while not seen[x]:
            seen[x] = True
            x = lower[x]
            seen[x] = True
            x = upper[x + n] - n
    return tuple(res), loops


@dataclass(frozen=True, order=True)
class Monomial:
    """``d**delta_exp`` times a diagram."""

    delta_exp: int
    diagram: Diagram

    @property
    def n(self) -> int:
        return self.diagram.n

    @classmethod
    def identity(cls, n: int) -> Monomial:
        return cls(0, Diagram.identity(n))

    def __mul__(self, other: Monomial) -> Monomial:
        return multiply(self, other)

    def scale(self, k: int) -> Monomial:
        return Monomial(self.delta_exp + k, self.diagram)

    def to_json(self) -> dict:
        out = self.diagram.to_json()
        out["delta_exp"] = self.delta_exp
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> Monomial:
        return cls(int(data.get("delta_exp", 0)), Diagram.from_json(data))

    def __repr__(self) -> str:
        return f"Monomial(d^{self.delta_exp}, {self.diagram.pairs()})"


def multiply(a: Monomial, b: Monomial) -> Monomial:
    """Concatenate ``a`` above ``b``; every closed loop contributes one factor d."""
    if a.diagram.n != b.diagram.n:
        raise ValueError(f"strand counts differ: {a.diagram.n} vs {b.diagram.n}")
    n = a.diagram.n
    match, loops = compose(a.diagram.match, b.diagram.match, n)
    return Monomial(a.delta_exp + b.delta_exp + loops, Diagram._raw(n, match))


def product(factors: Iterable[Monomial], n: int) -> Monomial:
    result = Monomial.identity(n)
    for f in factors:
        result = multiply(result, f)
    return result


# generators -----------------------------------------------------------------

def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1} for {n} strands")


def generator_R(n: int, i: int) -> Diagram:
    """The crossing of strands i and i+1."""
    _check_index(n, i)
    m = list(Diagram.identity(n).match)
    a, b = i - 1, i
    m[a], m[b] = n + b, n + a
    m[n + b], m[n + a] = a, b
    return Diagram._raw(n, tuple(m))


def generator_E(n: int, i: int) -> Diagram:
    """Cap and cup joining dots i and i+1 on each row."""
    _check_index(n, i)
    m = list(Diagram.identity(n).match)
    a, b = i - 1, i
    m[a], m[b] = b, a
    m[n + a], m[n + b] = n + b, n + a
    return Diagram._raw(n, tuple(m))


_TOKEN_A = re.compile(r"^([RE])(\d+)$")


def parse_word(text: str | Sequence[str]) -> list[str]:
    """Split a word on commas or whitespace; an existing token list is returned as a list."""
    if isinstance(text, str):
        return [t for t in re.split(r"[,\s]+", text) if t]
    return list(text)


def token_monomial_A(token: str, n: int) -> Monomial:
    if token == "d":
        return Monomial(1, Diagram.identity(n))
    if token == "D":
        return Monomial(-1, Diagram.identity(n))
    m = _TOKEN_A.match(token)
    if not m:
        raise ValueError(f"invalid type A token {token!r}")
    i = int(m.group(2))
    gen = generator_R if m.group(1) == "R" else generator_E
    return Monomial(0, gen(n, i))


def evaluate_word(word: str | Sequence[str], n: int) -> Monomial:
    """Left-to-right product of the generator monomials of a type A word."""
    result = Monomial.identity(n)
    for token in parse_word(word):
        result = multiply(result, token_monomial_A(token, n))
    return result


# symmetries ----------------------------------------------------------------

def _mirror_table(n: int) -> tuple[int, ...]:
    return tuple(n - 1 - d for d in range(n)) + tuple(3 * n - 1 - d for d in range(n, 2 * n))


def sigma_diagram(d: Diagram) -> Diagram:
    mir = _mirror_table(d.n)
    m = d.match
    return Diagram._raw(d.n, tuple(mir[m[mir[x]]] for x in range(2 * d.n)))


def sigma(a: Monomial) -> Monomial:
    """Reflect about the central vertical axis."""
    return Monomial(a.delta_exp, sigma_diagram(a.diagram))


def is_symmetric(d: Diagram) -> bool:
    mir = _mirror_table(d.n)
    m = d.match
    return all(mir[m[x]] == m[mir[x]] for x in range(2 * d.n))


def op_diagram(d: Diagram) -> Diagram:
    n = d.n
    flip = tuple(range(n, 2 * n)) + tuple(range(n))
    m = d.match
    return Diagram._raw(n, tuple(flip[m[flip[x]]] for x in range(2 * n)))


def op(a: Monomial) -> Monomial:
    """Swap top and bottom rows (the anti-involution fixing every generator)."""
    return Monomial(a.delta_exp, op_diagram(a.diagram))


# heights -------------------------------------------------------------------

def _boundary_chords(d: Diagram) -> list[tuple[int, int]]:
    # top row left to right, then bottom row right to left
    n = d.n
    pos = list(range(n)) + [3 * n - 1 - x for x in range(n, 2 * n)]
    chords = []
    for x, y in enumerate(d.match):
        if x < y:
            a, b = pos[x], pos[y]
            chords.append((a, b) if a < b else (b, a))
    return chords


def height(d: Diagram | Monomial) -> int:
    """Minimal number of crossings: strand pairs whose endpoints alternate on the boundary."""
    if isinstance(d, Monomial):
        d = d.diagram
    chords = _boundary_chords(d)
    count = 0
    for k, (a, b) in enumerate(chords):
        for c, e in chords[k + 1:]:
            if (a < c < b) != (a < e < b):
                count += 1
    return count


# enumeration ---------------------------------------------------------------

def enumerate_diagrams(n: int, bound: int = MAX_ENUMERATION_STRANDS) -> Iterator[Diagram]:
    """All (2n-1)!! diagrams on n strands in lexicographic order of their pair lists."""
    if n < 1:
        raise ValueError("need at least one strand")
    if n > bound:
        raise ValueError(f"enumeration of {n} strands exceeds the bound {bound}")
    size = 2 * n
    match = [-1] * size
    raw = Diagram._raw

    def rec(first: int):
        while first < size and match[first] != -1:
            first += 1
        if first == size:
            yield raw(n, tuple(match))
            return
        for partner in range(first + 1, size):
            if match[partner] == -1:
                match[first], match[partner] = partner, first
                yield from rec(first + 1)
                match[first] = match[partner] = -1

    yield from rec(0)


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = 1*3*...*(2n-1)."""
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


# free module over Z[d, d^-1] ------------------------------------------------

class AlgebraElement:
    """A finite formal sum of diagrams with Laurent polynomial coefficients."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[Diagram, LaurentPoly] | None = None):
        self.n = n
        self.coeffs: dict[Diagram, LaurentPoly] = {}
        for d, c in (coeffs or {}).items():
            if d.n != n:
                raise ValueError("diagram strand count differs from the element's")
            if c:
                self.coeffs[d] = c

    @classmethod
    def from_monomial(cls, m: Monomial, coeff: LaurentPoly | int = 1) -> AlgebraElement:
        c = coeff if isinstance(coeff, LaurentPoly) else LaurentPoly.constant(coeff)
        return cls(m.n, {m.diagram: c.shift(m.delta_exp)})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if self.n != other.n:
            raise ValueError("strand counts differ")
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, ZERO) + c
        return AlgebraElement(self.n, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.n, {d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> AlgebraElement:
        return AlgebraElement(self.n, {d: v * c for d, v in self.coeffs.items()})

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return algebra_multiply(self, other)

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"AlgebraElement({self.n}, 0)"
        body = " + ".join(f"({c})*{d.pairs()}" for d, c in sorted(self.coeffs.items()))
        return f"AlgebraElement({self.n}, {body})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"pairs": [list(p) for p in d.pairs()], "coeff": c.to_json()}
                for d, c in sorted(self.coeffs.items())
            ],
        }


def algebra_multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.n != b.n:
        raise ValueError(f"strand counts differ: {a.n} vs {b.n}")
    n = a.n
    out: dict[Diagram, LaurentPoly] = {}
    for d1, c1 in a.coeffs.items():
        for d2, c2 in b.coeffs.items():
            match, loops = compose(d1.match, d2.match, n)
            d = Diagram._raw(n, match)
            out[d] = out.get(d, ZERO) + (c1 * c2).shift(loops)
    return AlgebraElement(n, out)


# breadth-first word oracle -------------------------------------------------

def min_crossing_words(n: int) -> dict[Diagram, int]:
    """Fewest R letters in any word reaching each diagram (0-1 BFS over the monoid)."""
    gens = [(generator_R(n, i), 1) for i in range(1, n)] + [(generator_E(n, i), 0) for i in range(1, n)]
    start = Diagram.identity(n)
    dist = {start: 0}
    dq = deque([start])
    while dq:
        d = dq.popleft()
        base = dist[d]
        for g, cost in gens:
            nxt = Diagram._raw(n, compose(d.match, g.match, n)[0])
            nd = base + cost
            if nxt not in dist or nd < dist[nxt]:
                dist[nxt] = nd
                if cost:
                    dq.append(nxt)
                else:
                    dq.appendleft(nxt)
    return dist
