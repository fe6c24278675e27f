"""Root systems, admissible sets and the monoid action on them.

Type A roots ``eps_i - eps_j`` (i < j) on N = m+1 coordinates are stored as
1-based index pairs ``(i, j)``; an admissible set is a frozenset of pairwise
disjoint pairs, i.e. the horizontal strands of a diagram top or bottom.

The type C roots are the images under the projection ``fp(x) = (x + sigma x)/2``
onto the sigma-fixed subspace of R^N, N = 2n, with simple roots
``beta_0 = alpha_n`` (long) and ``beta_k = fp(alpha_{n-k})`` (short).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .diagrams import (
    Diagram,
    Monomial,
    evaluate_word,
    height,
    multiply,
    parse_word,
    token_monomial_A,
)

RootA = tuple[int, int]
AdmissibleSet = frozenset  # of RootA


def admissible(roots: Iterable[Sequence[int]]) -> frozenset[RootA]:
    out = []
    for i, j in roots:
        out.append((i, j) if i < j else (j, i))
    B = frozenset(out)
    used = [x for r in B for x in r]
    if len(used) != len(set(used)):
        raise ValueError(f"roots are not mutually orthogonal: {sorted(B)}")
    return B


def sorted_roots(B: Iterable[RootA]) -> list[RootA]:
    return sorted(B)


def alpha_coeffs(root: RootA, m: int) -> list[int]:
    """Coefficients of ``eps_i - eps_j`` over the simple roots alpha_1..alpha_m."""
    i, j = root
    return [1 if i <= k < j else 0 for k in range(1, m + 1)]


def root_height(root: RootA) -> int:
    return root[1] - root[0]


def simple(i: int) -> RootA:
    return (i, i + 1)


def top(a: Monomial | Diagram) -> frozenset[RootA]:
    d = a.diagram if isinstance(a, Monomial) else a
    return frozenset(d.top_arcs())


def bottom(a: Monomial | Diagram) -> frozenset[RootA]:
    d = a.diagram if isinstance(a, Monomial) else a
    return frozenset(d.bottom_arcs())


def sigma_root(root: RootA, n: int) -> RootA:
    i, j = root
    return (n + 1 - j, n + 1 - i)


def sigma_set(B: Iterable[RootA], n: int) -> frozenset[RootA]:
    return frozenset(sigma_root(r, n) for r in B)


def is_sigma_invariant(B: frozenset[RootA], n: int) -> bool:
    return sigma_set(B, n) == B


# the case-based action ------------------------------------------------------

def _transpose(B: Iterable[RootA], x: int, y: int) -> frozenset[RootA]:
    def s(k):
        return y if k == x else x if k == y else k

    out = set()
    for i, j in B:
        a, b = s(i), s(j)
        out.add((a, b) if a < b else (b, a))
    return frozenset(out)


def act_generator(token: str, B: frozenset[RootA], n: int) -> frozenset[RootA]:
    """Action of one generator token ``R<i>``, ``E<i>``, ``d`` or ``D`` on an admissible set."""
    if token in ("d", "D"):
        return B
    kind, i = token[0], int(token[1:])
    if not 1 <= i <= n - 1 or kind not in "RE":
        raise ValueError(f"invalid token {token!r} for {n} strands")
    if kind == "R":
        return _transpose(B, i, i + 1)
    a = (i, i + 1)
    if a in B:
        return B
    touching = sorted(r for r in B if i in r or i + 1 in r)
    if not touching:
        return B | {a}
    # R_beta R_i B; every non-orthogonal beta must give the same set
    moved = _transpose(B, i, i + 1)
    results = {_transpose(moved, *beta) for beta in touching}
    if len(results) != 1:
        raise AssertionError(f"E{i} action on {sorted(B)} depends on the choice of beta")
    return results.pop()


def act_word(word: str | Sequence[str], B: Iterable[RootA], n: int) -> frozenset[RootA]:
    """Left action of a word: the rightmost letter acts first."""
    B = frozenset(B)
    for token in reversed(parse_word(word)):
        B = act_generator(token, B, n)
    return B


def act_word_right(B: Iterable[RootA], word: str | Sequence[str], n: int) -> frozenset[RootA]:
    """Right action on bottoms; the generators are op-fixed so the leftmost letter acts first."""
    B = frozenset(B)
    for token in parse_word(word):
        B = act_generator(token, B, n)
    return B


# the diagram-completion action ---------------------------------------------

def canonical_diagram(B: Iterable[RootA], C: Iterable[RootA], n: int) -> Diagram:
    """Top ``B``, bottom ``C``, free dots joined left to right without extra crossings."""
    B, C = frozenset(B), frozenset(C)
    if len(B) != len(C):
        raise ValueError(f"size mismatch: |B|={len(B)} but |C|={len(C)}")
    pairs = list(B) + [(n + i, n + j) for i, j in C]
    used_top = {x for r in B for x in r}
    used_bot = {x for r in C for x in r}
    free_top = [x for x in range(1, n + 1) if x not in used_top]
    free_bot = [x for x in range(1, n + 1) if x not in used_bot]
    pairs += [(t, n + b) for t, b in zip(free_top, free_bot)]
    return Diagram.from_pairs(n, pairs)


def _height_zero_set(size: int, n: int) -> frozenset[RootA]:
    return frozenset((2 * k + 1, 2 * k + 2) for k in range(size))


def act_left(a: Monomial | Diagram, B: Iterable[RootA]) -> frozenset[RootA]:
    """``aB``: complete ``B`` to a diagram ``b`` with no new top strands and read the top of ``ab``."""
    d = a.diagram if isinstance(a, Monomial) else a
    B = frozenset(B)
    b = canonical_diagram(B, _height_zero_set(len(B), d.n), d.n)
    return top(multiply(Monomial(0, d), Monomial(0, b)))


def act_right(B: Iterable[RootA], a: Monomial | Diagram) -> frozenset[RootA]:
    d = a.diagram if isinstance(a, Monomial) else a
    B = frozenset(B)
    b = canonical_diagram(_height_zero_set(len(B), d.n), B, d.n)
    return bottom(multiply(Monomial(0, b), Monomial(0, d)))


def height_set(B: Iterable[RootA], n: int) -> int:
    """Fewest crossings in a completion of ``B`` that adds no top strands."""
    B = frozenset(B)
    return height(canonical_diagram(B, _height_zero_set(len(B), n), n))


def completions(B: Iterable[RootA], n: int) -> Iterator[Diagram]:
    """Every diagram whose top strands are exactly ``B``."""
    from .diagrams import enumerate_diagrams

    B = frozenset(B)
    for d in enumerate_diagrams(n):
        if top(d) == B:
            yield d


# E_beta and E_B --------------------------------------------------------------

def E_root_word(root: RootA) -> list[str]:
    """A word for ``w E_i w^-1`` with ``w alpha_i = root``."""
    i, j = root
    conj = [f"R{k}" for k in range(j - 1, i, -1)]
    return conj + [f"E{i}"] + conj[::-1]


def E_root(root: RootA, n: int) -> Monomial:
    return evaluate_word(E_root_word(root), n)


def E_product(B: Iterable[RootA], n: int) -> Monomial:
    """Product of ``E_beta`` over ``B`` (order irrelevant for admissible ``B``)."""
    result = Monomial.identity(n)
    for root in sorted(B):
        result = multiply(result, E_root(root, n))
    return result


def E_hat(B: Iterable[RootA], n: int) -> Monomial:
    """The idempotent ``d^-|B| E_B``."""
    B = frozenset(B)
    return E_product(B, n).scale(-len(B))


# enumeration of admissible sets ----------------------------------------------

def all_admissible_sets(n: int) -> list[frozenset[RootA]]:
    """Every set of mutually orthogonal positive roots on n coordinates (partial matchings)."""
    out: list[frozenset[RootA]] = []

    def rec(k: int, used: set[int], acc: list[RootA]):
        while k <= n and k in used:
            k += 1
        if k > n:
            out.append(frozenset(acc))
            return
        rec(k + 1, used, acc)
        for j in range(k + 1, n + 1):
            if j not in used:
                used.update((k, j))
                acc.append((k, j))
                rec(k + 1, used, acc)
                acc.pop()
                used.difference_update((k, j))

    rec(1, set(), [])
    return sorted(out, key=lambda B: (len(B), sorted(B)))


def sigma_admissible_sets(n: int) -> list[frozenset[RootA]]:
    """Admissible sets on 2n coordinates fixed by sigma."""
    return [B for B in all_admissible_sets(2 * n) if is_sigma_invariant(B, 2 * n)]


# type C roots -------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class RootC:
    """A root of type C_n given by its coefficients over beta_0..beta_{n-1}."""

    coeffs: tuple[int, ...]
    norm: str

    def __post_init__(self):
        if self.norm not in ("short", "long"):
            raise ValueError(f"norm must be 'short' or 'long', not {self.norm!r}")

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs), "norm": self.norm}

    @classmethod
    def from_json(cls, data) -> RootC:
        return make_root_c(data["coeffs"])

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"b{k}" if c == 1 else f"{c}b{k}")
        return "+".join(parts) or "0"


def _doubled_simple(n: int, k: int) -> tuple[int, ...]:
    """2*beta_k in epsilon coordinates of R^{2n}."""
    v = [0] * (2 * n)
    if k == 0:
        v[n - 1], v[n] = 2, -2
    else:
        v[n - k - 1] += 1
        v[n - k] -= 1
        v[n + k - 1] += 1
        v[n + k] -= 1
    return tuple(v)


def doubled_vector(beta: RootC | Sequence[int]) -> tuple[int, ...]:
    coeffs = beta.coeffs if isinstance(beta, RootC) else tuple(beta)
    n = len(coeffs)
    out = [0] * (2 * n)
    for k, c in enumerate(coeffs):
        if c:
            for x, v in enumerate(_doubled_simple(n, k)):
                out[x] += c * v
    return tuple(out)


def inner_C(beta: RootC, gamma: RootC) -> tuple[int, int]:
    """``(beta, gamma)`` as a fraction ``num / 4`` with exact integers: returns ``(num, 4)``."""
    u, v = doubled_vector(beta), doubled_vector(gamma)
    return sum(a * b for a, b in zip(u, v)), 4


def orthogonal_C(beta: RootC, gamma: RootC) -> bool:
    return inner_C(beta, gamma)[0] == 0


def fp(root: RootA, n: int) -> RootC:
    """Project a positive type A_{2n-1} root onto the sigma-fixed subspace."""
    i, j = root
    if not 1 <= i < j <= 2 * n:
        raise ValueError(f"{root} is not a positive root on {2 * n} coordinates")
    c = alpha_coeffs(root, 2 * n - 1)
    coeffs = [c[n - 1]] + [c[n - k - 1] + c[n + k - 1] for k in range(1, n)]
    norm = "long" if i + j == 2 * n + 1 else "short"
    return RootC(tuple(coeffs), norm)


@lru_cache(maxsize=None)
def positive_roots_C(n: int) -> tuple[RootC, ...]:
    return tuple(sorted({fp((i, j), n) for i in range(1, 2 * n + 1) for j in range(i + 1, 2 * n + 1)}))


@lru_cache(maxsize=None)
def _root_lookup(n: int) -> dict[tuple[int, ...], tuple[int, RootC]]:
    table = {}
    for beta in positive_roots_C(n):
        v = doubled_vector(beta)
        table[v] = (1, beta)
        table[tuple(-x for x in v)] = (-1, beta)
    return table


def make_root_c(coeffs: Sequence[int]) -> RootC:
    """Validate a coefficient vector and attach its norm."""
    coeffs = tuple(int(c) for c in coeffs)
    n = len(coeffs)
    for beta in positive_roots_C(n):
        if beta.coeffs == coeffs:
            return beta
    raise ValueError(f"{coeffs} is not a positive root of type C_{n}")


def simple_root_C(n: int, k: int) -> RootC:
    coeffs = [0] * n
    coeffs[k] = 1
    return make_root_c(coeffs)


def reflect_C(beta: RootC, gamma: RootC) -> tuple[int, RootC]:
    """``r_beta(gamma)`` as ``(sign, positive root)``."""
    b, g = doubled_vector(beta), doubled_vector(gamma)
    num = 2 * sum(x * y for x, y in zip(g, b))
    den = sum(x * x for x in b)
    factor, rem = divmod(num, den)
    assert rem == 0
    image = tuple(x - factor * y for x, y in zip(g, b))
    return _root_lookup(beta.rank)[image]


def act_weyl_C(word: Sequence[str], gamma: RootC) -> tuple[int, RootC]:
    """Apply a word in ``r0..r{n-1}`` (rightmost first) to a type C root; returns ``(sign, root)``."""
    n = gamma.rank
    sign = 1
    for token in reversed(list(word)):
        if token in ("d", "D"):
            continue
        if token[0] != "r":
            raise ValueError(f"only reflections act on roots, got {token!r}")
        s, gamma = reflect_C(simple_root_C(n, int(token[1:])), gamma)
        sign *= s
    return sign, gamma


def act_weyl_C_set(word: Sequence[str], Y: Iterable[RootC]) -> frozenset[RootC]:
    return frozenset(act_weyl_C(word, g)[1] for g in Y)


def fp_set(B: Iterable[RootA], n: int) -> frozenset[RootC]:
    B = frozenset(B)
    if not is_sigma_invariant(B, 2 * n):
        raise ValueError(f"{sorted(B)} is not sigma-invariant")
    return frozenset(fp(r, n) for r in B)


def fp_preimage(Y: Iterable[RootC], n: int) -> frozenset[RootA]:
    """All positive type A roots projecting into ``Y``."""
    Y = frozenset(Y)
    return frozenset(
        (i, j) for i in range(1, 2 * n + 1) for j in range(i + 1, 2 * n + 1) if fp((i, j), n) in Y
    )


def is_admissible_C(Y: Iterable[RootC], n: int | None = None) -> bool:
    """Whether a set of mutually orthogonal type C roots is the image of a sigma-invariant admissible set."""
    Y = frozenset(Y)
    if n is None:
        if not Y:
            return True
        n = next(iter(Y)).rank
    for beta, gamma in combinations(sorted(Y), 2):
        if not orthogonal_C(beta, gamma):
            raise ValueError(f"{beta} and {gamma} are not orthogonal")
    X = fp_preimage(Y, n)
    dots = [x for r in X for x in r]
    return len(dots) == len(set(dots))


def lift(Y: Iterable[RootC], n: int) -> frozenset[RootA]:
    """Inverse of ``fp`` on admissible type C sets."""
    Y = frozenset(Y)
    if not is_admissible_C(Y, n):
        raise ValueError(f"{sorted(map(str, Y))} is not admissible")
    return fp_preimage(Y, n)


def token_diagram(token: str, n: int) -> Monomial:
    return token_monomial_A(token, n)


def generator_E_set(i: int) -> frozenset[RootA]:
    return frozenset({(i, i + 1)})


__all__ = [
    "RootA",
    "RootC",
    "act_generator",
    "act_left",
    "act_right",
    "act_weyl_C",
    "act_word",
    "admissible",
    "all_admissible_sets",
    "bottom",
    "canonical_diagram",
    "E_hat",
    "E_product",
    "E_root",
    "fp",
    "fp_preimage",
    "fp_set",
    "height_set",
    "is_admissible_C",
    "lift",
    "positive_roots_C",
    "sigma_admissible_sets",
    "sigma_set",
    "top",
]

