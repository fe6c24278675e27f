"""Normal forms ``d^k u b_{p,i,p'} v w^op`` and the root elements e_beta."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from ..diagrams import Diagram, Monomial, is_symmetric, multiply, op
from ..roots import RootC, act_weyl_C, make_root_c, simple_root_C
from .counting import count_recursion
from .weyl import WeylElement, parities, stabilizer_and_cosets, weyl_group
from .words import b_pip, eval_C

MAX_BASIS_RANK = 4


@dataclass(frozen=True)
class NormalForm:
    k: int
    i: int
    p: int
    pp: int
    u_word: tuple[str, ...]
    v_word: tuple[str, ...]
    w_word: tuple[str, ...]

    def word(self) -> list[str]:
        """The type C word ``d^k u b_{p,i,p'} v w^op``."""
        power = ["d"] * self.k if self.k >= 0 else ["D"] * (-self.k)
        return power + list(self.u_word) + b_pip(self.p, self.i, self.pp) + list(self.v_word) + list(self.w_word[::-1])

    def evaluate(self, n: int) -> Monomial:
        return eval_C(self.word(), n)

    def scaled(self, k: int) -> NormalForm:
        return NormalForm(self.k + k, self.i, self.p, self.pp, self.u_word, self.v_word, self.w_word)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "i": self.i,
            "p": self.p,
            "pp": self.pp,
            "u_word": list(self.u_word),
            "v_word": list(self.v_word),
            "w_word": list(self.w_word),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> NormalForm:
        return cls(
            int(data["k"]), int(data["i"]), int(data["p"]), int(data["pp"]),
            tuple(data["u_word"]), tuple(data["v_word"]), tuple(data["w_word"]),
        )


def _op_monomial(g: WeylElement) -> Monomial:
    return op(g.monomial)


@lru_cache(maxsize=None)
def b_monomial(p: int, i: int, pp: int, n: int) -> Monomial:
    return eval_C(b_pip(p, i, pp, n), n)


def layer(n: int, i: int) -> list[tuple[NormalForm, Monomial]]:
    """All normal forms with i central arcs; each monomial is ``Diagram`` with d-exponent 0."""
    out = []
    L = stabilizer_and_cosets(n, i, parities(i)[0]).L
    for p in parities(i):
        Dp = stabilizer_and_cosets(n, i, p).D
        for pp in parities(i):
            Dpp = stabilizer_and_cosets(n, i, pp).D
            b = b_monomial(p, i, pp, n)
            for u in Dp:
                ub = multiply(u.monomial, b)
                for v in L:
                    ubv = multiply(ub, v.monomial)
                    for w in Dpp:
                        m = multiply(ubv, _op_monomial(w))
                        nf = NormalForm(-m.delta_exp, i, p, pp, u.word, v.word, w.word)
                        out.append((nf, Monomial(0, m.diagram)))
    return out


@lru_cache(maxsize=None)
def normal_form_basis(n: int) -> tuple[tuple[NormalForm, Monomial], ...]:
    """Every normal form tuple with its diagram; the diagrams are exactly the symmetric ones."""
    if not 1 <= n <= MAX_BASIS_RANK:
        raise ValueError(f"rank {n} outside 1..{MAX_BASIS_RANK}")
    out: list[tuple[NormalForm, Monomial]] = []
    for i in range(n + 1):
        out += layer(n, i)
    seen: dict[Diagram, NormalForm] = {}
    for nf, m in out:
        if m.diagram in seen:
            raise AssertionError(f"normal forms {seen[m.diagram]} and {nf} give the same diagram")
        if not is_symmetric(m.diagram):
            raise AssertionError(f"normal form {nf} is not symmetric")
        seen[m.diagram] = nf
    if len(out) != count_recursion(2 * n):
        raise AssertionError(f"{len(out)} normal forms, expected {count_recursion(2 * n)}")
    return tuple(out)


@lru_cache(maxsize=None)
def _basis_index(n: int) -> dict[Diagram, NormalForm]:
    return {m.diagram: nf for nf, m in normal_form_basis(n)}


def normal_form_of(a: Monomial, n: int) -> NormalForm:
    """The normal form of a symmetric monomial on 2n strands."""
    try:
        nf = _basis_index(n)[a.diagram]
    except KeyError:
        raise ValueError("monomial is not in the image of phi") from None
    return nf.scaled(a.delta_exp)


# root elements -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _root_conjugators(n: int) -> dict[RootC, list[WeylElement]]:
    """For each positive root, every w with w(beta_j) = +-beta, j = 0 (long) or 1 (short)."""
    out: dict[RootC, list[WeylElement]] = {}
    simple = {"long": simple_root_C(n, 0)}
    if n > 1:
        simple["short"] = simple_root_C(n, 1)
    for w in weyl_group(n):
        for beta in simple.values():
            _, image = act_weyl_C(w.word, beta)
            out.setdefault(image, []).append(w)
    return out


def _as_root(beta: RootC | Sequence[int], n: int) -> RootC:
    if isinstance(beta, RootC):
        if beta.rank != n:
            raise ValueError(f"root of rank {beta.rank} used with rank {n}")
        return beta
    return make_root_c(beta)


def _conjugate(beta: RootC, n: int, letter: str) -> tuple[Monomial, tuple[str, ...]]:
    ws = _root_conjugators(n).get(beta)
    if not ws:
        raise ValueError(f"no Weyl element maps a simple root to {beta}")
    j = 0 if beta.norm == "long" else 1
    results = set()
    for w in ws:
        word = w.word + (f"{letter}{j}",) + w.inverse_word()
        results.add(eval_C(word, n))
    if len(results) != 1:
        raise AssertionError(f"{letter}_beta for {beta} depends on the conjugating element")
    w = ws[0]
    return results.pop(), w.word + (f"{letter}{j}",) + w.inverse_word()


def e_root(beta: RootC | Sequence[int], n: int) -> Monomial:
    """``phi(w e_j w^-1)`` for any w with ``w beta_j = beta``; all choices are compared."""
    return _conjugate(_as_root(beta, n), n, "e")[0]


def e_root_word(beta: RootC | Sequence[int], n: int) -> tuple[str, ...]:
    return _conjugate(_as_root(beta, n), n, "e")[1]


def r_root(beta: RootC | Sequence[int], n: int) -> Monomial:
    """The reflection in ``beta`` as a diagram."""
    return _conjugate(_as_root(beta, n), n, "r")[0]


def r_root_word(beta: RootC | Sequence[int], n: int) -> tuple[str, ...]:
    return _conjugate(_as_root(beta, n), n, "r")[1]


def e_set(Y, n: int) -> Monomial:
    """Product of e_beta over a set of roots (sorted order)."""
    result = Monomial.identity(2 * n)
    for beta in sorted(Y):
        result = multiply(result, e_root(beta, n))
    return result


def rewrite_eb(beta: RootC | Sequence[int], p: int, i: int, pp: int, n: int) -> NormalForm:
    """Normal form of ``e_beta b_{p,i,p'}``; its layer h lies in {i, i+1, i+2}."""
    product = multiply(e_root(beta, n), b_monomial(p, i, pp, n))
    nf = normal_form_of(product, n)
    if nf.i not in (i, i + 1, i + 2):
        raise AssertionError(f"e_beta b_{{{p},{i},{pp}}} landed in layer {nf.i}")
    return nf
