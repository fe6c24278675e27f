"""Exact Laurent polynomials in one variable ``d`` over the integers.

A :class:`LaurentPoly` is stored as a sorted tuple of ``(exponent, coefficient)``
pairs with every coefficient nonzero, so structural equality is equality in
``Z[d, d^-1]`` and the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            if not isinstance(exp, int) or not isinstance(coeff, int):
                raise TypeError("exponents and coefficients must be integers")
            acc[exp] += coeff
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def _from_canonical(cls, terms: tuple[tuple[int, int], ...]) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        """``coeff * d**exp``."""
        return cls._from_canonical(((exp, coeff),) if coeff else ())

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls.monomial(0, c)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree_range(self) -> tuple[int, int] | None:
        if not self._terms:
            return None
        return self._terms[0][0], self._terms[-1][0]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly._from_canonical(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._from_canonical(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if not self._terms or not other._terms:
            return ZERO
        acc: dict[int, int] = defaultdict(int)
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] += c1 * c2
        return LaurentPoly._from_canonical(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``d**k``."""
        if k == 0:
            return self
        return LaurentPoly._from_canonical(tuple((e + k, c) for e, c in self._terms))

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_monomial() or abs(self._terms[0][1]) != 1:
                raise ValueError("only units d**e and -d**e can be inverted")
            (e, c), = self._terms
            # c is +-1, so c is its own inverse
            return LaurentPoly.monomial(e * k, c ** (-k))
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, value):
        """Evaluate at ``d = value``; ``value`` may be any ring element supporting ``**``."""
        return sum((c * value**e for e, c in self._terms), 0 * value)

    def to_json(self) -> dict:
        return {"terms": [[e, c] for e, c in self._terms]}

    @classmethod
    def from_json(cls, data: Mapping) -> LaurentPoly:
        return cls((int(e), int(c)) for e, c in data["terms"])

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            if e == 0:
                mono = str(abs(c))
            else:
                var = "d" if e == 1 else f"d^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


def _coerce(x: LaurentPoly | int) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
DELTA = LaurentPoly.monomial(1)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def delta_power(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(k)
