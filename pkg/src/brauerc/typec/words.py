"""Words in the type C_n generators and their images under phi."""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Sequence

from ..diagrams import Monomial, multiply, parse_word, token_monomial_A
from ..roots import RootA, act_word

_TOKEN_C = re.compile(r"^([re])(\d+)$")


def parse_word_C(word: str | Sequence[str], n: int | None = None) -> list[str]:
    """Tokens ``r<i>``, ``e<i>``, ``d`` and ``D``; indices checked against ``n`` when given."""
    tokens = parse_word(word)
    for t in tokens:
        if t in ("d", "D"):
            continue
        m = _TOKEN_C.match(t)
        if not m:
            raise ValueError(f"invalid type C token {t!r}")
        if n is not None and not 0 <= int(m.group(2)) < n:
            raise ValueError(f"token {t!r} out of range for rank {n}")
    return tokens


def phi_token(token: str, n: int) -> list[str]:
    if token in ("d", "D"):
        return [token]
    m = _TOKEN_C.match(token)
    if not m or not 0 <= int(m.group(2)) < n:
        raise ValueError(f"invalid type C token {token!r} for rank {n}")
    letter = m.group(1).upper()
    i = int(m.group(2))
    if i == 0:
        return [f"{letter}{n}"]
    return [f"{letter}{n - i}", f"{letter}{n + i}"]


def phi_word(word: str | Sequence[str], n: int) -> list[str]:
    """Substitute each type C generator by its image word on 2n strands."""
    out: list[str] = []
    for t in parse_word_C(word, n):
        out.extend(phi_token(t, n))
    return out


@lru_cache(maxsize=None)
def _token_image(token: str, n: int) -> Monomial:
    result = Monomial.identity(2 * n)
    for t in phi_token(token, n):
        result = multiply(result, token_monomial_A(t, 2 * n))
    return result


def eval_C(word: str | Sequence[str], n: int) -> Monomial:
    """The monomial ``phi(word)`` on 2n strands."""
    result = Monomial.identity(2 * n)
    for t in parse_word_C(word, n):
        result = multiply(result, _token_image(t, n))
    return result


def op_word(word: str | Sequence[str]) -> list[str]:
    return list(reversed(parse_word(word)))


def inverse_word(word: str | Sequence[str]) -> list[str]:
    """Inverse of a Weyl group word (every r_i is an involution)."""
    tokens = parse_word(word)
    if any(t[0] != "r" for t in tokens):
        raise ValueError("only words in r_i are invertible")
    return tokens[::-1]


# derived elements ---------------------------------------------------------------

def _check_rank_index(i: int, n: int | None) -> None:
    if i < 1 or (n is not None and i > n):
        raise ValueError(f"index {i} out of range 1..{n}")


def y_word(i: int, n: int | None = None) -> list[str]:
    """``r_{i-1} ... r_1 r_0 r_1 ... r_{i-1}``."""
    _check_rank_index(i, n)
    side = [f"r{k}" for k in range(i - 1, 0, -1)]
    return side + ["r0"] + side[::-1]


def z_word(i: int, n: int | None = None) -> list[str]:
    """``r_{i-1} ... r_1 e_0 r_1 ... r_{i-1}``."""
    _check_rank_index(i, n)
    side = [f"r{k}" for k in range(i - 1, 0, -1)]
    return side + ["e0"] + side[::-1]


def _check_ip(i: int, p: int, n: int | None) -> None:
    if not 0 <= p <= i or (i - p) % 2 or (n is not None and i > n):
        raise ValueError(f"need 0 <= p <= i <= n with i - p even, got i={i}, p={p}, n={n}")


def b_word(i: int, n: int | None = None) -> list[str]:
    """``z_1 z_2 ... z_i``."""
    if i < 0 or (n is not None and i > n):
        raise ValueError(f"index {i} out of range 0..{n}")
    out: list[str] = []
    for k in range(1, i + 1):
        out += z_word(k)
    return out


def e_strip(i: int, p: int, n: int | None = None) -> list[str]:
    """``e_{p+1} e_{p+3} ... e_{i-1}``."""
    _check_ip(i, p, n)
    return [f"e{k}" for k in range(p + 1, i, 2)]


def b_pip(p: int, i: int, pp: int, n: int | None = None) -> list[str]:
    """``e_{i,p} b_i e_{i,p'}``."""
    _check_ip(i, p, n)
    _check_ip(i, pp, n)
    return e_strip(i, p) + b_word(i) + e_strip(i, pp)


def B_i(i: int, n: int) -> frozenset[RootA]:
    """The nested central arcs ``(n+1-j, n+j)``, j = 1..i."""
    if not 0 <= i <= n:
        raise ValueError(f"index {i} out of range 0..{n}")
    return frozenset((n + 1 - j, n + j) for j in range(1, i + 1))


def B_set(i: int, p: int, n: int) -> frozenset[RootA]:
    """``e_{i,p} B_i``: p central arcs plus (i-p)/2 mirrored pairs of adjacent arcs."""
    _check_ip(i, p, n)
    return act_word(phi_word(e_strip(i, p), n), B_i(i, n), 2 * n)
