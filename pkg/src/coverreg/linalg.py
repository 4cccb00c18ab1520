"""Exact matrix rank over GF(2), GF(p) and the rationals.

Matrices are given as a list of sparse columns ``{row_index: int}``; the
boundary matrices built by :mod:`coverreg.betti` come in that shape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class Field:
    """Coefficient field: characteristic 0 means the rationals."""

    characteristic: int = 2

    def __post_init__(self) -> None:
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"GF({c}) is not a prime field")

    @property
    def tag(self) -> str:
        if self.characteristic == 0:
            return "rational"
        return "gf2" if self.characteristic == 2 else f"gf{self.characteristic}"

    def __str__(self) -> str:
        return self.tag


GF2 = Field(2)
QQ = Field(0)


def parse_field(text: str) -> Field:
    t = text.strip().lower().replace("(", "").replace(")", "")
    if t in ("rational", "rationals", "qq", "q"):
        return QQ
    if t.startswith("gf") and t[2:].isdigit():
        return Field(int(t[2:]))
    raise ValueError(f"unknown field {text!r}; use gf2, gfP for a prime P, or rational")


def rank(columns: list[dict[int, int]], field: Field) -> int:
    if not columns:
        return 0
    if field.characteristic == 2:
        return _rank_gf2(columns)
    if field.characteristic == 0:
        return _rank_fraction_free(columns)
    return _rank_mod_p(columns, field.characteristic)


def _rank_gf2(columns: list[dict[int, int]]) -> int:
    # each column packed into an int; pivots keyed by leading bit
    pivots: dict[int, int] = {}
    for col in columns:
        v = 0
        for r, c in col.items():
            if c & 1:
                v |= 1 << r
        while v:
            top = v.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = v
                break
            v ^= p
    return len(pivots)


def _rank_mod_p(columns: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}  # pivot row -> column normalised to 1 there
    for col in columns:
        v = {r: c % p for r, c in col.items() if c % p}
        while v:
            top = max(v)
            piv = pivots.get(top)
            if piv is None:
                inv = pow(v[top], -1, p)
                pivots[top] = {r: c * inv % p for r, c in v.items()}
                break
            f = v[top]
            for r, c in piv.items():
                x = (v.get(r, 0) - f * c) % p
                if x:
                    v[r] = x
                else:
                    v.pop(r, None)
    return len(pivots)


def _rank_fraction_free(columns: list[dict[int, int]]) -> int:
    """Sparse fraction-free elimination over the integers.

    A column is reduced against a pivot by ``v <- a*v - b*pivot`` (an
    invertible step over Q), then divided by the gcd of its entries so the
    integers stay small.
    """
    pivots: dict[int, dict[int, int]] = {}
    for col in columns:
        v = {r: c for r, c in col.items() if c}
        while v:
            top = max(v)
            piv = pivots.get(top)
            if piv is None:
                g = 0
                for c in v.values():
                    g = math.gcd(g, c)
                pivots[top] = {r: c // g for r, c in v.items()}
                break
            a, b = piv[top], v[top]
            v = {r: a * c for r, c in v.items()}
            for r, c in piv.items():
                x = v.get(r, 0) - b * c
                if x:
                    v[r] = x
                else:
                    v.pop(r, None)
            if v:
                g = 0
                for c in v.values():
                    g = math.gcd(g, c)
                if g > 1:
                    v = {r: c // g for r, c in v.items()}
    return len(pivots)
