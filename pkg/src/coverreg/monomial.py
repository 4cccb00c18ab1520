"""Exact arithmetic on monomials and monomial ideals.

A monomial is a tuple of non-negative exponents. A :class:`MonomialIdeal`
stores its minimal generators in canonical order (total degree, then
lexicographic on exponents), so two ideals are equal exactly when their
generator tuples are.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from ._rng import SplitMix64
from .caps import CapExceededError, Caps, default_caps
from .graph import Graph, minimal_vertex_covers

Monomial = tuple  # tuple[int, ...] of exponents

MAX_EXPONENT = 2**31 - 1


class ExponentOverflowError(ArithmeticError):
    """An exponent left the supported fixed-width range."""


def degree_of(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x <= y else y for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    out = tuple(x + y for x, y in zip(a, b))
    if any(e > MAX_EXPONENT for e in out):
        raise ExponentOverflowError(f"exponent overflow multiplying {a} by {b}")
    return out


def mono_pow(a: Monomial, k: int) -> Monomial:
    out = tuple(e * k for e in a)
    if any(e > MAX_EXPONENT for e in out):
        raise ExponentOverflowError(f"exponent overflow raising {a} to the {k}")
    return out


def variable(nvars: int, i: int) -> Monomial:
    return tuple(1 if j == i else 0 for j in range(nvars))


def squarefree_monomial(nvars: int, support: Iterable[int]) -> Monomial:
    s = set(support)
    return tuple(1 if j in s else 0 for j in range(nvars))


def _canon_key(m: Monomial):
    return (sum(m), m)


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    ordered = sorted(set(gens), key=_canon_key)
    kept: list[Monomial] = []
    for g in ordered:
        # anything dividing g has degree <= deg g, so it is already in kept
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple  # canonical minimal generators

    def __post_init__(self) -> None:
        for g in self.gens:
            if len(g) != self.nvars:
                raise ValueError(f"generator {g} does not live in {self.nvars} variables")

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def __contains__(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(monomial_str(g) for g in self.gens) + ")"


def minimalize(gens: Iterable[Monomial], nvars: int | None = None) -> MonomialIdeal:
    """The ideal generated by ``gens``, reduced to its minimal generators."""
    gens = [tuple(g) for g in gens]
    sizes = {len(g) for g in gens}
    if nvars is not None:
        sizes.add(nvars)
    if len(sizes) > 1:
        raise ValueError(f"monomials with mixed variable counts: {sorted(sizes)}")
    if not sizes:
        raise ValueError("cannot infer the variable count of an empty generator set")
    (n,) = sizes
    for g in gens:
        if any(e < 0 for e in g):
            raise ValueError(f"negative exponent in {g}")
        if any(e > MAX_EXPONENT for e in g):
            raise ExponentOverflowError(f"exponent too large in {g}")
    return MonomialIdeal(n, _minimal(gens))


def unit_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, ((0,) * nvars,))


def zero_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, ())


def _same_ring(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.nvars != b.nvars:
        raise ValueError(f"ideals live in different rings ({a.nvars} vs {b.nvars} variables)")


def _guard(count: int, caps: Caps | None) -> None:
    caps = caps or default_caps()
    if count > caps.generators:
        raise CapExceededError(
            f"{count} intermediate generators exceed the generator cap {caps.generators}"
        )


def intersect(a: MonomialIdeal, b: MonomialIdeal, caps: Caps | None = None) -> MonomialIdeal:
    """Generators are the minimal pairwise lcms."""
    _same_ring(a, b)
    _guard(len(a.gens) * len(b.gens), caps)
    return MonomialIdeal(a.nvars, _minimal(lcm(u, v) for u in a.gens for v in b.gens))


def intersect_all(
    ideals: Sequence[MonomialIdeal], nvars: int, caps: Caps | None = None
) -> MonomialIdeal:
    """Left fold of :func:`intersect`; the empty intersection is the unit ideal."""
    out = unit_ideal(nvars)
    for i in ideals:
        out = intersect(out, i, caps)
    return out


def product(a: MonomialIdeal, b: MonomialIdeal, caps: Caps | None = None) -> MonomialIdeal:
    _same_ring(a, b)
    _guard(len(a.gens) * len(b.gens), caps)
    return MonomialIdeal(a.nvars, _minimal(mul(u, v) for u in a.gens for v in b.gens))


def power(a: MonomialIdeal, k: int, caps: Caps | None = None) -> MonomialIdeal:
    if k < 0:
        raise ValueError("power exponent must be non-negative")
    out = unit_ideal(a.nvars)
    for _ in range(k):
        out = product(out, a, caps)
    return out


def colon(i: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """``(i : m)``, generated by ``u / gcd(u, m)`` for ``u`` in ``G(i)``."""
    if len(m) != i.nvars:
        raise ValueError("monomial and ideal live in different rings")
    return MonomialIdeal(
        i.nvars, _minimal(tuple(max(x - y, 0) for x, y in zip(u, m)) for u in i.gens)
    )


def restrict_away(i: MonomialIdeal, v: int) -> MonomialIdeal:
    """``i`` intersected with the subring missing variable ``v``, re-indexed.

    Only the ``v``-free generators survive: a ``v``-free monomial lies in
    ``i`` exactly when a ``v``-free generator divides it.
    """
    if not 0 <= v < i.nvars:
        raise IndexError(f"variable {v} out of range")
    kept = [g[:v] + g[v + 1 :] for g in i.gens if g[v] == 0]
    return MonomialIdeal(i.nvars - 1, tuple(kept))


def degree(i: MonomialIdeal) -> int:
    """Largest degree of a minimal generator (0 for the unit ideal)."""
    if i.is_zero:
        raise ValueError("the zero ideal has no degree")
    return max(sum(g) for g in i.gens)


def equal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    _same_ring(a, b)
    return a.gens == b.gens


# --- cover ideals and symbolic powers ---------------------------------------


def cover_ideal(g: Graph) -> MonomialIdeal:
    """Generated by the products over the minimal vertex covers of ``g``."""
    return minimalize((squarefree_monomial(g.n, c) for c in minimal_vertex_covers(g)), g.n)


def edge_intersection(g: Graph, k: int = 1, caps: Caps | None = None) -> MonomialIdeal:
    """``(x_i, x_j)^k`` intersected over all edges, in sorted edge order."""
    return intersect_all([prime_power((i, j), k, g.n) for i, j in g.sorted_edges()], g.n, caps)


def _require_squarefree(i: MonomialIdeal) -> None:
    if not i.is_squarefree:
        raise ValueError("expected a squarefree monomial ideal")


def minimal_primes(i: MonomialIdeal, caps: Caps | None = None) -> list[frozenset]:
    """Minimal primes of a squarefree ideal, as sets of variable indices.

    These are the minimal transversals of the generator supports, found by
    scanning all variable subsets in order of size.
    """
    _require_squarefree(i)
    if i.is_zero:
        raise ValueError("the zero ideal has no proper minimal monomial primes")
    caps = caps or default_caps()
    if i.nvars > caps.prime_vars:
        raise CapExceededError(
            f"minimal primes by subset scan are capped at {caps.prime_vars} variables"
        )
    supports = [sum(1 << j for j, e in enumerate(g) if e) for g in i.gens]
    if 0 in supports:
        return []
    found: list[int] = []
    masks = sorted(range(1 << i.nvars), key=lambda s: (s.bit_count(), s))
    for s in masks:
        if all(s & t for t in supports) and not any(f & s == f for f in found):
            found.append(s)
    return [frozenset(j for j in range(i.nvars) if (s >> j) & 1) for s in found]


def prime_power(vars: Iterable[int], k: int, nvars: int) -> MonomialIdeal:
    """All degree-``k`` monomials supported on ``vars``."""
    vs = sorted(set(vars))
    if not vs:
        raise ValueError("prime_power needs a nonempty variable set")
    if k < 0:
        raise ValueError("k must be non-negative")
    if any(not 0 <= v < nvars for v in vs):
        raise IndexError("variable index out of range")
    gens = []
    for combo in itertools.combinations_with_replacement(vs, k):
        m = [0] * nvars
        for v in combo:
            m[v] += 1
        gens.append(tuple(m))
    return MonomialIdeal(nvars, _minimal(gens))


def symbolic_power(i: MonomialIdeal, k: int, caps: Caps | None = None) -> MonomialIdeal:
    """``k``-th symbolic power of a squarefree ideal.

    The intersection of the ``k``-th powers of the minimal primes, folded in
    the order returned by :func:`minimal_primes`. ``k = 0`` gives the unit
    ideal.
    """
    _require_squarefree(i)
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return unit_ideal(i.nvars)
    primes = minimal_primes(i, caps)
    return intersect_all([prime_power(p, k, i.nvars) for p in primes], i.nvars, caps)


def random_squarefree_ideal(nvars: int, ngens: int, seed: int) -> MonomialIdeal:
    """Ideal generated by ``ngens`` random nonzero squarefree monomials."""
    if nvars < 1 or ngens < 1:
        raise ValueError("need at least one variable and one generator")
    rng = SplitMix64(seed)
    gens = [squarefree_monomial(nvars, _support(rng.below((1 << nvars) - 1) + 1, nvars))
            for _ in range(ngens)]
    return minimalize(gens, nvars)


def _support(mask: int, nvars: int) -> list[int]:
    return [j for j in range(nvars) if (mask >> j) & 1]


# --- text serialisation -----------------------------------------------------


def monomial_str(m: Monomial, names: Sequence[str] | None = None) -> str:
    names = names or [f"x{j + 1}" for j in range(len(m))]
    parts = [names[j] if e == 1 else f"{names[j]}^{e}" for j, e in enumerate(m) if e]
    return " ".join(parts) or "1"


def format_ideal(i: MonomialIdeal) -> str:
    """``ring n`` followed by one generator per line in canonical order."""
    lines = [f"ring {i.nvars}"] + [monomial_str(g) for g in i.gens]
    return "\n".join(lines) + "\n"


_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?$")


def parse_ideal(text: str) -> MonomialIdeal:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("ring "):
        raise ValueError("expected header 'ring n'")
    n = int(lines[0].split()[1])
    gens = []
    for lineno, line in enumerate(lines[1:], 2):
        m = [0] * n
        if line != "1":
            for factor in line.split():
                hit = _FACTOR.match(factor)
                if not hit or not 1 <= int(hit.group(1)) <= n:
                    raise ValueError(f"generator line {lineno}: bad factor {factor!r}")
                m[int(hit.group(1)) - 1] += int(hit.group(2) or 1)
        gens.append(tuple(m))
    return minimalize(gens, n) if gens else zero_ideal(n)
