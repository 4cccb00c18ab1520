"""Multigraded Betti numbers and regularity of monomial ideals.

Two independent routes compute the same table:

* :func:`betti_numbers` uses upper Koszul complexes: ``beta_{i,a}(I)`` is the
  rank of ``H~_{i-1}`` of the complex of squarefree ``W`` in ``supp(a)`` with
  ``x^a / x^W`` in ``I``.
* :func:`betti_via_lcm_order_complex` uses the lcm lattice: ``beta_{i,a}(I)``
  is the rank of ``H~_{i-1}`` of the order complex of the lattice elements
  strictly below ``a``.

Both only visit multidegrees in the lcm lattice, which carries every nonzero
Betti number.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .caps import CapExceededError, Caps, default_caps
from .linalg import GF2, Field, rank
from .monomial import Monomial, MonomialIdeal, divides, lcm


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite complex given by its full face list.

    ``faces`` holds sorted tuples of ground elements. The void complex has
    no faces at all; the irrelevant complex has only the empty face.
    """

    ground: tuple
    faces: frozenset = field(default_factory=frozenset)

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    def faces_of_dim(self, d: int) -> list[tuple]:
        return sorted(f for f in self.faces if len(f) == d + 1)

    def is_closed(self) -> bool:
        return all(
            f[:j] + f[j + 1 :] in self.faces for f in self.faces for j in range(len(f))
        )


def _boundary(faces_d: list[tuple], index_below: dict[tuple, int]) -> list[dict[int, int]]:
    cols = []
    for f in faces_d:
        col = {}
        for j in range(len(f)):
            col[index_below[f[:j] + f[j + 1 :]]] = -1 if j & 1 else 1
        cols.append(col)
    return cols


def _homology(faces: Iterable[tuple], fld: Field) -> dict[int, int]:
    """Reduced homology ranks by dimension, from -1 up to the top dimension."""
    by_dim: dict[int, list[tuple]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    if not by_dim:
        return {}
    top = max(by_dim)
    for d in by_dim:
        by_dim[d].sort()
    ranks = {}  # rank of the boundary map out of dimension d
    for d in range(0, top + 1):
        below = {f: r for r, f in enumerate(by_dim.get(d - 1, []))}
        ranks[d] = rank(_boundary(by_dim.get(d, []), below), fld)
    return {
        d: len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        for d in range(-1, top + 1)
    }


def reduced_homology_ranks(
    c: SimplicialComplex, fld: Field = GF2, caps: Caps | None = None
) -> list[tuple[int, int]]:
    """``[(d, dim H~_d)]`` for ``d = -1 .. dim c``; empty for the void complex."""
    caps = caps or default_caps()
    if len(c.ground) > caps.ground_set:
        raise CapExceededError(
            f"ground set of {len(c.ground)} exceeds the cap {caps.ground_set}"
        )
    return sorted(_homology(c.faces, fld).items())


def lcm_lattice(i: MonomialIdeal, caps: Caps | None = None) -> list[Monomial]:
    """Closure of the generators under lcm, in canonical monomial order."""
    if i.is_zero or i.is_unit:
        raise ValueError("the lcm lattice needs a proper nonzero ideal")
    caps = caps or default_caps()
    gens = i.gens
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = lcm(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        if len(seen) > caps.lattice:
            raise CapExceededError(f"lcm lattice exceeds the cap {caps.lattice}")
        frontier = nxt
    return sorted(seen, key=lambda m: (sum(m), m))


def upper_koszul_complex(i: MonomialIdeal, a: Monomial) -> SimplicialComplex:
    if len(a) != i.nvars or any(e < 0 for e in a):
        raise ValueError("multidegree must be a non-negative vector in the ideal's ring")
    support = tuple(j for j, e in enumerate(a) if e)
    faces = []
    for r in range(len(support) + 1):
        for w in itertools.combinations(support, r):
            b = list(a)
            for j in w:
                b[j] -= 1
            if tuple(b) in i:
                faces.append(w)
    c = SimplicialComplex(support, frozenset(faces))
    assert c.is_closed(), "upper Koszul complex must be closed under subsets"
    return c


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers ``{(i, a): rank}`` of an ideal."""

    nvars: int
    entries: dict
    field: Field = GF2

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return (self.nvars, self.entries, self.field) == (other.nvars, other.entries, other.field)

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(self.items()), self.field))

    def items(self) -> Iterator[tuple[tuple[int, Monomial], int]]:
        return iter(sorted(self.entries.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1])))

    def graded(self) -> dict[tuple[int, int], int]:
        """Collapse to ``{(i, j): beta_{i,j}}`` with ``j = |a|``."""
        out: dict[tuple[int, int], int] = {}
        for (i, a), r in self.entries.items():
            out[(i, sum(a))] = out.get((i, sum(a)), 0) + r
        return dict(sorted(out.items()))

    def regularity(self) -> int:
        return max((sum(a) - i for (i, a) in self.entries), default=0)

    def format(self) -> str:
        return "".join(
            f"{i} | {' '.join(map(str, a))} | {r}\n" for (i, a), r in self.items()
        )


def parse_betti_table(text: str, nvars: int, fld: Field = GF2) -> BettiTable:
    entries = {}
    for line in filter(None, (ln.strip() for ln in text.splitlines())):
        i, a, r = (part.strip() for part in line.split("|"))
        a = tuple(int(x) for x in a.split())
        if len(a) != nvars:
            raise ValueError(f"multidegree {a} does not have {nvars} entries")
        entries[(int(i), a)] = int(r)
    return BettiTable(nvars, entries, fld)


def _check_proper(i: MonomialIdeal) -> None:
    if i.is_zero or i.is_unit:
        raise ValueError("Betti tables are computed for proper nonzero ideals")


def betti_numbers(i: MonomialIdeal, fld: Field = GF2, caps: Caps | None = None) -> BettiTable:
    _check_proper(i)
    caps = caps or default_caps()
    entries = {}
    for a in lcm_lattice(i, caps):
        c = upper_koszul_complex(i, a)
        for d, r in reduced_homology_ranks(c, fld, caps):
            if r:
                entries[(d + 1, a)] = r
    return BettiTable(i.nvars, entries, fld)


def _chains(below: list[Monomial], caps: Caps) -> list[tuple]:
    """All chains of the poset ``below`` (under divisibility), as index tuples.

    ``below`` is in canonical order, so a strict divisor always has a smaller
    index and chains come out as increasing tuples.
    """
    up = [[j for j in range(k + 1, len(below)) if divides(below[k], below[j])]
          for k in range(len(below))]
    faces: list[tuple] = [()]
    stack = [(k,) for k in range(len(below))]
    while stack:
        ch = stack.pop()
        faces.append(ch)
        if len(faces) > caps.faces:
            raise CapExceededError(f"order complex exceeds the face cap {caps.faces}")
        stack.extend(ch + (j,) for j in up[ch[-1]])
    return faces


def betti_via_lcm_order_complex(
    i: MonomialIdeal, fld: Field = GF2, caps: Caps | None = None
) -> BettiTable:
    """Betti table from order complexes of open intervals in the lcm lattice."""
    _check_proper(i)
    caps = caps or default_caps()
    lattice = lcm_lattice(i, caps)
    entries = {}
    for a in lattice:
        below = [b for b in lattice if b != a and divides(b, a)]
        for d, r in _homology(_chains(below, caps), fld).items():
            if r:
                entries[(d + 1, a)] = r
    return BettiTable(i.nvars, entries, fld)


def regularity(
    i: MonomialIdeal, fld: Field = GF2, caps: Caps | None = None, *, oracle: bool = False
) -> int:
    """``max(|a| - i)`` over the nonzero Betti numbers; 0 for the unit ideal."""
    if i.is_zero:
        raise ValueError("regularity of the zero ideal is undefined")
    if i.is_unit:
        return 0
    compute = betti_via_lcm_order_complex if oracle else betti_numbers
    return compute(i, fld, caps).regularity()


def reduced_euler_characteristic(c: SimplicialComplex) -> int:
    """``sum_d (-1)^d f_d`` over faces, counting the empty face in dimension -1."""
    return sum((-1) ** (len(f) - 1) for f in c.faces)
