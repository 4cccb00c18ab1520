"""Executable checks of the regularity bounds and the identities behind them.

Each check returns a flat report record. A record is a *violation* only when
the statement it tests is actually claimed for that input (for instance the
upper bound for a graph that is bipartite, unmixed or claw-free); failures
elsewhere are kept as observations.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, Sequence

from . import graph as gr
from .betti import regularity
from .caps import CapExceededError, Caps
from .graph import Graph
from .linalg import GF2, QQ, Field
from .monomial import (
    ExponentOverflowError,
    MonomialIdeal,
    colon,
    cover_ideal,
    degree,
    equal,
    minimalize,
    mono_pow,
    monomial_str,
    power,
    restrict_away,
    squarefree_monomial,
    symbolic_power,
)

SCHEMA_VERSION = 1

CHECKS = (
    "bounds",
    "degree-lemma",
    "restriction",
    "colon",
    "bipartite-power",
    "half-cover",
    "sharpness",
    "bound-comparison",
    "field-agreement",
)
DEFAULT_CHECKS = tuple(c for c in CHECKS if c != "field-agreement")


@dataclass(frozen=True)
class BoundsReport:
    graph_id: str
    n: int
    k: int
    bipartite: bool
    unmixed: bool
    claw_free: bool
    deg: int
    reg: int
    lower: int
    upper: int
    field: str
    holds: bool
    lower_tight: bool
    upper_tight: bool

    @property
    def in_class(self) -> bool:
        return self.bipartite or self.unmixed or self.claw_free

    @property
    def defect(self) -> int:
        """``reg - k*deg``; observed only."""
        return self.reg - self.lower

    @property
    def violation(self) -> bool:
        # the lower bound holds for every graph; the upper one only in class
        return self.reg < self.lower or (self.in_class and self.reg > self.upper)

    def record(self) -> dict:
        row = {"schema_version": SCHEMA_VERSION, "record_type": "bounds"}
        row.update(asdict(self))
        row.update(in_class=self.in_class, defect=self.defect, violation=self.violation)
        return row


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    graph_id: str
    parameters: str
    passed: bool
    claimed: bool = True
    witness: str | None = None

    def __post_init__(self) -> None:
        if not self.passed and not self.witness:
            raise ValueError("a failing identity report needs a witness")

    @property
    def violation(self) -> bool:
        return self.claimed and not self.passed

    def record(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "record_type": "identity",
            "identity": self.identity,
            "graph_id": self.graph_id,
            "parameters": self.parameters,
            "pass": self.passed,
            "claimed": self.claimed,
            "witness": self.witness,
            "violation": self.violation,
        }


@dataclass(frozen=True)
class ErrorRecord:
    check: str
    graph_id: str
    parameters: str
    message: str

    violation = False

    def record(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "record_type": "error",
            "check": self.check,
            "graph_id": self.graph_id,
            "parameters": self.parameters,
            "message": self.message,
        }


Report = BoundsReport | IdentityReport | ErrorRecord


def _params(**kw) -> str:
    return ";".join(f"{k}={v}" for k, v in kw.items())


def _diff(left: MonomialIdeal, right: MonomialIdeal) -> str | None:
    if left.nvars == right.nvars and equal(left, right):
        return None
    lo = [monomial_str(g) for g in left.gens if g not in right.gens]
    ro = [monomial_str(g) for g in right.gens if g not in left.gens]
    return f"left only: {lo}; right only: {ro}"


def class_flags(g: Graph) -> dict[str, bool]:
    return {
        "bipartite": gr.is_bipartite(g) is not None,
        "unmixed": gr.is_unmixed(g),
        "claw_free": gr.is_claw_free(g),
    }


# --- individual checks ------------------------------------------------------


def check_degree_lemma(
    i: MonomialIdeal, k: int, caps: Caps | None = None, graph_id: str = "ideal"
) -> IdentityReport:
    """``deg I^(k) >= k deg I`` and every ``u^k`` with ``u`` in ``G(I)`` is minimal in ``I^(k)``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    sym = symbolic_power(i, k, caps)
    problems = []
    if degree(sym) < k * degree(i):
        problems.append(f"deg I^(k) = {degree(sym)} < {k * degree(i)}")
    gens = set(sym.gens)
    missing = [monomial_str(mono_pow(u, k)) for u in i.gens if mono_pow(u, k) not in gens]
    if missing:
        problems.append(f"u^k not minimal in I^(k): {missing}")
    return IdentityReport(
        "degree-lemma", graph_id, _params(k=k), not problems, True, "; ".join(problems) or None
    )


def check_bounds(g: Graph, k: int, fld: Field = GF2, caps: Caps | None = None) -> BoundsReport:
    """``k deg J <= reg J^(k) <= (k-1) deg J + n - 1`` after dropping isolated vertices."""
    if k < 1:
        raise ValueError("k must be at least 1")
    h = gr.drop_isolated(g)
    if h.m == 0:
        raise ValueError("check_bounds needs a graph with at least one edge")
    j = cover_ideal(h)
    d = degree(j)
    reg = regularity(symbolic_power(j, k, caps), fld, caps)
    lower, upper = k * d, (k - 1) * d + h.n - 1
    return BoundsReport(
        graph_id=g.graph_id(),
        n=h.n,
        k=k,
        deg=d,
        reg=reg,
        lower=lower,
        upper=upper,
        field=fld.tag,
        holds=lower <= reg <= upper,
        lower_tight=reg == lower,
        upper_tight=reg == upper,
        **class_flags(h),
    )


def _embed(i: MonomialIdeal, labels: Sequence[str], ambient: Sequence[str]) -> MonomialIdeal:
    pos = [list(ambient).index(name) for name in labels]
    gens = []
    for m in i.gens:
        out = [0] * len(ambient)
        for p, e in zip(pos, m):
            out[p] = e
        gens.append(tuple(out))
    return minimalize(gens, len(ambient))


def restriction_sides(g: Graph, v: int) -> tuple[MonomialIdeal, MonomialIdeal]:
    """Both sides of ``J(G) ∩ S_v = u_v J(G - N[v]) S_v`` in the ring without ``v``."""
    left = restrict_away(cover_ideal(g), v)
    ambient = g.labels[:v] + g.labels[v + 1 :]
    rest = gr.delete_vertices(g, gr.closed_neighborhood(g, v))
    inner = _embed(cover_ideal(rest), rest.labels, ambient)
    nbrs = {g.labels[u] for u in gr.neighbors(g, v)}
    u = squarefree_monomial(len(ambient), (p for p, name in enumerate(ambient) if name in nbrs))
    right = minimalize((tuple(a + b for a, b in zip(u, m)) for m in inner.gens), len(ambient))
    return left, right


def check_restriction_identity(g: Graph, v: int) -> IdentityReport:
    left, right = restriction_sides(g, v)
    witness = _diff(left, right)
    return IdentityReport(
        "restriction", g.graph_id(), _params(v=g.labels[v]), witness is None, True, witness
    )


def check_colon_identity(g: Graph, k: int, caps: Caps | None = None) -> IdentityReport:
    """``(J^(k) : x_1...x_n) = J^(k-2)``."""
    if k < 2:
        raise ValueError("the colon identity needs k >= 2")
    if g.m == 0:
        raise ValueError("the colon identity needs a graph with an edge")
    j = cover_ideal(g)
    left = colon(symbolic_power(j, k, caps), (1,) * g.n)
    right = symbolic_power(j, k - 2, caps)
    witness = _diff(left, right)
    return IdentityReport("colon", g.graph_id(), _params(k=k), witness is None, True, witness)


def check_bipartite_power_equality(g: Graph, k: int, caps: Caps | None = None) -> IdentityReport:
    if gr.is_bipartite(g) is None:
        raise ValueError(f"{g.graph_id()} is not bipartite")
    j = cover_ideal(g)
    witness = _diff(power(j, k, caps), symbolic_power(j, k, caps))
    return IdentityReport(
        "bipartite-power", g.graph_id(), _params(k=k), witness is None, True, witness
    )


def check_half_cover_condition(g: Graph) -> IdentityReport:
    """Some minimal vertex cover has at least ``n/2`` vertices.

    Claimed (so a failure is a violation) for bipartite, unmixed and
    claw-free graphs.
    """
    if g.isolated_vertices():
        raise ValueError("the half-cover condition is stated for graphs without isolated vertices")
    best = gr.max_cover_size(g)
    ok = 2 * best >= g.n
    witness = None if ok else f"largest minimal cover {best} < {g.n}/2"
    claimed = any(class_flags(g).values())
    return IdentityReport(
        "half-cover", g.graph_id(), _params(max_cover=best, n=g.n), ok, claimed, witness
    )


def check_sharpness(kind: str, arg, k: int, fld: Field = GF2, caps: Caps | None = None) -> IdentityReport:
    """Exact regularity for stars, complete graphs and cones.

    ``kind`` is ``"star"`` (``arg`` = number of leaves; ordinary powers),
    ``"complete"`` (``arg`` = vertex count) or ``"cone"`` (``arg`` = the base
    graph, which must have independence number at most 2).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if kind == "star":
        g, expected_deg = gr.star(arg), arg
    elif kind == "complete":
        if arg < 2:
            raise ValueError("complete(n) sharpness needs n >= 2")
        g, expected_deg = gr.complete(arg), arg - 1
    elif kind == "cone":
        if arg.n == 0 or gr.independence_number(arg) > 2:
            raise ValueError("cone sharpness needs a nonempty base with independence number <= 2")
        g, expected_deg = gr.cone(arg), arg.n
    else:
        raise ValueError(f"unknown sharpness family {kind!r}")
    j = cover_ideal(g)
    ideal = power(j, k, caps) if kind == "star" else symbolic_power(j, k, caps)
    d = degree(j)
    reg = regularity(ideal, fld, caps)
    lower, upper = k * d, (k - 1) * d + g.n - 1
    problems = []
    if d != expected_deg:
        problems.append(f"deg J = {d}, expected {expected_deg}")
    if not reg == lower == upper:
        problems.append(f"reg = {reg}, k*deg = {lower}, (k-1)*deg+n-1 = {upper}")
    return IdentityReport(
        "sharpness", g.graph_id(), _params(k=k, field=fld.tag), not problems, True,
        "; ".join(problems) or None,
    )


def check_bound_comparison(g: Graph, k: int, fld: Field = GF2, caps: Caps | None = None) -> IdentityReport:
    """The new upper bound never exceeds ``k deg J + reg J - 1`` on bipartite graphs."""
    if gr.is_bipartite(g) is None:
        raise ValueError(f"{g.graph_id()} is not bipartite")
    if g.isolated_vertices():
        raise ValueError("bound comparison is stated for graphs without isolated vertices")
    j = cover_ideal(g)
    d = degree(j)
    new = (k - 1) * d + g.n - 1
    old = k * d + regularity(j, fld, caps) - 1
    ok = new <= old
    return IdentityReport(
        "bound-comparison", g.graph_id(), _params(k=k, new=new, old=old), ok, True,
        None if ok else f"{new} > {old}",
    )


def check_field_agreement(g: Graph, k: int, caps: Caps | None = None) -> IdentityReport:
    """Regularity of ``J^(k)`` over GF(2) against the rationals (no claim; observed)."""
    h = gr.drop_isolated(g)
    ideal = symbolic_power(cover_ideal(h), k, caps)
    r2, r0 = regularity(ideal, GF2, caps), regularity(ideal, QQ, caps)
    return IdentityReport(
        "field-agreement", g.graph_id(), _params(k=k, gf2=r2, rational=r0), r2 == r0, False,
        None if r2 == r0 else f"gf2 gives {r2}, rational gives {r0}",
    )


# --- sweeps -----------------------------------------------------------------


@dataclass(frozen=True)
class SweepItem:
    graph: Graph
    sharpness: tuple | None = None  # (kind, arg) for check_sharpness


def _guarded(check: str, g: Graph, params: str, fn) -> Report:
    try:
        return fn()
    except (CapExceededError, ExponentOverflowError) as exc:
        return ErrorRecord(check, g.graph_id(), params, f"{type(exc).__name__}: {exc}")


def _item_reports(item: SweepItem, k_max: int, fld: Field, checks, caps) -> Iterator[Report]:
    g = item.graph
    h = gr.drop_isolated(g)
    has_edge = h.m > 0
    bip = gr.is_bipartite(h) is not None
    ks = range(1, k_max + 1)

    if "bounds" in checks and has_edge:
        for k in ks:
            yield _guarded("bounds", g, _params(k=k), lambda: check_bounds(g, k, fld, caps))
    if "degree-lemma" in checks and has_edge:
        for k in ks:
            yield _guarded(
                "degree-lemma", g, _params(k=k),
                lambda: check_degree_lemma(cover_ideal(h), k, caps, g.graph_id()),
            )
    if "restriction" in checks:
        for v in range(g.n):
            yield _guarded("restriction", g, _params(v=v), lambda: check_restriction_identity(g, v))
    if "colon" in checks and has_edge:
        for k in range(2, max(k_max, 2) + 1):
            yield _guarded("colon", g, _params(k=k), lambda: check_colon_identity(g, k, caps))
    if "bipartite-power" in checks and bip:
        for k in ks:
            yield _guarded(
                "bipartite-power", g, _params(k=k), lambda: check_bipartite_power_equality(h, k, caps)
            )
    if "half-cover" in checks and has_edge:
        rep = check_half_cover_condition(h)
        yield IdentityReport(rep.identity, g.graph_id(), rep.parameters, rep.passed, rep.claimed, rep.witness)
    if "bound-comparison" in checks and bip and has_edge:
        for k in ks:
            yield _guarded(
                "bound-comparison", g, _params(k=k), lambda: check_bound_comparison(h, k, fld, caps)
            )
    if "sharpness" in checks and item.sharpness is not None:
        kind, arg = item.sharpness
        for k in ks:
            yield _guarded(
                "sharpness", g, _params(k=k), lambda: check_sharpness(kind, arg, k, fld, caps)
            )
    if "field-agreement" in checks and has_edge:
        for k in ks:
            yield _guarded("field-agreement", g, _params(k=k), lambda: check_field_agreement(g, k, caps))


@dataclass
class SweepResult:
    reports: list

    @property
    def violations(self) -> list:
        return [r for r in self.reports if r.violation]

    @property
    def errors(self) -> list:
        return [r for r in self.reports if isinstance(r, ErrorRecord)]

    def exit_code(self) -> int:
        if self.violations:
            return 1
        return 2 if self.errors else 0

    def summary(self) -> dict:
        per_check: dict[str, dict[str, int]] = {}
        for r in self.reports:
            if isinstance(r, BoundsReport):
                name, ok = "bounds", r.holds
            elif isinstance(r, IdentityReport):
                name, ok = r.identity, r.passed
            else:
                name, ok = r.check, None
            s = per_check.setdefault(
                name, {"total": 0, "passed": 0, "violations": 0, "observations": 0, "errors": 0}
            )
            s["total"] += 1
            if ok is None:
                s["errors"] += 1
            elif ok:
                s["passed"] += 1
            elif r.violation:
                s["violations"] += 1
            else:
                s["observations"] += 1
        bounds = [r for r in self.reports if isinstance(r, BoundsReport)]
        defects: dict[int, int] = {}
        for r in bounds:
            defects[r.defect] = defects.get(r.defect, 0) + 1
        return {
            "checks": dict(sorted(per_check.items())),
            "lower_tight": sum(r.lower_tight for r in bounds),
            "upper_tight": sum(r.upper_tight for r in bounds),
            "defect_histogram": dict(sorted(defects.items())),
        }


def sweep(
    items: Iterable[SweepItem | Graph],
    k_max: int,
    fld: Field = GF2,
    checks: Iterable[str] = DEFAULT_CHECKS,
    caps: Caps | None = None,
) -> SweepResult:
    """Run every applicable check over ``items``, ordered by graph id then ``k``.

    Cap overruns become :class:`ErrorRecord` rows; the sweep carries on.
    """
    checks = set(checks)
    unknown = checks - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    reports: list[Report] = []
    for item in items:
        if isinstance(item, Graph):
            item = SweepItem(item)
        reports.extend(_item_reports(item, k_max, fld, checks, caps))
    return SweepResult(reports)


# --- families ---------------------------------------------------------------


def family_items(kind: str, **opts) -> list[SweepItem]:
    """Expand a family description into sweep items.

    ``all`` takes ``max_n`` (and ``connected_only``); ``star``, ``complete``,
    ``path``, ``cycle`` take an iterable ``n``; ``complete-bipartite`` takes
    ``a`` and ``b``; ``pendant-blowup`` takes ``n`` and ``s``; ``cone`` takes
    ``n`` and cones over every graph on that many vertices with independence
    number at most 2, or over ``base`` if given; ``random`` takes ``n``, ``p``,
    ``seed`` and ``count``.
    """
    ns = list(opts.get("n") or [])
    if kind == "all":
        conn = opts.get("connected_only", True)
        return [SweepItem(g) for m in range(1, opts.get("max_n", 5) + 1)
                for g in gr.enumerate_graphs(m, conn)]
    if kind == "star":
        return [SweepItem(gr.star(m), ("star", m)) for m in ns]
    if kind == "complete":
        return [SweepItem(gr.complete(m), ("complete", m) if m >= 2 else None) for m in ns]
    if kind == "path":
        return [SweepItem(gr.path(m)) for m in ns]
    if kind == "cycle":
        return [SweepItem(gr.cycle(m)) for m in ns]
    if kind == "complete-bipartite":
        return [SweepItem(gr.complete_bipartite(a, b)) for a in opts["a"] for b in opts["b"]]
    if kind == "pendant-blowup":
        return [SweepItem(gr.pendant_blowup(m, s)) for m in ns for s in opts["s"]]
    if kind == "cone":
        base = opts.get("base")
        bases = [base] if base is not None else [
            h for m in ns for h in gr.enumerate_graphs(m) if gr.independence_number(h) <= 2
        ]
        return [SweepItem(gr.cone(h), ("cone", h)) for h in bases]
    if kind == "random":
        count = opts.get("count", 1)
        seed = opts.get("seed", 0)
        return [SweepItem(gr.random_graph(m, opts.get("p", "1/2"), seed + t))
                for m in ns for t in range(count)]
    raise ValueError(f"unknown family {kind!r}")


# --- serialisation ----------------------------------------------------------

COLUMNS = (
    "schema_version", "record_type", "graph_id",
    "n", "k", "bipartite", "unmixed", "claw_free", "in_class", "deg", "reg",
    "lower", "upper", "defect", "field", "holds", "lower_tight", "upper_tight",
    "identity", "parameters", "pass", "claimed", "witness",
    "check", "message", "violation",
)


def to_json(reports: Iterable[Report]) -> str:
    rows = [{c: r.record()[c] for c in COLUMNS if c in r.record()} for r in reports]
    return json.dumps(rows, indent=1) + "\n"


def to_csv(reports: Iterable[Report]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow({k: ("" if v is None else v) for k, v in r.record().items()})
    return buf.getvalue()


def to_text(reports: Iterable[Report]) -> str:
    lines = []
    for r in reports:
        if isinstance(r, BoundsReport):
            flag = "VIOLATION" if r.violation else ("ok" if r.holds else "observed-fail")
            lines.append(
                f"bounds {r.graph_id} k={r.k}: {r.lower} <= reg={r.reg} <= {r.upper} "
                f"[deg={r.deg} defect={r.defect} in_class={r.in_class}] {flag}"
            )
        elif isinstance(r, IdentityReport):
            flag = "pass" if r.passed else ("VIOLATION" if r.violation else "observed-fail")
            extra = f" ({r.witness})" if r.witness else ""
            lines.append(f"{r.identity} {r.graph_id} {r.parameters}: {flag}{extra}")
        else:
            lines.append(f"error {r.check} {r.graph_id} {r.parameters}: {r.message}")
    return "\n".join(lines) + ("\n" if lines else "")
