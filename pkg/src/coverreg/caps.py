"""Size caps guarding the exponential steps.

Defaults can be overridden with the ``COVERREG_CAPS`` environment variable,
a comma-separated list of ``name=value`` pairs, e.g.
``COVERREG_CAPS="generators=500000,lattice=20000"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace


class CapExceededError(RuntimeError):
    """A computation outgrew one of the configured size caps."""


@dataclass(frozen=True)
class Caps:
    generators: int = 200_000  # intermediate generators during intersections
    lattice: int = 100_000  # lcm lattice elements
    prime_vars: int = 16  # variables for brute-force minimal primes
    ground_set: int = 16  # vertices of an upper Koszul complex
    faces: int = 2_000_000  # faces of an order complex

    def __post_init__(self) -> None:
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"cap {f.name!r} must be positive")


def parse_caps(text: str, base: Caps | None = None) -> Caps:
    base = base or Caps()
    names = {f.name for f in fields(Caps)}
    updates = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in names:
            raise ValueError(f"bad cap setting {item!r}; known caps: {sorted(names)}")
        try:
            updates[key] = int(value)
        except ValueError:
            raise ValueError(f"cap {key!r} needs an integer, got {value!r}") from None
    return replace(base, **updates)


def default_caps() -> Caps:
    """Caps from ``COVERREG_CAPS`` if set, else the built-in defaults."""
    env = os.environ.get("COVERREG_CAPS")
    return parse_caps(env) if env else Caps()
