"""Change of basis between Euler-characteristic polynomials and GV spectra."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .errors import NotDecomposable, UnknownValues
from .poly import LaurentPoly


@dataclass(frozen=True)
class GVSpectrum:
    """Integer invariants ``n_g`` indexed by genus.

    Genera outside ``values`` are zero unless they fall in ``unknown``, an
    inclusive ``(lo, hi)`` range of genera whose values are not determined.
    """

    values: Mapping[int, int] = field(default_factory=dict)
    unknown: tuple[int, int] | None = None

    def __post_init__(self):
        clean = {int(g): int(n) for g, n in self.values.items() if n}
        if any(g < 0 for g in clean):
            raise ValueError("genus must be non-negative")
        object.__setattr__(self, "values", clean)
        if self.unknown is not None:
            lo, hi = self.unknown
            if lo > hi:
                object.__setattr__(self, "unknown", None)
            else:
                object.__setattr__(self, "unknown", (int(lo), int(hi)))

    def is_known(self, g: int) -> bool:
        return self.unknown is None or not (self.unknown[0] <= g <= self.unknown[1])

    def get(self, g: int) -> int | None:
        """``n_g``, or ``None`` when it is undetermined."""
        if not self.is_known(g):
            return None
        return self.values.get(g, 0)

    def __getitem__(self, g: int) -> int:
        n = self.get(g)
        if n is None:
            raise UnknownValues(f"n_{g} is not determined")
        return n

    def support(self) -> list[int]:
        return sorted(self.values)

    def top_genus(self) -> int:
        hi = max(self.values, default=0)
        if self.unknown is not None:
            hi = max(hi, self.unknown[1])
        return hi

    def __add__(self, other: "GVSpectrum") -> "GVSpectrum":
        vals = dict(self.values)
        for g, n in other.values.items():
            vals[g] = vals.get(g, 0) + n
        ranges = [r for r in (self.unknown, other.unknown) if r is not None]
        unknown = None
        if ranges:
            unknown = (min(r[0] for r in ranges), max(r[1] for r in ranges))
            vals = {g: n for g, n in vals.items() if not unknown[0] <= g <= unknown[1]}
        return GVSpectrum(vals, unknown)

    def scale(self, k: int) -> "GVSpectrum":
        return GVSpectrum({g: k * n for g, n in self.values.items()}, self.unknown)

    def to_dict(self) -> dict:
        return {
            "n": {str(g): self.values[g] for g in sorted(self.values)},
            "unknown": list(self.unknown) if self.unknown else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "GVSpectrum":
        unknown = data.get("unknown")
        return cls({int(g): int(n) for g, n in data["n"].items()}, tuple(unknown) if unknown else None)

    @classmethod
    def from_json(cls, text: str) -> "GVSpectrum":
        return cls.from_dict(json.loads(text))


def decompose_cosh(p: LaurentPoly) -> GVSpectrum:
    """Write ``p = sum_g n_g (q^-1/2 + q^1/2)^(2g)`` and return the ``n_g``.

    The basis element of genus ``g`` has top s-degree ``2g`` with coefficient
    1, so the top coefficient is peeled off repeatedly.
    """
    if not p.is_symmetric():
        raise NotDecomposable(f"{p.to_text()} is not invariant under q^1/2 -> q^-1/2")
    y = LaurentPoly.cosh_var()
    out: dict[int, int] = {}
    rem = p
    while rem:
        d = rem.degree()
        if d < 0 or d % 2:
            raise NotDecomposable(f"remainder {rem.to_text()} has no cosh-basis expansion")
        c = rem[d]
        out[d // 2] = c
        rem = rem - (y ** d).scale(c)
    return GVSpectrum(out)


def compose_cosh(spec: GVSpectrum) -> LaurentPoly:
    if spec.unknown is not None:
        raise UnknownValues("cannot compose a spectrum with undetermined values")
    y = LaurentPoly.cosh_var()
    total = LaurentPoly()
    for g, n in spec.values.items():
        total = total + (y ** (2 * g)).scale(n)
    return total


def signed_sinh_element(g: int, gbar: int) -> LaurentPoly:
    """``q^(2 gbar - 2) (-1)^g (q^-1 - q)^(2g - 2)`` for ``g >= 1``."""
    if g < 1:
        raise ValueError("the genus-0 element is not a Laurent polynomial")
    x = LaurentPoly.sinh_var()
    return (x ** (2 * g - 2)).shift(4 * gbar - 4).scale(-1 if g % 2 else 1)


def decompose_signed_sinh(p: LaurentPoly, gbar: int) -> GVSpectrum:
    """Write ``p = q^(2 gbar - 2) sum_g (-1)^g n_g (q^-1 - q)^(2g - 2)``.

    Peeling runs from the top s-degree: the genus-``g`` element has top
    s-degree ``4 gbar + 4g - 8`` with coefficient ``(-1)^g``.
    """
    out: dict[int, int] = {}
    rem = p
    while rem:
        d = rem.degree()
        shifted = d - 4 * gbar + 8
        if shifted % 4:
            raise NotDecomposable(f"remainder {rem.to_text()} is off the (q^-1 - q)^2 lattice")
        g = shifted // 4
        if g < 1:
            raise NotDecomposable(f"remainder {rem.to_text()} needs (q^-1 - q)-degree below 0")
        c = rem[d]
        n = -c if g % 2 else c
        out[g] = n
        rem = rem - signed_sinh_element(g, gbar).scale(n)
    return GVSpectrum(out)
