"""Final assembly: nearby-hyperplane part + Higgs part, checked against the GW side."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MismatchError
from .gvbasis import GVSpectrum
from .gwside import extract_gw_gv
from .higgs import higgs_spectrum
from .localgv import SpectralType, local_gv
from .partitions import Partition, partitions_of
from .strata import stratum_table


@dataclass(frozen=True)
class SymbolicTerm:
    """``coefficient * sum_{lambda in partitions} e(U_eps ∩ S_lambda)``."""

    coefficient: int
    partitions: tuple[Partition, ...]
    label: str

    def to_text(self) -> str:
        sign = "-" if self.coefficient < 0 else ""
        mag = abs(self.coefficient)
        lead = sign + ("" if mag == 1 else f"{mag}*")
        return f"{lead}sum_{{{self.label}}} e(S_lambda ∩ U_eps)"


@dataclass(frozen=True)
class NearbyResult:
    spectrum: GVSpectrum
    symbolic: dict[int, SymbolicTerm] = field(default_factory=dict)


@dataclass(frozen=True)
class FullResult:
    base_genus: int
    nearby: GVSpectrum
    higgs_side: GVSpectrum
    total: GVSpectrum
    gw_side: GVSpectrum
    gw_degree1: GVSpectrum
    match: dict[int, bool]
    symbolic: dict[int, SymbolicTerm] = field(default_factory=dict)

    @property
    def all_match(self) -> bool:
        return all(self.match.values())

    def to_dict(self) -> dict:
        return {
            "base_genus": self.base_genus,
            "nearby": self.nearby.to_dict(),
            "higgs_side": self.higgs_side.to_dict(),
            "total": self.total.to_dict(),
            "gw_side": self.gw_side.to_dict(),
            "gw_degree1": self.gw_degree1.to_dict(),
            "match": {str(g): ok for g, ok in sorted(self.match.items())},
            "symbolic": {str(g): t.to_text() for g, t in sorted(self.symbolic.items())},
        }


def local_table(base_genus: int) -> dict[Partition, GVSpectrum]:
    return {lam: local_gv(SpectralType(lam, base_genus)) for lam in partitions_of(4 * base_genus - 2)}


def nearby_gv(base_genus: int = 2) -> GVSpectrum:
    """``n_g(U_eps) = sum_lambda n_g(lambda) e(U_eps ∩ S_lambda)`` (genus two only)."""
    if base_genus != 2:
        raise ValueError("the full nearby spectrum needs the genus-two stratum table")
    table = stratum_table(2)
    total = GVSpectrum()
    for lam, spec in local_table(2).items():
        total = total + spec.scale(table[lam])
    return total


def nearby_structure(base_genus: int) -> NearbyResult:
    """What the local contributions alone determine about ``n_g(U_eps)``.

    Uses only that the strata Euler characteristics add up to 1. A genus
    where every ``n_g(lambda)`` agrees is determined; a genus where the
    values are ``0`` or one fixed ``c`` becomes a symbolic term; anything
    else is unknown.
    """
    table = local_table(base_genus)
    top = max(spec.top_genus() for spec in table.values())
    values: dict[int, int] = {}
    symbolic: dict[int, SymbolicTerm] = {}
    unknown: list[int] = []
    for g in range(0, top + 2):
        seen = {lam: spec.get(g) for lam, spec in table.items()}
        distinct = set(seen.values())
        if len(distinct) == 1:
            values[g] = distinct.pop()
            continue
        nonzero = distinct - {0}
        if len(nonzero) == 1:
            c = nonzero.pop()
            lams = tuple(lam for lam, v in seen.items() if v == c)
            label = "lambda all parts even" if all(all(v % 2 == 0 for v in lam) for lam in lams) and len(lams) == sum(
                1 for lam in table if all(v % 2 == 0 for v in lam)
            ) else ";".join(",".join(map(str, lam)) for lam in lams)
            symbolic[g] = SymbolicTerm(c, lams, label)
        unknown.append(g)
    rng = (min(unknown), max(unknown)) if unknown else None
    if rng is not None:
        values = {g: n for g, n in values.items() if not rng[0] <= g <= rng[1]}
    return NearbyResult(GVSpectrum(values, rng), symbolic)


def full_gv(base_genus: int, strict: bool = True) -> FullResult:
    """Total degree-two GV spectrum of ``Tot_C(N)`` and its GW cross-check.

    With ``strict`` a disagreement at any determined genus raises
    :class:`MismatchError`.
    """
    g_c = base_genus
    if g_c < 2:
        raise ValueError("base genus must be at least 2")
    if g_c == 2:
        nearby = nearby_gv(2)
        symbolic = {}
    else:
        structure = nearby_structure(g_c)
        nearby, symbolic = structure.spectrum, structure.symbolic
    higgs = higgs_spectrum(g_c).spectrum
    total = nearby + higgs
    degree1, gw = extract_gw_gv(g_c)
    top = max(total.top_genus(), gw.top_genus(), 4 * g_c - 2) + 1
    match: dict[int, bool] = {}
    diff: dict[int, tuple[int, int]] = {}
    for g in range(0, top + 1):
        mine = total.get(g)
        if mine is None:
            continue
        ok = mine == gw[g]
        match[g] = ok
        if not ok:
            diff[g] = (mine, gw[g])
    if strict and diff:
        raise MismatchError(diff)
    return FullResult(g_c, nearby, higgs, total, gw, degree1, match, symbolic)
