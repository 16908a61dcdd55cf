"""Euler characteristics of the singularity strata of the nearby hyperplane, genus two.

Each stratum ``S_lambda`` is reached through a cover ``Z_lambda`` of its
closure. With ``D_lambda`` the part of ``Z_lambda`` over the hyperplane at
infinity,

    aut * e(S_lambda) = e(Z) - e(D) - sum_mu lift(lambda, mu) * e(S_mu)

where ``mu`` runs over the strictly coarser partitions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InconsistentTable
from .intersect import (
    BlowupSurfaceClass,
    blowup_divisor_euler,
    degeneracy_euler,
    grr_push,
    surface_class_coords,
    theta_count,
)
from .partitions import LiftScheme, Partition, aut_factor, coarsenings, lift_count, partitions_of

GENUS = 2
DEG_L2 = 2 * (2 * GENUS - 1)
CHI_C = 2 - 2 * GENUS


@dataclass(frozen=True)
class CaseInputs:
    """``e(Z_lambda)`` and ``e(D_lambda)`` together with where each number came from."""

    euler_Z: int
    euler_D: int
    scheme: LiftScheme
    aut: int
    provenance: dict[str, str] = field(default_factory=dict)
    special: str | None = None


@dataclass(frozen=True)
class StratumTable:
    entries: dict[Partition, int]
    inputs: dict[Partition, CaseInputs]

    def __getitem__(self, lam: Partition) -> int:
        return self.entries[tuple(lam)]

    def total(self) -> int:
        return sum(self.entries.values())

    def to_dict(self) -> dict:
        return {",".join(map(str, lam)): e for lam, e in self.entries.items()}


def _divisor_points(parts: Partition) -> int:
    """``sum_i lambda_i * #{solutions with x_i at a fixed point}`` for ordered rows."""
    total = 0
    for i, a in enumerate(parts):
        rest = parts[:i] + parts[i + 1:]
        total += a * theta_count(rest, GENUS)
    return total


def case_inputs(lam: Partition) -> CaseInputs:
    lam = tuple(lam)
    std = LiftScheme.standard(lam)
    thr1 = aut_factor(lam, 1)
    ones = lam.count(1)

    if lam == (6,):
        # a general L^2 is not O(6x)
        return CaseInputs(0, 0, std, 1, {"euler_Z": "empty for general L"}, special="empty")

    if len(lam) == GENUS:
        z = theta_count(lam, GENUS)
        return CaseInputs(
            z, 0, std, thr1,
            {"euler_Z": f"theta count {'.'.join(f'{a}^2' for a in lam)}.Theta^2",
             "euler_D": "0: a general hyperplane misses finitely many points"},
        )

    if lam == (4, 1, 1):
        # Z is isomorphic to C since h^0(L^2(-4x)) = 1 for all x
        z = CHI_C
        d = lam[0] * 1 + theta_count((4, 1), GENUS)
        return CaseInputs(z, d, std, thr1, {
            "euler_Z": "Z ~ C (genericity of L)",
            "euler_D": "4 (x at the base point, multiplicity 4) + theta count O(4x+y)",
        })

    if lam == (3, 2, 1):
        data = grr_push(lam, DEG_L2, GENUS)
        return CaseInputs(degeneracy_euler(data), _divisor_points(lam), std, thr1, {
            "euler_Z": "degeneracy locus Euler characteristic via GRR",
            "euler_D": "sum_i lambda_i * theta count with row i at the base point",
        })

    if lam == (2, 2, 2):
        # closure = 2^(2g) conics, each meeting the hyperplane at infinity in 2 points
        roots = 2 ** (2 * GENUS)
        return CaseInputs(roots * 2, roots * 2, LiftScheme.symmetric(lam), 1, {
            "euler_Z": "2^(2g) square roots of L^2, each a P^1",
            "euler_D": "two points per conic",
        }, special="closure")

    if lam == (2, 2, 1, 1):
        n = theta_count((2, 2), GENUS)
        data = grr_push((2, 2), DEG_L2, GENUS, twist=True)
        a1, a2, b = surface_class_coords(data.ch[1])
        # the linear system is the dual of the pushforward line bundle
        divisor = BlowupSurfaceClass(int(-a1), int(-a2), int(-b), -1, n, GENUS)
        return CaseInputs(CHI_C * CHI_C + n, blowup_divisor_euler(divisor), std, thr1, {
            "euler_Z": "C x C blown up at the theta-count points",
            "euler_D": "adjunction on the blowup with the GRR line bundle",
        })

    if ones > GENUS and len(lam) - ones == 1:
        # Z is a P^(k-g) bundle over C and D a hyperplane sub-bundle
        fibre = ones - GENUS
        return CaseInputs((fibre + 1) * CHI_C, fibre * CHI_C, std, thr1, {
            "euler_Z": f"P^{fibre}-bundle over C",
            "euler_D": f"P^{fibre - 1}-bundle over C (transversal hyperplane)",
        })

    raise NotImplementedError(f"no cover recipe for {lam} in genus {GENUS}")


def stratum_table(base_genus: int = 2) -> StratumTable:
    """Euler characteristics ``e(U_eps ∩ S_lambda)`` for every ``lambda ⊢ 6``."""
    if base_genus != GENUS:
        raise ValueError("stratum Euler characteristics are only available for base genus 2")
    order = partitions_of(4 * GENUS - 2)
    entries: dict[Partition, int] = {}
    inputs: dict[Partition, CaseInputs] = {}
    smooth = order[-1]
    for lam in order:
        if lam == smooth:
            continue
        ci = case_inputs(lam)
        inputs[lam] = ci
        if ci.special == "empty":
            entries[lam] = 0
            continue
        value = Fraction(ci.euler_Z - ci.euler_D)
        for mu in coarsenings(lam):
            value -= lift_count(ci.scheme, mu) * entries[mu]
        value /= ci.aut
        if value.denominator != 1:
            raise InconsistentTable(f"e(S_{lam}) = {value} is not an integer")
        entries[lam] = int(value)
    # U_eps is an affine space
    entries[smooth] = 1 - sum(entries.values())
    return StratumTable(entries, inputs)


def all_even(lam: Partition) -> bool:
    return all(v % 2 == 0 for v in lam)
