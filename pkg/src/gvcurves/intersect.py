"""Intersection theory on products of a curve with itself.

The cohomology of ``C^k`` is modelled through the Kunneth basis: on each
factor a class is one of ``1``, ``alpha_i``, ``beta_i`` (``i = 1..g``) or
``pt``, with ``alpha_i beta_i = pt = -beta_i alpha_i``. Products carry Koszul
signs, so relations such as ``Delta^2 = (2 - 2g) pt x pt`` are computed, not
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError, RingMismatch

Word = tuple[int, ...]


@dataclass(frozen=True)
class KunnethRing:
    """Cohomology ring of ``C^arity`` for a curve of genus ``genus``.

    Per-factor letters: ``0`` is the unit, ``1..g`` are ``alpha_i``,
    ``g+1..2g`` are ``beta_i`` and ``2g+1`` is the point class.
    """

    genus: int
    arity: int

    @property
    def pt_letter(self) -> int:
        return 2 * self.genus + 1

    def letter_degree(self, letter: int) -> int:
        if letter == 0:
            return 0
        if letter == self.pt_letter:
            return 2
        return 1

    def word_degree(self, word: Word) -> int:
        return sum(self.letter_degree(x) for x in word)

    def _letter_product(self, a: int, b: int) -> tuple[int, int]:
        """Product of two letters on one factor as ``(sign, letter)``; sign 0 means zero."""
        g, pt = self.genus, self.pt_letter
        if a == 0:
            return 1, b
        if b == 0:
            return 1, a
        if a == pt or b == pt:
            return 0, 0
        if 1 <= a <= g and b == a + g:
            return 1, pt
        if 1 <= b <= g and a == b + g:
            return -1, pt
        return 0, 0

    def word_product(self, u: Word, v: Word) -> tuple[int, Word]:
        sign = 1
        # moving v_j left past u_i for i > j
        odd_u_suffix = 0
        for j in range(self.arity - 1, -1, -1):
            if self.letter_degree(v[j]) % 2 and odd_u_suffix % 2:
                sign = -sign
            if self.letter_degree(u[j]) % 2:
                odd_u_suffix += 1
        out = []
        for a, b in zip(u, v):
            s, c = self._letter_product(a, b)
            if s == 0:
                return 0, ()
            sign *= s
            out.append(c)
        return sign, tuple(out)

    # -- named classes ------------------------------------------------------

    def unit(self) -> "CohClass":
        return CohClass(self, {(0,) * self.arity: Fraction(1)})

    def zero(self) -> "CohClass":
        return CohClass(self, {})

    def point_on(self, *factors: int) -> "CohClass":
        """Pullback of the point class from each listed factor (their product)."""
        word = [0] * self.arity
        for i in factors:
            word[i] = self.pt_letter
        return CohClass(self, {tuple(word): Fraction(1)})

    def point(self) -> "CohClass":
        return self.point_on(*range(self.arity))

    def diagonal(self, i: int, j: int) -> "CohClass":
        """Class of ``{x_i = x_j}``: ``pt_i + pt_j - sum(alpha_k^i beta_k^j - beta_k^i alpha_k^j)``."""
        if i == j:
            raise ValueError("diagonal needs two distinct factors")
        g = self.genus
        terms: dict[Word, Fraction] = {}
        base = [0] * self.arity

        def put(li: int, lj: int, c: int) -> None:
            w = list(base)
            w[i], w[j] = li, lj
            terms[tuple(w)] = terms.get(tuple(w), Fraction(0)) + c

        put(self.pt_letter, 0, 1)
        put(0, self.pt_letter, 1)
        for k in range(1, g + 1):
            put(k, k + g, -1)
            put(k + g, k, 1)
        return CohClass(self, terms)

    def small_diagonal(self, factors: Sequence[int]) -> "CohClass":
        """Class of the locus where all listed coordinates agree."""
        out = self.unit()
        for a, b in zip(factors, factors[1:]):
            out = out * self.diagonal(a, b)
        return out

    def tangent_c1(self) -> "CohClass":
        """First Chern class of the tangent bundle of ``C^arity``."""
        return sum((self.point_on(i) for i in range(self.arity)), self.zero()).scale(2 - 2 * self.genus)


class CohClass:
    """Element of a :class:`KunnethRing` with rational coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: KunnethRing, terms: Mapping[Word, Fraction | int]):
        self.ring = ring
        self.terms = {w: Fraction(c) for w, c in terms.items() if c}

    def _check(self, other: "CohClass") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other: "CohClass") -> "CohClass":
        self._check(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, Fraction(0)) + c
        return CohClass(self.ring, t)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k) -> "CohClass":
        k = Fraction(k)
        return CohClass(self.ring, {w: k * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "CohClass":
        out = self.ring.unit()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def component(self, degree: int) -> "CohClass":
        """Part of real cohomological degree ``degree``."""
        return CohClass(self.ring, {w: c for w, c in self.terms.items() if self.ring.word_degree(w) == degree})

    def integrate(self) -> Fraction:
        top = (self.ring.pt_letter,) * self.ring.arity
        return self.terms.get(top, Fraction(0))

    def has_odd_letters(self) -> bool:
        r = self.ring
        return any(r.letter_degree(x) == 1 for w in self.terms for x in w)

    def push_first(self) -> "CohClass":
        """Pushforward along the projection forgetting factor 0."""
        r = self.ring
        target = KunnethRing(r.genus, r.arity - 1)
        out = {w[1:]: c for w, c in self.terms.items() if w[0] == r.pt_letter}
        return CohClass(target, out)

    def __repr__(self):
        return f"CohClass(g={self.ring.genus}, k={self.ring.arity}, {len(self.terms)} terms)"

    def _letter_name(self, letter: int) -> str:
        g = self.ring.genus
        if letter == self.ring.pt_letter:
            return "pt"
        if letter <= g:
            return f"a{letter}"
        return f"b{letter - g}"

    def to_text(self) -> str:
        """Terms like ``-3 pt|1|pt`` (one slot per factor, ``1`` for the unit)."""
        if not self.terms:
            return "0"
        parts = []
        for word in sorted(self.terms):
            c = self.terms[word]
            slots = "|".join("1" if x == 0 else self._letter_name(x) for x in word)
            parts.append(f"{c} {slots}")
        return " + ".join(parts).replace("+ -", "- ")


def mul(x: CohClass, y: CohClass) -> CohClass:
    """Koszul-signed product."""
    x._check(y)
    r = x.ring
    out: dict[Word, Fraction] = {}
    for u, a in x.terms.items():
        for v, b in y.terms.items():
            sign, w = r.word_product(u, v)
            if sign:
                out[w] = out.get(w, Fraction(0)) + sign * a * b
    return CohClass(r, out)


def diagonal(i: int, j: int, ring: KunnethRing) -> CohClass:
    return ring.diagonal(i, j)


def _exp_nilpotent(d: CohClass, sign: int = 1) -> CohClass:
    """``exp(sign * d)`` for a nilpotent even class ``d``."""
    r = d.ring
    out = r.unit()
    power = r.unit()
    for n in range(1, r.arity + 1):
        power = power * d
        if not power:
            break
        out = out + power.scale(Fraction(sign**n, factorial(n)))
    return out


@dataclass(frozen=True)
class ChernData:
    """Chern character of a sheaf: ``ch[i]`` lives in complex degree ``i``."""

    ch: tuple[CohClass, ...]
    rank: int

    @property
    def ring(self) -> KunnethRing:
        return self.ch[0].ring


def grr_push(weights: Sequence[int], deg_l2: int, genus: int, *, twist: bool = False) -> ChernData:
    """Chern character of a pushforward along ``C x C^m -> C^m`` by GRR.

    With ``D = sum_i w_i Delta_i`` (``Delta_i = {x = y_i}``) this is
    ``mu_*(sigma^* L^2 (x) O_D)`` by default and ``mu_*(sigma^* L^2(-D))``
    when ``twist`` is set. ``deg_l2`` is the degree of ``L^2`` on ``C``.
    """
    m = len(weights)
    big = KunnethRing(genus, m + 1)
    divisor = big.zero()
    for i, w in enumerate(weights):
        divisor = divisor + big.diagonal(0, i + 1).scale(w)
    eta = big.point_on(0)
    # ch(sigma^* L^2) . td_mu = (1 + deg_l2 eta)(1 + (1 - g) eta); eta^2 = 0
    base = big.unit() + eta.scale(deg_l2 + 1 - genus)
    if twist:
        sheaf = _exp_nilpotent(divisor, -1)
    else:
        sheaf = big.unit() - _exp_nilpotent(divisor, -1)
    total = (sheaf * base).push_first()
    ch = tuple(total.component(2 * i) for i in range(m + 1))
    rank = ch[0].terms.get((0,) * m, Fraction(0))
    if rank.denominator != 1:
        raise ArithmeticError("non-integral rank")
    return ChernData(ch, int(rank))


def chern_from_ch(d: ChernData, top: int | None = None) -> list[CohClass]:
    """Chern classes ``[c_1, c_2, ...]`` from the Chern character via Newton's identities."""
    r = d.ring
    top = len(d.ch) - 1 if top is None else top
    power_sums = [None] + [d.ch[k].scale(factorial(k)) if k < len(d.ch) else r.zero() for k in range(1, top + 1)]
    c = [r.unit()]
    for k in range(1, top + 1):
        acc = r.zero()
        for i in range(1, k + 1):
            term = c[k - i] * power_sums[i]
            acc = acc + (term if i % 2 else -term)
        c.append(acc.scale(Fraction(1, k)))
    return c[1:]


def degeneracy_euler(d: ChernData) -> int:
    """Euler characteristic of the degeneracy locus on a product of three curves.

    Evaluates ``c_2(F) c_1(T) - c_1(F) c_2(F) - c_3(F)`` for the rank-6 bundle
    ``F`` of the de Jonquieres construction.
    """
    r = d.ring
    if r.arity != 3:
        raise DimensionError("the degeneracy formula is for threefolds C^3")
    c1, c2, c3 = chern_from_ch(d, 3)
    value = (c2 * r.tangent_c1() - c1 * c2 - c3).integrate()
    return _as_int(value)


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return int(x)


def theta_count(parts: Sequence[int], genus: int) -> int:
    """Ordered solutions of ``O(sum a_i x_i) = M`` for a general ``M``.

    Each ``x -> a x`` pulls the theta divisor back to ``a^2`` times itself and
    ``Theta^g = g!``.
    """
    if len(parts) != genus:
        raise DimensionError(f"{len(parts)} points on a genus-{genus} curve is not zero-dimensional")
    out = factorial(genus)
    for a in parts:
        out *= a * a
    return out


@dataclass(frozen=True)
class BlowupSurfaceClass:
    """``a1 f1 + a2 f2 + b Delta + e E`` on ``C x C`` blown up at ``n_points`` points.

    ``f1 = C x pt`` and ``f2 = pt x C``; ``E`` is the total exceptional class.
    """

    a1: int
    a2: int
    b: int
    e: int
    n_points: int
    genus: int

    def dot(self, other: "BlowupSurfaceClass") -> int:
        if (self.n_points, self.genus) != (other.n_points, other.genus):
            raise ValueError("classes live on different surfaces")
        delta_sq = 2 - 2 * self.genus
        return (
            self.a1 * other.a2
            + self.a2 * other.a1
            + self.a1 * other.b
            + self.a2 * other.b
            + self.b * other.a1
            + self.b * other.a2
            + self.b * other.b * delta_sq
            - self.e * other.e * self.n_points
        )

    def __add__(self, other: "BlowupSurfaceClass") -> "BlowupSurfaceClass":
        if (self.n_points, self.genus) != (other.n_points, other.genus):
            raise ValueError("classes live on different surfaces")
        return BlowupSurfaceClass(
            self.a1 + other.a1, self.a2 + other.a2, self.b + other.b, self.e + other.e, self.n_points, self.genus
        )

    @classmethod
    def canonical(cls, n_points: int, genus: int) -> "BlowupSurfaceClass":
        k = 2 * genus - 2
        return cls(k, k, 0, 1, n_points, genus)


def blowup_divisor_euler(cls: BlowupSurfaceClass) -> int:
    """Euler characteristic of a smooth curve ``D`` on the blowup, by adjunction."""
    k = BlowupSurfaceClass.canonical(cls.n_points, cls.genus)
    return -(k + cls).dot(cls)


def surface_class_coords(x: CohClass) -> tuple[Fraction, Fraction, Fraction]:
    """Write an even degree-2 class on ``C x C`` as ``a1 f1 + a2 f2 + b Delta``.

    Raises ``ValueError`` when ``x`` is not in that span.
    """
    r = x.ring
    if r.arity != 2:
        raise ValueError("expected a class on C x C")
    pt = r.pt_letter
    b = x.terms.get((r.genus + 1, 1), Fraction(0)) if r.genus else Fraction(0)
    a1 = x.terms.get((0, pt), Fraction(0)) - b
    a2 = x.terms.get((pt, 0), Fraction(0)) - b
    rebuilt = r.point_on(1).scale(a1) + r.point_on(0).scale(a2) + r.diagonal(0, 1).scale(b)
    if rebuilt != x:
        raise ValueError("class is not a combination of f1, f2 and the diagonal")
    return a1, a2, b


def integrate_products(classes: Iterable[CohClass]) -> Fraction:
    it = iter(classes)
    out = next(it)
    for c in it:
        out = out * c
    return out.integrate()
