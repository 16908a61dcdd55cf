"""Exact polynomial arithmetic.

Three value types live here:

* :class:`LaurentPoly` -- integer Laurent polynomials in ``s`` where ``q = s**2``,
  so half-integral powers of ``q`` are ordinary integer powers of ``s``.
* :class:`BiLaurentPoly` / :class:`BiLaurentFrac` -- Laurent polynomials in
  ``(a, s)``, optionally divided by a power of ``q - q^-1``.
* :class:`QPoly` / :class:`RationalFunction` -- dense polynomials over the
  rationals in one variable ``t`` and their quotients.

Everything is immutable and exact; there is no floating point anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Literal, Mapping, Union

from .errors import OddPowerError, PoleError

Rule = Literal["q->-q", "q->q^2", "s->1/s"]
Number = Union[int, Fraction]


class LaurentPoly:
    """Integer Laurent polynomial in ``s`` (``q = s^2``).

    >>> s = LaurentPoly.s()
    >>> (s + s**-1) * (s - s**-1) == s**2 - s**-2
    True
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def s(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def q(cls, k: int = 1) -> "LaurentPoly":
        """``q**k`` as a Laurent polynomial in ``s``."""
        return cls({2 * k: 1})

    @classmethod
    def sinh_var(cls) -> "LaurentPoly":
        """``q^-1 - q``, the variable of the Hilbert-scheme expansions."""
        return cls({-2: 1, 2: -1})

    @classmethod
    def cosh_var(cls) -> "LaurentPoly":
        """``q^-1/2 + q^1/2``, the GV basis variable."""
        return cls({-1: 1, 1: 1})

    # -- accessors --------------------------------------------------------

    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        """Top s-exponent; raises ValueError for the zero polynomial."""
        if not self._c:
            raise ValueError("degree of the zero polynomial")
        return max(self._c)

    def valuation(self) -> int:
        if not self._c:
            raise ValueError("valuation of the zero polynomial")
        return min(self._c)

    def is_q_integral(self) -> bool:
        return all(e % 2 == 0 for e in self._c)

    def is_symmetric(self) -> bool:
        """True when invariant under ``s -> 1/s``."""
        return all(self._c.get(-e, 0) == v for e, v in self._c.items())

    # -- ring operations --------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e: k * v for e, v in self._c.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``s**k``."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials can be inverted")
            ((e, v),) = self._c.items()
            if v not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentPoly({e * n: v ** (-n)})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def divmod(self, divisor: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Division from the top degree down, over the integers.

        The divisor's leading coefficient must divide every leading coefficient
        met along the way; otherwise ``ValueError``. The remainder has top
        degree below ``self.valuation() + span(divisor)``.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        top = divisor.degree()
        span = top - divisor.valuation()
        lead = divisor[top]
        rem = dict(self._c)
        quo: dict[int, int] = {}
        floor = (min(rem) + span) if rem else 0
        while rem and max(rem) >= floor:
            d = max(rem)
            c = rem[d]
            if c % lead:
                raise ValueError("leading coefficient does not divide")
            k = c // lead
            quo[d - top] = k
            for e, v in divisor._c.items():
                t = e + d - top
                nv = rem.get(t, 0) - k * v
                if nv:
                    rem[t] = nv
                else:
                    rem.pop(t, None)
        return LaurentPoly(quo), LaurentPoly(rem)

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly | None":
        """Quotient when ``divisor`` divides ``self`` exactly, else ``None``."""
        try:
            quo, rem = self.divmod(divisor)
        except ValueError:
            return None
        return quo if rem.is_zero() else None

    # -- substitutions ----------------------------------------------------

    def substitute(self, rule: Rule) -> "LaurentPoly":
        if rule == "s->1/s":
            return LaurentPoly({-e: v for e, v in self._c.items()})
        if rule not in ("q->-q", "q->q^2"):
            raise ValueError(f"unknown substitution {rule!r}")
        if not self.is_q_integral():
            raise OddPowerError(f"{rule} needs integral q-powers, got {self.to_text()}")
        if rule == "q->-q":
            return LaurentPoly({e: (-v if (e // 2) % 2 else v) for e, v in self._c.items()})
        return LaurentPoly({2 * e: v for e, v in self._c.items()})

    def evaluate(self, s: Number) -> Fraction:
        return sum((Fraction(v) * Fraction(s) ** e for e, v in self._c.items()), Fraction(0))

    # -- text -------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical q-notation, ascending in the exponent."""
        if not self._c:
            return "0"
        out = []
        for i, (e, v) in enumerate(sorted(self._c.items())):
            mono = _q_power(e)
            mag = abs(v)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            if i == 0:
                out.append(("-" if v < 0 else "") + body)
            else:
                out.append((" - " if v < 0 else " + ") + body)
        return "".join(out)

    @classmethod
    def from_text(cls, text: str) -> "LaurentPoly":
        """Inverse of :meth:`to_text`."""
        compact = "".join(text.split())
        if not compact:
            raise ValueError("empty polynomial text")
        if compact == "0":
            return cls()
        c: dict[int, int] = {}
        pos = 0
        while pos < len(compact):
            m = _TERM.match(compact, pos)
            if m is None or m.end() == pos or not (m.group("coef") or m.group("q")):
                raise ValueError(f"cannot parse {text!r}")
            if pos and not m.group("sign"):
                raise ValueError(f"missing sign in {text!r}")
            pos = m.end()
            sign = -1 if m.group("sign") == "-" else 1
            coef = int(m.group("coef")) if m.group("coef") else 1
            if m.group("q") is None:
                e = 0
            elif m.group("num") is None:
                e = 2
            else:
                num = int(m.group("num"))
                e = num if m.group("half") else 2 * num
            c[e] = c.get(e, 0) + sign * coef
        return cls(c)

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"

    __str__ = to_text


_TERM = re.compile(r"(?P<sign>[-+]?)(?P<coef>\d+)?(?P<q>q(?:\^(?P<num>-?\d+)(?P<half>/2)?)?)?")


def _q_power(e: int) -> str:
    if e == 0:
        return ""
    if e % 2:
        return f"q^{e}/2"
    k = e // 2
    return "q" if k == 1 else f"q^{k}"


def sinh_expand(p: LaurentPoly) -> dict[int, int]:
    """Coefficients of ``p`` in powers of ``x = q^-1 - q``.

    Peels from the bottom: ``x**k`` starts at ``s**(-2k)`` with coefficient 1.
    Negative ``k`` are allowed only as a caller-side shift, so the input must
    be an honest polynomial in ``x``; anything else raises ``ValueError``.
    """
    x = LaurentPoly.sinh_var()
    out: dict[int, int] = {}
    rem = p
    while rem:
        low = rem.valuation()
        if low > 0 or low % 2:
            raise ValueError(f"{p.to_text()} is not a polynomial in q^-1 - q")
        k = -low // 2
        c = rem[low]
        out[k] = c
        rem = rem - (x ** k).scale(c)
    return out


def sinh_compose(coeffs: Mapping[int, int]) -> LaurentPoly:
    x = LaurentPoly.sinh_var()
    total = LaurentPoly()
    for k, c in coeffs.items():
        if k < 0:
            raise ValueError("negative powers of q^-1 - q are not polynomials")
        total = total + (x ** k).scale(c)
    return total


def sinh_text(coeffs: Mapping[int, int]) -> str:
    """Render ``{k: c}`` as ``(q^-1-q)^k`` terms, highest power first."""
    parts = []
    for k in sorted(coeffs, reverse=True):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            mono = ""
        elif k == 1:
            mono = "(q^-1-q)"
        else:
            mono = f"(q^-1-q)^{k}"
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) or "0"


# ---------------------------------------------------------------------------
# two variables


class BiLaurentPoly:
    """Laurent polynomial in ``a`` with :class:`LaurentPoly` coefficients in ``s``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, LaurentPoly] | None = None):
        self._c = {int(k): v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def from_s(cls, p: LaurentPoly, a_exp: int = 0) -> "BiLaurentPoly":
        return cls({a_exp: p})

    @classmethod
    def a(cls, k: int = 1) -> "BiLaurentPoly":
        return cls({k: LaurentPoly.const(1)})

    def coeff(self, a_exp: int) -> LaurentPoly:
        return self._c.get(a_exp, LaurentPoly())

    def a_exponents(self) -> list[int]:
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __add__(self, other: "BiLaurentPoly") -> "BiLaurentPoly":
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, LaurentPoly()) + v
        return BiLaurentPoly(c)

    def __neg__(self):
        return BiLaurentPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return BiLaurentPoly({k: v * other for k, v in self._c.items()})
        if isinstance(other, int):
            return BiLaurentPoly({k: v.scale(other) for k, v in self._c.items()})
        if not isinstance(other, BiLaurentPoly):
            return NotImplemented
        c: dict[int, LaurentPoly] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                c[k1 + k2] = c.get(k1 + k2, LaurentPoly()) + v1 * v2
        return BiLaurentPoly(c)

    __rmul__ = __mul__

    def shift_a(self, k: int) -> "BiLaurentPoly":
        return BiLaurentPoly({e + k: v for e, v in self._c.items()})

    def exact_div(self, d: LaurentPoly) -> "BiLaurentPoly | None":
        out = {}
        for k, v in self._c.items():
            quo = v.exact_div(d)
            if quo is None:
                return None
            out[k] = quo
        return BiLaurentPoly(out)

    def __eq__(self, other):
        if not isinstance(other, BiLaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def to_text(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c):
            mono = "" if k == 0 else ("a" if k == 1 else f"a^{k}")
            inner = self._c[k].to_text()
            parts.append(f"{mono}({inner})" if mono else f"({inner})")
        return " + ".join(parts)

    def __repr__(self):
        return f"BiLaurentPoly({self.to_text()!r})"


def _qdiff() -> LaurentPoly:
    """``q - q^-1``."""
    return LaurentPoly({2: 1, -2: -1})


class BiLaurentFrac:
    """``numerator / (q - q^-1)**pole_order`` with the pole order kept minimal."""

    __slots__ = ("numerator", "pole_order")

    def __init__(self, numerator: BiLaurentPoly, pole_order: int = 0):
        if pole_order < 0:
            numerator = numerator * (_qdiff() ** (-pole_order))
            pole_order = 0
        d = _qdiff()
        while pole_order > 0 and not numerator.is_zero():
            quo = numerator.exact_div(d)
            if quo is None:
                break
            numerator, pole_order = quo, pole_order - 1
        if numerator.is_zero():
            pole_order = 0
        self.numerator = numerator
        self.pole_order = pole_order

    def _lift(self, k: int) -> BiLaurentPoly:
        return self.numerator * (_qdiff() ** (k - self.pole_order))

    def __add__(self, other: "BiLaurentFrac") -> "BiLaurentFrac":
        k = max(self.pole_order, other.pole_order)
        return BiLaurentFrac(self._lift(k) + other._lift(k), k)

    def __neg__(self):
        return BiLaurentFrac(-self.numerator, self.pole_order)

    def __mul__(self, other):
        if isinstance(other, BiLaurentFrac):
            return BiLaurentFrac(self.numerator * other.numerator, self.pole_order + other.pole_order)
        if isinstance(other, (BiLaurentPoly, LaurentPoly, int)):
            return BiLaurentFrac(self.numerator * other, self.pole_order)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BiLaurentFrac):
            return NotImplemented
        return self.numerator == other.numerator and self.pole_order == other.pole_order

    def __hash__(self):
        return hash((self.numerator, self.pole_order))

    def to_text(self) -> str:
        num = self.numerator.to_text()
        if self.pole_order == 0:
            return num
        den = "(q - q^-1)" if self.pole_order == 1 else f"(q - q^-1)^{self.pole_order}"
        return f"[{num}] / {den}"

    def __repr__(self):
        return f"BiLaurentFrac({self.to_text()!r})"


# ---------------------------------------------------------------------------
# one variable over Q


class QPoly:
    """Dense polynomial in ``t`` with :class:`~fractions.Fraction` coefficients (low to high)."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def t(cls) -> "QPoly":
        return cls([0, 1])

    def degree(self) -> int:
        return len(self.c) - 1

    def __bool__(self):
        return bool(self.c)

    def _coerce(self, other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.c), len(other.c))
        a = self.c + (Fraction(0),) * (n - len(self.c))
        b = other.c + (Fraction(0),) * (n - len(other.c))
        return QPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-x for x in self.c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.c or not other.c:
            return QPoly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = QPoly([1])
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if not other.c:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.c)
        dq = other.degree()
        lead = other.c[-1]
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            k = rem[i] / lead
            if k:
                quo[i - dq] = k
                for j, y in enumerate(other.c):
                    rem[i - dq + j] -= k * y
        return QPoly(quo), QPoly(rem)

    def monic(self) -> "QPoly":
        if not self.c:
            return self
        lead = self.c[-1]
        return QPoly(x / lead for x in self.c)

    def __call__(self, t0: Number) -> Fraction:
        acc = Fraction(0)
        for x in reversed(self.c):
            acc = acc * t0 + x
        return acc

    def __repr__(self):
        return f"QPoly({[str(x) for x in self.c]})"


def qpoly_gcd(a: QPoly, b: QPoly) -> QPoly:
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic()


class RationalFunction:
    """Reduced quotient of two :class:`QPoly`, denominator monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: QPoly | Number, den: QPoly | Number = 1):
        num = num if isinstance(num, QPoly) else QPoly([num])
        den = den if isinstance(den, QPoly) else QPoly([den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = qpoly_gcd(num, den) if num else den.monic()
        num, _ = num.divmod(g)
        den, _ = den.divmod(g)
        lead = den.c[-1]
        self.num = QPoly(x / lead for x in num.c)
        self.den = QPoly(x / lead for x in den.c)

    @classmethod
    def t(cls) -> "RationalFunction":
        return cls(QPoly.t())

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, QPoly)):
            return RationalFunction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(1) / (self ** (-n))
        return RationalFunction(self.num ** n, self.den ** n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


def eval_rational(f: RationalFunction, t0: Number) -> Fraction:
    """Value of ``f`` at ``t0``; ``PoleError`` if the reduced denominator vanishes."""
    d = f.den(Fraction(t0))
    if d == 0:
        raise PoleError(f"denominator vanishes at t={t0}")
    return f.num(Fraction(t0)) / d
