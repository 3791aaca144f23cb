"""Exact arithmetic in Q and in quadratic fields Q(sqrt d)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _squarefree(d: int) -> bool:
    n = abs(d)
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


def parse_rational(token) -> Fraction:
    """Parse an exact ``"p/q"`` (or integer) token; decimals are rejected."""
    if isinstance(token, bool):
        raise ValueError(f"not a rational: {token!r}")
    if isinstance(token, int):
        return Fraction(token)
    if isinstance(token, Fraction):
        return token
    if not isinstance(token, str):
        raise ValueError(f"rationals are encoded as 'p/q' strings, got {token!r}")
    text = token.strip()
    if any(ch in text for ch in ".eE") or not text:
        raise ValueError(f"not an exact rational: {token!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not an exact rational: {token!r}") from None


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


class QuadNumber:
    """``a + b*sqrt(d)``; with ``d = None`` this is just the rational ``a``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int | None = None):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d
        if d is None and self.b:
            raise ValueError("irrational part in Q")

    def _coerce(self, other) -> "QuadNumber":
        if isinstance(other, QuadNumber):
            if other.d != self.d and self.b and other.b:
                raise ValueError(f"mixing Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNumber(other, 0, self.d)
        return NotImplemented

    def _field(self, other: "QuadNumber"):
        return self.d if self.d is not None else other.d

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNumber(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNumber(self.a - o.a, self.b - o.b, self._field(o))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self._field(o)
        cross = self.b * o.b * d if (self.b and o.b) else 0
        return QuadNumber(self.a * o.a + cross, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - (self.d or 0) * self.b * self.b

    def conj(self) -> "QuadNumber":
        return QuadNumber(self.a, -self.b, self.d)

    def inverse(self) -> "QuadNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in number field")
        c = self.conj()
        return QuadNumber(c.a / n, c.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadNumber):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def key(self):
        return (self.a, self.b)

    def __repr__(self):
        return f"QuadNumber({self})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        root = f"sqrt({self.d})"
        if self.b == 1:
            irr = root
        elif self.b == -1:
            irr = f"-{root}"
        else:
            irr = f"{self.b}*{root}"
        if not self.a:
            return irr
        return f"{self.a}{'' if irr.startswith('-') else '+'}{irr}"


@dataclass(frozen=True)
class BaseField:
    """``Q`` (``d is None``) or the quadratic field ``Q(sqrt d)`` with ``tau: sqrt d -> -sqrt d``."""

    d: int | None = None

    def __post_init__(self):
        if self.d is not None:
            if not isinstance(self.d, int) or self.d in (0, 1) or not _squarefree(self.d):
                raise ValueError(f"d must be a square-free integer other than 0 and 1, got {self.d!r}")

    @property
    def is_quadratic(self) -> bool:
        return self.d is not None

    def __call__(self, a, b=0) -> QuadNumber:
        return QuadNumber(a, b, self.d)

    @property
    def sqrt(self) -> QuadNumber:
        if self.d is None:
            raise ValueError("Q has no adjoined square root")
        return QuadNumber(0, 1, self.d)

    def conj(self, x: QuadNumber) -> QuadNumber:
        return x.conj()

    def parse(self, token) -> QuadNumber:
        if isinstance(token, (list, tuple)):
            if len(token) != 2:
                raise ValueError(f"expected [a, b] for a + b*sqrt(d), got {token!r}")
            a, b = (parse_rational(t) for t in token)
            if b and self.d is None:
                raise ValueError("irrational coefficient over Q")
            return QuadNumber(a, b, self.d)
        return QuadNumber(parse_rational(token), 0, self.d)

    def encode(self, x: QuadNumber):
        if x.b:
            return [format_rational(x.a), format_rational(x.b)]
        return format_rational(x.a)

    def descriptor(self) -> dict:
        return {"kind": "Q"} if self.d is None else {"kind": "QuadExt", "d": self.d}

    @classmethod
    def from_descriptor(cls, desc) -> "BaseField":
        if not isinstance(desc, dict) or "kind" not in desc:
            raise ValueError(f"bad base field descriptor {desc!r}")
        if desc["kind"] == "Q":
            return cls()
        if desc["kind"] == "QuadExt":
            d = desc.get("d")
            if isinstance(d, bool) or not isinstance(d, int):
                raise ValueError(f"QuadExt needs an integer d, got {d!r}")
            return cls(d)
        raise ValueError(f"unknown base field kind {desc['kind']!r}")

    def __str__(self):
        return "Q" if self.d is None else f"Q(sqrt({self.d}))"
