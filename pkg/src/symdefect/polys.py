"""Monic polynomials over Q or Q(sqrt d) and the involutions inv, tau, star."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .fields import BaseField, QuadNumber


class DescentError(ValueError):
    """Base class for rejected descendant inputs."""


class NotInvertibleError(DescentError):
    """A factor with zero constant term: x has a kernel on that block."""

    def __init__(self, q=None):
        msg = "x not invertible on this block"
        super().__init__(msg if q is None else f"{msg}: {q}")


def _strip(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


class Poly:
    """Monic polynomial of degree >= 1; coefficients lowest degree first.

    Every polynomial is rescaled to be monic on construction, so two
    polynomials are proportional exactly when they compare equal.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: BaseField, coeffs: Sequence):
        cs = _strip([c if isinstance(c, QuadNumber) else field(c) for c in coeffs])
        if len(cs) < 2:
            raise ValueError("polynomial must have degree >= 1")
        lead = cs[-1]
        if lead != 1:
            inv = lead.inverse()
            cs = [c * inv for c in cs]
        self.field = field
        self.coeffs = tuple(QuadNumber(c.a, c.b, field.d) for c in cs)

    @classmethod
    def parse(cls, field: BaseField, tokens: Sequence) -> "Poly":
        """From JSON-style coefficient tokens (``"p/q"`` or ``["a", "b"]``)."""
        return cls(field, [field.parse(t) for t in tokens])

    def encode(self) -> list:
        return [self.field.encode(c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def sort_key(self):
        return (self.degree, tuple(c.key() for c in self.coeffs))

    def __call__(self, x):
        acc = self.field(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_rational(self) -> bool:
        return all(not c.b for c in self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("xi" if i == 1 else f"xi^{i}")
            if c.b and c.a:
                coef = f"({c})"
            else:
                coef = str(c)
            if not mono:
                terms.append(coef)
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{coef}*{mono}")
        out = " + ".join(terms)
        return out.replace("+ -", "- ")


def linear(field: BaseField, root) -> Poly:
    """``xi - root``."""
    r = root if isinstance(root, QuadNumber) else field(root)
    return Poly(field, [-r, 1])


def inv(q: Poly) -> Poly:
    """Coefficient reversal, rescaled monic."""
    if not q.coeffs[0]:
        raise NotInvertibleError(q)
    return Poly(q.field, q.coeffs[::-1])


def tau_poly(q: Poly) -> Poly:
    """Coefficient-wise conjugation ``sqrt d -> -sqrt d``."""
    if not q.field.is_quadratic:
        raise ValueError("tau is only defined over a quadratic extension")
    return Poly(q.field, [c.conj() for c in q.coeffs])


def star(q: Poly) -> Poly:
    """``tau(inv(q))``."""
    return tau_poly(inv(q))


def proportional(p: Poly, q: Poly) -> bool:
    return p == q


# raw (not necessarily monic) polynomial arithmetic on coefficient lists

def _divmod(a: list, b: list):
    a = list(a)
    b = _strip(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = b[-1].inverse()
    quot = [b[0] * 0] * max(len(a) - len(b) + 1, 1)
    while len(_strip(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * lead_inv
        quot[shift] = c
        for i, x in enumerate(b):
            a[shift + i] = a[shift + i] - c * x
        a.pop()
    return quot, _strip(a)


def _gcd(a: list, b: list) -> list:
    a, b = _strip(list(a)), _strip(list(b))
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    return a


def derivative(q: Poly) -> list:
    return [c * i for i, c in enumerate(q.coeffs)][1:]


@dataclass(frozen=True)
class IrreducibilityResult:
    status: str  # "irreducible" | "reducible" | "unknown"
    witness: Poly | None = None

    @property
    def is_irreducible(self) -> bool:
        return self.status == "irreducible"

    def __str__(self):
        if self.status == "reducible":
            return f"Reducible({self.witness})"
        return self.status.capitalize()


Irreducible = IrreducibilityResult("irreducible")
Unknown = IrreducibilityResult("unknown")


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _roots(q: Poly) -> list:
    """Roots of ``q`` in its base field, via sympy factorization.

    Each candidate is checked exactly before it is returned.
    """
    import sympy

    xi = sympy.Symbol("xi")
    field = q.field
    if field.d is None:
        expr = sum(sympy.Rational(c.a.numerator, c.a.denominator) * xi**i for i, c in enumerate(q.coeffs))
        poly = sympy.Poly(expr, xi, domain=sympy.QQ)
    else:
        root_d = sympy.sqrt(field.d)
        expr = sum(
            (sympy.Rational(c.a.numerator, c.a.denominator) + sympy.Rational(c.b.numerator, c.b.denominator) * root_d)
            * xi**i
            for i, c in enumerate(q.coeffs)
        )
        poly = sympy.Poly(expr, xi, extension=root_d)
    out = []
    for f, _ in poly.factor_list()[1]:
        if f.degree() != 1:
            continue
        lead, const = f.rep.to_list()
        if field.d is None:
            lead_v, const_v = field(_to_fraction(lead)), field(_to_fraction(const))
        else:
            lead_v, const_v = (_anp(field, v) for v in (lead, const))
        r = -const_v / lead_v
        if q(r):
            raise AssertionError(f"root {r} of {q} failed exact check")
        out.append(r)
    return sorted(out, key=lambda r: r.key(), reverse=True)


def _anp(field: BaseField, v) -> QuadNumber:
    cs = [_to_fraction(c) for c in v.to_list()]  # highest power of sqrt d first
    if len(cs) == 0:
        return field(0)
    if len(cs) == 1:
        return field(cs[0])
    return field(cs[1], cs[0])


def check_irreducible(q: Poly) -> IrreducibilityResult:
    """Exact for degree <= 3; higher degrees are only refuted by a root."""
    g = _gcd(list(q.coeffs), derivative(q))
    if len(g) > 1:
        return IrreducibilityResult("reducible", Poly(q.field, g))
    if q.degree == 1:
        return Irreducible
    roots = _roots(q)
    if roots:
        return IrreducibilityResult("reducible", linear(q.field, roots[0]))
    return Irreducible if q.degree <= 3 else Unknown
