"""Descendants of the classical symmetric pairs from minimal-polynomial data.

A semisimple ``x`` is described by the monic irreducible factors ``q`` of
its minimal polynomial together with ``kdim``, the dimension of the kernel
block ``ker q(x)`` over ``F[xi]/q``.  The family's involutions (``inv``,
``tau``, ``star``) act on the factors; every orbit contributes one factor
pair to the descendant, chosen by the orbit size and stabilizer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .fields import BaseField
from .polys import (
    DescentError,
    NotInvertibleError,
    Poly,
    check_irreducible,
    inv,
    linear,
    star,
    tau_poly,
)

__all__ = [
    "FAMILIES",
    "KINDS",
    "INVOLUTIONS",
    "DescentError",
    "InvalidSpecError",
    "ReducibleFactorError",
    "NotSemisimpleError",
    "SigmaIncompatibleError",
    "NotInvertibleError",
    "UnreachableCaseError",
    "FactorEntry",
    "PolyFactorSpec",
    "FieldLabel",
    "PairNode",
    "Orbit",
    "DescentResult",
    "validate",
    "orbits",
    "descend",
    "analyze",
    "load_spec",
]

FAMILIES = ("GL_O", "GL_U", "U_O", "O_OxO", "U_UxU")
KINDS = (
    "GL_O", "U_O", "O_eps", "GL_U", "GLxGL_diag", "UxU_diag",
    "GL_ext_GL", "GL_eps", "U_ext_U", "U_eps", "GL_EF_GL", "U_EF_U",
)
INVOLUTIONS = ("none", "mu", "mu01", "mu10", "mu11")

# families whose symmetric pair lives over a quadratic extension (D, tau)
_NEEDS_QUADRATIC = {"GL_U", "U_O", "U_UxU"}
_GROUP = {
    "GL_O": {},
    "GL_U": {"tau": tau_poly},
    "U_O": {"star": star},
    "O_OxO": {"inv": inv},
    "U_UxU": {"inv": inv, "star": star, "tau": tau_poly},
}


class InvalidSpecError(DescentError):
    pass


class ReducibleFactorError(InvalidSpecError):
    def __init__(self, q, witness):
        super().__init__(f"factor {q} is reducible (divisible by {witness})")
        self.witness = witness


class NotSemisimpleError(DescentError):
    def __init__(self, q):
        super().__init__(f"not semisimple: repeated factor {q}")


class SigmaIncompatibleError(DescentError):
    def __init__(self, detail: str):
        super().__init__(f"minimal polynomial not σ-compatible for this family: {detail}")


class UnreachableCaseError(DescentError):
    pass


@dataclass(frozen=True)
class FactorEntry:
    q: Poly
    kdim: int

    def __post_init__(self):
        if isinstance(self.kdim, bool) or not isinstance(self.kdim, int) or self.kdim < 1:
            raise InvalidSpecError(f"kdim must be a positive integer, got {self.kdim!r}")


@dataclass(frozen=True)
class PolyFactorSpec:
    family: str
    base: BaseField
    factors: tuple
    ambient_dim: int | None = None
    assume_irreducible: bool = True

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def from_json(cls, obj) -> "PolyFactorSpec":
        if not isinstance(obj, dict):
            raise InvalidSpecError("spec must be a JSON object")
        unknown = set(obj) - {"family", "base", "factors", "ambient_dim", "assume_irreducible"}
        if unknown:
            raise InvalidSpecError(f"unknown spec fields: {sorted(unknown)}")
        try:
            family = obj["family"]
            base = BaseField.from_descriptor(obj["base"])
            raw = obj["factors"]
        except KeyError as e:
            raise InvalidSpecError(f"missing spec field {e.args[0]!r}") from None
        except ValueError as e:
            raise InvalidSpecError(str(e)) from None
        if not isinstance(raw, list):
            raise InvalidSpecError("factors must be a list")
        factors = []
        for k, entry in enumerate(raw):
            if not isinstance(entry, dict) or set(entry) != {"coeffs", "kdim"}:
                raise InvalidSpecError(f"factor {k} must have exactly 'coeffs' and 'kdim'")
            try:
                q = Poly.parse(base, entry["coeffs"])
            except (ValueError, TypeError, ZeroDivisionError) as e:
                raise InvalidSpecError(f"factor {k}: {e}") from None
            factors.append(FactorEntry(q, entry["kdim"]))
        ambient = obj.get("ambient_dim")
        if ambient is not None and (isinstance(ambient, bool) or not isinstance(ambient, int)):
            raise InvalidSpecError("ambient_dim must be an integer")
        assume = obj.get("assume_irreducible", True)
        if not isinstance(assume, bool):
            raise InvalidSpecError("assume_irreducible must be a boolean")
        return cls(family, base, factors, ambient, assume)

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "base": self.base.descriptor(),
            "factors": [{"coeffs": f.q.encode(), "kdim": f.kdim} for f in self.factors],
        }
        if self.ambient_dim is not None:
            out["ambient_dim"] = self.ambient_dim
        if not self.assume_irreducible:
            out["assume_irreducible"] = False
        return out


def load_spec(text: str) -> PolyFactorSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidSpecError(f"invalid JSON: {e}") from None
    return PolyFactorSpec.from_json(obj)


@dataclass(frozen=True)
class FieldLabel:
    """``base[xi]/(modulus)`` with an optional involution tag.

    ``modulus`` is ``None`` when the factor is linear, i.e. the field is the
    base itself.  ``fixed_subfield`` names the involution whose fixed field
    carries the smaller group of the pair.
    """

    base: BaseField
    modulus: Poly | None = None
    involution: str = "none"
    fixed_subfield: str | None = None

    def __post_init__(self):
        if self.involution not in INVOLUTIONS:
            raise ValueError(f"unknown involution tag {self.involution!r}")
        if self.fixed_subfield is not None and self.fixed_subfield not in INVOLUTIONS[1:]:
            raise ValueError(f"unknown fixed-subfield tag {self.fixed_subfield!r}")

    @property
    def degree(self) -> int:
        """Degree over the base field."""
        return 1 if self.modulus is None else self.modulus.degree

    def sort_key(self):
        return (
            self.modulus.sort_key() if self.modulus is not None else (0, ()),
            self.involution,
            self.fixed_subfield or "",
        )

    def to_json(self) -> dict:
        out = {
            "base": self.base.descriptor(),
            "modulus_coeffs": None if self.modulus is None else self.modulus.encode(),
            "involution": self.involution,
        }
        if self.fixed_subfield is not None:
            out["fixed_subfield"] = self.fixed_subfield
        return out

    def __str__(self):
        text = str(self.base) if self.modulus is None else f"{self.base}[xi]/({self.modulus})"
        if self.involution != "none":
            text += f" with {self.involution}"
        if self.fixed_subfield:
            text += f", fixed field of {self.fixed_subfield}"
        return text


@dataclass(frozen=True)
class PairNode:
    kind: str
    field: FieldLabel
    dim: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown pair kind {self.kind!r}")

    def sort_key(self):
        return (self.kind, self.field.sort_key(), self.dim)

    def to_json(self) -> dict:
        return {"kind": self.kind, "field": self.field.to_json(), "dim": self.dim}

    def __str__(self):
        return f"{self.kind} over {self.field}, dim {self.dim}"


@dataclass(frozen=True)
class Orbit:
    members: tuple  # factor indices into the spec
    representative: Poly
    kdim: int
    stabilizer: str  # trivial | inv | star | tau | full

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class DescentResult:
    nodes: list
    warnings: list = dc_field(default_factory=list)
    orbits: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {"nodes": [n.to_json() for n in self.nodes], "warnings": list(self.warnings)}

    def to_text(self) -> str:
        return "\n".join(str(n) for n in self.nodes)


def validate(spec: PolyFactorSpec) -> list:
    """Check the spec's hypotheses; returns warnings, raises on violations."""
    if spec.family not in FAMILIES:
        raise InvalidSpecError(f"unknown family {spec.family!r}; expected one of {', '.join(FAMILIES)}")
    if spec.family in _NEEDS_QUADRATIC and not spec.base.is_quadratic:
        raise InvalidSpecError(f"{spec.family} needs a quadratic extension base field")
    if not spec.factors:
        raise InvalidSpecError("no factors given")
    warnings = []
    seen = set()
    for f in spec.factors:
        if f.q.field != spec.base:
            raise InvalidSpecError(f"factor {f.q} is not over {spec.base}")
        if not f.q.coeffs[0]:
            raise NotInvertibleError(f.q)
        if f.q in seen:
            raise NotSemisimpleError(f.q)
        seen.add(f.q)
        verdict = check_irreducible(f.q)
        if verdict.status == "reducible":
            raise ReducibleFactorError(f.q, verdict.witness)
        if verdict.status == "unknown":
            if not spec.assume_irreducible:
                raise InvalidSpecError(f"cannot certify that {f.q} is irreducible")
            warnings.append(f"assuming {f.q} is irreducible (degree {f.q.degree}, no root in {spec.base})")
    if spec.ambient_dim is not None:
        total = sum(f.kdim * f.q.degree for f in spec.factors)
        if total != spec.ambient_dim:
            raise InvalidSpecError(f"factors account for dimension {total}, not ambient_dim {spec.ambient_dim}")
    return warnings


def orbits(spec: PolyFactorSpec) -> list:
    """Orbits of the factor set under the family's involutions."""
    group = _GROUP[spec.family]
    index = {f.q: i for i, f in enumerate(spec.factors)}
    done = set()
    out = []
    for i, f in enumerate(spec.factors):
        if i in done:
            continue
        members = {i}
        for name, g in group.items():
            image = g(f.q)
            j = index.get(image)
            if j is None:
                raise SigmaIncompatibleError(f"{name}({f.q}) = {image} is not a factor")
            if spec.factors[j].kdim != f.kdim:
                raise SigmaIncompatibleError(
                    f"{f.q} and {name}-image {image} have kernel dimensions {f.kdim} and {spec.factors[j].kdim}"
                )
            members.add(j)
        done |= members
        rep = min((spec.factors[j].q for j in members), key=Poly.sort_key)
        fixed = sorted(name for name, g in group.items() if g(rep) == rep)
        if len(fixed) == len(group):
            stab = "full"
        elif not fixed:
            stab = "trivial"
        else:
            (stab,) = fixed
        out.append(Orbit(tuple(sorted(members)), rep, f.kdim, stab))
    out.sort(key=lambda o: o.representative.sort_key())
    return out


def _is_central(q: Poly) -> bool:
    return q.degree == 1 and q.coeffs[0] in (1, -1)


def dispatch(family: str, orbit: Orbit, base: BaseField) -> PairNode:
    """The descendant factor pair attached to a single orbit."""
    q = orbit.representative
    modulus = q if q.degree > 1 else None

    def node(kind, involution="none", fixed=None):
        return PairNode(kind, FieldLabel(base, modulus, involution, fixed), orbit.kdim)

    stab = orbit.stabilizer
    if family == "GL_O":
        return node("GL_O")
    if family == "GL_U":
        return node("GLxGL_diag") if stab == "trivial" else node("GL_U", "mu11")
    if family == "U_O":
        return node("GL_O") if stab == "trivial" else node("U_O", "mu01", "mu01")
    if family == "O_OxO":
        if stab == "trivial":
            return node("GL_O")
        return node("O_eps") if _is_central(q) else node("U_O", "mu", "mu")
    if family == "U_UxU":
        if stab == "trivial":
            return node("GLxGL_diag")
        if stab == "star":
            return node("UxU_diag", "mu01")
        if stab == "tau":
            return node("GL_U", "mu11")
        if stab == "inv":
            if _is_central(q):
                # x = x^-1 with P = Q Q*: needs q = xi -+ 1, which is *-fixed
                raise UnreachableCaseError(
                    f"unreachable case: {q} has stabilizer <inv> but x = x^-1 on its block"
                )
            return node("GL_ext_GL", "mu10", "mu10")
        return node("U_eps", "mu01") if _is_central(q) else node("U_ext_U", "mu01", "mu10")
    raise InvalidSpecError(f"unknown family {family!r}")


def analyze(spec: PolyFactorSpec) -> DescentResult:
    warnings = validate(spec)
    orbs = orbits(spec)
    pairs = sorted(((dispatch(spec.family, o, spec.base), o) for o in orbs), key=lambda p: p[0].sort_key())
    return DescentResult([p[0] for p in pairs], warnings, [p[1] for p in pairs])


def descend(spec: PolyFactorSpec) -> list:
    """One descendant factor pair per orbit, canonically sorted."""
    return analyze(spec).nodes


def identity_spec(family: str, base: BaseField, n: int, root=1) -> PolyFactorSpec:
    """Spec for the central element ``root * Id`` on an n-dimensional space."""
    return PolyFactorSpec(family, base, [FactorEntry(linear(base, root), n)], ambient_dim=n)
