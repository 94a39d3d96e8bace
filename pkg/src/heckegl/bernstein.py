"""Inertial classes for GL_2, segments, and their Morita-representative algebras.

Supercuspidal representations and the ramified parts of characters are
opaque labels; only equality of labels is ever used.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

__all__ = [
    "Quasicharacter",
    "Segment",
    "Supercuspidal",
    "Torus",
    "InertialClassGL2",
    "TensorFactor",
    "BlockDescriptor",
    "LAURENT_ONE_VAR",
    "LAURENT_TWO_VAR",
    "EXT_WEYL_RANK2",
    "inertially_equivalent",
    "classify",
    "precedes",
    "compositions",
    "intertwining_descriptor",
    "morita_decomposition_gl2",
    "inertial_class_from_json",
]


@dataclass(frozen=True)
class Quasicharacter:
    """``chi |.|^twist`` with ``chi`` known only through its restriction label."""

    ramified_label: str
    twist: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "twist", Fraction(self.twist))


@dataclass(frozen=True)
class Segment:
    """``{sigma |.|^start, ..., sigma |.|^(start+length-1)}``."""

    label: str
    start: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("segment length must be >= 1")

    @property
    def exponents(self) -> range:
        return range(self.start, self.start + self.length)


@dataclass(frozen=True)
class Supercuspidal:
    label: str


@dataclass(frozen=True)
class Torus:
    chi1: Quasicharacter
    chi2: Quasicharacter

    def __eq__(self, other):
        # equality up to swapping and unramified twists
        if not isinstance(other, Torus):
            return NotImplemented
        a = sorted((self.chi1.ramified_label, self.chi2.ramified_label))
        b = sorted((other.chi1.ramified_label, other.chi2.ramified_label))
        return a == b

    def __hash__(self):
        return hash(tuple(sorted((self.chi1.ramified_label, self.chi2.ramified_label))))


InertialClassGL2 = Union[Supercuspidal, Torus]


@dataclass(frozen=True)
class TensorFactor:
    n: int
    q: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("factor rank must be >= 1")

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "k": self.k}


@dataclass(frozen=True)
class BlockDescriptor:
    block: str  # laurent1 | laurent2 | extweyl2 | tensor
    factors: tuple[TensorFactor, ...] = ()
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def algebra(self) -> str:
        return {
            "laurent1": "C[T, T^-1]",
            "laurent2": "C[X, X^-1, Y, Y^-1]",
            "extweyl2": "C[S, T, T^-1]/<S^2 - 1, T^2 S - S T^2>",
        }.get(self.block) or " (x) ".join(f"H({f.n}, {f.q}^{f.k})" for f in self.factors)

    @property
    def factor_ranks(self) -> tuple[int, ...]:
        return tuple(f.n for f in self.factors)

    def to_json(self) -> dict:
        out = {"block": self.block, "factors": [f.to_json() for f in self.factors]}
        if self.notes:
            out["notes"] = list(self.notes)
        return out


LAURENT_ONE_VAR = BlockDescriptor("laurent1")
LAURENT_TWO_VAR = BlockDescriptor("laurent2")
EXT_WEYL_RANK2 = BlockDescriptor("extweyl2")


def inertially_equivalent(a: Quasicharacter, b: Quasicharacter) -> bool:
    return a.ramified_label == b.ramified_label


def classify(c: InertialClassGL2) -> BlockDescriptor:
    if isinstance(c, Supercuspidal):
        return LAURENT_ONE_VAR
    if isinstance(c, Torus):
        if inertially_equivalent(c.chi1, c.chi2):
            return EXT_WEYL_RANK2
        return LAURENT_TWO_VAR
    raise TypeError(f"not an inertial class: {c!r}")


def precedes(a: Segment, b: Segment) -> bool:
    """Whether segment ``a`` precedes ``b`` (same label, linked, ``a`` shifted up)."""
    if a.label != b.label:
        return False
    ea, eb = set(a.exponents), set(b.exponents)
    if ea <= eb or eb <= ea:
        return False
    union = ea | eb
    if max(union) - min(union) + 1 != len(union):
        return False
    return a.start - b.start > 0


def compositions(n: int) -> list[tuple[int, ...]]:
    """Ordered tuples of positive integers summing to ``n``, lexicographically sorted."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for cuts in itertools.product((False, True), repeat=n - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return sorted(out)


def intertwining_descriptor(partition, torsion, q: int) -> BlockDescriptor:
    """Tensor product of ``H(n_i, q^k_i)`` for a composition and torsion numbers."""
    partition, torsion = tuple(partition), tuple(torsion)
    if len(partition) != len(torsion):
        raise ValueError("partition and torsion lists differ in length")
    if q < 2:
        raise ValueError("residue field size q must be >= 2")
    if any(k < 1 for k in torsion):
        raise ValueError("torsion numbers must be positive")
    factors = tuple(TensorFactor(n, q, k) for n, k in zip(partition, torsion))
    return BlockDescriptor("tensor", factors, notes=("q^k != -1 for every factor",))


def morita_decomposition_gl2(field_label: str | None = None) -> dict:
    """Block families of the GL_2 Hecke algebra up to Morita equivalence.

    ``field_label`` is accepted and ignored: the answer does not depend on the field.
    """
    return {
        "group": "GL2",
        "index": "countably indexed family (direct sum over N)",
        "families": [
            {
                "family": "supercuspidal",
                "descriptor": LAURENT_ONE_VAR.to_json(),
                "algebra": LAURENT_ONE_VAR.algebra,
                "cardinality": "uncountable: parametrized through characters of quadratic extensions of the base field",
            },
            {
                "family": "principal series (inequivalent characters)",
                "descriptor": LAURENT_TWO_VAR.to_json(),
                "algebra": LAURENT_TWO_VAR.algebra,
                "cardinality": "countably infinite: characters of (O_K^x)^2 modulo S_2",
            },
            {
                "family": "special and one-dimensional (equivalent characters)",
                "descriptor": EXT_WEYL_RANK2.to_json(),
                "algebra": EXT_WEYL_RANK2.algebra,
                "cardinality": "countably infinite: characters of O_K^x",
            },
        ],
    }


def _character_from_json(obj) -> Quasicharacter:
    return Quasicharacter(str(obj["label"]), Fraction(str(obj.get("twist", 0))))


def inertial_class_from_json(obj: dict) -> InertialClassGL2:
    """``{"type": "supercuspidal", "label": ..}`` or ``{"type": "torus", "chi1": {..}, "chi2": {..}}``."""
    kind = obj.get("type")
    if kind == "supercuspidal":
        return Supercuspidal(str(obj["label"]))
    if kind == "torus":
        return Torus(_character_from_json(obj["chi1"]), _character_from_json(obj["chi2"]))
    raise ValueError(f"unknown inertial class type {kind!r}")
