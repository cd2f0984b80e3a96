"""Weight data: insertion points with integer multiplicities.

A weight is ``W(z) = prod_j (z - a_j)**c_j`` with distinct complex insertion
points ``a_j`` (Gaussian rationals here) and positive integer multiplicities
``c_j``.  The squared modulus ``|W|**2 * exp(-|z|**2)`` modifies the planar
Gaussian measure; all downstream identities use the polynomial ``W``, its
coefficientwise conjugate, and the total multiplicity.
"""

from __future__ import annotations

import json

from .algebra import Poly, Series, apply_diff_operator
from .errors import InputError
from .rational import GR, GaussianRational

SCHEMA_WEIGHT = "planarop/weight@1"


class WeightSpec:
    """Insertion points ``(a_j, c_j)`` and the cached polynomials they define."""

    __slots__ = ("nodes", "poly", "conj_poly", "total_multiplicity")

    def __init__(self, nodes):
        pts = []
        for a, c in nodes:
            a = a if isinstance(a, GaussianRational) else GR(a)
            c = int(c)
            if c < 1:
                raise InputError(f"multiplicity must be >= 1, got {c}")
            pts.append((a, c))
        seen = set()
        for a, _ in pts:
            if a in seen:
                raise InputError(f"insertion points must be distinct, {a} repeats")
            seen.add(a)
        w = Poly.one()
        for a, c in pts:
            w = w * Poly([-a, GR(1)]) ** c
        object.__setattr__(self, "nodes", tuple(pts))
        object.__setattr__(self, "poly", w)
        object.__setattr__(self, "conj_poly", w.conj_star())
        object.__setattr__(self, "total_multiplicity", sum(c for _, c in pts))

    def __setattr__(self, name, value):
        raise AttributeError("WeightSpec is immutable")

    @property
    def p(self) -> int:
        return len(self.nodes)

    def has_origin_node(self) -> bool:
        return any(a.is_zero() for a, _ in self.nodes)

    def conjugation_symmetric(self) -> bool:
        """True when the node multiset is stable under complex conjugation."""
        bag = {}
        for a, c in self.nodes:
            bag[a] = bag.get(a, 0) + c
        return all(bag.get(a.conjugate(), 0) == c for a, c in bag.items())

    def apply_conjugate_operator(self, target):
        """Apply the operator ``prod_j (d/dz - conj(a_j))**c_j``.

        Its kernel is spanned by ``z**m exp(conj(a_j) z)`` with ``m < c_j``;
        applied to a function vanishing to order n + c at the origin it
        yields one vanishing to order n.
        """
        return apply_diff_operator(self.conj_poly, target)

    def key(self):
        """Structural identity used for caching."""
        return self.nodes

    def __eq__(self, other):
        if not isinstance(other, WeightSpec):
            return NotImplemented
        return self.nodes == other.nodes

    def __hash__(self):
        return hash(self.nodes)

    def __repr__(self):
        inner = ", ".join(f"({a!r})^{c}" for a, c in self.nodes)
        return f"WeightSpec[{inner}]"

    # -- serialization -----------------------------------------------------

    @staticmethod
    def from_json(obj) -> "WeightSpec":
        if not isinstance(obj, dict) or "nodes" not in obj:
            raise InputError("weight JSON must be an object with a 'nodes' array")
        nodes = []
        for item in obj["nodes"]:
            if "c" not in item:
                raise InputError("each node needs a multiplicity 'c'")
            nodes.append((GaussianRational.from_json(item), item["c"]))
        return WeightSpec(nodes)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_WEIGHT,
            "nodes": [{**a.to_json(), "c": c} for a, c in self.nodes],
        }

    @staticmethod
    def load(path) -> "WeightSpec":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                return WeightSpec.from_json(json.load(fh))
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read weight file {path}: {exc}") from exc


def kernel_element(weight: WeightSpec, j: int, m: int, order: int) -> Series:
    """Truncated ``z**m exp(conj(a_j) z)``, a kernel element when m < c_j."""
    a, _ = weight.nodes[j]
    e = Series.exponential(a.conjugate(), order)
    shifted = [GR(0)] * m + list(e.coeffs[: order - m])
    return Series(order, shifted)
