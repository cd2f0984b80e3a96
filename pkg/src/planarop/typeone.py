"""Contour characterizations of the planar orthogonal polynomial.

For an insertion weight ``W`` of total multiplicity ``c``, four conditions on
a monic degree-n polynomial ``P`` are equivalent:

* planar orthogonality ``<P, z**k> = 0`` for ``k < n`` (see
  :mod:`planarop.moments`);
* vanishing residues of ``P * W * phi_k`` at the origin for ``k < n``, where
  ``phi_k`` is the ray-Laplace transform of ``conjW(u) * u**k``;
* the operator image ``conjW(d/dz)[P * W]`` has zero coefficients below
  ``z**n``;
* a linear form: there are polynomials ``Q_j`` with ``deg Q_j <= c_j - 1``,
  one per insertion point, such that ``P*W + sum_j Q_j exp(conj(a_j) z)``
  vanishes to order ``n + c`` at the origin.

This module implements each condition as an exact residue/coefficient check,
solves the linear form directly, and verifies the bilinear identity that
transports the planar scalar product to the contour:
``<P, Q> = residue at 0 of P(z) W(z) * laplace(conjW * conj-poly(Q))(z)``.
All contour integrals reduce to residues at the origin, since every
integrand is meromorphic with its sole pole there.
"""

from __future__ import annotations

from .algebra import (GR, LaurentPoly, Poly, Series, laplace_ray,
                      residue_at_zero)
from .errors import InputError, NodeAtOriginError, SingularSystemError
from .linalg import solve_exact
from .moments import MonicOP, gram_matrix
from .rational import GaussianRational, format_complex
from .reports import CheckReport, report_from_expected
from .weights import WeightSpec

EXTRA_ORDER = 10  # safety buffer over the provably sufficient truncation


class RayKernel:
    """The Laurent kernel pairing ``P*W`` with the k-th monomial condition.

    Termwise, ``u**m`` contributes ``m!/z**(m+1)``, so the kernel for index k
    is the ray-Laplace transform of ``conjW(u) * u**k``.
    """

    __slots__ = ("k", "laurent")

    def __init__(self, k: int, laurent: LaurentPoly):
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "laurent", laurent)

    def __setattr__(self, name, value):
        raise AttributeError("RayKernel is immutable")


def ray_kernel(weight: WeightSpec, k: int) -> RayKernel:
    if k < 0:
        raise InputError("kernel index must be nonnegative")
    return RayKernel(k, laplace_ray(weight.conj_poly * Poly.monomial(k)))


def check_contour_orthogonality(op: MonicOP, weight: WeightSpec) -> CheckReport:
    """Residues of ``P * W * kernel_k`` for k = 0..n-1 (and k = n for context).

    The k = n residue is recorded but not a condition; it is generically
    nonzero (it equals the squared norm of P under the planar product).
    """
    pw = (op.poly * weight.poly).to_laurent()
    labeled = []
    for k in range(op.n + 1):
        labeled.append((k, residue_at_zero(pw * ray_kernel(weight, k).laurent)))
    values = labeled
    violations = [(k, v) for k, v in labeled[: op.n] if not v.is_zero()]
    return CheckReport("contour_orthogonality", values, violations)


def check_operator_truncation(op: MonicOP, weight: WeightSpec) -> CheckReport:
    """Coefficients below ``z**n`` of ``conjW(d/dz)[P * W]`` must vanish.

    The ``z**n`` coefficient is recorded too: it equals ``<P, z**n>/n!`` and
    must be nonzero for the planar orthogonal polynomial.
    """
    image = weight.apply_conjugate_operator(op.poly * weight.poly)
    labeled = [(k, image.coeff(k)) for k in range(op.n + 1)]
    violations = [(k, v) for k, v in labeled[: op.n] if not v.is_zero()]
    return CheckReport("operator_truncation", labeled, violations)


class TypeISolution:
    """A monic P with companion polynomials Q_j solving the linear form.

    The defining property -- the combination ``P*W + sum_j Q_j e^{conj(a_j)z}``
    has vanishing Maclaurin coefficients through order n + c - 1 -- is
    re-verified at construction with a safety margin beyond the provably
    sufficient truncation order.
    """

    __slots__ = ("weight", "n", "p", "qs")

    def __init__(self, weight: WeightSpec, n: int, p: Poly, qs):
        qs = tuple(qs)
        if p.degree != n or not p.is_monic():
            raise InputError(f"P must be monic of degree {n}")
        if len(qs) != weight.p:
            raise InputError("one companion polynomial per insertion point")
        for (a, c), q in zip(weight.nodes, qs):
            if q.degree > c - 1:
                raise InputError(f"companion degree {q.degree} exceeds {c - 1}")
        combo = combination_series(weight, p, qs,
                                   n + weight.total_multiplicity + EXTRA_ORDER)
        for t in range(n + weight.total_multiplicity):
            if not combo.coeffs[t].is_zero():
                raise InputError(
                    f"combination coefficient {t} is {format_complex(combo.coeffs[t])},"
                    " not a valid solution")
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "qs", qs)

    def __setattr__(self, name, value):
        raise AttributeError("TypeISolution is immutable")

    def to_json(self) -> dict:
        def poly_json(q: Poly):
            return [c.to_json() for c in q.coeffs]

        return {"n": self.n, "P": poly_json(self.p),
                "Q": [poly_json(q) for q in self.qs]}


def combination_series(weight: WeightSpec, p: Poly, qs, order: int) -> Series:
    """Truncated ``P*W + sum_j Q_j exp(conj(a_j) z)``."""
    acc = (p * weight.poly).to_series(order)
    for (a, _), q in zip(weight.nodes, qs):
        acc = acc + q.to_series(order) * Series.exponential(a.conjugate(), order)
    return acc


def solve_type_one(weight: WeightSpec, n: int) -> TypeISolution:
    """Solve the (n+c) x (n+c) exact system for P (monic) and the Q_j.

    Unknowns are the n low coefficients of P followed by the coefficients of
    each Q_j; equations match Maclaurin coefficients 0..n+c-1 of the
    combination to zero.  The system is nonsingular for every valid weight.
    """
    if n < 0:
        raise InputError("degree must be nonnegative")
    c = weight.total_multiplicity
    size = n + c
    w = weight.poly
    # exponential coefficient tables conj(a_j)**m / m!
    etab = [Series.exponential(a.conjugate(), size).coeffs for a, _ in weight.nodes]
    cols = []
    for i in range(n):  # P coefficient p_i multiplies z**i * W
        cols.append([w.coeff(t - i) if t >= i else GR(0) for t in range(size)])
    for jnode, (_, cj) in enumerate(weight.nodes):
        for i in range(cj):  # Q_j coefficient q_{j,i} multiplies z**i * e^{conj a_j z}
            cols.append([etab[jnode][t - i] if t >= i else GR(0)
                         for t in range(size)])
    mat = [[cols[u][t] for u in range(size)] for t in range(size)]
    rhs = [-w.coeff(t - n) if t >= n else GR(0) for t in range(size)]
    sol = solve_exact(mat, rhs, context="linear-form system")
    p = Poly(sol[:n] + [GR(1)])
    qs = []
    at = n
    for _, cj in weight.nodes:
        qs.append(Poly(sol[at: at + cj]))
        at += cj
    return TypeISolution(weight, n, p, qs)


def check_type_one_contour(sol: TypeISolution) -> CheckReport:
    """Residues of ``combination(s) * s**k / s**(n+c)`` for k = 0..n+c-1.

    Terms of order >= n + c in the exponentials cannot reach these residues,
    so truncation at order n + c is exact.
    """
    size = sol.n + sol.weight.total_multiplicity
    combo = combination_series(sol.weight, sol.p, sol.qs, size)
    labeled = [(k, combo.coeffs[size - 1 - k]) for k in range(size)]
    return report_from_expected("type_one_contour", labeled, lambda k: GR(0))


def check_reduced_type_one(sol: TypeISolution, origin_remark: bool = False) -> CheckReport:
    """Normalization of the weight-divided form: residues equal -1 at k = c-1.

    For k = 0..c-1 the residue of ``sum_j Q_j(s) e^{conj(a_j)s} /
    (s**(n+c) W(s))`` must equal ``-delta(k, c-1)``.  Requires every
    insertion point nonzero; with ``origin_remark=True`` an origin node of
    multiplicity m is handled by dropping the m lowest conditions (the
    divided form only vanishes to order n + c - m there).
    """
    weight, n = sol.weight, sol.n
    c = weight.total_multiplicity
    size = n + c
    origin_mult = 0
    for a, cj in weight.nodes:
        if a.is_zero():
            origin_mult = cj
    if origin_mult and not origin_remark:
        raise NodeAtOriginError(
            "strict reduced form needs nonzero insertion points; "
            "pass origin_remark=True for the adjusted condition range")
    num = Series(size + origin_mult)
    for (a, _), q in zip(weight.nodes, sol.qs):
        num = num + q.to_series(size + origin_mult) * Series.exponential(
            a.conjugate(), size + origin_mult)
    if origin_mult:
        # numerator vanishes to the origin multiplicity; divide it out first
        for t in range(origin_mult):
            if not num.coeffs[t].is_zero():
                raise SingularSystemError("weight-divided form not analytic at 0")
        num = Series(size, num.coeffs[origin_mult:])
        reduced_w = Poly(weight.poly.coeffs[origin_mult:])
    else:
        reduced_w = weight.poly
    h = num * reduced_w.to_series(size).inverse()
    labeled = [(k, h.coeffs[size - 1 - k]) for k in range(origin_mult, c)]
    report = report_from_expected(
        "reduced_type_one", labeled,
        lambda k: GR(-1) if k == c - 1 else GR(0),
        notes=(f"conditions k={origin_mult}..{c - 1}",) if origin_mult else ())
    return report


def check_singled_out(sol: TypeISolution, index: int) -> CheckReport:
    """Single out companion ``index``: remaining residues must vanish.

    With frequencies shifted by ``-conj(a_index)``, the combination equals
    ``-Q_index`` up to order n + c, so the coefficients from ``c_index`` to
    ``n + c - 1`` vanish; equivalently the residues against ``s**k`` vanish
    for ``k = 0..n+c-c_index-1``.  For a single insertion point this is the
    usual non-Hermitian contour orthogonality of P against the weight.
    """
    weight, n = sol.weight, sol.n
    if not 1 <= index <= weight.p:
        raise InputError(f"index must be in 1..{weight.p}")
    c = weight.total_multiplicity
    size = n + c
    a_star = weight.nodes[index - 1][0].conjugate()
    c_star = weight.nodes[index - 1][1]
    num = (sol.p * weight.poly).to_series(size) * Series.exponential(-a_star, size)
    for j, ((a, _), q) in enumerate(zip(weight.nodes, sol.qs)):
        if j == index - 1:
            continue
        num = num + q.to_series(size) * Series.exponential(
            a.conjugate() - a_star, size)
    labeled = [(k, num.coeffs[size - 1 - k]) for k in range(size - c_star)]
    return report_from_expected("singled_out", labeled, lambda k: GR(0))


def check_bilinear_identity(p: Poly, q: Poly, weight: WeightSpec) -> CheckReport:
    """Planar scalar product versus the contour residue, exactly.

    ``<P, Q>`` computed from Gram entries must equal the residue at 0 of
    ``P(z) W(z) * laplace(conjW * conj-poly(Q))(z)``.
    """
    nmax = max(p.degree, q.degree, 0)
    g = gram_matrix(weight, nmax)
    lhs = GR(0)
    for j, pc in enumerate(p.coeffs):
        if pc.is_zero():
            continue
        for k, qc in enumerate(q.coeffs):
            if not qc.is_zero():
                lhs = lhs + pc * qc.conjugate() * g.entry(j, k)
    rhs = residue_at_zero(
        (p * weight.poly).to_laurent() *
        laplace_ray(weight.conj_poly * q.conj_star()))
    values = [("planar", lhs), ("contour", rhs)]
    violations = [] if lhs == rhs else [("difference", lhs - rhs)]
    return CheckReport("bilinear_identity", values, violations)
