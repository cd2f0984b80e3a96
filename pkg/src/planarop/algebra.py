"""Exact polynomial, Laurent and exponential-rational algebra.

Everything downstream reduces to four closed arithmetic classes over the
Gaussian rationals:

* :class:`Poly` -- dense polynomials in one variable.
* :class:`LaurentPoly` -- finite Laurent polynomials whose only pole is at
  the origin.  Residue calculus lives here: every contour integral in this
  package is the coefficient of ``z**-1`` of some LaurentPoly.
* :class:`Series` -- power series truncated at a fixed order, used for
  Maclaurin matching and for expanding ``exp(w*z)`` and ``1/den(z)``.
* :class:`ExpRational` -- finite sums ``sum_w N_w(z)/den(z) * exp(w*z)``
  with LaurentPoly numerators and a shared polynomial denominator.  These
  are closed under the ring operations and house every matrix entry of the
  piecewise-analytic solutions built in :mod:`planarop.rh`.

All values are immutable and all operations are pure, so everything here is
safe to share across threads.
"""

from __future__ import annotations

import math
from functools import lru_cache

import mpmath

from .errors import DenominatorVanishesAtZero, EvaluationAtPole, TruncationTooShort
from .rational import GR, GaussianRational, Rat

fact = lru_cache(maxsize=None)(math.factorial)


def _as_gr(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x)


def rat_to_mpf(q, prec: int):
    """Convert an exact rational to an mpf at ``prec`` bits."""
    with mpmath.workprec(prec):
        return mpmath.mpf(q.numerator) / mpmath.mpf(q.denominator)


def gr_to_mpc(z: GaussianRational, prec: int):
    return mpmath.mpc(rat_to_mpf(z.re, prec), rat_to_mpf(z.im, prec))


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Dense polynomial over the Gaussian rationals, ascending coefficients.

    The zero polynomial stores no coefficients and has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_gr(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def monomial(k: int, coeff=1) -> "Poly":
        return Poly([GR(0)] * k + [_as_gr(coeff)])

    @staticmethod
    def one() -> "Poly":
        return Poly([GR(1)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == GR(1)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == GR(1)

    def coeff(self, k: int) -> GaussianRational:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return GR(0)

    @property
    def leading(self) -> GaussianRational:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (GaussianRational, int)):
            g = _as_gr(other)
            return Poly([c * g for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [GR(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        out = Poly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- calculus and evaluation ---------------------------------------------

    def deriv(self) -> "Poly":
        return Poly([self.coeffs[i] * GR(i) for i in range(1, len(self.coeffs))])

    def conj_star(self) -> "Poly":
        """Coefficientwise conjugate: the polynomial z -> conj(self(conj(z)))."""
        return Poly([c.conjugate() for c in self.coeffs])

    def __call__(self, z: GaussianRational) -> GaussianRational:
        acc = GR(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def eval_mpc(self, z, prec: int):
        with mpmath.workprec(prec):
            acc = mpmath.mpc(0)
            for c in reversed(self.coeffs):
                acc = acc * z + gr_to_mpc(c, prec)
            return acc

    def divmod_exact(self, divisor: "Poly"):
        """Long division over the field; returns (quotient, remainder)."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.leading
        quot = [GR(0)] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            q = c / lead
            quot[i - dd] = q
            for j, b in enumerate(divisor.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - q * b
        return Poly(quot), Poly(rem)

    def to_laurent(self) -> "LaurentPoly":
        return LaurentPoly(0, self.coeffs)

    def to_series(self, order: int) -> "Series":
        return Series(order, [self.coeff(i) for i in range(order)])

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        parts = [f"({c})*z^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return "Poly(" + " + ".join(parts) + ")"


# ---------------------------------------------------------------------------
# Laurent polynomials with sole pole at the origin


class LaurentPoly:
    """Finite Laurent polynomial ``sum_k c_k z^k`` with integer exponents.

    Negative exponents model the sole pole at the origin, which is all the
    residue calculus in this package ever needs.
    """

    __slots__ = ("min_deg", "coeffs")

    def __init__(self, min_deg: int = 0, coeffs=()):
        cs = [_as_gr(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        while cs and cs[0].is_zero():
            cs.pop(0)
            min_deg += 1
        if not cs:
            min_deg = 0
        object.__setattr__(self, "min_deg", min_deg)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @property
    def max_deg(self) -> int:
        """Largest exponent present; min_deg - 1 for the zero element."""
        return self.min_deg + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> GaussianRational:
        i = k - self.min_deg
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return GR(0)

    @property
    def residue(self) -> GaussianRational:
        """Coefficient of z**-1, i.e. (1/2 pi i) * the contour integral."""
        return self.coeff(-1)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by z**k."""
        return LaurentPoly(self.min_deg + k, self.coeffs)

    def principal(self) -> "LaurentPoly":
        """The part with strictly negative exponents."""
        if self.min_deg >= 0:
            return LaurentPoly()
        upto = min(len(self.coeffs), -self.min_deg)
        return LaurentPoly(self.min_deg, self.coeffs[:upto])

    def poly_part(self) -> Poly:
        """The part with nonnegative exponents, as a Poly."""
        if self.is_zero() or self.max_deg < 0:
            return Poly()
        out = [GR(0)] * (self.max_deg + 1)
        for i, c in enumerate(self.coeffs):
            k = self.min_deg + i
            if k >= 0:
                out[k] = c
        return Poly(out)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Poly):
            other = other.to_laurent()
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_deg, other.min_deg)
        hi = max(self.max_deg, other.max_deg)
        out = [GR(0)] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_deg + i - lo] = c
        for i, c in enumerate(other.coeffs):
            j = other.min_deg + i - lo
            out[j] = out[j] + c
        return LaurentPoly(lo, out)

    def __sub__(self, other):
        if isinstance(other, Poly):
            other = other.to_laurent()
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return LaurentPoly(self.min_deg, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (GaussianRational, int)):
            g = _as_gr(other)
            return LaurentPoly(self.min_deg, [c * g for c in self.coeffs])
        if isinstance(other, Poly):
            other = other.to_laurent()
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        out = [GR(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return LaurentPoly(self.min_deg + other.min_deg, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Poly):
            other = other.to_laurent()
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_deg == other.min_deg and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_deg, self.coeffs))

    def eval_mpc(self, z, prec: int):
        with mpmath.workprec(prec):
            if abs(z) == 0 and self.min_deg < 0:
                raise EvaluationAtPole("Laurent polynomial has a pole at 0")
            acc = mpmath.mpc(0)
            for c in reversed(self.coeffs):
                acc = acc * z + gr_to_mpc(c, prec)
            return acc * z ** self.min_deg

    def __repr__(self):
        if self.is_zero():
            return "LaurentPoly(0)"
        parts = [f"({c})*z^{self.min_deg + i}"
                 for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return "LaurentPoly(" + " + ".join(parts) + ")"


def residue_at_zero(f) -> GaussianRational:
    """Coefficient of z**-1 of a LaurentPoly (or Poly, where it is zero)."""
    if isinstance(f, Poly):
        return GR(0)
    return f.residue


# ---------------------------------------------------------------------------
# truncated power series


class Series:
    """Power series truncated at a fixed order (coefficients 0..order-1).

    Binary operations truncate to the shorter operand's order; the truncation
    order is part of the value.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError("series order must be positive")
        cs = [_as_gr(c) for c in coeffs]
        if len(cs) > order:
            raise ValueError("more coefficients than the truncation order")
        cs.extend([GR(0)] * (order - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @staticmethod
    def exponential(freq: GaussianRational, order: int) -> "Series":
        """Maclaurin expansion of exp(freq * z) to the given order."""
        out = [GR(1)]
        for m in range(1, order):
            out.append(out[-1] * freq / GR(m))
        return Series(order, out)

    def coeff(self, k: int) -> GaussianRational:
        if 0 <= k < self.order:
            return self.coeffs[k]
        raise TruncationTooShort(f"coefficient {k} beyond truncation order {self.order}")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, Poly):
            other = other.to_series(self.order)
        if not isinstance(other, Series):
            return NotImplemented
        k = min(self.order, other.order)
        return Series(k, [self.coeffs[i] + other.coeffs[i] for i in range(k)])

    def __sub__(self, other):
        if isinstance(other, Poly):
            other = other.to_series(self.order)
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Series(self.order, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (GaussianRational, int)):
            g = _as_gr(other)
            return Series(self.order, [c * g for c in self.coeffs])
        if isinstance(other, Poly):
            other = other.to_series(self.order)
        if not isinstance(other, Series):
            return NotImplemented
        k = min(self.order, other.order)
        out = [GR(0)] * k
        for i in range(k):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            for j in range(k - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Series(k, out)

    __rmul__ = __mul__

    def deriv(self) -> "Series":
        if self.order < 2:
            raise TruncationTooShort("cannot differentiate an order-1 series")
        return Series(self.order - 1,
                      [self.coeffs[i] * GR(i) for i in range(1, self.order)])

    def inverse(self) -> "Series":
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self.coeffs[0]
        if c0.is_zero():
            raise DenominatorVanishesAtZero("series has zero constant term")
        inv0 = GR(1) / c0
        out = [inv0]
        for m in range(1, self.order):
            s = GR(0)
            for i in range(1, m + 1):
                s = s + self.coeffs[i] * out[m - i]
            out.append(-s * inv0)
        return Series(self.order, out)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        parts = [f"({c})*z^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        body = " + ".join(parts) if parts else "0"
        return f"Series[{body} + O(z^{self.order})]"


# ---------------------------------------------------------------------------
# operators and transforms


def apply_diff_operator(op: Poly, target):
    """Apply the constant-coefficient operator ``op(d/dz)`` to a Poly or Series.

    ``op(D)[F] = sum_m op_m * F^(m)``.  For a Series the truncation order
    drops by deg(op); the input order must exceed deg(op).
    """
    if isinstance(target, Poly):
        out = Poly()
        d = target
        for m, c in enumerate(op.coeffs):
            if not c.is_zero():
                out = out + d * c
            d = d.deriv()
        return out
    if isinstance(target, Series):
        c = op.degree
        if c < 0:
            return Series(target.order)
        if target.order <= c:
            raise TruncationTooShort(
                f"series order {target.order} too short for an order-{c} operator")
        k = target.order - c
        out = Series(k)
        d = target
        for m, cf in enumerate(op.coeffs):
            if not cf.is_zero():
                out = out + Series(k, d.coeffs[:k]) * cf
            if m < op.degree:
                d = d.deriv()
        return out
    raise TypeError(f"cannot apply operator to {type(target).__name__}")


def laplace_ray(v: Poly) -> LaurentPoly:
    """Termwise ray-Laplace transform ``u^m -> m! / z^(m+1)``.

    This realizes integrals of ``v(u) exp(-u z)`` along the ray from 0 to
    infinity in the direction of conj(z), as Laurent data at the origin.
    """
    if v.is_zero():
        return LaurentPoly()
    coeffs = [v.coeffs[m] * GR(fact(m)) for m in range(len(v.coeffs))]
    return LaurentPoly(-(v.degree + 1), list(reversed(coeffs)))


# ---------------------------------------------------------------------------
# exponential-rational combinations


def _gr_key(z: GaussianRational):
    return z.sort_key()


class ExpRational:
    """Finite sum ``sum_w N_w(z)/den(z) * exp(w z)``.

    ``den`` is a polynomial, normalized monic; each numerator ``N_w`` is a
    LaurentPoly, so poles at the origin are expressible without touching the
    denominator.  Canonical form merges exactly equal frequencies and strips
    zero numerators, which makes identity checks (jump relations, unit
    determinants) exact equality tests.
    """

    __slots__ = ("den", "terms")

    def __init__(self, terms=None, den: Poly | None = None):
        den = Poly.one() if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("ExpRational denominator is zero")
        merged: dict[GaussianRational, LaurentPoly] = {}
        if terms:
            for freq, num in (terms.items() if isinstance(terms, dict) else terms):
                freq = _as_gr(freq)
                if isinstance(num, Poly):
                    num = num.to_laurent()
                if freq in merged:
                    merged[freq] = merged[freq] + num
                else:
                    merged[freq] = num
        lead = den.leading
        if not (lead == GR(1)):
            den = den * (GR(1) / lead)
            merged = {f: n * (GR(1) / lead) for f, n in merged.items()}
        merged = {f: n for f, n in sorted(merged.items(), key=lambda t: _gr_key(t[0]))
                  if not n.is_zero()}
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "terms", merged)

    def __setattr__(self, name, value):
        raise AttributeError("ExpRational is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero() -> "ExpRational":
        return ExpRational()

    @staticmethod
    def from_laurent(num: LaurentPoly, den: Poly | None = None) -> "ExpRational":
        return ExpRational({GR(0): num}, den)

    @staticmethod
    def from_poly(p: Poly, den: Poly | None = None) -> "ExpRational":
        return ExpRational({GR(0): p.to_laurent()}, den)

    @staticmethod
    def exp_term(freq, num, den: Poly | None = None) -> "ExpRational":
        if isinstance(num, Poly):
            num = num.to_laurent()
        return ExpRational({_as_gr(freq): num}, den)

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def frequencies(self):
        return tuple(self.terms.keys())

    def freq_part(self, freq) -> LaurentPoly:
        """Numerator at a frequency (den not divided out)."""
        return self.terms.get(_as_gr(freq), LaurentPoly())

    def is_laurent(self) -> bool:
        """True when the value is a plain LaurentPoly (den = 1, frequency 0)."""
        if not self.den.is_one():
            return False
        return all(f.is_zero() for f in self.terms)

    def as_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError("value has exponential terms or a nontrivial denominator")
        return self.freq_part(GR(0))

    def pole_order_at_zero(self) -> int:
        """Pole order of the value at the origin (den(0) must be nonzero)."""
        if self.den(GR(0)).is_zero():
            raise DenominatorVanishesAtZero("denominator vanishes at the origin")
        worst = 0
        for num in self.terms.values():
            if num.min_deg < 0:
                worst = max(worst, -num.min_deg)
        return worst

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        other = _coerce_expr(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            out = dict(self.terms)
            for f, n in other.terms.items():
                out[f] = out[f] + n if f in out else n
            return ExpRational(out, self.den)
        out = {f: n * other.den for f, n in self.terms.items()}
        for f, n in other.terms.items():
            nn = n * self.den
            out[f] = out[f] + nn if f in out else nn
        return ExpRational(out, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_expr(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return ExpRational({f: -n for f, n in self.terms.items()}, self.den)

    def __mul__(self, other):
        if isinstance(other, (GaussianRational, int)):
            g = _as_gr(other)
            return ExpRational({f: n * g for f, n in self.terms.items()}, self.den)
        other = _coerce_expr(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[GaussianRational, LaurentPoly] = {}
        for f1, n1 in self.terms.items():
            for f2, n2 in other.terms.items():
                f = f1 + f2
                n = n1 * n2
                out[f] = out[f] + n if f in out else n
        return ExpRational(out, self.den * other.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _coerce_expr(other)
        if other is NotImplemented:
            return NotImplemented
        freqs = set(self.terms) | set(other.terms)
        for f in freqs:
            a = self.terms.get(f, LaurentPoly())
            b = other.terms.get(f, LaurentPoly())
            if a * other.den != b * self.den:
                return False
        return True

    def __hash__(self):  # pragma: no cover - not used as dict key
        return hash((self.den, tuple(sorted(((f, n) for f, n in self.terms.items()),
                                            key=lambda t: _gr_key(t[0])))))

    # -- analysis --------------------------------------------------------------

    def principal_part(self, depth: int) -> LaurentPoly:
        """Exact terms z**-1 .. z**-depth of the Laurent expansion at 0.

        Each term's analytic factor exp(w z)/den(z) is expanded as a truncated
        series, so the result is exact.  Requires den(0) != 0 and depth at
        least the pole order.
        """
        if self.den(GR(0)).is_zero():
            raise DenominatorVanishesAtZero("denominator vanishes at the origin")
        if depth < self.pole_order_at_zero():
            raise ValueError(
                f"depth {depth} below pole order {self.pole_order_at_zero()}")
        acc: dict[int, GaussianRational] = {}
        for freq, num in self.terms.items():
            m0 = num.min_deg
            if m0 >= 0:
                continue
            klen = -m0
            dser = self.den.to_series(klen).inverse()
            eser = Series.exponential(freq, klen)
            s = (eser * dser).coeffs
            for t in range(1, min(depth, klen) + 1):
                total = GR(0)
                for a in range(m0, -t + 1):
                    b = -t - a
                    if 0 <= b < klen:
                        c = num.coeff(a)
                        if not c.is_zero():
                            total = total + c * s[b]
                if not total.is_zero():
                    acc[-t] = acc.get(-t, GR(0)) + total
        if not acc:
            return LaurentPoly()
        lo = min(acc)
        out = [GR(0)] * (-lo)
        for k, v in acc.items():
            out[k - lo] = v
        return LaurentPoly(lo, out)

    def evaluate(self, z, prec: int):
        """Numeric value at a nonzero point, as an mpc at ``prec`` bits."""
        with mpmath.workprec(prec + 10):
            zz = mpmath.mpc(z)
            if abs(zz) == 0:
                raise EvaluationAtPole("evaluation at the origin")
            dv = self.den.eval_mpc(zz, prec + 10)
            if abs(dv) == 0:
                raise EvaluationAtPole("denominator vanishes at the sample point")
            acc = mpmath.mpc(0)
            for freq, num in self.terms.items():
                w = gr_to_mpc(freq, prec + 10)
                acc += num.eval_mpc(zz, prec + 10) * mpmath.exp(w * zz)
            out = acc / dv
        with mpmath.workprec(prec):
            return +out

    def __repr__(self):
        if self.is_zero():
            return "ExpRational(0)"
        bits = [f"[{num!r}]*e^(({f})z)" for f, num in self.terms.items()]
        s = " + ".join(bits)
        if not self.den.is_one():
            s = f"({s})/({self.den!r})"
        return f"ExpRational({s})"


def _coerce_expr(x):
    if isinstance(x, ExpRational):
        return x
    if isinstance(x, Poly):
        return ExpRational.from_poly(x)
    if isinstance(x, LaurentPoly):
        return ExpRational.from_laurent(x)
    if isinstance(x, (GaussianRational, int)):
        return ExpRational.from_poly(Poly([_as_gr(x)]))
    return NotImplemented
