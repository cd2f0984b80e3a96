"""Exact Gaussian-rational scalars.

A Gaussian rational is a complex number whose real and imaginary parts are
rational.  They are the coefficient field for everything in this package:
insertion points, polynomial coefficients, residues, Gram entries.  All
arithmetic is exact; ``gmpy2.mpq`` keeps every component in lowest terms
with a positive denominator.
"""

from __future__ import annotations

from gmpy2 import mpq

from .errors import InputError

Rat = mpq  # rational component type


def rat_from_str(s: str) -> mpq:
    """Parse a rational literal "p/q" or "p" (q > 0 after normalization)."""
    try:
        return mpq(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational literal {s!r}") from exc


def rat_to_str(q) -> str:
    """Format a rational in canonical "p/q" form ("p" when q == 1)."""
    q = mpq(q)
    return str(q)


class GaussianRational:
    """Immutable complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", mpq(re))
        object.__setattr__(self, "im", mpq(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_json(obj) -> "GaussianRational":
        """Build from {"re": "p/q", "im": "r/s"} (either key may be absent)."""
        if not isinstance(obj, dict):
            raise InputError(f"expected complex object, got {obj!r}")
        return GaussianRational(rat_from_str(str(obj.get("re", "0"))),
                                rat_from_str(str(obj.get("im", "0"))))

    def to_json(self) -> dict:
        return {"re": rat_to_str(self.re), "im": rat_to_str(self.im)}

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, type(mpq(0)))):
            return GaussianRational(x)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if not n:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational((self.re * o.re + self.im * o.im) / n,
                                (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / self ** (-k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self):
        """|z|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def sort_key(self):
        """Deterministic total order used for canonical term ordering."""
        return (self.re, self.im)

    def __repr__(self):
        if not self.im:
            return f"GR({self.re})"
        return f"GR({self.re}, {self.im})"

    def __str__(self):
        return format_complex(self)


GR = GaussianRational

ZERO = GR(0)
ONE = GR(1)
I = GR(0, 1)


def format_complex(z: GaussianRational) -> str:
    """Canonical complex-string "a+bi" with rational components in "p/q" form."""
    re, im = rat_to_str(z.re), rat_to_str(z.im)
    sign = "+" if z.im >= 0 else "-"
    mag = im.lstrip("-")
    return f"{re}{sign}{mag}i"


def parse_complex(s: str) -> GaussianRational:
    """Inverse of :func:`format_complex`."""
    t = s.strip()
    if not t.endswith("i"):
        return GaussianRational(rat_from_str(t))
    body = t[:-1]
    # split at the sign that separates the two components (not a leading sign,
    # not the sign inside a "/q" denominator -- denominators are positive).
    for pos in range(len(body) - 1, 0, -1):
        if body[pos] in "+-" and body[pos - 1] not in "+-/":
            re_part, im_part = body[:pos], body[pos:]
            im_part = im_part if im_part not in ("+", "-") else im_part + "1"
            return GaussianRational(rat_from_str(re_part), rat_from_str(im_part))
    raise InputError(f"bad complex literal {s!r}")
