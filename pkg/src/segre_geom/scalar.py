"""Complex scalars with a selectable arithmetic backend.

Two backends share one value type: EXACT keeps the real and imaginary
parts as arbitrary-precision rationals (closed under +, -, *, / with
decidable equality), FLOAT64 keeps them as IEEE doubles and replaces
equality by tolerance comparisons.  Mixing backends in one expression
raises ``BackendMismatch``; there is no silent coercion.

Rational components use ``gmpy2.mpq`` when available and fall back to
``fractions.Fraction``; both print as ``p/q`` (or ``p`` for integers),
which is exactly the JSON wire form.
"""

from __future__ import annotations

import re as _re
from enum import Enum
from typing import NamedTuple, Union

from .errors import BackendMismatch, NegativeTolerance

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rational

DEFAULT_FLOAT_TOL = 1e-10

_RATIONAL_RE = _re.compile(r"^[+-]?\d+(/\d+)?$")


class Backend(Enum):
    EXACT = "exact"
    FLOAT64 = "float"


class Scalar(NamedTuple):
    """Immutable complex number tagged with its backend.

    ``re`` and ``im`` are rationals on EXACT and floats on FLOAT64.
    Construct through :func:`exact` / :func:`float64` rather than
    directly, so components are validated and normalized.
    """

    re: object
    im: object
    backend: Backend

    def _join(self, other: "Scalar") -> Backend:
        if self.backend is not other.backend:
            raise BackendMismatch(
                f"cannot combine {self.backend.value} and {other.backend.value} scalars"
            )
        return self.backend

    def __add__(self, other: "Scalar") -> "Scalar":
        b = self._join(other)
        return Scalar(self.re + other.re, self.im + other.im, b)

    def __sub__(self, other: "Scalar") -> "Scalar":
        b = self._join(other)
        return Scalar(self.re - other.re, self.im - other.im, b)

    def __mul__(self, other: Union["Scalar", int]) -> "Scalar":
        if isinstance(other, int):
            return Scalar(self.re * other, self.im * other, self.backend)
        b = self._join(other)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
            b,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Union["Scalar", int]) -> "Scalar":
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("scalar division by zero")
            if self.backend is Backend.EXACT:
                return Scalar(self.re / Rational(other), self.im / Rational(other), self.backend)
            return Scalar(self.re / other, self.im / other, self.backend)
        b = self._join(other)
        d = other.re * other.re + other.im * other.im
        if not d:
            raise ZeroDivisionError("scalar division by zero")
        return Scalar(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
            b,
        )

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im, self.backend)

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            raise TypeError("scalar powers must be integers")
        if n < 0:
            return one(self.backend) / (self ** (-n))
        out = one(self.backend)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im, self.backend)

    def abs_squared(self) -> "Scalar":
        """|z|^2 as a real scalar of the same backend."""
        return Scalar(self.re * self.re + self.im * self.im, _zero_part(self.backend), self.backend)

    def is_zero(self) -> bool:
        """Exact componentwise zero test (both backends)."""
        return not self.re and not self.im

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({self.re!r}, {self.im!r}, {self.backend.value})"


def _zero_part(backend: Backend):
    return Rational(0) if backend is Backend.EXACT else 0.0


def _to_rational(value) -> "Rational":
    if isinstance(value, bool):
        raise TypeError("bool is not a rational component")
    if isinstance(value, int):
        return Rational(value)
    if isinstance(value, str):
        s = value.strip()
        if not _RATIONAL_RE.match(s):
            raise ValueError(f"not a p/q rational string: {value!r}")
        num, _, den = s.partition("/")
        if den:
            if int(den) == 0:
                raise ValueError(f"zero denominator: {value!r}")
            return Rational(int(num), int(den))
        return Rational(int(num))
    if isinstance(value, float):
        raise TypeError("floats are not accepted on the exact backend; pass an int or 'p/q' string")
    return Rational(value)  # Fraction, mpq, or compatible


def exact(re=0, im=0) -> Scalar:
    """Exact-backend scalar from ints, ``p/q`` strings or rationals."""
    return Scalar(_to_rational(re), _to_rational(im), Backend.EXACT)


def float64(re=0.0, im=0.0) -> Scalar:
    """Float-backend scalar; components are coerced to double precision."""
    return Scalar(float(re), float(im), Backend.FLOAT64)


def zero(backend: Backend) -> Scalar:
    return Scalar(_zero_part(backend), _zero_part(backend), backend)


def one(backend: Backend) -> Scalar:
    return from_int(1, backend)


def imag_unit(backend: Backend) -> Scalar:
    if backend is Backend.EXACT:
        return Scalar(Rational(0), Rational(1), backend)
    return Scalar(0.0, 1.0, backend)


def from_int(n: int, backend: Backend) -> Scalar:
    if backend is Backend.EXACT:
        return Scalar(Rational(n), Rational(0), backend)
    return Scalar(float(n), 0.0, backend)


def rational(p: int, q: int = 1) -> Scalar:
    """Exact real scalar p/q."""
    if q == 0:
        raise ZeroDivisionError("zero denominator")
    return Scalar(Rational(p, q), Rational(0), Backend.EXACT)


def approx_zero(a: Scalar, tol=0) -> bool:
    """Vanishing test: exact equality on EXACT, max(|re|,|im|) <= tol on FLOAT64.

    The exact backend requires tol == 0 so that vanishing stays a decidable
    equality rather than a tolerance question.
    """
    if tol < 0:
        raise NegativeTolerance(f"tolerance must be nonnegative, got {tol}")
    if a.backend is Backend.EXACT:
        if tol != 0:
            raise ValueError("exact backend requires tol == 0")
        return a.is_zero()
    return max(abs(a.re), abs(a.im)) <= tol


def approx_eq(a: Scalar, b: Scalar, tol=0) -> bool:
    return approx_zero(a - b, tol)


def format_scalar(a: Scalar) -> str:
    """Human-oriented ``re+imi`` rendering used in diagnostics."""
    if a.backend is Backend.EXACT:
        re_s, im_s = str(a.re), str(a.im)
    else:
        re_s, im_s = repr(a.re), repr(a.im)
    if not a.im:
        return re_s
    if not a.re:
        return f"{im_s}i"
    sign = "+" if (a.im > 0) else "-"
    mag = im_s.lstrip("-")
    return f"{re_s}{sign}{mag}i"


def _component_to_json(value, backend: Backend):
    if backend is Backend.EXACT:
        return str(value)
    return value


def scalar_to_json(a: Scalar) -> dict:
    """Wire form: {"re": ..., "im": ...}; rationals as ``p/q`` strings."""
    return {
        "re": _component_to_json(a.re, a.backend),
        "im": _component_to_json(a.im, a.backend),
    }


def _component_from_json(value, backend: Backend):
    if backend is Backend.EXACT:
        if isinstance(value, bool) or isinstance(value, float):
            raise ValueError(
                f"exact backend accepts integers and p/q strings, got {value!r}"
            )
        if isinstance(value, (int, str)):
            return _to_rational(value)
        raise ValueError(f"not a scalar component: {value!r}")
    if isinstance(value, bool):
        raise ValueError(f"not a scalar component: {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        return float(_to_rational(value))
    raise ValueError(f"not a scalar component: {value!r}")


def scalar_from_json(obj, backend: Backend) -> Scalar:
    """Parse a scalar document.

    Accepts the canonical {"re": ..., "im": ...} object, or a bare
    number / ``p/q`` string meaning a real scalar.
    """
    if isinstance(obj, dict):
        extra = set(obj) - {"re", "im"}
        if extra:
            raise ValueError(f"unknown scalar keys: {sorted(extra)}")
        re_part = _component_from_json(obj.get("re", 0), backend)
        im_part = _component_from_json(obj.get("im", 0), backend)
        return Scalar(re_part, im_part, backend)
    re_part = _component_from_json(obj, backend)
    return Scalar(re_part, _component_from_json(0, backend), backend)
