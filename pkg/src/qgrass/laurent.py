"""Exact Laurent polynomials in ``q`` with integer coefficients.

A :class:`LaurentPoly` is an immutable sparse map ``exponent -> coefficient``
with no zero coefficients stored, so structural equality is mathematical
equality.  Quantum integers, quantum factorials and Gaussian binomials are
built on top of it.
"""
from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import NotDivisible, OddOrNegativeExponent


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e] != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # terms must already be canonical: sorted keys, nonzero values
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    # -- inspection ----------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(iter(self._terms))

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(reversed(self._terms))

    def leading_coefficient(self) -> int:
        return self._terms[self.max_exponent()]

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -- ring operations -----------------------------------------------

    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    def __add__(self, other) -> "LaurentPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) == 1 and abs(self.leading_coefficient()) == 1:
                (e, c), = self._terms.items()
                return LaurentPoly({e * n: 1 if n % 2 == 0 else c})
            raise NotDivisible("only signed monomials are invertible")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, c: int) -> "LaurentPoly":
        """Multiply by ``q**c``."""
        return LaurentPoly._raw({e + c: v for e, v in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """Apply the involution ``q -> q^-1``."""
        return LaurentPoly._raw({-e: self._terms[e] for e in reversed(self._terms)})

    def is_bar_symmetric(self) -> bool:
        return self == self.bar()

    def exact_div(self, other) -> "LaurentPoly":
        """Return ``c`` with ``c * other == self``; raise :class:`NotDivisible` otherwise."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return ZERO
        rem = dict(self._terms)
        div_lo, div_hi = other.min_exponent(), other.max_exponent()
        lead = other._terms[div_hi]
        quot: dict[int, int] = {}
        lo = self.min_exponent()
        while rem:
            top = max(rem)
            if top - div_hi < lo - div_lo:
                break
            c, r = divmod(rem[top], lead)
            if r:
                raise NotDivisible(f"{self} is not divisible by {other}")
            shift = top - div_hi
            quot[shift] = c
            for e, v in other._terms.items():
                k = e + shift
                nv = rem.get(k, 0) - c * v
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        if rem:
            raise NotDivisible(f"{self} is not divisible by {other}")
        return LaurentPoly(quot)

    def __floordiv__(self, other) -> "LaurentPoly":
        return self.exact_div(other)

    # -- evaluation ----------------------------------------------------

    def __call__(self, x):
        """Evaluate at ``x`` (int, Fraction, float, ...)."""
        return sum(c * x ** e for e, c in self._terms.items())

    def at_one(self) -> int:
        return sum(self._terms.values())

    def eval_even_at(self, p: int) -> int:
        """Substitute ``q**2 = p``; every exponent must be even and nonnegative."""
        total = 0
        for e, c in self._terms.items():
            if e < 0 or e % 2:
                raise OddOrNegativeExponent(f"exponent {e} in {self}")
            total += c * p ** (e // 2)
        return total

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def has_even_exponents(self) -> bool:
        return all(e % 2 == 0 for e in self._terms)

    # -- text ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the canonical rendering, e.g. ``"q^-2 + 2 + q^2"`` or ``"-3q"``.

        ``*`` between coefficient and ``q`` is accepted, as are redundant
        outer parentheses.
        """
        s = text.strip()
        while s.startswith("(") and s.endswith(")"):
            s = s[1:-1].strip()
        s = s.replace(" ", "").replace("*", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return ZERO
        if s[0] not in "+-":
            s = "+" + s
        pos = 0
        acc: dict[int, int] = {}
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if not m:
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            sign, coeff, q, exp = m.groups()
            if not coeff and not q:
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            c = int(coeff) if coeff else 1
            e = (int(exp) if exp else 1) if q else 0
            acc[e] = acc.get(e, 0) + (c if sign == "+" else -c)
            pos = m.end()
        return cls(acc)


_TERM_RE = re.compile(r"([+-])(\d*)(q(?:\^\(?(-?\d+)\)?)?)?")

ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1)


@lru_cache(maxsize=None)
def quantum_int(m: int) -> LaurentPoly:
    """``[m] = q^(m-1) + q^(m-3) + ... + q^(1-m)``; ``[0] = 0``."""
    if m < 0:
        raise ValueError("quantum integers are defined for m >= 0")
    return LaurentPoly({m - 1 - 2 * k: 1 for k in range(m)})


@lru_cache(maxsize=None)
def quantum_factorial(m: int) -> LaurentPoly:
    if m < 0:
        raise ValueError("quantum factorials are defined for m >= 0")
    out = ONE
    for k in range(1, m + 1):
        out = out * quantum_int(k)
    return out


def gaussian_binomial(d: int, e: int) -> LaurentPoly:
    """Balanced Gaussian binomial ``[d]! / ([e]! [d-e]!)``."""
    if not 0 <= e <= d:
        raise ValueError(f"need 0 <= e <= d, got d={d}, e={e}")
    return quantum_factorial(d).exact_div(quantum_factorial(e) * quantum_factorial(d - e))


def eval_even_at(a: LaurentPoly, p: int) -> int:
    return a.eval_even_at(p)
