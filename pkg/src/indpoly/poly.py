"""Exact integer polynomials and coefficient-shape analysis.

Coefficients are plain Python ints, so all arithmetic is arbitrary
precision and never overflows.  Polynomials are immutable values and can
be shared freely between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple


class IntPoly:
    """Dense integer polynomial; ``coeffs[k]`` is the coefficient of x^k.

    Trailing zeros are trimmed, so the zero polynomial stores an empty
    coefficient tuple (its degree is reported as -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"integer coefficient required, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[int, ...] = tuple(cs)

    # -- basic protocol ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return self.render()

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPoly([c * other for c in self.coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "IntPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a natural number")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("shift must be a natural number")
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __call__(self, value: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * value + c
        return out

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        """Canonical text form, e.g. ``1 + 4*x + 3*x^2 + 1*x^3``.

        Zero terms are omitted; the zero polynomial renders as ``0``.
        """
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = f"{mag}*x"
            else:
                body = f"{mag}*x^{k}"
            parts.append((c < 0, body))
        if not parts:
            return "0"
        neg, body = parts[0]
        text = ("-" if neg else "") + body
        for neg, body in parts[1:]:
            text += (" - " if neg else " + ") + body
        return text


ZERO = IntPoly()
ONE = IntPoly((1,))
X = IntPoly((0, 1))
ONE_PLUS_X = IntPoly((1, 1))


@dataclass(frozen=True)
class UnimodalityReport:
    """Shape verdict for a nonnegative coefficient sequence.

    ``modes`` is the closed index interval of maximal coefficients when the
    sequence is unimodal, and ``violation`` is a witness triple (i, j, k)
    with ``a_i > a_j < a_k`` otherwise.
    """

    is_unimodal: bool
    modes: Optional[Tuple[int, int]]
    unique_mode: bool
    violation: Optional[Tuple[int, int, int]]


def unimodality(p: IntPoly) -> UnimodalityReport:
    """Classify a polynomial's coefficient sequence as unimodal or not.

    The sequence must be nonnegative and nonempty; the zero polynomial and
    negative coefficients are rejected.
    """
    cs = p.coeffs
    if not cs:
        raise ValueError("unimodality is undefined for the zero polynomial")
    for i, c in enumerate(cs):
        if c < 0:
            raise ValueError(f"negative coefficient {c} at index {i}")
    falling = False
    for t in range(len(cs) - 1):
        if cs[t + 1] < cs[t]:
            falling = True
        elif falling and cs[t + 1] > cs[t]:
            j, k = t, t + 1
            i = j - 1
            while cs[i] <= cs[j]:
                i -= 1
            return UnimodalityReport(False, None, False, (i, j, k))
    peak = max(cs)
    lo = cs.index(peak)
    hi = len(cs) - 1 - cs[::-1].index(peak)
    return UnimodalityReport(True, (lo, hi), lo == hi, None)


def fibonacci_poly(n: int) -> IntPoly:
    """F_0 = F_1 = 1 and F_n = F_{n-1} + x*F_{n-2}."""
    if n < 0:
        raise ValueError("index must be a natural number")
    prev, cur = ONE, ONE
    for _ in range(n):
        prev, cur = cur, cur + X * prev
    return prev


def degree_one_product_mode(p: IntPoly, b0: int, b1: int) -> int:
    """Predict a mode of ``p * (b0 + b1*x)`` from the mode of unimodal ``p``.

    With k the (upper) mode index of p and c_i the product coefficients,
    the product peaks at k when ``c_k > c_{k+1}`` and at k+1 otherwise
    (ties go to k+1).  The returned index always lies in the product's
    argmax interval.
    """
    if b0 < 0 or b1 < 0 or (b0 == 0 and b1 == 0):
        raise ValueError("factor coefficients must be nonnegative, not both zero")
    report = unimodality(p)
    if not report.is_unimodal:
        raise ValueError("polynomial is not unimodal")
    k = report.modes[1]
    ck = p[k] * b0 + (p[k - 1] if k > 0 else 0) * b1
    ck1 = p[k + 1] * b0 + p[k] * b1
    return k if ck > ck1 else k + 1


def binomial_fibonacci_form(n: int) -> IntPoly:
    """Closed form of F_n: sum over j of C(n - j, j) x^j."""
    if n < 0:
        raise ValueError("index must be a natural number")
    return IntPoly([math.comb(n - j, j) for j in range(n // 2 + 1)])
