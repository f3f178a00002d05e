# --------------------------------------------------------------------------------------
# This code is part of graphck.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.
# --------------------------------------------------------------------------------------
"""Exact Gaussian-rational scalars."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


def _rational(part: str, text: str) -> Fraction:
    if not _RATIONAL.fullmatch(part):
        raise ValueError(f"Invalid scalar {text!r}, expected a+bi with rational a, b")
    return Fraction(part)


@dataclass(frozen=True)
class Scalar:
    r"""Gaussian rational :math:`a + bi` with :math:`a, b \in \mathbb{Q}`.

    Attributes:
        - re (Fraction): Real part.
        - im (Fraction): Imaginary part.

    """

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, value: Scalar | Fraction | int) -> Scalar:
        """Wrap an integer or fraction; scalars are returned unchanged."""
        if isinstance(value, Scalar):
            return value
        if isinstance(value, int | Fraction):
            return cls(Fraction(value))
        raise TypeError(f"Cannot convert {type(value).__name__} to an exact scalar")

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """Parse the CLI scalar syntax ``a+bi`` with rational ``a`` and ``b``.

        Accepted forms include ``2``, ``-1/2``, ``3i``, ``-i`` and ``1/2-3/4i``.

        Raises:
            ValueError: If the text is not a Gaussian rational.

        """
        compact = text.replace(" ", "")
        if not compact.endswith("i"):
            return cls(_rational(compact, text))
        body = compact[:-1]
        split = max(body.rfind("+"), body.rfind("-"))
        if split > 0:
            re_text, im_text = body[:split], body[split:]
        else:
            re_text, im_text = "", body
        re_part = _rational(re_text, text) if re_text else Fraction(0)
        if im_text in ("", "+", "-"):
            im_part = Fraction(-1 if im_text == "-" else 1)
        else:
            im_part = _rational(im_text, text)
        return cls(re_part, im_part)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __neg__(self) -> Scalar:
        return Scalar(-self.re, -self.im)

    def __add__(self, other) -> Scalar:
        if not isinstance(other, Scalar | int | Fraction):
            return NotImplemented
        other = Scalar.coerce(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> Scalar:
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other) -> Scalar:
        return Scalar.coerce(other) - self

    def __mul__(self, other) -> Scalar:
        if not isinstance(other, Scalar | int | Fraction):
            return NotImplemented
        other = Scalar.coerce(other)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conj(self) -> Scalar:
        """Complex conjugate."""
        return Scalar(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus :math:`|a|^2`, an exact rational."""
        return self.re * self.re + self.im * self.im

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))


ZERO = Scalar()
ONE = Scalar(Fraction(1))
