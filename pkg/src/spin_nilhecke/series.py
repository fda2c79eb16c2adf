"""
Truncated Laurent series in ``q`` with coefficients in ``Z[pi]/(pi^2 - 1)``.

Coefficients are keyed by ``(q_exponent, parity)``. A series knows every
coefficient with q-exponent at most ``precision`` (``math.inf`` for an exact
finite sum).

>>> s = q_integer(2, pi=True)
>>> print(s)
q^-1 + pi*q
>>> print((s * s).specialize())
q^-2 + 2 + q^2
"""

from __future__ import annotations

import math
from collections.abc import Mapping

__all__ = [
    "GradedRankSeries", "q_integer", "q_factorial", "q_double_factorial",
    "monomial", "geometric_power",
]


class GradedRankSeries:
    __slots__ = ("coeffs", "precision")

    def __init__(self, coeffs: Mapping | None = None, precision=math.inf):
        clean: dict[tuple[int, int], int] = {}
        for (e, p), c in (coeffs or {}).items():
            if e > precision:
                continue
            key = (int(e), int(p) % 2)
            clean[key] = clean.get(key, 0) + c
        self.coeffs = {k: v for k, v in clean.items() if v}
        self.precision = precision

    @classmethod
    def one(cls) -> "GradedRankSeries":
        return cls({(0, 0): 1})

    def valuation(self) -> int | None:
        return min((e for e, _ in self.coeffs), default=None)

    def coefficient(self, e: int) -> tuple[int, int]:
        """The pair ``(c0, c1)`` meaning ``c0 + c1*pi`` at ``q^e``."""
        return self.coeffs.get((e, 0), 0), self.coeffs.get((e, 1), 0)

    def truncate(self, precision) -> "GradedRankSeries":
        return GradedRankSeries(self.coeffs, min(precision, self.precision))

    def specialize(self) -> "GradedRankSeries":
        """Set ``pi = 1``."""
        out: dict = {}
        for (e, _), c in self.coeffs.items():
            out[(e, 0)] = out.get((e, 0), 0) + c
        return GradedRankSeries(out, self.precision)

    def __add__(self, other: "GradedRankSeries") -> "GradedRankSeries":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return GradedRankSeries(out, min(self.precision, other.precision))

    def __neg__(self):
        return GradedRankSeries({k: -c for k, c in self.coeffs.items()}, self.precision)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GradedRankSeries({k: c * other for k, c in self.coeffs.items()}, self.precision)
        va, vb = self.valuation(), other.valuation()
        if va is None or vb is None:
            return GradedRankSeries({}, min(self.precision, other.precision))
        prec = min(self.precision + vb, other.precision + va)
        out: dict = {}
        for (e1, p1), c1 in self.coeffs.items():
            for (e2, p2), c2 in other.coeffs.items():
                e = e1 + e2
                if e > prec:
                    continue
                k = (e, (p1 + p2) % 2)
                out[k] = out.get(k, 0) + c1 * c2
        return GradedRankSeries(out, prec)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = GradedRankSeries.one()
        for _ in range(k):
            result = result * self
        return result

    def inverse(self, precision: int | None = None) -> "GradedRankSeries":
        """
        Multiplicative inverse, known up to q-exponent `precision` (defaults to
        what the input precision allows, and must be given for exact input).
        """
        v = self.valuation()
        if v is None:
            raise ZeroDivisionError("inverse of the zero series")
        c0, c1 = self.coefficient(v)
        if (abs(c0), abs(c1)) == (1, 0):
            lead = (c0, 0)
        elif (abs(c0), abs(c1)) == (0, 1):
            lead = (c1, 1)  # (c*pi)^{-1} = c*pi since pi^2 = 1, c = +-1
        else:
            raise ValueError("leading coefficient is not a unit")
        if precision is None:
            if self.precision == math.inf:
                raise ValueError("precision required to invert an exact series")
            precision = self.precision - 2 * v
        else:
            precision = min(precision, self.precision - 2 * v)
        # g = u * q^v * (1 + h); invert (1 + h) by recursion on exponents
        sign, par = lead
        unit = {(e - v, (p + par) % 2): c * sign for (e, p), c in self.coeffs.items()}
        inv: dict = {(0, 0): 1}
        top = precision + v
        for e in range(1, top + 1):
            for p in (0, 1):
                acc = 0
                for (e1, p1), c1 in unit.items():
                    if e1 == 0 or e1 > e:
                        continue
                    acc += c1 * inv.get((e - e1, (p - p1) % 2), 0)
                if acc:
                    inv[(e, p)] = -acc
        out = {(e - v, (p + par) % 2): c * sign for (e, p), c in inv.items()}
        return GradedRankSeries(out, precision)

    def __truediv__(self, other: "GradedRankSeries") -> "GradedRankSeries":
        prec = self.precision
        if prec == math.inf:
            raise ValueError("divide a truncated series, or truncate the numerator first")
        vn = self.valuation() or 0
        return self * other.inverse(prec - vn)

    def agrees_with(self, other: "GradedRankSeries", upto: int | None = None) -> bool:
        """Coefficientwise equality on the commonly known range."""
        bound = min(self.precision, other.precision)
        if upto is not None:
            bound = min(bound, upto)
        keys = {k for k in self.coeffs if k[0] <= bound} | {k for k in other.coeffs if k[0] <= bound}
        return all(self.coeffs.get(k, 0) == other.coeffs.get(k, 0) for k in keys)

    def __eq__(self, other):
        if not isinstance(other, GradedRankSeries):
            return NotImplemented
        return self.coeffs == other.coeffs and self.precision == other.precision

    def to_json(self) -> dict:
        return {
            "precision": None if self.precision == math.inf else self.precision,
            "terms": [{"q": e, "pi": p, "coeff": c} for (e, p), c in sorted(self.coeffs.items())],
        }

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (e, p), c in sorted(self.coeffs.items()):
            sym = []
            if p:
                sym.append("pi")
            if e == 1:
                sym.append("q")
            elif e:
                sym.append(f"q^{e}")
            body = "*".join(sym)
            mag = abs(c)
            text = body if body and mag == 1 else (f"{mag}*{body}" if body else str(mag))
            if not parts:
                parts.append(("-" if c < 0 else "") + text)
            else:
                parts.append((" - " if c < 0 else " + ") + text)
        tail = "" if self.precision == math.inf else f" + O(q^{self.precision + 1})"
        return "".join(parts) + tail

    __repr__ = __str__


def monomial(e: int, parity: int = 0, coeff: int = 1) -> GradedRankSeries:
    return GradedRankSeries({(e, parity): coeff})


def q_integer(n: int, pi: bool = False) -> GradedRankSeries:
    """``[n]`` or ``[n]_pi = sum_{k<n} pi^k q^{2k-n+1}``."""
    return GradedRankSeries({(2 * k - n + 1, k % 2 if pi else 0): 1 for k in range(n)})


def q_factorial(n: int, pi: bool = False) -> GradedRankSeries:
    out = GradedRankSeries.one()
    for k in range(1, n + 1):
        out = out * q_integer(k, pi)
    return out


def q_double_factorial(m: int, pi: bool = False) -> GradedRankSeries:
    """``[m]!! = [m][m-2]...[2]`` for even m (``[0]!! = 1``)."""
    if m % 2:
        raise ValueError("double factorial is only used for even arguments")
    out = GradedRankSeries.one()
    for k in range(2, m + 1, 2):
        out = out * q_integer(k, pi)
    return out


def geometric_power(n: int, step: int, parity: int, precision: int) -> GradedRankSeries:
    """``(1 - pi^parity q^step)^(-n)`` up to q-exponent `precision`."""
    base = GradedRankSeries({(0, 0): 1, (step, parity): -1})
    return (base ** n).inverse(precision)
