"""
Exact polynomial arithmetic in the skew-polynomial ring and the ordinary
polynomial ring.

In the skew ring distinct variables anticommute, ``x_i x_j = -x_j x_i``, while
powers of one variable multiply normally. A monomial is stored as its exponent
vector in canonical order ``x_1^{r_1} ... x_n^{r_n}``; any reordering during
multiplication is absorbed into a sign.

>>> x1, x2 = SkewPolynomial.variable(2, 1), SkewPolynomial.variable(2, 2)
>>> print(x2 * x1)
-x1*x2
>>> print((x1 + x2) * (x1 - x2))
x1^2 - 2*x1*x2 - x2^2
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .kinds import Variant, WeylType, as_type, check_index

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]

__all__ = [
    "Exponent", "Scalar", "ScalarDomain", "DomainError",
    "mono_mul", "SkewPolynomial", "EvenPolynomial", "polynomial_class",
    "monomials_of_degree", "monomials_up_to", "reflection_images",
    "point_action", "parse_polynomial", "polynomial_from_json",
]


class DomainError(ArithmeticError):
    """A value does not lie in the requested scalar domain."""


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def _is_power_of_two(k: int) -> bool:
    return k > 0 and k & (k - 1) == 0


class ScalarDomain(str, Enum):
    """Coefficient domains: the integers, the dyadic rationals, the rationals."""

    INTEGER = "int"
    DYADIC = "dyadic"
    RATIONAL = "rational"

    @classmethod
    def parse(cls, value) -> "ScalarDomain":
        if isinstance(value, cls):
            return value
        aliases = {"integer": "int", "z": "int", "q": "rational", "rat": "rational"}
        value = str(value).lower()
        return cls(aliases.get(value, value))

    def contains(self, c) -> bool:
        c = _clean(c)
        if isinstance(c, int):
            return True
        if self is ScalarDomain.INTEGER:
            return False
        if self is ScalarDomain.DYADIC:
            return _is_power_of_two(c.denominator)
        return True

    def normalize(self, c) -> Scalar:
        c = _clean(c)
        if not self.contains(c):
            raise DomainError(f"{c} is not in the {self.value} domain")
        return c

    def divide(self, a, b) -> Scalar:
        """Exact quotient ``a / b`` inside the domain, else DomainError."""
        if b == 0:
            raise ZeroDivisionError("division by zero scalar")
        if isinstance(a, int) and isinstance(b, int) and a % b == 0:
            return a // b
        q = _clean(Fraction(a) / Fraction(b))
        if not self.contains(q):
            raise DomainError(f"domain cannot divide: {a}/{b} not in {self.value}")
        return q


def mono_mul(a: Exponent, b: Exponent) -> tuple[int, Exponent]:
    """
    Product of two skew monomials, returned as ``(sign, exponent)``.

    Merging ``x^b`` after ``x^a`` moves every letter of ``x_j^{b_j}`` past the
    letters of ``x_i^{a_i}`` with ``i > j``; each swap of distinct letters costs
    a sign, so ``sign = (-1)^{sum_{j<i} b_j a_i}``.

    >>> mono_mul((0, 1), (1, 0))
    (-1, (1, 1))
    >>> mono_mul((1, 0), (1, 0))
    (1, (2, 0))
    """
    odd = 0
    seen = 0
    for ai, bi in zip(a, b):
        odd ^= ai & seen & 1
        seen += bi
    return (-1 if odd else 1), tuple(x + y for x, y in zip(a, b))


def monomials_of_degree(n: int, d: int) -> list[Exponent]:
    """All exponent vectors of length n and total degree d, descending lex."""
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    return out


def monomials_up_to(n: int, max_degree: int) -> list[Exponent]:
    out = []
    for d in range(max_degree + 1):
        out.extend(monomials_of_degree(n, d))
    return out


class _Polynomial:
    """Sparse exact polynomial; subclasses decide the commutation rule."""

    __slots__ = ("rank", "_terms")
    skew = True
    variant = Variant.SPIN

    def __init__(self, rank: int, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != rank or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for rank {rank}")
            if isinstance(c, float):
                raise TypeError("floating point coefficients are not allowed")
            acc[exp] = acc.get(exp, 0) + c
        self.rank = rank
        self._terms = {e: _clean(c) for e, c in acc.items() if c != 0}

    @classmethod
    def _raw(cls, rank: int, terms: dict):
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._terms = terms
        return obj

    # constructors
    @classmethod
    def zero(cls, rank: int):
        return cls._raw(rank, {})

    @classmethod
    def one(cls, rank: int):
        return cls.constant(rank, 1)

    @classmethod
    def constant(cls, rank: int, c):
        c = _clean(c)
        return cls._raw(rank, {(0,) * rank: c} if c != 0 else {})

    @classmethod
    def monomial(cls, rank: int, exp: Exponent, coeff=1):
        return cls(rank, {tuple(exp): coeff})

    @classmethod
    def variable(cls, rank: int, i: int):
        """The variable x_i (1-based)."""
        if not 1 <= i <= rank:
            raise IndexError(f"variable x{i} out of range for rank {rank}")
        exp = [0] * rank
        exp[i - 1] = 1
        return cls._raw(rank, {tuple(exp): 1})

    # inspection
    def items(self) -> list[tuple[Exponent, Scalar]]:
        """Terms in descending lexicographic exponent order."""
        return sorted(self._terms.items(), reverse=True)

    def as_dict(self) -> dict:
        return dict(self._terms)

    def monomials(self) -> list[Exponent]:
        return sorted(self._terms, reverse=True)

    def coefficient(self, exp: Exponent) -> Scalar:
        return self._terms.get(tuple(exp), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_term(self) -> Scalar:
        return self._terms.get((0,) * self.rank, 0)

    def degree(self) -> int:
        """Largest total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def q_degree(self) -> int:
        if not self.is_homogeneous() or not self._terms:
            raise ValueError("q-degree needs a nonzero homogeneous polynomial")
        return 2 * self.degree()

    def parity(self) -> int:
        """Z/2 degree; only meaningful for the skew ring (0 in the even ring)."""
        if not self.skew:
            return 0
        ps = {sum(e) % 2 for e in self._terms}
        if len(ps) > 1:
            raise ValueError("polynomial is not parity-homogeneous")
        return ps.pop() if ps else 0

    def leading_term(self) -> tuple[Exponent, Scalar]:
        exp = max(self._terms)
        return exp, self._terms[exp]

    def coefficients_in(self, domain: ScalarDomain) -> bool:
        return all(domain.contains(c) for c in self._terms.values())

    # arithmetic
    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return type(self).constant(self.rank, other)
        self._check(other)
        return other

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _clean(v)
            else:
                out.pop(e, None)
        return type(self)._raw(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.rank, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _clean(c)
        if c == 0:
            return type(self).zero(self.rank)
        return type(self)._raw(self.rank, {e: _clean(v * c) for e, v in self._terms.items()})

    def _mono(self, a: Exponent, b: Exponent) -> tuple[int, Exponent]:
        if self.skew:
            return mono_mul(a, b)
        return 1, tuple(x + y for x, y in zip(a, b))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, _Polynomial):
            return NotImplemented
        self._check(other)
        out: dict = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                s, e = self._mono(a, b)
                out[e] = out.get(e, 0) + s * ca * cb
        return type(self)._raw(self.rank, {e: _clean(c) for e, c in out.items() if c != 0})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = type(self).one(self.rank)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divide_scalar(self, c, domain: ScalarDomain = ScalarDomain.RATIONAL):
        """Divide every coefficient by the scalar `c` inside `domain`."""
        return type(self)._raw(self.rank, {e: domain.divide(v, c) for e, v in self._terms.items()})

    def left_mul_variable(self, i: int, sign: int = 1):
        """``sign * x_i * self`` (1-based i), without building x_i."""
        unit = tuple(1 if j == i - 1 else 0 for j in range(self.rank))
        out = {}
        for e, c in self._terms.items():
            s, e2 = self._mono(unit, e)
            out[e2] = s * sign * c
        return type(self)._raw(self.rank, out)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(0,) * self.rank: other} if other != 0 else {})
        if not isinstance(other, _Polynomial):
            return NotImplemented
        return type(self) is type(other) and self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        return hash((type(self).__name__, self.rank, frozenset(self._terms.items())))

    # text and json
    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"{type(self).__name__}({self.rank}, {format_polynomial(self)!r})"

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "kind": "skew" if self.skew else "even",
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.items()],
        }


class SkewPolynomial(_Polynomial):
    """Element of the skew-polynomial ring over Z (or Z[1/2], Q)."""

    __slots__ = ()
    skew = True
    variant = Variant.SPIN


class EvenPolynomial(_Polynomial):
    """Element of the ordinary commutative polynomial ring."""

    __slots__ = ()
    skew = False
    variant = Variant.EVEN

    def exact_divide(self, divisor: "EvenPolynomial") -> "EvenPolynomial":
        """
        Quotient of exact division by `divisor` (lex leading-term division).

        Raises ``DivisionNotExact`` when the remainder is nonzero or a
        coefficient quotient leaves the integers for integral input.
        """
        from .demazure import DivisionNotExact

        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        g_exp, g_c = divisor.leading_term()
        g_terms = divisor._terms
        rem = dict(self._terms)
        quot: dict = {}
        while rem:
            lt = max(rem)
            lc = rem[lt]
            t = tuple(a - b for a, b in zip(lt, g_exp))
            if any(v < 0 for v in t):
                raise DivisionNotExact(f"division not exact: {self} by {divisor}")
            if isinstance(lc, int) and isinstance(g_c, int):
                if lc % g_c:
                    raise DivisionNotExact(f"division not exact over Z: {self} by {divisor}")
                c = lc // g_c
            else:
                c = _clean(Fraction(lc) / Fraction(g_c))
            quot[t] = c
            for e, gc in g_terms.items():
                e2 = tuple(a + b for a, b in zip(t, e))
                v = rem.get(e2, 0) - c * gc
                if v:
                    rem[e2] = _clean(v)
                else:
                    rem.pop(e2, None)
        return EvenPolynomial._raw(self.rank, quot)


def polynomial_class(variant) -> type:
    return SkewPolynomial if Variant(variant) is Variant.SPIN else EvenPolynomial


# ---------------------------------------------------------------------------
# text format

def _format_coeff(c) -> str:
    return str(c)


def format_polynomial(f: _Polynomial, var: str = "x") -> str:
    if f.is_zero():
        return "0"
    parts = []
    for exp, c in f.items():
        factors = []
        for i, r in enumerate(exp, start=1):
            if r == 1:
                factors.append(f"{var}{i}")
            elif r > 1:
                factors.append(f"{var}{i}^{r}")
        neg = c < 0
        mag = -c if neg else c
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(mag) + "*" + "*".join(factors)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z])(\d+)(?:\s*(?:\^|\*\*)\s*(\d+))?|([+\-*]))")


def parse_polynomial(text: str, rank: int | None = None, kind: str = "skew") -> _Polynomial:
    """
    Parse the human text format, e.g. ``"3*x1^2*x2 - x3"``.

    Factors inside a term are multiplied left to right, so for the skew ring
    ``"x2*x1"`` parses to ``-x1*x2``.

    >>> print(parse_polynomial("x2*x1 + 1/2*x1^2", rank=2))
    1/2*x1^2 - x1*x2
    """
    cls = SkewPolynomial if kind == "skew" else EvenPolynomial
    pos = 0
    text = text.strip()
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        tokens.append(m.groups())
        pos = m.end()
    if rank is None:
        rank = max((int(t[2]) for t in tokens if t[2]), default=0)
        rank = max(rank, 1)
    terms: list[tuple[int, Scalar, list[int]]] = []
    sign, coeff, factors, started, star = 1, None, [], False, False

    def flush():
        if started:
            terms.append((sign, 1 if coeff is None else coeff, factors))

    for num, letter, idx, power, op in tokens:
        if op in ("+", "-"):
            if star:
                raise ValueError(f"dangling '*' in {text!r}")
            if started:
                flush()
                sign, coeff, factors, started = 1, None, [], False
            if op == "-":
                sign = -sign
            continue
        if op == "*":
            if not started or star:
                raise ValueError(f"misplaced '*' in {text!r}")
            star = True
            continue
        star = False
        if num is not None:
            coeff = _clean(Fraction(num)) if coeff is None else coeff * _clean(Fraction(num))
        else:
            i = int(idx)
            if letter != "x":
                raise ValueError(f"unknown variable {letter}{idx}; use x1..x{rank}")
            if not 1 <= i <= rank:
                raise ValueError(f"variable index {i} out of range for rank {rank}")
            factors.extend([i] * (int(power) if power else 1))
        started = True
    if star or (tokens and tokens[-1][4] in ("+", "-")):
        raise ValueError(f"polynomial text ends with an operator: {text!r}")
    flush()
    if not terms:
        raise ValueError("empty polynomial text")
    total = cls.zero(rank)
    for s, c, fs in terms:
        p = cls.constant(rank, s * c)
        for i in fs:
            p = p * cls.variable(rank, i)
        total = total + p
    return total


def polynomial_from_json(data: Mapping) -> _Polynomial:
    """Inverse of ``to_json``; ``kind`` defaults to the skew ring."""
    cls = EvenPolynomial if data.get("kind", "skew") == "even" else SkewPolynomial
    rank = int(data["rank"])
    terms = [(tuple(t["exp"]), _clean(Fraction(str(t["coeff"])))) for t in data["terms"]]
    return cls(rank, terms)


# ---------------------------------------------------------------------------
# point actions of the simple reflections

@lru_cache(maxsize=None)
def reflection_images(variant: Variant, wtype: WeylType, index: int, n: int) -> tuple[tuple[int, int], ...]:
    """
    Images ``s(x_j) = sign * x_target`` for j = 1..n as ``(sign, target)``
    pairs, with 0-based targets.
    """
    variant, wtype = Variant(variant), as_type(wtype)
    check_index(wtype, n, index)
    spin = variant is Variant.SPIN
    other = -1 if spin else 1
    images = [(other, j) for j in range(n)]
    if index < n:
        i = index - 1
        images[i] = (other, i + 1)
        images[i + 1] = (other, i)
    elif wtype is WeylType.B:
        images[n - 1] = (-1, n - 1)
    else:  # type D special generator
        s = 1 if spin else -1
        images[n - 2] = (s, n - 1)
        images[n - 1] = (s, n - 2)
    return tuple(images)


@lru_cache(maxsize=None)
def _act_on_monomial(skew: bool, images: tuple, exp: Exponent) -> tuple[int, Exponent]:
    sign = 1
    out = [0] * len(exp)
    for (s, t), r in zip(images, exp):
        if r & 1 and s < 0:
            sign = -sign
        out[t] += r
    if skew:
        # reorder the letters x_{t_1}^{r_1} x_{t_2}^{r_2} ... into canonical order
        odd = 0
        for j in range(len(exp)):
            if exp[j] & 1:
                tj = images[j][1]
                for k in range(j + 1, len(exp)):
                    if exp[k] & 1 and images[k][1] < tj:
                        odd ^= 1
        if odd:
            sign = -sign
    return sign, tuple(out)


def point_action(f: _Polynomial, wtype, index: int) -> _Polynomial:
    """
    Apply the ring automorphism of the simple reflection `index` to `f`.

    The spin or even rule is taken from the ring of `f`.

    >>> x = SkewPolynomial.variable(2, 1)
    >>> print(point_action(x, "a", 1))
    -x2
    """
    images = reflection_images(f.variant, as_type(wtype), index, f.rank)
    out = {}
    for e, c in f._terms.items():
        s, e2 = _act_on_monomial(f.skew, images, e)
        out[e2] = s * c
    return type(f)._raw(f.rank, out)
