"""
Rings of symmetric polynomials cut out as common kernels of Demazure
operators: the spin rings of types B and D inside the skew-polynomial ring,
and the ordinary invariant rings of types A, B and D.

>>> e1 = elementary("spin", "b", 2, 1)
>>> print(e1.polynomial)
x1^2 + x2^2
>>> express_in_elementary(e1.polynomial * e1.polynomial, "spin", "b", 2)
{(2, 0): 1}
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .demazure import apply_word
from .kinds import Variant, WeylType, as_type, as_variant, check_rank, generator_indices
from .linalg import nullspace, rank, rref
from .series import GradedRankSeries, geometric_power, q_double_factorial, q_factorial, q_integer
from .skewpoly import (
    EvenPolynomial, SkewPolynomial, _Polynomial, monomials_of_degree, point_action,
    polynomial_class,
)

__all__ = [
    "LambdaElement", "Membership", "NotExpressible", "elementary", "generators",
    "generator_degrees", "in_lambda", "express_in_elementary", "expand",
    "hilbert_series", "lambda_closed_form", "kk_identity_check",
    "invariant_ring_check", "kernel_correspondence_check", "epsilon_monomials",
]


class NotExpressible(ValueError):
    """The polynomial is not a polynomial in the elementary generators."""


def _check_supported(variant: Variant, wtype: WeylType) -> None:
    if variant is Variant.SPIN and wtype is WeylType.A:
        raise ValueError("elementary generators are provided for spin types B and D only")


@lru_cache(maxsize=None)
def _generator_polys(variant: Variant, wtype: WeylType, n: int) -> tuple:
    _check_supported(variant, wtype)
    check_rank(wtype, n)
    cls = polynomial_class(variant)
    out = []
    for k in range(1, n + 1):
        if wtype is WeylType.D and k == n:
            out.append(cls.monomial(n, (1,) * n))
            continue
        power = 1 if wtype is WeylType.A else 2
        terms = {}
        for idx in combinations(range(n), k):
            terms[tuple(power if j in idx else 0 for j in range(n))] = 1
        out.append(cls(n, terms))
    return tuple(out)


def generators(variant, wtype, n: int) -> tuple[_Polynomial, ...]:
    """The elementary generators eps_1..eps_n as polynomials."""
    return _generator_polys(as_variant(variant), as_type(wtype), n)


def generator_degrees(variant, wtype, n: int) -> list[tuple[int, int]]:
    """``(q_degree, parity)`` of each generator."""
    variant, wtype = as_variant(variant), as_type(wtype)
    out = []
    for g in generators(variant, wtype, n):
        d = g.degree()
        out.append((2 * d, d % 2 if variant is Variant.SPIN else 0))
    return out


@dataclass
class Membership:
    member: bool
    certificate: dict[int, _Polynomial]

    def __bool__(self):
        return self.member

    def to_json(self) -> dict:
        return {"member": self.member, "images": {f"d{i}": str(p) for i, p in self.certificate.items()}}


def in_lambda(variant, wtype, n: int, f: _Polynomial) -> Membership:
    """Whether every Demazure operator of the given kind annihilates `f`."""
    variant, wtype = as_variant(variant), as_type(wtype)
    if f.rank != n:
        raise ValueError(f"rank mismatch: {f.rank} vs {n}")
    cert = {i: apply_word(variant, wtype, (i,), f) for i in generator_indices(wtype, n)}
    return Membership(all(p.is_zero() for p in cert.values()), cert)


@dataclass
class LambdaElement:
    """A symmetric polynomial, optionally with its expression in generators."""

    variant: Variant
    wtype: WeylType
    rank: int
    polynomial: _Polynomial
    expression: dict | None = None
    certificate: Membership | None = field(default=None, repr=False)

    @classmethod
    def from_polynomial(cls, variant, wtype, n: int, f: _Polynomial, express: bool = False):
        variant, wtype = as_variant(variant), as_type(wtype)
        cert = in_lambda(variant, wtype, n, f)
        if not cert:
            raise ValueError(f"{f} is not symmetric for {variant.value} type {wtype.name}{n}")
        expr = express_in_elementary(f, variant, wtype, n) if express else None
        return cls(variant, wtype, n, f, expr, cert)

    def expand(self) -> _Polynomial:
        if self.expression is None:
            return self.polynomial
        return expand(self.expression, self.variant, self.wtype, self.rank)

    def is_zero(self) -> bool:
        return self.polynomial.is_zero()

    def __str__(self):
        return str(self.polynomial)

    def to_json(self) -> dict:
        out = {"polynomial": str(self.polynomial)}
        if self.expression is not None:
            out["generators"] = [{"exp": list(a), "coeff": str(c)} for a, c in sorted(self.expression.items())]
        return out


def elementary(variant, wtype, n: int, k: int) -> LambdaElement:
    variant, wtype = as_variant(variant), as_type(wtype)
    if not 1 <= k <= n:
        raise ValueError(f"generator index {k} out of range 1..{n}")
    f = generators(variant, wtype, n)[k - 1]
    cert = in_lambda(variant, wtype, n, f)
    if not cert:
        raise AssertionError(f"generator {k} failed kernel membership")
    return LambdaElement(variant, wtype, n, f, {tuple(int(j == k - 1) for j in range(n)): 1}, cert)


@lru_cache(maxsize=None)
def _power(variant: Variant, wtype: WeylType, n: int, k: int, m: int) -> _Polynomial:
    return generators(variant, wtype, n)[k] ** m


def expand(expression: dict, variant, wtype, n: int) -> _Polynomial:
    """Evaluate a polynomial in the generators (keys are exponent tuples)."""
    variant, wtype = as_variant(variant), as_type(wtype)
    cls = polynomial_class(variant)
    total = cls.zero(n)
    for a, c in expression.items():
        term = cls.constant(n, c)
        for k, m in enumerate(a):
            if m:
                term = term * _power(variant, wtype, n, k, m)
        total = total + term
    return total


def _leading_exponents(variant: Variant, wtype: WeylType, n: int) -> list[tuple]:
    return [g.leading_term()[0] for g in generators(variant, wtype, n)]


def express_in_elementary(f: _Polynomial, variant, wtype, n: int) -> dict:
    """
    Rewrite `f` as a polynomial in the generators by repeatedly cancelling the
    lexicographically leading term. Raises NotExpressible when some leading
    exponent is not the leading exponent of a generator monomial.
    """
    variant, wtype = as_variant(variant), as_type(wtype)
    _check_supported(variant, wtype)
    lead = _leading_exponents(variant, wtype, n)
    # generator k is the last one whose leading exponent reaches position k
    result: dict = {}
    residual = f
    while not residual.is_zero():
        r, c = residual.leading_term()
        a = [0] * n
        for i in range(n - 1, -1, -1):
            rest = r[i] - sum(a[k] * lead[k][i] for k in range(i + 1, n))
            pivot = lead[i][i]
            if rest < 0 or rest % pivot:
                raise NotExpressible(f"leading exponent {r} is not reachable")
            a[i] = rest // pivot
        if tuple(sum(a[k] * lead[k][i] for k in range(n)) for i in range(n)) != r:
            raise NotExpressible(f"leading exponent {r} is not reachable")
        a = tuple(a)
        mono = expand({a: 1}, variant, wtype, n)
        lc = mono.coefficient(r)
        coeff = c * lc  # lc is +-1
        result[a] = result.get(a, 0) + coeff
        residual = residual - mono.scale(coeff)
    return {a: c for a, c in result.items() if c}


def epsilon_monomials(variant, wtype, n: int, q_degree: int) -> list[tuple]:
    """Exponent vectors of generator monomials of the given q-degree."""
    degs = [d for d, _ in generator_degrees(variant, wtype, n)]
    out = []

    def rec(k, left, acc):
        if k == n:
            if left == 0:
                out.append(tuple(acc))
            return
        for m in range(left // degs[k] + 1):
            rec(k + 1, left - m * degs[k], acc + [m])

    if q_degree >= 0:
        rec(0, q_degree, [])
    return sorted(out)


def hilbert_series(variant, wtype, n: int, truncation: int) -> GradedRankSeries:
    """Graded rank of the symmetric ring from the free generator basis."""
    out = GradedRankSeries.one().truncate(truncation)
    for d, p in generator_degrees(variant, wtype, n):
        out = out * geometric_power(1, d, p, truncation)
    return out.truncate(truncation)


def lambda_closed_form(variant, wtype, n: int, truncation: int) -> GradedRankSeries:
    """Closed product formula for the graded rank (pi specialised to 1)."""
    variant, wtype = as_variant(variant), as_type(wtype)
    _check_supported(variant, wtype)
    if wtype is WeylType.B:
        shift, denom = n * n, q_double_factorial(2 * n)
    elif wtype is WeylType.D:
        shift, denom = n * (n - 1), q_integer(n) * q_double_factorial(2 * n - 2)
    else:
        shift, denom = n * (n - 1) // 2, q_factorial(n)
    # q^{-shift} / ((1-q^2)^n * denom); the denominator has valuation -shift
    head = GradedRankSeries({(-shift, 0): 1})
    full = denom * GradedRankSeries({(0, 0): 1, (2, 0): -1}) ** n
    return (head * full.inverse(truncation + shift)).truncate(truncation)


@dataclass
class KKResult:
    k: int
    passed: bool
    lhs: str
    rhs: str


def kk_identity_check(n: int) -> list[KKResult]:
    """
    Generators in the variables x_2..x_n versus the alternating expansion
    ``sum_j (-1)^j x_1^{2j} eps_{k-j}`` for k = 0..n.
    """
    if n < 2:
        raise ValueError("the shifted-variable identity needs n >= 2")
    cls = SkewPolynomial
    full = [cls.one(n)] + list(generators("spin", "b", n))
    shifted = [cls.one(n)]
    for k in range(1, n + 1):
        terms = {}
        for idx in combinations(range(1, n), k):
            terms[tuple(2 if j in idx else 0 for j in range(n))] = 1
        shifted.append(cls(n, terms))
    x1sq = cls.monomial(n, (2,) + (0,) * (n - 1))
    out = []
    for k in range(n + 1):
        rhs = cls.zero(n)
        for j in range(k + 1):
            rhs = rhs + (x1sq ** j * full[k - j]).scale((-1) ** j)
        out.append(KKResult(k, rhs == shifted[k], str(shifted[k]), str(rhs)))
    return out


# ---------------------------------------------------------------------------
# linear algebra checks on homogeneous slices

def _coordinate_matrix(polys, basis) -> list[list]:
    index = {e: i for i, e in enumerate(basis)}
    mat = [[0] * len(polys) for _ in basis]
    for j, p in enumerate(polys):
        for e, c in p.as_dict().items():
            mat[index[e]][j] = c
    return mat


def _kernel_basis(maps, basis, cls, n) -> list:
    """Nullspace of the stacked linear maps on span(basis)."""
    images = []
    for e in basis:
        f = cls.monomial(n, e)
        images.append([m(f) for m in maps])
    rows = []
    for k in range(len(maps)):
        outs = sorted({e for img in images for e in img[k].as_dict()})
        rows.extend(_coordinate_matrix([img[k] for img in images], outs))
    return nullspace(rows, len(basis))


def _same_span(a: list, b: list) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    return rref(a)[0] == rref(b)[0]


@dataclass
class SliceResult:
    degree: int
    kernel_dim: int
    invariant_dim: int
    generator_dim: int
    passed: bool


def invariant_ring_check(wtype, n: int, max_degree: int = 6) -> list[SliceResult]:
    """
    Per degree: the common kernel of the even operators equals the group
    invariants and is spanned by generator monomials.
    """
    wtype = as_type(wtype)
    cls = EvenPolynomial
    gens = list(generator_indices(wtype, n))
    results = []
    for d in range(max_degree + 1):
        basis = monomials_of_degree(n, d)
        kernel = _kernel_basis([lambda f, i=i: apply_word("even", wtype, (i,), f) for i in gens], basis, cls, n)
        fixed = _kernel_basis(
            [lambda f, i=i: point_action(f, WeylType.A if i < n else wtype, i) - f for i in gens], basis, cls, n)
        monos = epsilon_monomials("even", wtype, n, 2 * d)
        polys = [expand({a: 1}, "even", wtype, n) for a in monos]
        span = [list(col) for col in zip(*_coordinate_matrix(polys, basis))] if polys else []
        gen_rank = rank(span) if span else 0
        ok = _same_span(kernel, fixed) and gen_rank == len(monos) == len(kernel)
        if ok and span:
            ok = rank(kernel + span) == len(kernel)
        results.append(SliceResult(d, len(kernel), len(fixed), gen_rank, ok))
    return results


def kernel_correspondence_check(n: int, max_degree: int = 8) -> list[SliceResult]:
    """
    For f in squared variables of y-degree d: f(x^2) is killed by all spin
    type A operators iff f(x^2) is killed by all even type A operators.
    Compared as subspaces of the y-monomial space, degree by degree.
    """
    gens = list(range(1, n))
    results = []
    for d in range(max_degree + 1):
        basis = monomials_of_degree(n, d)
        doubled = [tuple(2 * r for r in e) for e in basis]
        kernels = []
        for variant, cls in (("spin", SkewPolynomial), ("even", EvenPolynomial)):
            maps = [lambda f, i=i, v=variant: apply_word(v, "a", (i,), f) for i in gens]
            kernels.append(_kernel_basis(maps, doubled, cls, n))
        ok = _same_span(*kernels)
        results.append(SliceResult(d, len(kernels[0]), len(kernels[1]), 0, ok))
    return results


def lambda_degree_count(variant, wtype, n: int, q_degree: int) -> int:
    return len(epsilon_monomials(variant, wtype, n, q_degree))
