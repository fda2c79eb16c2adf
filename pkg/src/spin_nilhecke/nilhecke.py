"""
NilHecke algebras as concrete operator algebras on their polynomial
representation.

An element is kept in PBW normal form ``sum_w P_w d_w`` with ``P_w`` a
polynomial acting by left multiplication and ``d_w`` the Demazure operator of
the canonical reduced word of ``w``. Products are computed by composing the
operators and reading the normal form back off the Schubert polynomials, which
is valid because the polynomial representation is faithful.

>>> d = generator_element("spin", "b", 1, "d", 1)
>>> x = generator_element("spin", "b", 1, "x", 1)
>>> print(multiply(d, x) + multiply(x, d))
1
"""

from __future__ import annotations

import math
import re
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .demazure import apply_word
from .kinds import Variant, WeylType, as_type, as_variant, check_index, check_rank, generator_indices
from .linalg import SparseEchelon, nullspace
from .schubert import _kappa, _schubert, schubert_decompose
from .series import GradedRankSeries, monomial as series_monomial, q_double_factorial, q_factorial, q_integer
from .skewpoly import (
    ScalarDomain, _Polynomial, monomials_of_degree, monomials_up_to, polynomial_class,
)
from .symfun import epsilon_monomials, generators as lambda_generators, hilbert_series, in_lambda
from .weyl import (
    SignedPermutation, enumerate_group, generator, identity, length, longest_element, reduced_word,
)

__all__ = [
    "NilHeckeElement", "PBWResidualError", "unit_element", "generator_element",
    "apply_element", "pbw_decompose", "multiply", "MatrixOverLambda", "to_matrix",
    "matrix_unit", "solve_preimage", "solve_preimage_dense", "Unsolvable",
    "graded_rank", "closed_form_rank", "center_check", "CenterReport",
    "pbw_basis", "pbw_rank_check", "parse_expression", "random_element",
]


class PBWResidualError(ArithmeticError):
    """The operator is not an algebra element at the degrees checked."""


def _ambient(variant, wtype, n):
    variant, wtype = as_variant(variant), as_type(wtype)
    check_rank(wtype, n)
    return variant, wtype


class NilHeckeElement:
    """``sum_w P_w d_w`` with left polynomial coefficients."""

    __slots__ = ("variant", "wtype", "rank", "_terms")

    def __init__(self, variant, wtype, n: int, terms: dict | None = None):
        self.variant, self.wtype = _ambient(variant, wtype, n)
        self.rank = n
        self._terms = {w: p for w, p in (terms or {}).items() if not p.is_zero()}

    # views
    def coefficients(self) -> dict[SignedPermutation, _Polynomial]:
        return dict(self._terms)

    def terms(self) -> dict[tuple[SignedPermutation, tuple], object]:
        """The ``(w, r) -> scalar`` view of the PBW expansion."""
        out = {}
        for w, p in self._terms.items():
            for r, c in p.as_dict().items():
                out[(w, r)] = c
        return out

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {2 * sum(r) - 2 * length(w) for (w, r) in self.terms()}

    def q_degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    def parity(self) -> int:
        ps = {(sum(r) + length(w)) % 2 for (w, r) in self.terms()}
        if len(ps) > 1:
            raise ValueError("element is not parity-homogeneous")
        return ps.pop() if ps else 0

    def coefficients_in(self, domain) -> bool:
        domain = ScalarDomain.parse(domain)
        return all(p.coefficients_in(domain) for p in self._terms.values())

    # arithmetic
    def _check(self, other: "NilHeckeElement"):
        if (self.variant, self.wtype, self.rank) != (other.variant, other.wtype, other.rank):
            raise ValueError("elements live in different algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for w, p in other._terms.items():
            out[w] = out[w] + p if w in out else p
        return NilHeckeElement(self.variant, self.wtype, self.rank, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return NilHeckeElement(self.variant, self.wtype, self.rank, {w: p.scale(c) for w, p in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, NilHeckeElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, NilHeckeElement):
            return NotImplemented
        return (self.variant, self.wtype, self.rank) == (other.variant, other.wtype, other.rank) \
            and self._terms == other._terms

    def __hash__(self):
        return hash((self.variant, self.wtype, self.rank, frozenset(self._terms.items())))

    def __call__(self, f: _Polynomial) -> _Polynomial:
        return apply_element(self, f)

    def _sorted(self):
        order = {w: i for i, w in enumerate(enumerate_group(self.wtype, self.rank))}
        return sorted(self._terms.items(), key=lambda kv: order[kv[0]])

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w, p in self._sorted():
            word = reduced_word(w)
            op = "*".join(f"d{i}" for i in word)
            if not op:
                parts.append(str(p) if len(p) == 1 else f"({p})")
            elif p.is_constant():
                c = p.constant_term()
                parts.append(op if c == 1 else ("-" + op if c == -1 else f"{c}*{op}"))
            elif len(p) == 1:
                parts.append(f"{p}*{op}")
            else:
                parts.append(f"({p})*{op}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"NilHeckeElement({self.variant.value}, {self.wtype.name}{self.rank}: {self})"

    def to_json(self) -> dict:
        terms = []
        for w, p in self._sorted():
            for r, c in p.items():
                terms.append({"word": list(reduced_word(w)), "window": list(w.window),
                              "exp": list(r), "coeff": str(c)})
        return {"variant": self.variant.value, "type": self.wtype.value, "rank": self.rank, "terms": terms}


def unit_element(variant, wtype, n: int) -> NilHeckeElement:
    variant, wtype = _ambient(variant, wtype, n)
    return NilHeckeElement(variant, wtype, n, {identity(wtype, n): polynomial_class(variant).one(n)})


def generator_element(variant, wtype, n: int, kind: str, i: int) -> NilHeckeElement:
    """``x_i`` (kind "x") or ``d_i`` (kind "d") as an algebra element."""
    variant, wtype = _ambient(variant, wtype, n)
    cls = polynomial_class(variant)
    if kind == "x":
        return NilHeckeElement(variant, wtype, n, {identity(wtype, n): cls.variable(n, i)})
    check_index(wtype, n, i)
    return NilHeckeElement(variant, wtype, n, {generator(wtype, n, i): cls.one(n)})


def apply_element(a: NilHeckeElement, f: _Polynomial) -> _Polynomial:
    """``sum_w P_w * d_w(f)``."""
    if f.variant is not a.variant or f.rank != a.rank:
        raise TypeError("polynomial does not match the algebra")
    total = type(f).zero(f.rank)
    for w, p in a._terms.items():
        image = apply_word(a.variant, a.wtype, reduced_word(w), f)
        if image:
            total = total + p * image
    return total


# ---------------------------------------------------------------------------
# PBW extraction

@lru_cache(maxsize=None)
def _d_on_schubert(variant: Variant, wtype: WeylType, n: int, u: SignedPermutation,
                   w: SignedPermutation) -> _Polynomial:
    """``d_u(s_w)``, cached; zero unless l(u) < l(w) or u = w."""
    return apply_word(variant, wtype, reduced_word(u), _schubert(variant, wtype, n, w))


def _apply_to_schubert(a: NilHeckeElement, w: SignedPermutation) -> _Polynomial:
    total = polynomial_class(a.variant).zero(a.rank)
    lw = length(w)
    for u, p in a._terms.items():
        if length(u) < lw or u == w:
            img = _d_on_schubert(a.variant, a.wtype, a.rank, u, w)
            if img:
                total = total + p * img
    return total


def _peel(variant: Variant, wtype: WeylType, n: int, values: Callable, domain: ScalarDomain) -> dict:
    """Left coefficients from the values on Schubert polynomials."""
    found: dict[SignedPermutation, _Polynomial] = {}
    for w in enumerate_group(wtype, n):
        target = values(w)
        lw = length(w)
        for u, p in found.items():
            if length(u) < lw:
                img = _d_on_schubert(variant, wtype, n, u, w)
                if img:
                    target = target - p * img
        if target:
            found[w] = target.divide_scalar(_kappa(variant, wtype, n, w), domain)
    return found


def verification_degree(wtype, n: int, q_degree: int | None) -> int:
    d = 0 if q_degree is None else max(0, q_degree // 2)
    return d + length(longest_element(wtype, n)) + 2


def pbw_decompose(T: Callable[[_Polynomial], _Polynomial], variant, wtype, n: int, domain="rational",
                  q_degree: int | None = None, verify: bool = True,
                  verify_degree: int | None = None) -> NilHeckeElement:
    """
    PBW normal form of the operator `T`, assumed to lie in the algebra.

    Coefficients are read off on Schubert polynomials by increasing length.
    With `verify`, the result is compared with `T` on every monomial up to
    ``q_degree/2 + l(w0) + 2`` and PBWResidualError is raised on mismatch.
    """
    variant, wtype = _ambient(variant, wtype, n)
    domain = ScalarDomain.parse(domain)
    terms = _peel(variant, wtype, n, lambda w: T(_schubert(variant, wtype, n, w)), domain)
    a = NilHeckeElement(variant, wtype, n, terms)
    if verify:
        if q_degree is None and not a.is_zero():
            q_degree = max(a.degrees())
        bound = verify_degree if verify_degree is not None else verification_degree(wtype, n, q_degree)
        cls = polynomial_class(variant)
        for e in monomials_up_to(n, bound):
            f = cls.monomial(n, e)
            if T(f) != apply_element(a, f):
                raise PBWResidualError(f"residual nonzero on x^{list(e)}")
    return a


def multiply(a: NilHeckeElement, b: NilHeckeElement, domain="rational") -> NilHeckeElement:
    """PBW normal form of the composite operator ``a b``."""
    a._check(b)
    domain = ScalarDomain.parse(domain)

    def values(w):
        return apply_element(a, _apply_to_schubert(b, w))

    return NilHeckeElement(a.variant, a.wtype, a.rank, _peel(a.variant, a.wtype, a.rank, values, domain))


# ---------------------------------------------------------------------------
# matrices over the symmetric ring

@dataclass
class MatrixOverLambda:
    """
    Entry ``(v, w)`` is the right coefficient of ``s_v`` in ``T(s_w)``.
    Rows and columns follow the canonical element order.
    """

    variant: Variant
    wtype: WeylType
    rank: int
    entries: dict = field(default_factory=dict)

    @property
    def order(self) -> tuple[SignedPermutation, ...]:
        return enumerate_group(self.wtype, self.rank)

    def __getitem__(self, key) -> _Polynomial:
        return self.entries.get(key, polynomial_class(self.variant).zero(self.rank))

    def nonzero(self) -> dict:
        return {k: v for k, v in self.entries.items() if not v.is_zero()}

    def __matmul__(self, other: "MatrixOverLambda") -> "MatrixOverLambda":
        out: dict = {}
        left: dict = {}
        for (v, u), p in self.nonzero().items():
            left.setdefault(u, []).append((v, p))
        for (u, w), q in other.nonzero().items():
            for v, p in left.get(u, ()):
                out[(v, w)] = out[(v, w)] + p * q if (v, w) in out else p * q
        return MatrixOverLambda(self.variant, self.wtype, self.rank, {k: v for k, v in out.items() if v})

    def __eq__(self, other):
        if not isinstance(other, MatrixOverLambda):
            return NotImplemented
        return self.nonzero() == other.nonzero()

    def __add__(self, other):
        out = dict(self.nonzero())
        for k, q in other.nonzero().items():
            out[k] = out[k] + q if k in out else q
        return MatrixOverLambda(self.variant, self.wtype, self.rank, {k: v for k, v in out.items() if v})

    def rows(self) -> list[list[str]]:
        return [[str(self[(v, w)]) for w in self.order] for v in self.order]

    def to_json(self) -> dict:
        return {
            "variant": self.variant.value, "type": self.wtype.value, "rank": self.rank,
            "order": [list(w.window) for w in self.order], "rows": self.rows(),
        }

    def __str__(self):
        rows = self.rows()
        width = max(len(s) for r in rows for s in r)
        return "\n".join("[" + "  ".join(s.rjust(width) for s in r) + "]" for r in rows)


def to_matrix(a: NilHeckeElement, domain=None) -> MatrixOverLambda:
    """Columns are the Schubert decompositions of ``a(s_w)``."""
    if domain is None:
        domain = ScalarDomain.INTEGER if (a.wtype is WeylType.B and a.variant is Variant.SPIN) \
            else ScalarDomain.RATIONAL
    entries = {}
    for w in enumerate_group(a.wtype, a.rank):
        image = _apply_to_schubert(a, w)
        if image.is_zero():
            continue
        col = schubert_decompose(a.variant, a.wtype, a.rank, image, domain, certify=False)
        for v, c in col.items():
            if not c.polynomial.is_zero():
                entries[(v, w)] = c.polynomial
    return MatrixOverLambda(a.variant, a.wtype, a.rank, entries)


def matrix_unit(variant, wtype, n: int, v: SignedPermutation, w: SignedPermutation, coeff=None) -> MatrixOverLambda:
    variant, wtype = _ambient(variant, wtype, n)
    c = polynomial_class(variant).one(n) if coeff is None else coeff
    return MatrixOverLambda(variant, wtype, n, {(v, w): c})


@dataclass
class Unsolvable:
    reason: str

    def __bool__(self):
        return False


def _matrix_values(M: MatrixOverLambda):
    cols: dict = {}
    for (v, w), p in M.nonzero().items():
        cols.setdefault(w, []).append((v, p))
    cls = polynomial_class(M.variant)

    def values(w):
        total = cls.zero(M.rank)
        for v, p in cols.get(w, ()):
            total = total + _schubert(M.variant, M.wtype, M.rank, v) * p
        return total

    return values


def solve_preimage(M: MatrixOverLambda, domain="rational") -> NilHeckeElement | Unsolvable:
    """
    The algebra element whose matrix is `M`, or Unsolvable.

    The rational preimage is unique when it exists; it is found by peeling on
    Schubert polynomials, then checked against `M` on every column and for
    membership of its coefficients in `domain`.
    """
    domain = ScalarDomain.parse(domain)
    values = _matrix_values(M)
    terms = _peel(M.variant, M.wtype, M.rank, values, ScalarDomain.RATIONAL)
    a = NilHeckeElement(M.variant, M.wtype, M.rank, terms)
    for w in enumerate_group(M.wtype, M.rank):
        if _apply_to_schubert(a, w) != values(w):
            return Unsolvable(f"no rational preimage: column {w} is not matched")
    if not a.coefficients_in(domain):
        bad = sorted({str(c) for c in a.terms().values() if not domain.contains(c)})
        return Unsolvable(f"preimage needs coefficients outside {domain.value}: {', '.join(bad[:4])}")
    return a


def pbw_basis(variant, wtype, n: int, q_degree: int) -> list[tuple[SignedPermutation, tuple]]:
    """All ``(w, r)`` with ``2|r| - 2 l(w) = q_degree``."""
    variant, wtype = _ambient(variant, wtype, n)
    if q_degree % 2:
        return []
    out = []
    for w in enumerate_group(wtype, n):
        k = q_degree // 2 + length(w)
        if k >= 0:
            out.extend((w, r) for r in monomials_of_degree(n, k))
    return out


def _basis_images(variant, wtype, n, basis) -> list[dict]:
    """Coordinates of ``x^r d_w(s_u)`` over all u, one sparse vector per element."""
    cls = polynomial_class(variant)
    group = enumerate_group(wtype, n)
    vecs = []
    for w, r in basis:
        x = cls.monomial(n, r)
        vec = {}
        for ui, u in enumerate(group):
            if length(w) > length(u) or (length(w) == length(u) and u != w):
                continue
            img = _d_on_schubert(variant, wtype, n, w, u)
            if img:
                for e, c in (x * img).as_dict().items():
                    vec[(ui, e)] = c
        vecs.append(vec)
    return vecs


def solve_preimage_dense(M: MatrixOverLambda, domain="rational") -> NilHeckeElement | Unsolvable:
    """
    Independent oracle: solve the linear system over the PBW basis of the
    matching degree (small cases only).
    """
    from .linalg import solve

    domain = ScalarDomain.parse(domain)
    nz = M.nonzero()
    if not nz:
        return NilHeckeElement(M.variant, M.wtype, M.rank, {})
    (v, w), p = next(iter(nz.items()))
    degree = 2 * length(v) + 2 * p.degree() - 2 * length(w)
    basis = pbw_basis(M.variant, M.wtype, M.rank, degree)
    vecs = _basis_images(M.variant, M.wtype, M.rank, basis)
    values = _matrix_values(M)
    group = enumerate_group(M.wtype, M.rank)
    target = {}
    for ui, u in enumerate(group):
        for e, c in values(u).as_dict().items():
            target[(ui, e)] = c
    keys = sorted({k for vec in vecs for k in vec} | set(target))
    mat = [[vec.get(k, 0) for vec in vecs] for k in keys]
    sol = solve(mat, [target.get(k, 0) for k in keys])
    if sol is None:
        return Unsolvable("linear system has no solution")
    cls = polynomial_class(M.variant)
    terms: dict = {}
    for (w2, r), c in zip(basis, sol):
        if c:
            terms[w2] = terms.get(w2, cls.zero(M.rank)) + cls.monomial(M.rank, r, c)
    a = NilHeckeElement(M.variant, M.wtype, M.rank, terms)
    if not a.coefficients_in(domain):
        return Unsolvable(f"solution needs coefficients outside {domain.value}")
    return a


def pbw_rank_check(variant, wtype, n: int, q_degree: int) -> tuple[int, int]:
    """``(rank, size)`` of the evaluation matrix of the PBW basis in one degree."""
    basis = pbw_basis(variant, wtype, n, q_degree)
    ech = SparseEchelon()
    r = sum(1 for vec in _basis_images(variant, wtype, n, basis) if ech.add(vec))
    return r, len(basis)


# ---------------------------------------------------------------------------
# graded ranks

def _nc_enumeration(variant: Variant, wtype: WeylType, n: int) -> GradedRankSeries:
    spin = variant is Variant.SPIN
    out: dict = {}
    for w in enumerate_group(wtype, n):
        k = (-2 * length(w), length(w) % 2 if spin else 0)
        out[k] = out.get(k, 0) + 1
    return GradedRankSeries(out)


def graded_rank(what: str, variant, wtype, n: int, truncation: int) -> GradedRankSeries:
    """
    Enumeration series ``sum q^degree pi^parity`` over a homogeneous basis.
    `what` is one of "nc", "nh", "pol", "lambda".
    """
    variant, wtype = _ambient(variant, wtype, n)
    spin = variant is Variant.SPIN
    what = what.lower()
    if what == "nc":
        return _nc_enumeration(variant, wtype, n).truncate(truncation)
    if what == "lambda":
        return hilbert_series(variant, wtype, n, truncation)
    pol: dict = {}
    for k in range(truncation // 2 + 1 + (length(longest_element(wtype, n)) if what == "nh" else 0)):
        pol[(2 * k, k % 2 if spin else 0)] = math.comb(k + n - 1, n - 1)
    if what == "pol":
        return GradedRankSeries(pol, truncation)
    if what != "nh":
        raise ValueError(f"unknown graded object {what!r}")
    out: dict = {}
    for w in enumerate_group(wtype, n):
        ell = length(w)
        for (e, p), c in pol.items():
            deg = e - 2 * ell
            if deg <= truncation:
                key = (deg, (p + ell) % 2 if spin else 0)
                out[key] = out.get(key, 0) + c
    return GradedRankSeries(out, truncation)


def closed_form_rank(what: str, variant, wtype, n: int, truncation: int) -> GradedRankSeries:
    """Product formulas for the nilCoxeter, nilHecke and polynomial ranks."""
    variant, wtype = _ambient(variant, wtype, n)
    spin = variant is Variant.SPIN
    what = what.lower()
    if what == "lambda":
        from .symfun import lambda_closed_form
        return lambda_closed_form(variant, wtype, n, truncation)
    if wtype is WeylType.B:
        shift, core = n * n, q_double_factorial(2 * n, spin)
    elif wtype is WeylType.D:
        shift, core = n * (n - 1), q_integer(n, spin) * q_double_factorial(2 * n - 2, spin)
    else:
        shift, core = n * (n - 1) // 2, q_factorial(n, spin)
    nc = series_monomial(-shift, shift % 2 if spin else 0) * core
    geo = GradedRankSeries({(0, 0): 1, (2, 1 if spin else 0): -1}) ** n
    if what == "nc":
        return nc.truncate(truncation)
    inv = geo.inverse(truncation - nc.valuation())
    if what == "pol":
        return inv.truncate(truncation)
    if what == "nh":
        return (nc * inv).truncate(truncation)
    raise ValueError(f"unknown graded object {what!r}")


# ---------------------------------------------------------------------------
# center

@dataclass
class CenterReport:
    wtype: WeylType
    rank: int
    degree_cap: int
    commuting: dict = field(default_factory=dict)
    slices: list = field(default_factory=list)

    @property
    def direction_i(self) -> bool:
        return all(self.commuting.values())

    @property
    def direction_ii(self) -> bool:
        return all(s["passed"] for s in self.slices)

    @property
    def passed(self) -> bool:
        return self.direction_i and self.direction_ii

    @property
    def matches_own_lambda(self) -> bool:
        """Commutant dimensions agree with the symmetric ring of the algebra's own type."""
        return all(s["commutant_dim"] == s["own_lambda_dim"] for s in self.slices)

    def to_json(self) -> dict:
        return {
            "type": self.wtype.value, "rank": self.rank, "degree_cap": self.degree_cap,
            "generators_commute": self.direction_i, "commutant_matches": self.direction_ii,
            "commutant_matches_own_lambda": self.matches_own_lambda,
            "commuting": {k: v for k, v in sorted(self.commuting.items())},
            "slices": self.slices, "passed": self.passed,
        }


def _generators(variant, wtype, n) -> list[tuple[str, NilHeckeElement]]:
    gens = [(f"x{i}", generator_element(variant, wtype, n, "x", i)) for i in range(1, n + 1)]
    gens += [(f"d{i}", generator_element(variant, wtype, n, "d", i)) for i in generator_indices(wtype, n)]
    return gens


def center_check(wtype, n: int, degree_cap: int = 8, variant="spin") -> CenterReport:
    """
    (i) each symmetric generator in the squares commutes with every algebra
    generator on monomials of degree <= degree_cap; (ii) for each q-degree up
    to degree_cap the PBW elements commuting with all generators are exactly
    the symmetric polynomials in the squares of that degree.

    Each slice also records the dimension of the symmetric ring of the
    algebra's own type, which is what a matrix algebra over that ring predicts
    for its center.
    """
    variant, wtype = _ambient(variant, wtype, n)
    cls = polynomial_class(variant)
    report = CenterReport(wtype, n, degree_cap)
    gens = _generators(variant, wtype, n)
    squares = lambda_generators(variant, WeylType.B, n)
    monos = [cls.monomial(n, e) for e in monomials_up_to(n, degree_cap)]
    for k, eps in enumerate(squares, start=1):
        for name, g in gens:
            ok = all(eps * apply_element(g, f) == apply_element(g, eps * f) for f in monos)
            report.commuting[f"eps{k}:{name}"] = ok
    group = enumerate_group(wtype, n)
    lowest = -2 * length(longest_element(wtype, n))
    for d in range(lowest, degree_cap + 1, 2):
        basis = pbw_basis(variant, wtype, n, d)
        rows: dict = {}
        for j, (w, r) in enumerate(basis):
            b = NilHeckeElement(variant, wtype, n, {w: cls.monomial(n, r)})
            for gi, (_, g) in enumerate(gens):
                for ui, u in enumerate(group):
                    s = _schubert(variant, wtype, n, u)
                    comm = apply_element(b, apply_element(g, s)) - apply_element(g, apply_element(b, s))
                    for e, c in comm.as_dict().items():
                        rows.setdefault((gi, ui, e), {})[j] = c
        mat = [[row.get(j, 0) for j in range(len(basis))] for row in rows.values()]
        kernel = nullspace(mat, len(basis))
        expected = len(epsilon_monomials(variant, WeylType.B, n, d)) if d >= 0 else 0
        own = len(epsilon_monomials(variant, wtype, n, d)) if d >= 0 else 0
        ok = len(kernel) == expected
        for vec in kernel:
            terms: dict = {}
            for (w, r), c in zip(basis, vec):
                if c:
                    terms[w] = terms.get(w, cls.zero(n)) + cls.monomial(n, r, c)
            if set(terms) - {identity(wtype, n)}:
                ok = False
                continue
            poly = terms.get(identity(wtype, n), cls.zero(n))
            if not in_lambda(variant, WeylType.B, n, poly):
                ok = False
        report.slices.append({"q_degree": d, "commutant_dim": len(kernel), "expected_dim": expected,
                              "own_lambda_dim": own, "passed": ok})
    return report


# ---------------------------------------------------------------------------
# expressions and random elements

_EXPR_TOKEN = re.compile(r"\s*(?:([xd])(\d+)|(\d+)|([+\-()]))")


def parse_expression(text: str, variant, wtype, n: int) -> NilHeckeElement:
    """
    Parse an operator expression in the tokens ``x<i>``, ``d<i>``, integers,
    ``+``, ``-`` and parentheses; juxtaposition is the product.

    >>> print(parse_expression("d1 x1 + x1 d1", "spin", "b", 1))
    1
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _EXPR_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse operator expression near {text[pos:]!r}")
        tokens.append(m.groups())
        pos = m.end()
    tokens.append((None, None, None, "$"))
    unit = unit_element(variant, wtype, n)
    i = 0

    def peek():
        return tokens[i]

    def expr():
        nonlocal i
        total = term()
        while peek()[3] in ("+", "-"):
            op = peek()[3]
            i += 1
            t = term()
            total = total + t if op == "+" else total - t
        return total

    def term():
        nonlocal i
        sign = 1
        while peek()[3] == "-":
            sign = -sign
            i += 1
        result = None
        while True:
            kind, idx, num, op = peek()
            if kind:
                f = generator_element(variant, wtype, n, kind, int(idx))
            elif num:
                f = unit.scale(int(num))
            elif op == "(":
                i += 1
                f = expr()
                if peek()[3] != ")":
                    raise ValueError("unbalanced parentheses")
            else:
                break
            i += 1
            result = f if result is None else multiply(result, f)
        if result is None:
            raise ValueError("empty term in operator expression")
        return result.scale(sign)

    result = expr()
    if peek()[3] != "$":
        raise ValueError(f"unexpected token {peek()}")
    return result


def random_element(variant, wtype, n: int, q_degree: int, rng, terms: int = 3, coeff_range: int = 3) -> NilHeckeElement:
    """A random homogeneous element of the given q-degree (may be zero)."""
    variant, wtype = _ambient(variant, wtype, n)
    basis = pbw_basis(variant, wtype, n, q_degree)
    cls = polynomial_class(variant)
    out: dict = {}
    if not basis:
        return NilHeckeElement(variant, wtype, n, {})
    for _ in range(terms):
        w, r = rng.choice(basis)
        c = rng.randint(-coeff_range, coeff_range)
        if c:
            out[w] = out.get(w, cls.zero(n)) + cls.monomial(n, r, c)
    return NilHeckeElement(variant, wtype, n, out)


def element_from_word(variant, wtype, n: int, word) -> NilHeckeElement:
    """``d_{i1} ... d_{il}`` in normal form (zero or a signed ``d_w``)."""
    result = unit_element(variant, wtype, n)
    for i in word:
        result = multiply(result, generator_element(variant, wtype, n, "d", i))
    return result

