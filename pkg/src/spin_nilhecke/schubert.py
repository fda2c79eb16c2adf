"""
Schubert polynomials ``s_w = d_{w^{-1} w0}(x^delta)`` and the decomposition of
polynomials over the symmetric ring in the Schubert basis.

Coefficients sit on the right: ``f = sum_w s_w * c_w`` with every ``c_w``
annihilated by all Demazure operators.

>>> from .weyl import identity
>>> schubert("spin", "d", 2, identity("d", 2))
SkewPolynomial(2, '2')
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .demazure import apply_word
from .kinds import Variant, WeylType, as_type, as_variant, check_rank
from .linalg import determinant, rank
from .skewpoly import DomainError, ScalarDomain, _Polynomial, polynomial_class
from .symfun import LambdaElement, in_lambda
from .weyl import SignedPermutation, enumerate_group, inverse, length, longest_element, reduced_word

__all__ = [
    "ResidualNonzero", "staircase", "schubert", "schubert_family", "kappa",
    "constant_check", "schubert_decompose", "recompose", "box_exponents",
    "basis_check", "BasisReport", "box_quotient_determinant", "triangularity_defects",
]


class ResidualNonzero(ArithmeticError):
    """Peeling left a nonzero remainder: the input is outside the expected span."""


def staircase(wtype, n: int) -> tuple[int, ...]:
    wtype = as_type(wtype)
    check_rank(wtype, n)
    if wtype is WeylType.B:
        return tuple(2 * (n - i) + 1 for i in range(1, n + 1))
    if wtype is WeylType.D:
        return tuple(2 * (n - i) for i in range(1, n + 1))
    return tuple(n - i for i in range(1, n + 1))


@lru_cache(maxsize=None)
def _schubert(variant: Variant, wtype: WeylType, n: int, w: SignedPermutation) -> _Polynomial:
    cls = polynomial_class(variant)
    top = cls.monomial(n, staircase(wtype, n))
    word = reduced_word(inverse(w) * longest_element(wtype, n))
    return apply_word(variant, wtype, word, top)


def schubert(variant, wtype, n: int, w: SignedPermutation) -> _Polynomial:
    variant, wtype = as_variant(variant), as_type(wtype)
    if w.wtype is not wtype or w.rank != n:
        raise ValueError(f"element {w} is not in {wtype.name}{n}")
    return _schubert(variant, wtype, n, w)


def schubert_family(variant, wtype, n: int) -> dict[SignedPermutation, _Polynomial]:
    """All Schubert polynomials in canonical element order."""
    variant, wtype = as_variant(variant), as_type(wtype)
    return {w: _schubert(variant, wtype, n, w) for w in enumerate_group(wtype, n)}


@lru_cache(maxsize=None)
def _kappa(variant: Variant, wtype: WeylType, n: int, w: SignedPermutation):
    value = apply_word(variant, wtype, reduced_word(w), _schubert(variant, wtype, n, w))
    if not value.is_constant() or value.is_zero():
        raise ArithmeticError(f"d_w(s_w) is not a nonzero constant for {w}")
    return value.constant_term()


def kappa(variant, wtype, n: int, w: SignedPermutation):
    """The measured constant ``d_w(s_w)``."""
    return _kappa(as_variant(variant), as_type(wtype), n, w)


def constant_check(wtype, n: int, variant="spin"):
    """The constant Schubert polynomial of the identity, ``d_{w0}(x^delta)``."""
    variant, wtype = as_variant(variant), as_type(wtype)
    s_e = _schubert(variant, wtype, n, enumerate_group(wtype, n)[0])
    if not s_e.is_constant():
        raise ArithmeticError("Schubert polynomial of the identity is not constant")
    return s_e.constant_term()


def _peel_order(wtype: WeylType, n: int) -> list[SignedPermutation]:
    return sorted(enumerate_group(wtype, n), key=lambda w: (-length(w), reduced_word(w)))


def schubert_decompose(variant, wtype, n: int, f: _Polynomial, domain=None,
                       certify: bool = True) -> dict[SignedPermutation, LambdaElement]:
    """
    Coefficients ``c_w`` with ``f = sum s_w c_w``, found by peeling in order
    of decreasing length: ``c_w = d_w(residual) / d_w(s_w)``.
    """
    variant, wtype = as_variant(variant), as_type(wtype)
    if domain is None:
        domain = ScalarDomain.INTEGER if wtype is WeylType.B and variant is Variant.SPIN else ScalarDomain.RATIONAL
    domain = ScalarDomain.parse(domain)
    if not f.coefficients_in(domain):
        raise DomainError(f"input coefficients are not in the {domain.value} domain")
    residual = f
    coeffs: dict[SignedPermutation, LambdaElement] = {}
    for w in _peel_order(wtype, n):
        if residual.is_zero():
            break
        top = apply_word(variant, wtype, reduced_word(w), residual)
        if top.is_zero():
            continue
        c = top.divide_scalar(_kappa(variant, wtype, n, w), domain)
        residual = residual - _schubert(variant, wtype, n, w) * c
        cert = in_lambda(variant, wtype, n, c) if certify else None
        if certify and not cert:
            raise ResidualNonzero(f"coefficient for {w} is not symmetric")
        coeffs[w] = LambdaElement(variant, wtype, n, c, None, cert)
    if not residual.is_zero():
        raise ResidualNonzero(f"residual nonzero: {residual}")
    order = {w: i for i, w in enumerate(enumerate_group(wtype, n))}
    return dict(sorted(coeffs.items(), key=lambda kv: order[kv[0]]))


def recompose(variant, wtype, n: int, coeffs: dict) -> _Polynomial:
    """``sum_w s_w * c_w`` for a decomposition."""
    variant, wtype = as_variant(variant), as_type(wtype)
    total = polynomial_class(variant).zero(n)
    for w, c in coeffs.items():
        poly = c.polynomial if isinstance(c, LambdaElement) else c
        total = total + _schubert(variant, wtype, n, w) * poly
    return total


def box_exponents(n: int) -> list[tuple[int, ...]]:
    """Exponents with ``r_i <= 2n - 2i + 1``."""
    out = [()]
    for i in range(1, n + 1):
        out = [e + (r,) for e in out for r in range(2 * n - 2 * i + 2)]
    return sorted(out, key=lambda e: (sum(e), e))


@dataclass
class BasisReport:
    wtype: WeylType
    rank: int
    size: int
    matrix_rank: int
    determinant: int | None
    inside_box: bool | None
    passed: bool

    def to_json(self) -> dict:
        return {
            "type": self.wtype.value, "rank": self.rank, "size": self.size,
            "matrix_rank": self.matrix_rank, "determinant": self.determinant,
            "inside_box": self.inside_box, "passed": self.passed,
        }


def basis_check(wtype, n: int, variant="spin") -> BasisReport:
    """
    Type B: the Schubert polynomials lie in the box-truncated span and their
    coordinate matrix is unimodular. Type D: full rank over the rationals.
    """
    variant, wtype = as_variant(variant), as_type(wtype)
    fam = list(schubert_family(variant, wtype, n).values())
    if wtype is WeylType.B:
        keys = box_exponents(n)
        index = {e: i for i, e in enumerate(keys)}
        inside = all(e in index for p in fam for e in p.monomials())
        mat = [[0] * len(fam) for _ in keys]
        if inside:
            for j, p in enumerate(fam):
                for e, c in p.as_dict().items():
                    mat[index[e]][j] = c
        det = determinant(mat) if inside and len(keys) == len(fam) else None
        r = rank(mat) if inside else 0
        det_int = int(det) if det is not None else None
        ok = inside and len(keys) == len(fam) and r == len(fam) and det_int in (1, -1)
        return BasisReport(wtype, n, len(fam), r, det_int, inside, ok)
    keys = sorted({e for p in fam for e in p.monomials()})
    index = {e: i for i, e in enumerate(keys)}
    mat = [[0] * len(fam) for _ in keys]
    for j, p in enumerate(fam):
        for e, c in p.as_dict().items():
            mat[index[e]][j] = c
    r = rank(mat)
    return BasisReport(wtype, n, len(fam), r, None, None, r == len(fam))


def box_quotient_determinant(n: int) -> int:
    """
    Determinant of the constant terms of the type B Schubert coordinates of
    the box monomials. A unit means the box monomials and the Schubert
    polynomials span the same lattice modulo positive-degree symmetric
    polynomials.
    """
    group = enumerate_group(WeylType.B, n)
    rows = []
    for r in box_exponents(n):
        f = polynomial_class(Variant.SPIN).monomial(n, r)
        dec = schubert_decompose(Variant.SPIN, WeylType.B, n, f, ScalarDomain.INTEGER, certify=False)
        rows.append([dec[w].polynomial.constant_term() if w in dec else 0 for w in group])
    return int(determinant(rows))


def triangularity_defects(variant, wtype, n: int) -> list[tuple]:
    """
    Pairs (u, w) violating: ``d_u(s_w) = 0`` when l(w) < l(u) or when
    l(w) = l(u) and u != w; and ``d_w(s_w)`` a nonzero constant.
    """
    variant, wtype = as_variant(variant), as_type(wtype)
    fam = schubert_family(variant, wtype, n)
    bad = []
    for u in fam:
        for w, s in fam.items():
            if length(w) > length(u):
                continue
            val = apply_word(variant, wtype, reduced_word(u), s)
            if u == w:
                if not val.is_constant() or val.is_zero():
                    bad.append((u, w, str(val)))
            elif not val.is_zero():
                bad.append((u, w, str(val)))
    return bad
