"""
Demazure operators on the skew-polynomial ring (spin variant) and on the
ordinary polynomial ring (even variant), operator words, and the relation
suites that check the defining relations of the corresponding nilHecke
algebras on every monomial up to a degree bound.

Spin operators obey the twisted Leibniz rule ``d(fg) = d(f) g + s(f) d(g)``
with base values ``d_i(x_i) = d_i(x_{i+1}) = 1``, ``d_n(x_n) = 1`` in type B
and ``d_n(x_n) = -1``, ``d_n(x_{n-1}) = 1`` in type D. Even operators are
the divided differences ``(f - s f) / alpha``.

>>> from .skewpoly import parse_polynomial
>>> print(apply_word("spin", "b", (2,), parse_polynomial("x2^3", rank=2)))
x2^2
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .kinds import Variant, WeylType, as_type, as_variant, check_index, check_rank, generator_indices
from .skewpoly import (
    EvenPolynomial, SkewPolynomial, _Polynomial, mono_mul, monomials_up_to,
    point_action, polynomial_class, reflection_images,
)

__all__ = [
    "DivisionNotExact", "DemazureOperator", "apply", "apply_word", "root",
    "pairing", "Relation", "RelationResult", "RelationReport",
    "relations", "verify_relations", "apply_operator_word",
]


class DivisionNotExact(ArithmeticError):
    """An even Demazure quotient left a remainder; signals a convention bug."""


def _op_key(wtype: WeylType, n: int, index: int) -> WeylType:
    # operators with index < n do not depend on the type
    return WeylType.A if index < n else wtype


# ---------------------------------------------------------------------------
# spin operators

def _spin_base(wtype: WeylType, n: int, index: int) -> dict[int, int]:
    if index < n:
        return {index - 1: 1, index: 1}
    if wtype is WeylType.B:
        return {n - 1: 1}
    return {n - 2: 1, n - 1: -1}


@lru_cache(maxsize=None)
def _spin_on_monomial(wtype: WeylType, n: int, index: int, exp: tuple) -> tuple:
    k = next((j for j, r in enumerate(exp) if r), None)
    if k is None:
        return ()
    rest = list(exp)
    rest[k] -= 1
    rest = tuple(rest)
    out: dict = {}
    c = _spin_base(wtype, n, index).get(k, 0)
    if c:
        out[rest] = c
    images = reflection_images(Variant.SPIN, WeylType.A if index < n else wtype, index, n)
    s, t = images[k]
    unit = tuple(1 if j == t else 0 for j in range(n))
    for e, v in _spin_on_monomial(wtype, n, index, rest):
        sign, e2 = mono_mul(unit, e)
        val = out.get(e2, 0) + s * sign * v
        if val:
            out[e2] = val
        else:
            out.pop(e2, None)
    return tuple(out.items())


# ---------------------------------------------------------------------------
# even operators

def root(wtype, n: int, index: int) -> EvenPolynomial:
    """Simple root used as the even divisor."""
    wtype = as_type(wtype)
    terms = [0] * n
    if index < n:
        a = [0] * n
        a[index - 1] = 1
        b = [0] * n
        b[index] = 1
        return EvenPolynomial(n, {tuple(a): 1, tuple(b): -1})
    if wtype is WeylType.B:
        terms[n - 1] = 1
        return EvenPolynomial(n, {tuple(terms): 2})
    a = [0] * n
    a[n - 2] = 1
    b = [0] * n
    b[n - 1] = 1
    return EvenPolynomial(n, {tuple(a): 1, tuple(b): 1})


def pairing(wtype, n: int, index: int, j: int) -> int:
    """The constant ``<x_j, alpha_index>`` in the even nilHecke relation."""
    wtype = as_type(wtype)
    if index < n:
        return {index: 1, index + 1: -1}.get(j, 0)
    if wtype is WeylType.B:
        return 1 if j == n else 0
    return 1 if j in (n - 1, n) else 0


@lru_cache(maxsize=None)
def _even_on_monomial(wtype: WeylType, n: int, index: int, exp: tuple) -> tuple:
    f = EvenPolynomial._raw(n, {exp: 1})
    diff = f - point_action(f, WeylType.A if index < n else wtype, index)
    if diff.is_zero():
        return ()
    return tuple(diff.exact_divide(root(wtype, n, index)).as_dict().items())


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DemazureOperator:
    variant: Variant
    wtype: WeylType
    index: int
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "variant", as_variant(self.variant))
        object.__setattr__(self, "wtype", as_type(self.wtype))
        check_index(self.wtype, self.rank, self.index)

    def __call__(self, f: _Polynomial) -> _Polynomial:
        return apply(self, f)

    def __str__(self):
        return f"d{self.index}"


def _apply(variant: Variant, wtype: WeylType, index: int, f: _Polynomial) -> _Polynomial:
    n = f.rank
    key = _op_key(wtype, n, index)
    table = _spin_on_monomial if variant is Variant.SPIN else _even_on_monomial
    out: dict = {}
    for e, c in f._terms.items():
        for e2, v in table(key, n, index, e):
            val = out.get(e2, 0) + c * v
            if val:
                out[e2] = val
            else:
                out.pop(e2, None)
    return type(f)._raw(n, out)


def apply(op: DemazureOperator, f: _Polynomial) -> _Polynomial:
    """Apply a single operator; the polynomial ring must match the variant."""
    if f.variant is not op.variant:
        raise TypeError(f"{op.variant.value} operator applied to {type(f).__name__}")
    if f.rank != op.rank:
        raise ValueError(f"rank mismatch: operator {op.rank}, polynomial {f.rank}")
    return _apply(op.variant, op.wtype, op.index, f)


def apply_word(variant, wtype, word, f: _Polynomial) -> _Polynomial:
    """``d_{i1} ... d_{il}(f)``: the rightmost letter acts first."""
    variant, wtype = as_variant(variant), as_type(wtype)
    if f.variant is not variant:
        raise TypeError(f"{variant.value} operators applied to {type(f).__name__}")
    for i in word:
        check_index(wtype, f.rank, i)
    for i in reversed(tuple(word)):
        if f.is_zero():
            break
        f = _apply(variant, wtype, i, f)
    return f


def apply_operator_word(variant, wtype, word, f: _Polynomial) -> _Polynomial:
    """
    Apply a mixed word of letters ``("d", i)`` and ``("x", i)`` (rightmost
    first); ``x`` letters multiply on the left.
    """
    variant, wtype = as_variant(variant), as_type(wtype)
    for kind, i in reversed(tuple(word)):
        if f.is_zero():
            break
        if kind == "d":
            f = _apply(variant, wtype, i, f)
        else:
            f = f.left_mul_variable(i)
    return f


# ---------------------------------------------------------------------------
# relation suites

Word = tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class Relation:
    """``sum(c * word) == identity_coeff * id`` as operators."""

    family: str
    formula: str
    params: tuple
    lhs: tuple[tuple[int, Word], ...]
    identity_coeff: int = 0


def _d(*idx) -> Word:
    return tuple(("d", i) for i in idx)


def _spin_relations(wtype: WeylType, n: int) -> list[Relation]:
    rels = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(Relation("x_anticommute", "x_i x_j + x_j x_i = 0", (("i", i), ("j", j)),
                                 ((1, (("x", i), ("x", j))), (1, (("x", j), ("x", i))))))
    for i in range(1, n):
        p = (("i", i),)
        rels.append(Relation("nil_square", "d_i d_i = 0", p, ((1, _d(i, i)),)))
        if i + 1 < n:
            rels.append(Relation("braid", "d_i d_{i+1} d_i = d_{i+1} d_i d_{i+1}", p,
                                 ((1, _d(i, i + 1, i)), (-1, _d(i + 1, i, i + 1)))))
        for j in range(i + 2, n):
            rels.append(Relation("far_anticommute", "d_i d_j + d_j d_i = 0", (("i", i), ("j", j)),
                                 ((1, _d(i, j)), (1, _d(j, i)))))
        rels.append(Relation("shift_left", "x_i d_i + d_i x_{i+1} = 1", p,
                             ((1, (("x", i), ("d", i))), (1, (("d", i), ("x", i + 1)))), 1))
        rels.append(Relation("shift_right", "d_i x_i + x_{i+1} d_i = 1", p,
                             ((1, (("d", i), ("x", i))), (1, (("x", i + 1), ("d", i)))), 1))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rels.append(Relation("x_skew_commute", "d_i x_j + x_j d_i = 0 (j != i, i+1)",
                                     (("i", i), ("j", j)),
                                     ((1, (("d", i), ("x", j))), (1, (("x", j), ("d", i))))))
    if wtype is WeylType.B:
        rels.append(Relation("b_nil_square", "d_n d_n = 0", (("n", n),), ((1, _d(n, n)),)))
        if n >= 2:
            rels.append(Relation("b_braid4", "d_n d_{n-1} d_n d_{n-1} = -d_{n-1} d_n d_{n-1} d_n",
                                 (("n", n),), ((1, _d(n, n - 1, n, n - 1)), (1, _d(n - 1, n, n - 1, n)))))
        for i in range(1, n - 1):
            rels.append(Relation("b_far_anticommute", "d_n d_i + d_i d_n = 0 (i <= n-2)", (("i", i),),
                                 ((1, _d(n, i)), (1, _d(i, n)))))
        rels.append(Relation("b_shift", "d_n x_n + x_n d_n = 1", (("n", n),),
                             ((1, (("d", n), ("x", n))), (1, (("x", n), ("d", n)))), 1))
        for i in range(1, n):
            rels.append(Relation("b_x_skew_commute", "d_n x_i + x_i d_n = 0 (i <= n-1)", (("i", i),),
                                 ((1, (("d", n), ("x", i))), (1, (("x", i), ("d", n))))))
    elif wtype is WeylType.D:
        rels.append(Relation("d_nil_square", "d_n d_n = 0", (("n", n),), ((1, _d(n, n)),)))
        if n >= 3:
            rels.append(Relation("d_braid", "d_n d_{n-2} d_n = d_{n-2} d_n d_{n-2}", (("n", n),),
                                 ((1, _d(n, n - 2, n)), (-1, _d(n - 2, n, n - 2)))))
        for i in range(1, n - 2):
            rels.append(Relation("d_far_anticommute", "d_n d_i + d_i d_n = 0 (i <= n-3)", (("i", i),),
                                 ((1, _d(n, i)), (1, _d(i, n)))))
        rels.append(Relation("d_commute", "d_n d_{n-1} - d_{n-1} d_n = 0", (("n", n),),
                             ((1, _d(n, n - 1)), (-1, _d(n - 1, n)))))
        rels.append(Relation("d_shift_left", "x_{n-1} d_n - d_n x_n = 1", (("n", n),),
                             ((1, (("x", n - 1), ("d", n))), (-1, (("d", n), ("x", n)))), 1))
        rels.append(Relation("d_shift_right", "d_n x_{n-1} - x_n d_n = 1", (("n", n),),
                             ((1, (("d", n), ("x", n - 1))), (-1, (("x", n), ("d", n)))), 1))
        for i in range(1, n - 1):
            rels.append(Relation("d_x_skew_commute", "d_n x_i + x_i d_n = 0 (i <= n-2)", (("i", i),),
                                 ((1, (("d", n), ("x", i))), (1, (("x", i), ("d", n))))))
    return rels


def coxeter_m(wtype: WeylType, n: int, i: int, j: int) -> int:
    """Order of ``s_i s_j`` for i < j."""
    if j < n or wtype is WeylType.A:
        return 3 if j == i + 1 else 2
    if wtype is WeylType.B:
        return 4 if i == n - 1 else 2
    return 3 if i == n - 2 else 2


def _even_relations(wtype: WeylType, n: int) -> list[Relation]:
    rels = []
    gens = list(generator_indices(wtype, n))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(Relation("x_commute", "x_i x_j - x_j x_i = 0", (("i", i), ("j", j)),
                                 ((1, (("x", i), ("x", j))), (-1, (("x", j), ("x", i))))))
    for i in gens:
        rels.append(Relation("nil_square", "d_i d_i = 0", (("i", i),), ((1, _d(i, i)),)))
    for a, i in enumerate(gens):
        for j in gens[a + 1:]:
            m = coxeter_m(wtype, n, i, j)
            left = tuple((i, j)[k % 2] for k in range(m))
            right = tuple((j, i)[k % 2] for k in range(m))
            rels.append(Relation("braid", f"(d_i d_j)^[{m}] = (d_j d_i)^[{m}]", (("i", i), ("j", j), ("m", m)),
                                 ((1, _d(*left)), (-1, _d(*right)))))
    for i in gens:
        images = reflection_images(Variant.EVEN, WeylType.A if i < n else wtype, i, n)
        for j in range(1, n + 1):
            s, t = images[j - 1]
            rels.append(Relation("x_dual", "x_j d_i - d_i s_i(x_j) = <x_j, alpha_i>", (("i", i), ("j", j)),
                                 ((1, (("x", j), ("d", i))), (-s, (("d", i), ("x", t + 1)))),
                                 pairing(wtype, n, i, j)))
    return rels


def relations(variant, wtype, n: int) -> list[Relation]:
    """Defining relations of the nilHecke algebra of the given kind."""
    variant, wtype = as_variant(variant), as_type(wtype)
    check_rank(wtype, n)
    return _spin_relations(wtype, n) if variant is Variant.SPIN else _even_relations(wtype, n)


@dataclass
class RelationResult:
    family: str
    formula: str
    params: dict
    passed: bool
    checked: int
    counterexample: list | None = None
    division_failures: int = 0

    def to_json(self) -> dict:
        return {
            "family": self.family, "anchor": self.formula, "params": self.params,
            "passed": self.passed, "checked": self.checked,
            "witness": self.counterexample, "division_failures": self.division_failures,
        }


@dataclass
class RelationReport:
    variant: Variant
    wtype: WeylType
    rank: int
    max_degree: int
    results: list[RelationResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def division_failures(self) -> int:
        return sum(r.division_failures for r in self.results)

    def families(self) -> list[str]:
        return sorted({r.family for r in self.results})

    def failures(self) -> list[RelationResult]:
        return [r for r in self.results if not r.passed]

    def to_json(self) -> dict:
        return {
            "variant": self.variant.value, "type": self.wtype.value, "rank": self.rank,
            "max_degree": self.max_degree, "passed": self.passed,
            "division_failures": self.division_failures,
            "relations": [r.to_json() for r in self.results],
        }


def check_relation(variant, wtype, n: int, rel: Relation, max_degree: int) -> RelationResult:
    variant, wtype = as_variant(variant), as_type(wtype)
    cls = polynomial_class(variant)
    checked = 0
    failures = 0
    bad = None
    for exp in monomials_up_to(n, max_degree):
        f = cls._raw(n, {exp: 1})
        try:
            total = f.scale(-rel.identity_coeff)
            for c, word in rel.lhs:
                total = total + apply_operator_word(variant, wtype, word, f).scale(c)
        except DivisionNotExact:
            failures += 1
            bad = bad or list(exp)
            continue
        checked += 1
        if total and bad is None:
            bad = list(exp)
    return RelationResult(rel.family, rel.formula, dict(rel.params), bad is None, checked, bad, failures)


def verify_relations(variant, wtype, n: int, max_degree: int = 8) -> RelationReport:
    """Check every defining relation on all monomials of degree <= max_degree."""
    variant, wtype = as_variant(variant), as_type(wtype)
    report = RelationReport(variant, wtype, n, max_degree)
    for rel in relations(variant, wtype, n):
        report.results.append(check_relation(variant, wtype, n, rel, max_degree))
    return report
