"""
Weyl groups of types A, B and D realised as signed permutations.

An element is stored through its window ``(w(1), ..., w(n))``; composition is
functional, ``(u * v)(i) = u(v(i))`` with ``u(-j) = -u(j)``. Generator ``i < n``
swaps ``i`` and ``i+1``; in type B generator ``n`` negates ``n``; in type D it
sends ``n-1 -> -n`` and ``n -> -(n-1)``.

>>> w0 = longest_element("b", 2)
>>> w0.window, length(w0), reduced_word(w0)
((-1, -2), 4, (1, 2, 1, 2))
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .kinds import WeylType, as_type, check_index, check_rank, generator_indices

__all__ = [
    "SignedPermutation", "identity", "generator", "compose", "inverse",
    "length", "reduced_word", "evaluate_word", "enumerate_group",
    "longest_element", "longest_word", "group_order", "parse_element",
    "format_word", "right_descents", "bfs_lengths",
]


@dataclass(frozen=True)
class SignedPermutation:
    window: tuple[int, ...]
    wtype: WeylType

    def __post_init__(self):
        object.__setattr__(self, "window", tuple(int(v) for v in self.window))
        object.__setattr__(self, "wtype", as_type(self.wtype))
        n = len(self.window)
        check_rank(self.wtype, n)
        if sorted(abs(v) for v in self.window) != list(range(1, n + 1)):
            raise ValueError(f"{list(self.window)} is not a signed permutation")
        negatives = sum(v < 0 for v in self.window)
        if self.wtype is WeylType.A and negatives:
            raise ValueError("type A elements have no negative entries")
        if self.wtype is WeylType.D and negatives % 2:
            raise ValueError("type D elements have an even number of negative entries")

    @property
    def rank(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        v = self.window[abs(i) - 1]
        return v if i > 0 else -v

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.rank + 1))

    def __str__(self):
        return "[" + ",".join(str(v) for v in self.window) + "]"

    def sort_key(self):
        return (length(self), reduced_word(self))


def identity(wtype, n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)), as_type(wtype))


@lru_cache(maxsize=None)
def generator(wtype, n: int, i: int) -> SignedPermutation:
    wtype = as_type(wtype)
    check_index(wtype, n, i)
    win = list(range(1, n + 1))
    if i < n:
        win[i - 1], win[i] = win[i], win[i - 1]
    elif wtype is WeylType.B:
        win[n - 1] = -n
    else:
        win[n - 2], win[n - 1] = -n, -(n - 1)
    return SignedPermutation(tuple(win), wtype)


def _same_group(u: SignedPermutation, v: SignedPermutation) -> None:
    if u.wtype is not v.wtype or u.rank != v.rank:
        raise ValueError(f"group mismatch: {u.wtype.name}{u.rank} vs {v.wtype.name}{v.rank}")


def compose(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    """The product ``u * v`` acting as ``i -> u(v(i))``."""
    _same_group(u, v)
    return SignedPermutation(tuple(u(x) for x in v.window), u.wtype)


def inverse(w: SignedPermutation) -> SignedPermutation:
    win = [0] * w.rank
    for i, v in enumerate(w.window, start=1):
        win[abs(v) - 1] = i if v > 0 else -i
    return SignedPermutation(tuple(win), w.wtype)


def _right_multiply(w: SignedPermutation, i: int) -> SignedPermutation:
    """``w * s_i`` computed directly on window positions."""
    win = list(w.window)
    n = len(win)
    if i < n:
        win[i - 1], win[i] = win[i], win[i - 1]
    elif w.wtype is WeylType.B:
        win[n - 1] = -win[n - 1]
    else:
        win[n - 2], win[n - 1] = -win[n - 1], -win[n - 2]
    return SignedPermutation(tuple(win), w.wtype)


@lru_cache(maxsize=None)
def length(w: SignedPermutation) -> int:
    """
    Coxeter length via inversion counting.

    Reversing positions and values moves the special generator to the front,
    where the usual B/D inversion formulas apply.
    """
    n = w.rank
    v = []
    for i in range(n, 0, -1):
        x = w.window[i - 1]
        v.append((n + 1 - abs(x)) * (1 if x > 0 else -1))
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if v[i] > v[j])
    if w.wtype is WeylType.A:
        return inv
    strict = sum(1 for i in range(n) for j in range(i + 1, n) if v[i] + v[j] < 0)
    if w.wtype is WeylType.D:
        return inv + strict
    return inv + strict + sum(1 for x in v if x < 0)


def right_descents(w: SignedPermutation) -> list[int]:
    ell = length(w)
    return [i for i in generator_indices(w.wtype, w.rank) if length(_right_multiply(w, i)) < ell]


@lru_cache(maxsize=None)
def longest_element(wtype, n: int) -> SignedPermutation:
    wtype = as_type(wtype)
    check_rank(wtype, n)
    if wtype is WeylType.A:
        return SignedPermutation(tuple(range(n, 0, -1)), wtype)
    if wtype is WeylType.D and n % 2:
        return SignedPermutation(tuple(-i for i in range(1, n)) + (n,), wtype)
    return SignedPermutation(tuple(-i for i in range(1, n + 1)), wtype)


@lru_cache(maxsize=None)
def longest_word(wtype, n: int) -> tuple[int, ...]:
    """
    Fixed reduced word of the longest element.

    Type B: blocks ``(k, ..., n-1, n, n-1, ..., k)`` for k < n, then ``(n)``.
    Type D: blocks ``(k, ..., n-2, n, n-1, ..., k)`` for k <= n-2, then
    ``(n-1, n)``. Type A: the descent-based canonical word.
    """
    wtype = as_type(wtype)
    check_rank(wtype, n)
    word: list[int] = []
    if wtype is WeylType.B:
        for k in range(1, n):
            word += list(range(k, n)) + [n] + list(range(n - 1, k - 1, -1))
        word.append(n)
    elif wtype is WeylType.D:
        for k in range(1, n - 1):
            word += list(range(k, n - 1)) + [n] + list(range(n - 1, k - 1, -1))
        word += [n - 1, n]
    else:
        return _descent_word(longest_element(wtype, n))
    return tuple(word)


def _descent_word(w: SignedPermutation) -> tuple[int, ...]:
    word: list[int] = []
    while True:
        desc = right_descents(w)
        if not desc:
            return tuple(reversed(word))
        i = desc[0]
        word.append(i)
        w = _right_multiply(w, i)


@lru_cache(maxsize=None)
def reduced_word(w: SignedPermutation) -> tuple[int, ...]:
    """
    Canonical reduced word: strip the smallest right descent repeatedly.

    The longest element is the exception and uses ``longest_word``.
    """
    if w == longest_element(w.wtype, w.rank):
        return longest_word(w.wtype, w.rank)
    return _descent_word(w)


def evaluate_word(wtype, n: int, word) -> SignedPermutation:
    """The product ``s_{i1} * ... * s_{il}``."""
    w = identity(wtype, n)
    for i in word:
        check_index(wtype, n, i)
        w = _right_multiply(w, i)
    return w


def group_order(wtype, n: int) -> int:
    wtype = as_type(wtype)
    check_rank(wtype, n)
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    return {WeylType.A: fact, WeylType.B: 2**n * fact, WeylType.D: 2 ** (n - 1) * fact}[wtype]


@lru_cache(maxsize=None)
def enumerate_group(wtype, n: int) -> tuple[SignedPermutation, ...]:
    """All elements sorted by (length, canonical word)."""
    wtype = as_type(wtype)
    check_rank(wtype, n)
    out = []
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            if wtype is WeylType.A and -1 in signs:
                continue
            if wtype is WeylType.D and signs.count(-1) % 2:
                continue
            out.append(SignedPermutation(tuple(s * p for s, p in zip(signs, perm)), wtype))
    out.sort(key=SignedPermutation.sort_key)
    return tuple(out)


def bfs_lengths(wtype, n: int) -> dict[SignedPermutation, int]:
    """Word-search lengths by breadth-first search on the Cayley graph."""
    start = identity(wtype, n)
    dist = {start: 0}
    queue = deque([start])
    gens = list(generator_indices(wtype, n))
    while queue:
        w = queue.popleft()
        for i in gens:
            u = _right_multiply(w, i)
            if u not in dist:
                dist[u] = dist[w] + 1
                queue.append(u)
    return dist


def format_word(word) -> str:
    return " ".join(f"s{i}" for i in word) if word else "e"


def parse_element(text: str, wtype, n: int) -> SignedPermutation:
    """
    Accept window notation ``"[2,-1,3]"`` or a word ``"s1 s2 s1"`` (``"e"`` for
    the identity).

    >>> parse_element("s1 s2", "b", 2).window
    (2, -1)
    """
    text = text.strip()
    if text.startswith("["):
        vals = [int(v) for v in text.strip("[]").split(",") if v.strip()]
        w = SignedPermutation(tuple(vals), as_type(wtype))
        if w.rank != n:
            raise ValueError(f"window {text} has rank {w.rank}, expected {n}")
        return w
    if text in ("", "e", "1"):
        return identity(wtype, n)
    if not re.fullmatch(r"s\d+(\s+s\d+)*", text):
        raise ValueError(f"cannot parse Weyl group element {text!r}")
    return evaluate_word(wtype, n, [int(x) for x in re.findall(r"\d+", text)])
