"""Exact arithmetic in the free algebra Q<X_1,...,X_n> and its tensor square.

A word is a plain ``tuple`` of 1-based variable indices; ``()`` is the unit
monomial.  ``Poly`` and ``TensorPoly`` are immutable sparse maps from words
(resp. word pairs) to ``fractions.Fraction`` with no zero coefficients stored,
so equality of values is equality of maps.

>>> ctx = AlgebraContext(2)
>>> x1, x2 = ctx.gens()
>>> (x1 + x2) * (x1 - x2) == x1 * x1 - x1 * x2 + x2 * x1 - x2 * x2
True
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Tuple

from .errors import ArityMismatchError, ContextMismatchError, IndexOutOfRangeError

Word = Tuple[int, ...]

__all__ = [
    "AlgebraContext",
    "Word",
    "Poly",
    "TensorPoly",
    "GradientVec",
    "as_coefficient",
    "word_key",
    "add",
    "mul",
    "scale",
    "bimodule_act",
    "flip_multiply",
    "homogeneous_component",
]


def as_coefficient(c) -> Fraction:
    """Coerce ints, Fractions and numeric strings such as ``"3/4"`` to Fraction.

    Floats are refused; silently accepting them would make exact equality
    meaningless.
    """
    if isinstance(c, Fraction):
        return c
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient must be an exact rational, got {type(c).__name__}")


def word_key(w: Word):
    """Sort key for the canonical term order: degree first, then lexicographic."""
    return (len(w), w)


@dataclass(frozen=True)
class AlgebraContext:
    """The ambient algebra: number of noncommuting indeterminates ``n``."""

    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")

    def check_index(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise IndexOutOfRangeError(f"variable index {j} outside 1..{self.n}")
        return j

    def check_word(self, w: Iterable[int]) -> Word:
        w = tuple(int(i) for i in w)
        for i in w:
            self.check_index(i)
        return w

    def zero(self) -> Poly:
        return Poly(self)

    def one(self) -> Poly:
        return Poly._raw(self, {(): Fraction(1)})

    def const(self, c) -> Poly:
        return Poly(self, {(): c})

    def var(self, j: int) -> Poly:
        return Poly._raw(self, {(self.check_index(j),): Fraction(1)})

    def gens(self) -> tuple[Poly, ...]:
        return tuple(self.var(j) for j in range(1, self.n + 1))

    def monomial(self, w: Iterable[int], c=1) -> Poly:
        return Poly(self, {tuple(w): c})


def _check_same(a, b):
    if a.ctx != b.ctx:
        raise ContextMismatchError(f"context mismatch: n={a.ctx.n} vs n={b.ctx.n}")


def _accumulate(acc: dict, key, c: Fraction):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class Poly:
    """An element of Q<X_1,...,X_n> in canonical sparse form."""

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: AlgebraContext, terms: Mapping[Iterable[int], object] | None = None):
        acc: dict[Word, Fraction] = {}
        if terms:
            for w, c in terms.items():
                _accumulate(acc, ctx.check_word(w), as_coefficient(c))
        self.ctx = ctx
        self._terms = acc
        self._hash = None

    @classmethod
    def _raw(cls, ctx: AlgebraContext, terms: dict) -> Poly:
        # terms must already be validated and zero-free
        p = cls.__new__(cls)
        p.ctx = ctx
        p._terms = terms
        p._hash = None
        return p

    @property
    def terms(self) -> Mapping[Word, Fraction]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[Word, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: word_key(kv[0]))

    def coeff(self, w: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(w), Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coeff(())

    @property
    def degree(self) -> int:
        """Maximal word length; ``-1`` for the zero polynomial."""
        return max((len(w) for w in self._terms), default=-1)

    def degrees(self) -> set[int]:
        return {len(w) for w in self._terms}

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def max_index(self) -> int:
        return max((i for w in self._terms for i in w), default=0)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self.sorted_terms())

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == ({(): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        try:
            return self.ctx.const(as_coefficient(other))
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else add(self, o)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ctx, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else add(self, -o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else add(o, -self)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return mul(self, other)
        try:
            return scale(as_coefficient(other), self)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return scale(as_coefficient(other), self)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        try:
            return scale(1 / as_coefficient(other), self)
        except TypeError:
            return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self.ctx.one()
        for _ in range(k):
            out = mul(out, self)
        return out

    def commutator(self, other: Poly) -> Poly:
        return mul(self, other) - mul(other, self)

    def __repr__(self):
        from .expr_io import print_poly

        return f"Poly(n={self.ctx.n}, {print_poly(self)!r})"

    def __str__(self):
        from .expr_io import print_poly

        return print_poly(self)


class TensorPoly:
    """An element of Q<n> (x) Q<n>, stored as ``{(left_word, right_word): coeff}``."""

    __slots__ = ("ctx", "_terms")

    def __init__(self, ctx: AlgebraContext, terms: Mapping | None = None):
        acc: dict[tuple[Word, Word], Fraction] = {}
        if terms:
            for (u, v), c in terms.items():
                _accumulate(acc, (ctx.check_word(u), ctx.check_word(v)), as_coefficient(c))
        self.ctx = ctx
        self._terms = acc

    @classmethod
    def _raw(cls, ctx, terms):
        t = cls.__new__(cls)
        t.ctx = ctx
        t._terms = terms
        return t

    @property
    def terms(self) -> Mapping[tuple[Word, Word], Fraction]:
        return MappingProxyType(self._terms)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: (word_key(kv[0][0]), word_key(kv[0][1])))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self._terms.items())))

    def __add__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        _check_same(self, other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _accumulate(acc, k, c)
        return TensorPoly._raw(self.ctx, acc)

    def __neg__(self):
        return TensorPoly._raw(self.ctx, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self + (-other)

    def __repr__(self):
        from .expr_io import print_tensor

        return f"TensorPoly(n={self.ctx.n}, {print_tensor(self)!r})"


class GradientVec:
    """An ordered n-tuple of polynomials ``(P_1, ..., P_n)``; indexing is 0-based."""

    __slots__ = ("ctx", "entries")

    def __init__(self, ctx: AlgebraContext, entries: Iterable[Poly]):
        entries = tuple(entries)
        if len(entries) != ctx.n:
            raise ArityMismatchError(f"expected {ctx.n} entries, got {len(entries)}")
        for p in entries:
            if not isinstance(p, Poly):
                raise TypeError(f"entries must be Poly, got {type(p).__name__}")
            if p.ctx != ctx:
                raise ContextMismatchError(f"entry lives in n={p.ctx.n}, tuple in n={ctx.n}")
        self.ctx = ctx
        self.entries = entries

    @classmethod
    def zeros(cls, ctx: AlgebraContext) -> GradientVec:
        return cls(ctx, [ctx.zero()] * ctx.n)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if not isinstance(other, GradientVec):
            return NotImplemented
        return self.ctx == other.ctx and self.entries == other.entries

    def __hash__(self):
        return hash((self.ctx, self.entries))

    def __add__(self, other):
        if not isinstance(other, GradientVec):
            return NotImplemented
        _check_same(self, other)
        return GradientVec(self.ctx, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, GradientVec):
            return NotImplemented
        _check_same(self, other)
        return GradientVec(self.ctx, [a - b for a, b in zip(self.entries, other.entries)])

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.entries)

    def __repr__(self):
        return f"GradientVec(n={self.ctx.n}, [{', '.join(repr(str(p)) for p in self.entries)}])"


def add(a: Poly, b: Poly) -> Poly:
    _check_same(a, b)
    if len(a._terms) < len(b._terms):
        a, b = b, a
    acc = dict(a._terms)
    for w, c in b._terms.items():
        _accumulate(acc, w, c)
    return Poly._raw(a.ctx, acc)


def mul(a: Poly, b: Poly) -> Poly:
    """Noncommutative product: bilinear extension of word concatenation."""
    _check_same(a, b)
    acc: dict[Word, Fraction] = {}
    for u, cu in a._terms.items():
        for v, cv in b._terms.items():
            _accumulate(acc, u + v, cu * cv)
    return Poly._raw(a.ctx, acc)


def scale(c, a: Poly) -> Poly:
    c = as_coefficient(c)
    if not c:
        return Poly._raw(a.ctx, {})
    return Poly._raw(a.ctx, {w: c * v for w, v in a._terms.items()})


def bimodule_act(left: Poly, t: TensorPoly, right: Poly) -> TensorPoly:
    """``left . t . right`` with ``a(b (x) c) = ab (x) c`` and ``(b (x) c)d = b (x) cd``."""
    _check_same(left, t)
    _check_same(t, right)
    acc: dict = {}
    for (u, v), c in t._terms.items():
        for a, ca in left._terms.items():
            for d, cd in right._terms.items():
                _accumulate(acc, (a + u, v + d), ca * c * cd)
    return TensorPoly._raw(t.ctx, acc)


def flip_multiply(t: TensorPoly) -> Poly:
    """The flipped multiplication ``u (x) v -> v u``, extended linearly."""
    acc: dict[Word, Fraction] = {}
    for (u, v), c in t._terms.items():
        _accumulate(acc, v + u, c)
    return Poly._raw(t.ctx, acc)


def homogeneous_component(p: Poly, d: int) -> Poly:
    return Poly._raw(p.ctx, {w: c for w, c in p._terms.items() if len(w) == d})
