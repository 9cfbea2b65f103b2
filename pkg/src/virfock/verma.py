"""Verma modules for the Virasoro algebra over exact coefficient rings.

The Virasoro relation used throughout:

    [L(m), L(n)] = (m - n) L(m+n) + (m^3 - m)/12 * delta_{m+n,0} * c

with the central charge c acting as a fixed ring scalar.  The Verma module
V(c, h) has the PBW basis L(-n1)...L(-nk) v indexed by partitions
(n1 >= ... >= nk >= 1); the mode action is computed by recursive
straightening (commuting positive modes to the right until they hit the
highest weight vector) and memoized per module on (mode, partition) pairs,
so repeated Gram and singular-vector computations share all work.

Every computation here is pure: vectors are immutable maps from partitions
to scalars, and independent degrees may be processed in any order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from .scalars import (
    Ring,
    RingMismatchError,
    Scalar,
    central_coeff,
    scalar_from_json,
    scalar_to_json,
)

Partition = Tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> Tuple[Partition, ...]:
    """All partitions of n with parts bounded by max_part, in descending
    lexicographic order on part lists: (n) first, (1,...,1) last."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out: List[Partition] = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def verma_dim(n: int) -> int:
    """Graded dimension of any Verma module slice, the partition count p(n)."""
    return len(partitions(n))


class VermaVector:
    """Finite linear combination of PBW basis monomials.

    terms maps partitions to nonzero scalars.  The empty partition () is the
    highest weight vector v itself.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Partition, Scalar]):
        self.terms = terms

    @classmethod
    def zero(cls) -> "VermaVector":
        return cls({})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, VermaVector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coeff(self, part: Partition, zero: Scalar = 0) -> Scalar:
        return self.terms.get(tuple(part), zero)

    def degree(self) -> int | None:
        """Common degree of all monomials, or None for zero or mixed vectors."""
        degs = {sum(p) for p in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return len({sum(p) for p in self.terms}) <= 1

    def __add__(self, other: "VermaVector") -> "VermaVector":
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return VermaVector(out)

    def __neg__(self) -> "VermaVector":
        return VermaVector({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "VermaVector") -> "VermaVector":
        return self + (-other)

    def scale(self, s: Scalar) -> "VermaVector":
        if not s:
            return VermaVector({})
        return VermaVector({k: s * v for k, v in self.terms.items()})

    def items(self) -> Iterator[Tuple[Partition, Scalar]]:
        return iter(sorted(self.terms.items(), reverse=True))

    def leading_partition(self) -> Partition:
        """Lexicographically largest partition carrying a nonzero coefficient."""
        if not self.terms:
            raise ValueError("zero vector has no leading partition")
        return max(self.terms)

    def normalized(self) -> "VermaVector":
        """Scale so the leading partition has coefficient 1."""
        lead = self.terms[self.leading_partition()]
        return VermaVector({k: v / lead for k, v in self.terms.items()})

    def coords(self, basis: Sequence[Partition], zero: Scalar) -> List[Scalar]:
        return [self.terms.get(p, zero) for p in basis]

    def to_json(self) -> list:
        return [
            {"partition": list(p), "coeff": scalar_to_json(cv)}
            for p, cv in self.items()
        ]

    @classmethod
    def from_json(cls, data: list, ring: Ring) -> "VermaVector":
        out: Dict[Partition, Scalar] = {}
        for entry in data:
            p = tuple(int(x) for x in entry["partition"])
            if any(x < 1 for x in p) or list(p) != sorted(p, reverse=True):
                raise ValueError(f"not a partition: {p}")
            cv = scalar_from_json(entry["coeff"], ring)
            if cv:
                out[p] = out.get(p, ring.zero()) + cv
        return cls({k: v for k, v in out.items() if v})

    def __repr__(self):
        if not self.terms:
            return "VermaVector(0)"
        bits = []
        for p, cv in self.items():
            mono = "".join(f"L(-{n})" for n in p) + "v"
            bits.append(f"({cv!r})*{mono}")
        return " + ".join(bits)


@dataclass(frozen=True)
class ModuleParams:
    """Central charge, highest weight, and coefficient ring of a Verma module."""

    c: Scalar
    h: Scalar
    ring: Ring


@dataclass(frozen=True)
class GramMatrix:
    """Contravariant form values on one degree slice.

    entries[i][j] = <L(-basis[i]) v, L(-basis[j]) v>, where the form is the
    unique symmetric bilinear form with <v, v> = 1 for which L(n) and L(-n)
    are adjoint.
    """

    degree: int
    basis: Tuple[Partition, ...]
    entries: Tuple[Tuple[Scalar, ...], ...]

    def rows(self) -> List[List[Scalar]]:
        return [list(r) for r in self.entries]


class VermaModule:
    """A Verma module V(c, h) with a memoized straightening action."""

    def __init__(self, c, h, ring: Ring = None):
        if ring is None:
            ring = Ring(0)
        self.ring = ring
        self.c = ring.coerce(c)
        self.h = ring.coerce(h)
        self._zero = ring.zero()
        self._one = ring.one()
        self._memo: Dict[Tuple[int, Partition], Dict[Partition, Scalar]] = {}
        self._gram: Dict[int, GramMatrix] = {}

    @property
    def params(self) -> ModuleParams:
        return ModuleParams(self.c, self.h, self.ring)

    def vacuum(self) -> VermaVector:
        return VermaVector({(): self._one})

    def monomial(self, parts: Iterable[int]) -> VermaVector:
        p = tuple(parts)
        if any(x < 1 for x in p) or list(p) != sorted(p, reverse=True):
            raise ValueError(f"not a partition: {p}")
        return VermaVector({p: self._one})

    def from_terms(self, pairs: Iterable[Tuple[Sequence[int], Scalar]]) -> VermaVector:
        acc = VermaVector.zero()
        for parts, cv in pairs:
            acc = acc + self.monomial(parts).scale(self.ring.coerce(cv))
        return acc

    def basis(self, degree: int) -> Tuple[Partition, ...]:
        return partitions(degree)

    # straightening core

    def _act(self, n: int, parts: Partition) -> Dict[Partition, Scalar]:
        """Action of L(n) on a basis monomial, as a raw term dict."""
        key = (n, parts)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if not parts:
            if n > 0:
                out: Dict[Partition, Scalar] = {}
            elif n == 0:
                out = {(): self.h} if self.h else {}
            else:
                out = {(-n,): self._one}
        elif n <= -parts[0]:
            out = {(-n,) + parts: self._one}
        else:
            m1 = parts[0]
            tail = parts[1:]
            # L(n) L(-m1) = L(-m1) L(n) + (n+m1) L(n-m1) + delta_{n,m1} cc(n) c
            out = self._prepend(m1, self._act(n, tail))
            k = self.ring.of_int(n + m1)
            if k:
                out = _merge(out, self._act(n - m1, tail), k)
            if n == m1:
                z = central_coeff(n, self.ring) * self.c
                if z:
                    out = _merge(out, {tail: self._one}, z)
        self._memo[key] = out
        return out

    def _prepend(self, m1: int, terms: Dict[Partition, Scalar]) -> Dict[Partition, Scalar]:
        """Left multiply by L(-m1), restraightening where the order breaks."""
        out: Dict[Partition, Scalar] = {}
        for p, cv in terms.items():
            if not p or m1 >= p[0]:
                q = (m1,) + p
                s = out.get(q)
                s = cv if s is None else s + cv
                if s:
                    out[q] = s
                else:
                    out.pop(q, None)
            else:
                out = _merge(out, self._act(-m1, p), cv)
        return out

    def apply_mode(self, n: int, vec: VermaVector) -> VermaVector:
        """L(n) applied to a vector.  Degree m maps to degree m - n."""
        out: Dict[Partition, Scalar] = {}
        for p, cv in vec.terms.items():
            out = _merge(out, self._act(n, p), cv)
        return VermaVector(out)

    def apply_word(self, modes: Sequence[int], vec: VermaVector) -> VermaVector:
        """Apply the operator product L(modes[0]) L(modes[1]) ... , i.e. the
        last listed mode acts first."""
        for n in reversed(list(modes)):
            vec = self.apply_mode(n, vec)
        return vec

    def gram_matrix(self, degree: int) -> GramMatrix:
        """Contravariant Gram matrix of one degree slice.

        Entry (i, j) pairs basis monomials lambda, mu by applying the adjoint
        word L(lambda_k)...L(lambda_1) to L(-mu) v and reading the
        coefficient of v.  Computed entrywise with no symmetry shortcut; the
        test suite checks symmetry independently.
        """
        cached = self._gram.get(degree)
        if cached is not None:
            return cached
        basis = partitions(degree)
        cols = [self.monomial(mu) if mu else self.vacuum() for mu in basis]
        rows = []
        for lam in basis:
            row = []
            for w in cols:
                r = w
                for part in lam:
                    r = self.apply_mode(part, r)
                row.append(r.terms.get((), self._zero))
            rows.append(tuple(row))
        g = GramMatrix(degree, basis, tuple(rows))
        self._gram[degree] = g
        return g

    def project_vacuum_module(self, vec: VermaVector) -> VermaVector:
        """Image in the quotient by the submodule generated by L(-1) v.

        When h = 0 that submodule is spanned degreewise by the monomials whose
        partition contains a part 1, so the quotient is realized by dropping
        those monomials.  Only meaningful for h = 0.
        """
        if self.h:
            raise ValueError("vacuum quotient is only defined at h = 0")
        return VermaVector({p: cv for p, cv in vec.terms.items() if 1 not in p})


def _merge(acc: Dict[Partition, Scalar], add: Dict[Partition, Scalar], factor: Scalar) -> Dict[Partition, Scalar]:
    """acc + factor * add, pruning zeros; acc is consumed and returned."""
    for k, v in add.items():
        s = acc.get(k)
        t = factor * v if s is None else s + factor * v
        if t:
            acc[k] = t
        else:
            acc.pop(k, None)
    return acc


_module_cache: Dict[ModuleParams, VermaModule] = {}


def verma_module(c, h, ring: Ring = None) -> VermaModule:
    """Shared VermaModule instances keyed by (c, h, ring), so straightening
    memoization accumulates across callers."""
    if ring is None:
        ring = Ring(0)
    key = ModuleParams(ring.coerce(c), ring.coerce(h), ring)
    mod = _module_cache.get(key)
    if mod is None:
        mod = VermaModule(key.c, key.h, ring)
        _module_cache[key] = mod
    return mod


def apply_mode(n: int, vec: VermaVector, params: ModuleParams) -> VermaVector:
    """Functional form of the mode action for a given parameter triple."""
    return verma_module(params.c, params.h, params.ring).apply_mode(n, vec)


def gram_matrix(params: ModuleParams, degree: int) -> GramMatrix:
    """Functional form of the Gram matrix for a given parameter triple."""
    return verma_module(params.c, params.h, params.ring).gram_matrix(degree)
