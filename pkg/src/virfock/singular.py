"""Singular vectors, contravariant-form radicals, and irreducible characters.

A singular vector is a homogeneous vector of positive degree killed by every
positive mode; since L(1) and L(2) generate all L(m), m >= 1, under
bracketing, the solver intersects just those two kernels on a degree slice.

The maximal graded submodule of V(c, h) equals the radical of the
contravariant form (any graded submodule vanishing in degree 0 pairs to zero
with everything, and the radical is such a submodule), so the graded
dimensions of the irreducible quotient L(c, h) are exactly the Gram ranks.
This holds over every supported field, in any characteristic other than 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from .linalg import SpanBuilder, nullspace, rank
from .scalars import GF, Ring, Scalar, reduce_mod_p, scalar_to_str
from .verma import (
    ModuleParams,
    Partition,
    VermaModule,
    VermaVector,
    partitions,
    verma_dim,
    verma_module,
)


def _as_module(params) -> VermaModule:
    if isinstance(params, VermaModule):
        return params
    if isinstance(params, ModuleParams):
        return verma_module(params.c, params.h, params.ring)
    raise TypeError(f"expected ModuleParams or VermaModule, got {params!r}")


@dataclass(frozen=True)
class SingularBasis:
    """Basis of the joint kernel of L(1), L(2) on one degree slice.

    Vectors are homogeneous of the given degree, linearly independent, and
    scaled so the lexicographically largest partition has coefficient 1.
    """

    params: ModuleParams
    degree: int
    vectors: Tuple[VermaVector, ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def to_json(self) -> dict:
        return {
            "c": scalar_to_str(self.params.c),
            "h": scalar_to_str(self.params.h),
            "char": self.params.ring.char,
            "degree": self.degree,
            "vectors": [w.to_json() for w in self.vectors],
        }


@dataclass(frozen=True)
class CharRow:
    """Graded dimensions at one degree: Verma slice, form radical, quotient."""

    degree: int
    verma: int
    radical: int
    irreducible: int


@dataclass(frozen=True)
class CharacterTable:
    """Graded dimension data of V(c,h), its radical, and L(c,h), degrees 0..N."""

    params: ModuleParams
    rows: Tuple[CharRow, ...]

    def irreducible(self) -> List[int]:
        return [r.irreducible for r in self.rows]

    def radical(self) -> List[int]:
        return [r.radical for r in self.rows]

    def to_json(self) -> dict:
        return {
            "c": scalar_to_str(self.params.c),
            "h": scalar_to_str(self.params.h),
            "char": self.params.ring.char,
            "rows": [
                {
                    "degree": r.degree,
                    "verma": r.verma,
                    "radical": r.radical,
                    "irreducible": r.irreducible,
                }
                for r in self.rows
            ],
        }


def singular_space(params, degree: int) -> SingularBasis:
    """All singular vectors of the given degree, as a normalized basis.

    Stacks the coefficient matrices of L(1): V(n) -> V(n-1) and
    L(2): V(n) -> V(n-2) and returns their joint nullspace.  An empty basis
    is a valid result.
    """
    mod = _as_module(params)
    if degree < 1:
        raise ValueError("singular vectors have positive degree")
    ring = mod.ring
    basis = partitions(degree)
    zero = ring.zero()
    images = [(m, partitions(degree - m)) for m in (1, 2) if degree - m >= 0]
    rows: List[List[Scalar]] = []
    cols = [mod.apply_mode(1, mod.monomial(p)) for p in basis]
    cols2 = [mod.apply_mode(2, mod.monomial(p)) for p in basis]
    for m, target in images:
        imgs = cols if m == 1 else cols2
        for q in target:
            rows.append([w.terms.get(q, zero) for w in imgs])
    coords = nullspace(rows, ring, ncols=len(basis))
    vectors = []
    for x in coords:
        w = VermaVector({p: cv for p, cv in zip(basis, x) if cv})
        vectors.append(w.normalized())
    return SingularBasis(mod.params, degree, tuple(vectors))


def is_singular(vec: VermaVector, params) -> bool:
    """True when the nonzero homogeneous vector is killed by L(1) and L(2)."""
    if not vec:
        raise ValueError("the zero vector is not eligible")
    if not vec.is_homogeneous():
        raise ValueError("singularity is only defined for homogeneous vectors")
    mod = _as_module(params)
    return not mod.apply_mode(1, vec) and not mod.apply_mode(2, vec)


def singular_degrees(params, max_degree: int) -> List[int]:
    """Degrees 1..max_degree carrying at least one singular vector."""
    return [n for n in range(1, max_degree + 1) if singular_space(params, n).vectors]


def radical_basis(params, degree: int) -> List[VermaVector]:
    """Basis of the contravariant-form radical on one degree slice."""
    mod = _as_module(params)
    g = mod.gram_matrix(degree)
    coords = nullspace(g.rows(), mod.ring, ncols=len(g.basis))
    return [
        VermaVector({p: cv for p, cv in zip(g.basis, x) if cv}) for x in coords
    ]


def irreducible_dims(params, max_degree: int) -> CharacterTable:
    """Graded dimensions of the irreducible quotient via Gram ranks."""
    mod = _as_module(params)
    if mod.ring.formal:
        raise ValueError("irreducible dimensions need a field, not a formal ring")
    rows = []
    for n in range(max_degree + 1):
        g = mod.gram_matrix(n)
        r = rank(g.rows(), mod.ring)
        rows.append(CharRow(n, verma_dim(n), verma_dim(n) - r, r))
    return CharacterTable(mod.params, tuple(rows))


def reduce_vector_mod_p(vec: VermaVector, p: int) -> VermaVector:
    """Image of a rational vector in the F_p module, along the lattice spanned
    by its own leading term.

    The leading coefficient is normalized to 1 first, then every coefficient
    is reduced mod p; terms whose image is 0 drop out silently.  Raises
    DenominatorDivisibleByP when some normalized coefficient has p in its
    denominator, meaning the vector has no image along this lattice.
    """
    if not vec:
        return VermaVector.zero()
    out: Dict[Partition, Scalar] = {}
    for part, cv in vec.normalized().terms.items():
        if not isinstance(cv, Fraction):
            raise TypeError("reduction starts from a rational vector")
        img = reduce_mod_p(cv, p)
        if img:
            out[part] = img
    return VermaVector(out)


def generated_submodule_dims(params, seeds: Sequence[VermaVector], max_degree: int) -> List[int]:
    """Graded dimensions of the submodule generated by singular seed vectors.

    Each seed must be homogeneous and killed by all positive modes, so the
    submodule is spanned by lowering words applied to seeds; slices are
    saturated degree by degree with the generators L(-1)..L(-max_degree).
    """
    mod = _as_module(params)
    zero = mod.ring.zero()
    spans: List[SpanBuilder] = [SpanBuilder(mod.ring) for _ in range(max_degree + 1)]
    slices: List[List[VermaVector]] = [[] for _ in range(max_degree + 1)]

    def push(w: VermaVector) -> None:
        d = w.degree()
        if d is None or d > max_degree:
            return
        if spans[d].add(w.coords(partitions(d), zero)):
            slices[d].append(w)

    for w in seeds:
        if not w:
            continue
        if not is_singular(w, mod):
            raise ValueError("seed vectors must be singular")
        push(w)
    for d in range(max_degree + 1):
        for w in slices[d]:
            for k in range(1, max_degree - d + 1):
                push(mod.apply_mode(-k, w))
    return [b.dim for b in spans]
