"""Free-fermion Fock spaces with their Virasoro action, in both sectors.

The one-fermion space has modes a(m) obeying {a(m), a(n)} = delta_{m+n,0},
with a(0)^2 = 1/2 in the integer-moded sector.  Two sectors are supported:

* "NS": modes in Z + 1/2; basis monomials a(-n_1)...a(-n_k) with
  n_1 > ... > n_k >= 1/2.
* "R": modes in Z; basis monomials with n_1 > ... > n_k >= 0, so a(0)
  appears at most once and always last.

Half-integers are stored doubled: a monomial is a strictly decreasing tuple
of doubled magnitudes (odd positive for NS, even nonnegative for R).  The
sign convention is fixed once: inserting or removing a factor counts the
transpositions needed to bring it in from the left.

The Virasoro operators are the normal-ordered quadratics

    L(n) = 1/2 * sum_j j :a(-j) a(n+j):   (+ 1/16 on L(0) in the R sector)

with normal ordering placing the larger mode index on the right; they
realize central charge 1/2.  The grading used for dimension counts is the
sector-adjusted degree: a monomial of weight w counts in degree w - s/2 in
NS parity s, and in degree w in R.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .linalg import SpanBuilder, nullspace
from .scalars import GF, QQ, Ring, Scalar, reduce_mod_p, scalar_to_json, scalar_from_json

FockMonomial = Tuple[int, ...]

NS = "NS"
RAMOND = "R"

_SECTORS = (NS, RAMOND)


def _dbl(x) -> int:
    """Doubled value of an integer or half-integer mode."""
    d = Fraction(x) * 2
    if d.denominator != 1:
        raise ValueError(f"mode {x} is not a half-integer")
    return int(d)


def _check_sector(sector: str) -> str:
    if sector not in _SECTORS:
        raise ValueError(f'sector must be "NS" or "R", got {sector!r}')
    return sector


def _mode_in_sector(m2: int, sector: str) -> bool:
    return (m2 % 2 != 0) if sector == NS else (m2 % 2 == 0)


def mode_str(m2: int) -> str:
    """Render a doubled mode value: integers plainly, halves as 'n/2'."""
    if m2 % 2 == 0:
        return str(m2 // 2)
    return f"{m2}/2"


def monomial_str(t: FockMonomial) -> str:
    if not t:
        return "1"
    return "".join("a(0)" if n2 == 0 else f"a(-{mode_str(n2)})" for n2 in t)


def _valid_monomial(t: FockMonomial, sector: str) -> bool:
    if any(t[i] <= t[i + 1] for i in range(len(t) - 1)):
        return False
    if sector == NS:
        return all(n2 > 0 and n2 % 2 == 1 for n2 in t)
    return all(n2 >= 0 and n2 % 2 == 0 for n2 in t)


class FockVector:
    """Finite linear combination of Fock basis monomials in a fixed sector."""

    __slots__ = ("sector", "ring", "terms")

    def __init__(self, sector: str, ring: Ring, terms: Dict[FockMonomial, Scalar]):
        self.sector = _check_sector(sector)
        self.ring = ring
        self.terms = terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FockVector)
            and self.sector == other.sector
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.sector, frozenset(self.terms.items())))

    def _like(self, terms: Dict[FockMonomial, Scalar]) -> "FockVector":
        return FockVector(self.sector, self.ring, terms)

    def __add__(self, other: "FockVector") -> "FockVector":
        if other.sector != self.sector:
            raise ValueError("cannot add vectors from different sectors")
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._like(out)

    def __neg__(self) -> "FockVector":
        return self._like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def scale(self, s: Scalar) -> "FockVector":
        if not s:
            return self._like({})
        return self._like({k: s * v for k, v in self.terms.items()})

    def coeff(self, t: FockMonomial, zero: Scalar = 0) -> Scalar:
        return self.terms.get(tuple(t), zero)

    def items(self):
        return iter(sorted(self.terms.items(), reverse=True))

    def max_weight2(self) -> int:
        """Largest doubled weight among the monomials (0 for the zero vector)."""
        return max((sum(t) for t in self.terms), default=0)

    def weight2(self) -> Optional[int]:
        """Common doubled weight, or None for zero or mixed vectors."""
        ws = {sum(t) for t in self.terms}
        if len(ws) == 1:
            return ws.pop()
        return None

    def weight(self) -> Optional[Fraction]:
        w2 = self.weight2()
        return None if w2 is None else Fraction(w2, 2)

    def parity(self) -> Optional[int]:
        """Common monomial-length parity (0 even, 1 odd), or None if mixed."""
        ps = {len(t) % 2 for t in self.terms}
        if len(ps) == 1:
            return ps.pop()
        return None

    def adjusted_degree(self) -> int:
        """Sector-adjusted degree of a homogeneous parity-pure vector."""
        w2, par = self.weight2(), self.parity()
        if w2 is None or par is None:
            raise ValueError("adjusted degree needs a homogeneous, parity-pure vector")
        return (w2 - par) // 2 if self.sector == NS else w2 // 2

    def leading_monomial(self) -> FockMonomial:
        if not self.terms:
            raise ValueError("zero vector has no leading monomial")
        return max(self.terms)

    def normalized(self) -> "FockVector":
        lead = self.terms[self.leading_monomial()]
        return self._like({k: v / lead for k, v in self.terms.items()})

    def coords(self, basis: Sequence[FockMonomial], zero: Scalar) -> List[Scalar]:
        return [self.terms.get(t, zero) for t in basis]

    def to_json(self) -> list:
        return [
            {"sector": self.sector, "modes": list(t), "coeff": scalar_to_json(cv)}
            for t, cv in self.items()
        ]

    @classmethod
    def from_json(cls, data: list, sector: str, ring: Ring) -> "FockVector":
        out: Dict[FockMonomial, Scalar] = {}
        for entry in data:
            if entry.get("sector", sector) != sector:
                raise ValueError("mixed sectors in serialized vector")
            t = tuple(int(x) for x in entry["modes"])
            if not _valid_monomial(t, sector):
                raise ValueError(f"invalid {sector} monomial {t}")
            cv = scalar_from_json(entry["coeff"], ring)
            if cv:
                out[t] = out.get(t, ring.zero()) + cv
        return cls(sector, ring, {k: v for k, v in out.items() if v})

    def __repr__(self):
        if not self.terms:
            return f"FockVector({self.sector}, 0)"
        bits = [f"({cv!r})*{monomial_str(t)}" for t, cv in self.items()]
        return f"FockVector({self.sector}, " + " + ".join(bits) + ")"


def vacuum(sector: str, ring: Ring = QQ) -> FockVector:
    return FockVector(sector, ring, {(): ring.one()})


def fermion_monomial(sector: str, modes: Iterable, ring: Ring = QQ) -> FockVector:
    """Basis monomial a(m_1)...a(m_k) 1 for creation modes m_1 < ... < 0
    (given in any order as integers or half-integers; magnitudes must be
    distinct and sector-matching)."""
    t = tuple(sorted((-_dbl(m) for m in modes), reverse=True))
    if any(n2 < 0 for n2 in t):
        raise ValueError("monomial factors must be creation modes a(-n), n >= 0")
    if not _valid_monomial(t, sector):
        raise ValueError(f"invalid {sector} monomial {t}")
    return FockVector(sector, ring, {t: ring.one()})


def _apply_fermion_term(m2: int, t: FockMonomial, one: Scalar):
    """a(m2/2) on one monomial: (new monomial, scalar factor) or None."""
    if m2 < 0:
        n2 = -m2
        i = 0
        while i < len(t) and t[i] > n2:
            i += 1
        if i < len(t) and t[i] == n2:
            return None
        f = one if i % 2 == 0 else -one
        return t[:i] + (n2,) + t[i:], f
    if m2 > 0:
        if m2 not in t:
            return None
        i = t.index(m2)
        f = one if i % 2 == 0 else -one
        return t[:i] + t[i + 1 :], f
    # m2 == 0: contract a trailing a(0), or append one.
    if t and t[-1] == 0:
        i = len(t) - 1
        f = (one if i % 2 == 0 else -one) / 2
        return t[:-1], f
    f = one if len(t) % 2 == 0 else -one
    return t + (0,), f


def apply_fermion(m, vec: FockVector) -> FockVector:
    """Fermion mode a(m) on a vector; m integer or half-integer per sector."""
    m2 = _dbl(m)
    if not _mode_in_sector(m2, vec.sector):
        raise ValueError(f"mode {m} does not belong to the {vec.sector} sector")
    one = vec.ring.one()
    out: Dict[FockMonomial, Scalar] = {}
    for t, cv in vec.terms.items():
        hit = _apply_fermion_term(m2, t, one)
        if hit is None:
            continue
        o, f = hit
        s = out.get(o)
        s = cv * f if s is None else s + cv * f
        if s:
            out[o] = s
        else:
            out.pop(o, None)
    return vec._like(out)


def apply_virasoro_fock(n: int, vec: FockVector) -> FockVector:
    """Virasoro mode L(n) = 1/2 sum_j j :a(-j)a(n+j): on a vector.

    The sum is truncated to |j| <= max weight of vec + |n| + 1; beyond that
    the normal-ordered pair annihilates every term.  L(0) in the R sector
    adds the 1/16 shift.
    """
    ring = vec.ring
    out = vec._like({})
    bound2 = vec.max_weight2() + 2 * abs(n) + 2
    start2 = 1 if vec.sector == NS else 0
    step = 2
    for j2 in range(start2, bound2 + 1, step):
        for sj2 in ((j2, -j2) if j2 else (0,)):
            if sj2 == 0:
                continue
            x2, y2 = -sj2, 2 * n + sj2
            if x2 <= y2:
                coeff = ring.of_int(sj2) / ring.of_int(4)
                first, second = y2, x2
            else:
                coeff = -(ring.of_int(sj2) / ring.of_int(4))
                first, second = x2, y2
            w = apply_fermion(Fraction(first, 2), vec)
            if not w:
                continue
            w = apply_fermion(Fraction(second, 2), w)
            if not w:
                continue
            out = out + w.scale(coeff)
    if n == 0 and vec.sector == RAMOND:
        out = out + vec.scale(ring.one() / ring.of_int(16))
    return out


@lru_cache(maxsize=None)
def _strict_tuples(w2: int, max2: int, step: int) -> Tuple[FockMonomial, ...]:
    """Strictly decreasing tuples of positive values from {step, 2*step, ...}
    if step even else odd values, summing to w2, largest part <= max2."""
    if w2 == 0:
        return ((),)
    out: List[FockMonomial] = []
    first = min(max2, w2)
    if step == 2:  # even positive entries
        first -= first % 2
        lo = 2
    else:  # odd entries
        if first % 2 == 0:
            first -= 1
        lo = 1
    v = first
    while v >= lo:
        for rest in _strict_tuples(w2 - v, v - 2, step):
            out.append((v,) + rest)
        v -= 2
    return tuple(out)


@lru_cache(maxsize=None)
def sector_basis(sector: str, parity: int, degree: int) -> Tuple[FockMonomial, ...]:
    """All monomials of the given parity and sector-adjusted degree, sorted
    in descending lexicographic order."""
    _check_sector(sector)
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    if degree < 0:
        return ()
    out: List[FockMonomial] = []
    if sector == NS:
        w2 = 2 * degree + parity
        for t in _strict_tuples(w2, w2, 1):
            if len(t) % 2 == parity:
                out.append(t)
    else:
        w2 = 2 * degree
        for t in _strict_tuples(w2, w2, 2):
            if len(t) % 2 == parity:
                out.append(t)
            else:
                out.append(t + (0,))
    return tuple(sorted(out, reverse=True))


def sector_dims(sector: str, parity: int, max_degree: int) -> List[int]:
    """Monomial counts per sector-adjusted degree 0..max_degree."""
    return [len(sector_basis(sector, parity, d)) for d in range(max_degree + 1)]


def sector_hw_vector(sector: str, parity: int, ring: Ring = QQ) -> FockVector:
    """The bottom basis monomial of a sector/parity pair: 1, a(-1/2)1, 1, or
    a(0)1, each a Virasoro highest weight vector of weight 0, 1/2, 1/16,
    1/16 respectively."""
    basis = sector_basis(sector, parity, 0)
    if len(basis) != 1:
        raise ValueError("bottom slice is not one-dimensional")
    return FockVector(sector, ring, {basis[0]: ring.one()})


def vir_span_dims(start: FockVector, max_degree: int) -> List[int]:
    """Graded dimensions of the span of all lowering words
    L(-k_1)...L(-k_j) start, indexed by sector-adjusted degree 0..max_degree.

    Slices are saturated degree by degree with the generators
    L(-1)..L(-max_degree); deeper words are reached iteratively.
    """
    if not start:
        raise ValueError("start vector must be nonzero")
    ring = start.ring
    sector, parity = start.sector, start.parity()
    d0 = start.adjusted_degree()
    zero = ring.zero()
    spans = [SpanBuilder(ring) for _ in range(max_degree + 1)]
    slices: List[List[FockVector]] = [[] for _ in range(max_degree + 1)]

    def push(w: FockVector) -> None:
        if not w:
            return
        d = w.adjusted_degree()
        if d > max_degree:
            return
        if spans[d].add(w.coords(sector_basis(sector, parity, d), zero)):
            slices[d].append(w)

    push(start)
    for d in range(d0, max_degree + 1):
        for w in slices[d]:
            for k in range(1, max_degree - d + 1):
                push(apply_virasoro_fock(-k, w))
    return [b.dim for b in spans]


def fock_hw_vectors(sector: str, parity: int, weight, ring: Ring = QQ) -> List[FockVector]:
    """Basis of Virasoro highest weight vectors of the given true weight:
    the joint kernel of L(1) and L(2) on that weight slice, each vector
    normalized so its lexicographically largest monomial has coefficient 1."""
    w2 = _dbl(weight)
    parity = int(parity)
    if sector == NS and (w2 - parity) % 2 != 0:
        raise ValueError(f"no NS parity-{parity} monomials of weight {weight}")
    if sector == RAMOND and w2 % 2 != 0:
        raise ValueError("R-sector weights are integers")
    degree = (w2 - parity) // 2 if sector == NS else w2 // 2
    basis = sector_basis(sector, parity, degree)
    zero = ring.zero()
    rows: List[List[Scalar]] = []
    for m in (1, 2):
        if degree - m < 0:
            continue
        target = sector_basis(sector, parity, degree - m)
        imgs = [
            apply_virasoro_fock(m, FockVector(sector, ring, {t: ring.one()}))
            for t in basis
        ]
        for q in target:
            rows.append([w.terms.get(q, zero) for w in imgs])
    coords = nullspace(rows, ring, ncols=len(basis))
    out = []
    for x in coords:
        w = FockVector(sector, ring, {t: cv for t, cv in zip(basis, x) if cv})
        out.append(w.normalized())
    return out


def sigma(vec: FockVector) -> FockVector:
    """The parity-swapping map of the R sector: right-multiplication by a(0).

    Monomials without a(0) gain a trailing a(0); monomials ending in a(0)
    contract it with coefficient 1/2.  No sign arises because the factor is
    appended at the innermost position.  Defined on even-parity vectors and
    inverts (up to the factor 2) on odd ones.
    """
    if vec.sector != RAMOND:
        raise ValueError("sigma is defined on the R sector")
    if vec.terms and vec.parity() != 0:
        raise ValueError("sigma expects an even-parity vector")
    half = vec.ring.one() / vec.ring.of_int(2)
    out: Dict[FockMonomial, Scalar] = {}
    for t, cv in vec.terms.items():
        if t and t[-1] == 0:
            out[t[:-1]] = cv * half
        else:
            out[t + (0,)] = cv
    return vec._like(out)


def fock_form(u: FockVector, v: FockVector) -> Scalar:
    """Symmetric bilinear form with the basis monomials orthogonal.

    Monomials without a(0) have squared norm 1; R-sector monomials containing
    a(0) have squared norm 1/2.  The 1/2 is forced by contravariance with
    a(0) self-adjoint: (a(0)1, a(0)1) = (1, a(0)^2 1) = 1/2.
    """
    if u.sector != v.sector:
        raise ValueError("form pairing needs a single sector")
    ring = u.ring
    half = ring.one() / ring.of_int(2)
    acc = ring.zero()
    small, large = (u.terms, v.terms) if len(u.terms) <= len(v.terms) else (v.terms, u.terms)
    for t, cv in small.items():
        w = large.get(t)
        if w is not None:
            term = cv * w
            if t and t[-1] == 0:
                term = term * half
            acc = acc + term
    return acc


def reduce_fock_mod_p(vec: FockVector, p: int) -> FockVector:
    """Entrywise image of a rational Fock vector over F_p; terms with zero
    image drop out, a denominator divisible by p raises."""
    ring = GF(p)
    out: Dict[FockMonomial, Scalar] = {}
    for t, cv in vec.terms.items():
        if not isinstance(cv, Fraction):
            raise TypeError("reduction starts from a rational vector")
        img = reduce_mod_p(cv, p)
        if img:
            out[t] = img
    return FockVector(vec.sector, ring, out)
