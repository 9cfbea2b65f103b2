"""Mode calculus for descendant states of the vacuum.

A state is a linear combination of normal-form terms built from the
conformal vector w (the L(-2) vacuum descendant), its translation
derivatives D^a w, and right-nested (-1)-products

    (a_1, ..., a_j)  <->  P(D^{a_1} w, P(D^{a_2} w, ... D^{a_j} w)),

with the empty term () standing for the vacuum itself.  Every PBW word
L(-n_1)...L(-n_k) applied to the vacuum lands in this normal form through
two rules: L(-n) u = (1/(n-2)!) P(D^{n-2} w, u) for n >= 2, and
L(-1) u = D u distributed as a derivation.

Modes of composite states are evaluated on Verma vectors recursively:

    w_m         = L(m-1),
    (D x)_m     = -m * x_{m-1},
    (P(x,y))_m  = sum_{i<0} x_i y_{m-1-i} + sum_{i>=0} y_{m-1-i} x_i,

where both sums are finite on any vector of a module graded in nonnegative
degrees: a mode u_k lowers degree d to d + deg(u) - k - 1, so indices whose
image degree would be negative contribute nothing.  For a state u of degree
k, u_n maps degree d to degree d + k - n - 1.

The degree-6 state s and the degree-4 state u that drive the c = 1/2
classification and its characteristic-7 degeneration are provided as named
constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .scalars import Ring, Scalar
from .verma import (
    ModuleParams,
    Partition,
    VermaModule,
    VermaVector,
    partitions,
    verma_module,
)

StateTerm = Tuple[int, ...]
StateWord = Dict[StateTerm, Scalar]


def term_degree(t: StateTerm) -> int:
    """Conformal degree: w has degree 2, D adds 1, P adds degrees."""
    return sum(2 + a for a in t)


def state_degree(state: StateWord) -> int:
    """Common degree of the terms of a nonzero homogeneous state."""
    degs = {term_degree(t) for t in state}
    if len(degs) != 1:
        raise ValueError("state is zero or mixes degrees")
    return degs.pop()


def state_add(acc: StateWord, other: StateWord, factor: Scalar) -> StateWord:
    """acc + factor * other, pruning zero terms; acc is consumed."""
    for t, cv in other.items():
        s = acc.get(t)
        s = factor * cv if s is None else s + factor * cv
        if s:
            acc[t] = s
        else:
            acc.pop(t, None)
    return acc


def build_state(word: Sequence[int], ring: Ring = None) -> StateWord:
    """Normal form of L(word[0])...L(word[-1]) applied to the vacuum.

    All entries must be negative; the rightmost operator acts first.  A
    leading L(-1) reaching the bare vacuum yields the zero state.
    """
    if ring is None:
        ring = Ring(0)
    if not word:
        raise ValueError("empty mode word")
    if any(m >= 0 for m in word):
        raise ValueError("vacuum descendants use negative modes only")
    state: StateWord = {(): ring.one()}
    for mode in reversed(list(word)):
        n = -mode
        new: StateWord = {}
        if n == 1:
            for t, cv in state.items():
                for i in range(len(t)):
                    u = t[:i] + (t[i] + 1,) + t[i + 1 :]
                    s = new.get(u)
                    s = cv if s is None else s + cv
                    if s:
                        new[u] = s
                    else:
                        new.pop(u, None)
        else:
            f = ring.of_int(1) / ring.of_int(math.factorial(n - 2))
            for t, cv in state.items():
                new[(n - 2,) + t] = cv * f
        state = new
    return state


def named_state(name: str, ring: Ring = None) -> StateWord:
    """The named states driving the c = 1/2 story.

    "s" is the degree-6 combination 64 L(-2)^3 + 93 L(-3)^2
    - 264 L(-4)L(-2) - 108 L(-6) of vacuum descendants; "u" is the degree-4
    combination L(-2)^2 - 2 L(-4).
    """
    if ring is None:
        ring = Ring(0)
    out: StateWord = {}
    for coeff, word in named_state_pbw(name):
        out = state_add(out, build_state(word, ring), ring.of_int(coeff))
    return out


def named_state_pbw(name: str) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
    """Integer combination of PBW mode words defining a named state."""
    if name == "s":
        return ((64, (-2, -2, -2)), (93, (-3, -3)), (-264, (-4, -2)), (-108, (-6,)))
    if name == "u":
        return ((1, (-2, -2)), (-2, (-4,)))
    raise ValueError(f'unknown state name {name!r} (expected "s" or "u")')


def named_state_verma(name: str, module: VermaModule) -> VermaVector:
    """The named state as a vector of the Verma module (PBW action on v)."""
    acc = VermaVector.zero()
    for coeff, word in named_state_pbw(name):
        part = tuple(sorted((-m for m in word), reverse=True))
        acc = acc + module.monomial(part).scale(module.ring.of_int(coeff))
    return acc


class ModeEngine:
    """Evaluator of state modes on one Verma module, memoized per
    (term, mode, basis monomial)."""

    def __init__(self, module: VermaModule):
        self.module = module
        self.ring = module.ring
        self._memo: Dict[Tuple[StateTerm, int, Partition], Dict[Partition, Scalar]] = {}
        # Convention self-test: w_1 must act as L(0).
        got = self._term((0,), 1, ())
        want = module._act(0, ())
        if got != want:
            raise AssertionError("mode convention self-test failed: w_1 != L(0)")

    def _term(self, t: StateTerm, m: int, part: Partition) -> Dict[Partition, Scalar]:
        key = (t, m, part)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        d = sum(part)
        if d + term_degree(t) - m - 1 < 0:
            out: Dict[Partition, Scalar] = {}
        elif not t:
            out = {part: self.ring.one()} if m == -1 else {}
        elif len(t) == 1:
            a = t[0]
            if a == 0:
                out = dict(self.module._act(m - 1, part))
            else:
                f = self.ring.of_int(-m)
                out = {}
                if f:
                    out = state_like_scale(self._term((a - 1,), m - 1, part), f)
        else:
            x, y = (t[0],), t[1:]
            dx, dy = term_degree(x), term_degree(y)
            out = {}
            for i in range(m - d - dy, 0):
                inner = self._term(y, m - 1 - i, part)
                out = self._compose(x, i, inner, out)
            for i in range(0, d + dx):
                inner = self._term(x, i, part)
                out = self._compose(y, m - 1 - i, inner, out)
        self._memo[key] = out
        return out

    def _compose(self, t: StateTerm, k: int, inner: Dict[Partition, Scalar], acc: Dict[Partition, Scalar]) -> Dict[Partition, Scalar]:
        for q, cv in inner.items():
            for r, cw in self._term(t, k, q).items():
                s = acc.get(r)
                s = cv * cw if s is None else s + cv * cw
                if s:
                    acc[r] = s
                else:
                    acc.pop(r, None)
        return acc

    def apply(self, state: StateWord, n: int, target: VermaVector) -> VermaVector:
        out: Dict[Partition, Scalar] = {}
        for t, c in state.items():
            for part, cv in target.terms.items():
                f = c * cv
                if not f:
                    continue
                for q, cw in self._term(t, n, part).items():
                    s = out.get(q)
                    s = f * cw if s is None else s + f * cw
                    if s:
                        out[q] = s
                    else:
                        out.pop(q, None)
        return VermaVector(out)


def state_like_scale(d: Dict[Partition, Scalar], f: Scalar) -> Dict[Partition, Scalar]:
    return {k: f * v for k, v in d.items()}


def _as_module(params) -> VermaModule:
    if isinstance(params, VermaModule):
        return params
    if isinstance(params, ModuleParams):
        return verma_module(params.c, params.h, params.ring)
    raise TypeError(f"expected ModuleParams or VermaModule, got {params!r}")


def engine_for(params) -> ModeEngine:
    module = _as_module(params)
    eng = getattr(module, "_mode_engine", None)
    if eng is None:
        eng = ModeEngine(module)
        module._mode_engine = eng
    return eng


def mode_apply(state: StateWord, n: int, target: VermaVector, params) -> VermaVector:
    """The mode u_n of a composite state u, applied to a Verma vector."""
    return engine_for(params).apply(state, n, target)


@dataclass
class AnnihilationReport:
    """Outcome of checking that a state kills an irreducible quotient."""

    state_degree: int
    checks: int = 0
    violations: List[Tuple[int, int, Partition]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_annihilation(state: StateWord, params, max_mode: int, max_target_degree: int) -> AnnihilationReport:
    """Check that every mode of the state maps every degree slice of the
    irreducible quotient L(c, h) to zero.

    The quotient is realized inside the Verma module as basis monomials
    modulo the contravariant-form radical; an image vanishes in L(c, h)
    exactly when the Gram matrix annihilates its coordinates.  Modes n run
    over -max_mode <= n and land in degrees <= max_target_degree, so all
    needed Gram matrices stay small.  Violations are collected, not raised.
    """
    module = _as_module(params)
    eng = engine_for(module)
    deg_s = state_degree(state)
    zero = module.ring.zero()
    report = AnnihilationReport(state_degree=deg_s)
    for d in range(max_target_degree + 1):
        basis = partitions(d)
        lo = max(-max_mode, d + deg_s - 1 - max_target_degree)
        for n in range(lo, d + deg_s):
            d_out = d + deg_s - n - 1
            gram = module.gram_matrix(d_out)
            out_basis = gram.basis
            for part in basis:
                img = eng.apply(state, n, module.monomial(part) if part else module.vacuum())
                report.checks += 1
                if not img:
                    continue
                coords = img.coords(out_basis, zero)
                for row in gram.entries:
                    acc = zero
                    for g, x in zip(row, coords):
                        if g and x:
                            acc = acc + g * x
                    if acc:
                        report.violations.append((d, n, part))
                        break
    return report
