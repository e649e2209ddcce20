"""Finite graded modules, submodules, colon operators and annihilators."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .algebra import (
    MAX_ORDER,
    Check,
    GradedRing,
    Violation,
    _additive_closure,
    _binary_violations,
    _check_order,
    _Elements,
    _first,
    _labels,
    _subgroup_violations,
    _table,
    _unary,
    direct_sum_table,
)
from .errors import PreconditionError, SizeBoundError, StructureError, ValidationError


def validate_graded_module(
    ring: GradedRing,
    add: Sequence[Sequence[int]],
    action: Sequence[Sequence[int]],
    components: Sequence[Iterable[int]],
    zero: int = 0,
    neg: Sequence[int] | None = None,
) -> list[Violation]:
    """Every violated module or grading axiom with a witness; empty means valid."""
    n = _check_order(len(add), "module")
    add = _table(add, n, n, n, "module add")
    action = _table(action, ring.order, n, n, "module action")
    if neg is None:
        neg = [next((y for y in range(n) if add[x][y] == zero), 0) for x in range(n)]
    neg = _unary(neg, n, "module neg")
    comps = [frozenset(c) or frozenset({zero}) for c in components]
    if len(comps) != ring.group.order:
        raise StructureError("module grading needs one component per group element")
    if any(not 0 <= x < n for c in comps for x in c):
        raise StructureError("module grading refers to non-elements")

    A = np.array(add)
    act = np.array(action)
    radd = np.array(ring.ring.add)
    rmul = np.array(ring.ring.mul)
    out = _binary_violations(A, "module addition", commutative=True)
    if any(add[zero][x] != x for x in range(n)):
        out.append(Violation("module additive identity", (zero,)))
    bad = [x for x in range(n) if add[x][neg[x]] != zero]
    if bad:
        out.append(Violation("module additive inverse", (bad[0],)))
    w = _first(act[:, A] != A[act[:, :, None], act[:, None, :]])
    if w:
        out.append(Violation("r(m+m') = rm + rm'", w))
    w = _first(act[radd] != A[act[:, None, :], act[None, :, :]])
    if w:
        out.append(Violation("(r+r')m = rm + r'm", w))
    w = _first(act[rmul] != act[np.arange(ring.order)[:, None, None], act[None, :, :]])
    if w:
        out.append(Violation("(rr')m = r(r'm)", w))
    bad = [m for m in range(n) if action[ring.one][m] != m]
    if bad:
        out.append(Violation("1m = m", (bad[0],)))
    if out:
        return out

    G = ring.group
    for g, c in enumerate(comps):
        out += _subgroup_violations(G.labels[g], c, add, neg, zero)
    if out:
        return out
    _, v = direct_sum_table(n, add, zero, comps)
    if v:
        out.append(v)
    for g in range(G.order):
        for h in range(G.order):
            target = comps[G.op[g][h]]
            hit = next(
                ((r, m) for r in sorted(ring.components[g]) for m in sorted(comps[h]) if action[r][m] not in target),
                None,
            )
            if hit:
                out.append(Violation("R_g M_h in M_gh", (g, h) + hit))
    return out


class GradedModule(_Elements):
    """Validated finite graded module; immutable after construction."""

    def __init__(self, ring: GradedRing, add, action, components, zero: int = 0, neg=None, labels=None, name=""):
        report = validate_graded_module(ring, add, action, components, zero, neg)
        if report:
            raise ValidationError("graded module", report)
        n = len(add)
        self.ring = ring
        self.order = n
        self.add_table = _table(add, n, n, n, "module add")
        self.action = _table(action, ring.order, n, n, "module action")
        self.zero = int(zero)
        if neg is None:
            neg = [next(y for y in range(n) if self.add_table[x][y] == self.zero) for x in range(n)]
        self.neg_table = _unary(neg, n, "module neg")
        self.components = tuple(frozenset(c) or frozenset({self.zero}) for c in components)
        self.labels = _labels(labels, n, "module")
        self.name = name
        self._decomp, _ = direct_sum_table(n, self.add_table, self.zero, self.components)
        self._cache: dict = {}
        self.meta: dict = {}

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def act(self, r: int, m: int) -> int:
        return self.action[r][m]

    def decompose(self, m: int) -> dict[int, int]:
        return dict(enumerate(self._decomp[m]))

    @cached_property
    def homogeneous(self) -> frozenset[int]:
        return frozenset().union(*self.components)

    @cached_property
    def h_star(self) -> frozenset[int]:
        return self.homogeneous - {self.zero}

    @property
    def is_zero(self) -> bool:
        return self.order == 1

    @cached_property
    def whole(self) -> "Submodule":
        return Submodule(self, frozenset(range(self.order)))

    @cached_property
    def zero_submodule(self) -> "Submodule":
        return Submodule(self, frozenset({self.zero}))

    def sub(self, elements: Iterable) -> "Submodule":
        """Submodule object from ids or labels (membership axioms are not checked here)."""
        return Submodule(self, self.elements(elements))

    def span(self, X: Iterable[int]) -> frozenset[int]:
        return _additive_closure(X, self.add_table, self.zero)

    def __repr__(self) -> str:
        return f"GradedModule({self.name or 'order=%d' % self.order})"


@dataclass(frozen=True)
class Submodule:
    """An explicit subset of a module carrier."""

    parent: GradedModule = field(compare=False, repr=False)
    elements: frozenset[int]

    def __contains__(self, m: int) -> bool:
        return m in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __le__(self, other: "Submodule") -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: "Submodule") -> bool:
        return self.elements < other.elements

    @property
    def is_proper(self) -> bool:
        return len(self.elements) < self.parent.order

    def sort_key(self):
        return (len(self.elements), tuple(sorted(self.elements)))

    def labels(self) -> list[str]:
        return self.parent.fmt(self.elements)

    def __repr__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


def regular_module(R: GradedRing) -> GradedModule:
    M = GradedModule(R, R.ring.add, R.ring.mul, R.components, R.zero, R.ring.neg, R.labels, name=R.name or "R")
    M.meta["regular"] = True
    return M


def zn_module(R: GradedRing, n: int, components=None) -> GradedModule:
    """Z_n over a ring whose labels are integers, acting by r*m mod n."""
    try:
        ints = [int(lab) for lab in R.labels]
    except ValueError as exc:
        raise StructureError("zn_module needs a ring with integer labels") from exc
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    action = [[(r * m) % n for m in range(n)] for r in ints]
    if components is None:
        components = [frozenset({0})] * R.group.order
        components[R.group.identity] = frozenset(range(n))
    return GradedModule(R, add, action, components, 0, None, None, name=f"Z{n}")


def direct_sum(*modules: GradedModule) -> GradedModule:
    """M_1 + ... + M_k over a common ring, graded componentwise."""
    R = modules[0].ring
    if any(M.ring is not R for M in modules):
        raise PreconditionError("direct_sum needs modules over the same ring object")
    tuples = list(itertools.product(*(range(M.order) for M in modules)))
    if len(tuples) > MAX_ORDER:
        raise SizeBoundError(f"direct sum has {len(tuples)} elements")
    index = {t: i for i, t in enumerate(tuples)}
    add = [[index[tuple(M.add(a, b) for M, a, b in zip(modules, s, t))] for t in tuples] for s in tuples]
    action = [[index[tuple(M.act(r, a) for M, a in zip(modules, t))] for t in tuples] for r in range(R.order)]
    comps = [
        frozenset(index[t] for t in itertools.product(*(sorted(M.components[g]) for M in modules)))
        for g in range(R.group.order)
    ]
    labels = ["(" + ",".join(M.labels[a] for M, a in zip(modules, t)) + ")" for t in tuples]
    zero = index[tuple(M.zero for M in modules)]
    out = GradedModule(R, add, action, comps, zero, None, labels, name="+".join(M.name for M in modules))
    out.meta["summands"] = modules
    out.meta["index"] = index
    return out


def submodule_as_module(L: Submodule) -> tuple[GradedModule, list[int]]:
    """L as a graded module on its own; returns it with the inclusion map (new id -> old id)."""
    M = L.parent
    if not is_graded_submodule(L):
        raise PreconditionError("submodule_as_module needs a graded submodule")
    old = sorted(L.elements)
    new = {m: i for i, m in enumerate(old)}
    add = [[new[M.add(a, b)] for b in old] for a in old]
    action = [[new[M.act(r, a)] for a in old] for r in range(M.ring.order)]
    comps = [frozenset(new[m] for m in c & L.elements) for c in M.components]
    labels = [M.labels[m] for m in old]
    return GradedModule(M.ring, add, action, comps, new[M.zero], None, labels, name=f"sub({M.name})"), old


# --------------------------------------------------------------------------
# submodule predicates


def submodule_check(N: Submodule) -> Check:
    M = N.parent
    X = N.elements
    if M.zero not in X:
        return Check(False, (M.zero,), "contains zero")
    for a in sorted(X):
        if M.neg(a) not in X:
            return Check(False, (a,), "closed under negation")
        for b in sorted(X):
            if M.add(a, b) not in X:
                return Check(False, (a, b), "closed under addition")
    for r in range(M.ring.order):
        for a in sorted(X):
            if M.act(r, a) not in X:
                return Check(False, (r, a), "closed under the ring action")
    return Check(True)


def is_graded_submodule(N: Submodule) -> Check:
    """Submodule axioms, then component closure (witness ``(m, g, m_g)``)."""
    base = submodule_check(N)
    if not base:
        return base
    M = N.parent
    for m in sorted(N.elements):
        for g, mg in M.decompose(m).items():
            if mg not in N.elements:
                return Check(False, (m, g, mg), "homogeneous component escapes")
    return Check(True)


def generated_submodule(M: GradedModule, gens: Iterable[int]) -> Submodule:
    seed = {M.act(r, g) for g in gens for r in range(M.ring.order)}
    return Submodule(M, M.span(seed))


def ideal_times(M: GradedModule, I: Iterable[int], X: Iterable[int]) -> Submodule:
    """I·X: all finite sums of a·x (a submodule whenever I is an ideal)."""
    X = list(X)
    return Submodule(M, M.span({M.act(a, x) for a in I for x in X}))


def colon_ideal(N: Submodule) -> frozenset[int]:
    """(N :_R M) = {r : rM is contained in N}."""
    M = N.parent
    key = ("colon", N.elements)
    if key not in M._cache:
        M._cache[key] = frozenset(
            r for r in range(M.ring.order) if all(M.action[r][m] in N.elements for m in range(M.order))
        )
    return M._cache[key]


def colon_between(K: Submodule, L: Submodule) -> frozenset[int]:
    """(K :_R L) = {r : rL is contained in K}."""
    M = K.parent
    return frozenset(r for r in range(M.ring.order) if all(M.action[r][m] in K.elements for m in L.elements))


def annihilator(N: Submodule) -> frozenset[int]:
    M = N.parent
    return frozenset(r for r in range(M.ring.order) if all(M.action[r][m] == M.zero for m in N.elements))


def colon_submodule(N: Submodule, r: int) -> Submodule:
    """(N :_M r) = {m : rm in N}."""
    M = N.parent
    return Submodule(M, frozenset(m for m in range(M.order) if M.action[r][m] in N.elements))


def ring_colon(I: Iterable[int], R: GradedRing, t: int) -> frozenset[int]:
    """(I :_R t) for an ideal I."""
    I = frozenset(I)
    return frozenset(r for r in range(R.order) if R.mul(r, t) in I)


def hz_set(M: GradedModule) -> frozenset[int]:
    nz = M.h_star
    return frozenset(r for r in M.ring.homogeneous if any(M.act(r, m) == M.zero for m in nz))


def enumerate_graded_submodules(M: GradedModule) -> list[Submodule]:
    """All graded submodules, ordered by size then by sorted element ids.

    Every graded submodule is a sum of cyclic submodules Rm with m
    homogeneous, so a breadth-first closure over those sums finds them all.
    """
    if "graded_subs" in M._cache:
        return M._cache["graded_subs"]
    if M.order > MAX_ORDER:
        raise SizeBoundError(f"module of order {M.order} exceeds {MAX_ORDER}")
    cyclic = {m: generated_submodule(M, [m]).elements for m in sorted(M.h_star)}
    start = frozenset({M.zero})
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for X in frontier:
            for m, C in cyclic.items():
                if m in X:
                    continue
                Y = M.span(X | C)
                if Y not in seen:
                    seen.add(Y)
                    nxt.append(Y)
        frontier = nxt
    subs = sorted((Submodule(M, X) for X in seen), key=Submodule.sort_key)
    M._cache["graded_subs"] = subs
    return subs


def graded_ideals(R: GradedRing) -> list[frozenset[int]]:
    return [N.elements for N in enumerate_graded_submodules(R.regular_module)]


def is_multiplication_module(M: GradedModule) -> Check:
    """N = (N :_R M)M for every graded N; the witness is the first failing N."""
    everything = range(M.order)
    for N in enumerate_graded_submodules(M):
        if ideal_times(M, colon_ideal(N), everything).elements != N.elements:
            return Check(False, N, "N != (N:M)M")
    return Check(True)


def is_graded_simple(M: GradedModule) -> Check:
    if M.is_zero:
        return Check(True, None, "degenerate: zero module")
    subs = enumerate_graded_submodules(M)
    if len(subs) == 2:
        return Check(True)
    return Check(False, subs[1], "nontrivial proper graded submodule")


def submodule_product(N: Submodule, K: Submodule) -> Submodule:
    """NK = (N:M)(K:M)M, defined only on multiplication modules."""
    M = N.parent
    if "multiplication" not in M._cache:
        M._cache["multiplication"] = bool(is_multiplication_module(M))
    if not M._cache["multiplication"]:
        raise PreconditionError("submodule product is defined only for multiplication modules")
    IJ = M.ring.product_set(colon_ideal(N), colon_ideal(K))
    return ideal_times(M, IJ, range(M.order))
