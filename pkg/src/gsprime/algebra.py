"""Finite groups, finite commutative rings and validated group gradings.

Every structure is a dense table over element ids ``0..order-1``. Tables are
stored as tuples of tuples so element-level loops stay cheap; the cubic axiom
checks go through numpy so that order-64 carriers validate in milliseconds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .errors import StructureError, ValidationError

MAX_ORDER = 64


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "witness": list(self.witness)}


@dataclass(frozen=True)
class Check:
    """Boolean verdict carrying the witness that decided it."""

    ok: bool
    witness: Any = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _table(rows: Sequence[Sequence[int]], n_rows: int, n_cols: int, n_vals: int, what: str):
    rows = tuple(tuple(int(v) for v in row) for row in rows)
    if len(rows) != n_rows or any(len(r) != n_cols for r in rows):
        raise StructureError(f"{what}: expected a {n_rows}x{n_cols} table")
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if not 0 <= v < n_vals:
                raise StructureError(f"{what}[{i}][{j}] = {v} is not an element id")
    return rows


def _unary(vals: Sequence[int], n: int, what: str):
    vals = tuple(int(v) for v in vals)
    if len(vals) != n or any(not 0 <= v < n for v in vals):
        raise StructureError(f"{what}: expected {n} element ids")
    return vals


def _labels(labels, n: int, what: str) -> tuple[str, ...]:
    if labels is None:
        return tuple(str(i) for i in range(n))
    labels = tuple(str(x) for x in labels)
    if len(labels) != n:
        raise StructureError(f"{what}: expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise StructureError(f"{what}: labels are not distinct")
    return labels


def _check_order(n: int, what: str) -> int:
    n = int(n)
    if n < 1:
        raise StructureError(f"{what}: order must be positive")
    if n > MAX_ORDER:
        raise StructureError(f"{what}: order {n} exceeds the bound {MAX_ORDER}")
    return n


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


def _binary_violations(op: np.ndarray, name: str, commutative: bool) -> list[Violation]:
    out = []
    n = op.shape[0]
    idx = np.arange(n)
    lhs = op[op[:, :, None], idx[None, None, :]]
    rhs = op[idx[:, None, None], op[None, :, :]]
    w = _first(lhs != rhs)
    if w:
        out.append(Violation(f"{name} associativity", w))
    if commutative:
        w = _first(op != op.T)
        if w:
            out.append(Violation(f"{name} commutativity", w))
    return out


class _Elements:
    """Label lookup shared by rings, groups and modules."""

    labels: tuple[str, ...]
    order: int

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def element(self, ref) -> int:
        """Resolve an element given as an id or as its label."""
        if isinstance(ref, bool):
            raise StructureError(f"bad element reference {ref!r}")
        if isinstance(ref, (int, np.integer)):
            if 0 <= ref < self.order:
                return int(ref)
            raise StructureError(f"element id {ref} out of range 0..{self.order - 1}")
        ref = str(ref).strip()
        if ref in self._label_index:
            return self._label_index[ref]
        if ref.lstrip("-").isdigit():
            return self.element(int(ref))
        raise StructureError(f"unknown element {ref!r}")

    def elements(self, refs: Iterable) -> frozenset[int]:
        return frozenset(self.element(r) for r in refs)

    def label(self, x: int) -> str:
        return self.labels[x]

    def fmt(self, xs: Iterable[int]) -> list[str]:
        return [self.labels[x] for x in sorted(xs)]


# --------------------------------------------------------------------------
# groups


class FiniteGroup(_Elements):
    def __init__(self, op, identity: int = 0, inverse=None, labels=None):
        n = _check_order(len(op), "group")
        self.order = n
        self.op = _table(op, n, n, n, "group op")
        self.identity = int(identity)
        if not 0 <= self.identity < n:
            raise StructureError("group identity out of range")
        if inverse is None:
            inverse = [next((y for y in range(n) if self.op[x][y] == self.identity), 0) for x in range(n)]
        self.inverse = _unary(inverse, n, "group inverse")
        self.labels = _labels(labels, n, "group")
        bad = group_violations(self)
        if bad:
            raise ValidationError("group", bad)

    def mul(self, a: int, b: int) -> int:
        return self.op[a][b]

    def power(self, a: int, k: int) -> int:
        out = self.identity
        for _ in range(k):
            out = self.op[out][a]
        return out

    @cached_property
    def is_abelian(self) -> bool:
        return all(self.op[a][b] == self.op[b][a] for a in range(self.order) for b in range(a))

    def same_as(self, other: "FiniteGroup") -> bool:
        return self is other or (self.op == other.op and self.identity == other.identity)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


def group_violations(G: FiniteGroup) -> list[Violation]:
    op = np.array(G.op)
    out = _binary_violations(op, "group", commutative=False)
    e = G.identity
    for x in range(G.order):
        if op[e, x] != x or op[x, e] != x:
            out.append(Violation("two-sided identity", (x,)))
            break
    for x in range(G.order):
        if op[G.inverse[x], x] != e:
            out.append(Violation("inverse", (x,)))
            break
    for r in range(G.order):
        if len(set(op[r].tolist())) != G.order:
            out.append(Violation("latin square (rows)", (r,)))
            break
        if len(set(op[:, r].tolist())) != G.order:
            out.append(Violation("latin square (columns)", (r,)))
            break
    return out


def cyclic_group(n: int, name: str = "g") -> FiniteGroup:
    """C_n with labels ``e, g, g^2, ...``."""
    labels = ["e"] + [name if k == 1 else f"{name}^{k}" for k in range(1, n)]
    op = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(op, 0, [(-a) % n for a in range(n)], labels)


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


def product_group(*groups: FiniteGroup) -> FiniteGroup:
    sizes = [G.order for G in groups]
    tuples = list(itertools.product(*(range(s) for s in sizes)))
    index = {t: i for i, t in enumerate(tuples)}
    op = [[index[tuple(G.op[a][b] for G, a, b in zip(groups, s, t))] for t in tuples] for s in tuples]
    labels = ["(" + ",".join(G.labels[a] for G, a in zip(groups, t)) + ")" for t in tuples]
    return FiniteGroup(op, 0, None, labels)


# --------------------------------------------------------------------------
# rings


class FiniteRing(_Elements):
    """Commutative ring with unity given by addition and multiplication tables.

    Construction only checks that the tables are well formed; the ring axioms
    are checked by :func:`ring_violations`, which :class:`GradedRing` runs
    eagerly.
    """

    def __init__(self, add, mul, zero: int = 0, one: int = 1, neg=None, labels=None):
        n = _check_order(len(add), "ring")
        self.order = n
        self.add = _table(add, n, n, n, "ring add")
        self.mul = _table(mul, n, n, n, "ring mul")
        self.zero = int(zero)
        self.one = int(one)
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise StructureError("ring zero/one out of range")
        if neg is None:
            neg = [next((y for y in range(n) if self.add[x][y] == self.zero), 0) for x in range(n)]
        self.neg = _unary(neg, n, "ring neg")
        self.labels = _labels(labels, n, "ring")

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def __repr__(self) -> str:
        return f"FiniteRing(order={self.order})"


def ring_violations(R: FiniteRing) -> list[Violation]:
    add = np.array(R.add)
    mul = np.array(R.mul)
    n = R.order
    out = _binary_violations(add, "addition", commutative=True)
    if any(R.add[R.zero][x] != x for x in range(n)):
        out.append(Violation("additive identity", (next(x for x in range(n) if R.add[R.zero][x] != x),)))
    bad = [x for x in range(n) if R.add[x][R.neg[x]] != R.zero]
    if bad:
        out.append(Violation("additive inverse", (bad[0],)))
    out += _binary_violations(mul, "multiplication", commutative=True)
    idx = np.arange(n)
    # a(b + c) = ab + ac
    lhs = mul[idx[:, None, None], add[None, :, :]]
    rhs = add[mul[:, :, None], mul[:, None, :]]
    w = _first(lhs != rhs)
    if w:
        out.append(Violation("distributivity", w))
    if R.one == R.zero:
        out.append(Violation("one != zero", (R.one,)))
    bad = [x for x in range(n) if R.mul[R.one][x] != x]
    if bad:
        out.append(Violation("multiplicative identity", (bad[0],)))
    return out


def zn_ring(n: int) -> FiniteRing:
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return FiniteRing(add, mul, 0, 1 % n)


def poly_quotient_ring(p: int, modulus: Sequence[int], var: str = "x") -> FiniteRing:
    """Z_p[var]/(f) for monic ``f`` given by coefficients, constant term first.

    Element ids encode coefficient vectors in base ``p``: ``c0 + c1*p + ...``.
    """
    modulus = [c % p for c in modulus]
    d = len(modulus) - 1
    if d < 1 or modulus[-1] != 1:
        raise StructureError("modulus must be monic of degree >= 1")
    vecs = [tuple((x // p**i) % p for i in range(d)) for x in range(p**d)]
    code = {v: i for i, v in enumerate(vecs)}

    def reduce(coeffs: list[int]) -> tuple[int, ...]:
        coeffs = [c % p for c in coeffs]
        for k in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[k]
            if c:
                for i in range(d + 1):
                    coeffs[k - d + i] = (coeffs[k - d + i] - c * modulus[i]) % p
        return tuple((coeffs + [0] * d)[:d])

    def times(u, v):
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(u):
            for j, b in enumerate(v):
                prod[i + j] += a * b
        return reduce(prod)

    def plus(u, v):
        return tuple((a + b) % p for a, b in zip(u, v))

    def label(v):
        terms = []
        for i, c in enumerate(v):
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mono)
        return "+".join(terms) or "0"

    add = [[code[plus(u, v)] for v in vecs] for u in vecs]
    mul = [[code[times(u, v)] for v in vecs] for u in vecs]
    one = code[tuple([1] + [0] * (d - 1))]
    return FiniteRing(add, mul, 0, one, None, [label(v) for v in vecs])


def poly_grading_components(p: int, degree: int, group: FiniteGroup, var_degree: int) -> list[frozenset[int]]:
    """Components of Z_p[x]/(f) graded by deg(x^i) = var_degree^i (ids as in poly_quotient_ring)."""
    comps: list[set[int]] = [set() for _ in range(group.order)]
    for v in itertools.product(range(p), repeat=degree):
        support = {group.power(var_degree, i) for i, c in enumerate(v) if c}
        x = sum(c * p**i for i, c in enumerate(v))
        if not support:
            for comp in comps:
                comp.add(x)
        elif len(support) == 1:
            comps[support.pop()].add(x)
    return [frozenset(c) for c in comps]


# --------------------------------------------------------------------------
# gradings


def _additive_closure(seed: Iterable[int], add, zero: int) -> frozenset[int]:
    out = {zero}
    frontier = list(set(seed) - out)
    out.update(frontier)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(out):
                c = add[a][b]
                if c not in out:
                    out.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(out)


def _subgroup_violations(label: str, comp: frozenset[int], add, neg, zero: int) -> list[Violation]:
    if zero not in comp:
        return [Violation(f"component {label} contains zero", (zero,))]
    for a in sorted(comp):
        if neg[a] not in comp:
            return [Violation(f"component {label} closed under negation", (a,))]
        for b in sorted(comp):
            if add[a][b] not in comp:
                return [Violation(f"component {label} closed under addition", (a, b))]
    return []


def direct_sum_table(order: int, add, zero: int, comps: Sequence[frozenset[int]]):
    """Map every element to its unique tuple of components.

    Returns ``(table, None)`` or ``(None, violation)``. When the component
    sizes multiply to more than ``order`` a collision is found within
    ``order + 1`` sums, so the enumeration stays bounded.
    """
    table: dict[int, tuple[int, ...]] = {}
    for parts in itertools.product(*(sorted(c) for c in comps)):
        x = zero
        for y in parts:
            x = add[x][y]
        if x in table:
            return None, Violation("direct sum: non-unique decomposition", (x, table[x], parts))
        table[x] = parts
    missing = [x for x in range(order) if x not in table]
    if missing:
        return None, Violation("direct sum: element not a sum of components", (missing[0],))
    return tuple(table[x] for x in range(order)), None


class Grading:
    """Assignment of an additive subgroup ``R_g`` to every element ``g`` of a group."""

    def __init__(
        self,
        group: FiniteGroup,
        components: Mapping[int, Iterable[int]] | Sequence[Iterable[int]],
        zero: int = 0,
    ):
        self.group = group
        if isinstance(components, Mapping):
            comps = [frozenset(components.get(g, ())) for g in range(group.order)]
            unknown = set(components) - set(range(group.order))
            if unknown:
                raise StructureError(f"grading names unknown group elements {sorted(unknown)}")
        else:
            comps = [frozenset(c) for c in components]
            if len(comps) != group.order:
                raise StructureError("grading needs one component per group element")
        # an omitted component is the zero subgroup
        comps = [c or frozenset({zero}) for c in comps]
        self.components: tuple[frozenset[int], ...] = tuple(comps)

    @classmethod
    def trivial(cls, group: FiniteGroup, order: int, zero: int = 0) -> "Grading":
        comps = [frozenset({zero})] * group.order
        comps[group.identity] = frozenset(range(order))
        return cls(group, comps, zero)


def grading_violations(R: FiniteRing, grading: Grading) -> list[Violation]:
    G = grading.group
    comps = grading.components
    out: list[Violation] = []
    for g, c in enumerate(comps):
        out += _subgroup_violations(G.labels[g], c, R.add, R.neg, R.zero)
    if out:
        return out
    _, v = direct_sum_table(R.order, R.add, R.zero, comps)
    if v:
        out.append(v)
    for g in range(G.order):
        for h in range(G.order):
            target = comps[G.op[g][h]]
            hit = next(((a, b) for a in sorted(comps[g]) for b in sorted(comps[h]) if R.mul[a][b] not in target), None)
            if hit:
                out.append(Violation("R_g R_h in R_gh", (g, h) + hit))
    if R.one not in comps[G.identity]:
        out.append(Violation("one in R_e", (R.one,)))
    return out


def validate_graded_ring(ring: FiniteRing, grading: Grading) -> list[Violation]:
    """Every violated ring or grading axiom, each with a witness; empty means valid."""
    if any(not 0 <= x < ring.order for c in grading.components for x in c):
        raise StructureError("grading refers to elements outside the ring")
    return ring_violations(ring) + grading_violations(ring, grading)


class GradedRing(_Elements):
    """A validated pair (ring, grading); immutable after construction."""

    def __init__(self, ring: FiniteRing, grading: Grading, name: str = ""):
        report = validate_graded_ring(ring, grading)
        if report:
            raise ValidationError("graded ring", report)
        self.ring = ring
        self.grading = grading
        self.group = grading.group
        self.name = name
        self.order = ring.order
        self.labels = ring.labels
        self.zero, self.one = ring.zero, ring.one
        self.components = grading.components
        self._decomp, _ = direct_sum_table(ring.order, ring.add, ring.zero, self.components)
        self.meta: dict[str, Any] = {}

    def add(self, a: int, b: int) -> int:
        return self.ring.add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.ring.mul[a][b]

    def neg(self, a: int) -> int:
        return self.ring.neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.ring.sub(a, b)

    def decompose(self, x: int) -> dict[int, int]:
        return dict(enumerate(self._decomp[x]))

    def degree(self, x: int) -> int | None:
        """Degree of a nonzero homogeneous element, else None."""
        nz = [g for g, c in enumerate(self._decomp[x]) if c != self.zero]
        return nz[0] if len(nz) == 1 else None

    @cached_property
    def homogeneous(self) -> frozenset[int]:
        return frozenset().union(*self.components)

    @cached_property
    def h_star(self) -> frozenset[int]:
        return self.homogeneous - {self.zero}

    @cached_property
    def support(self) -> tuple[int, ...]:
        return tuple(g for g, c in enumerate(self.components) if c != {self.zero})

    @cached_property
    def inverses(self) -> dict[int, int]:
        mul, one = self.ring.mul, self.one
        return {a: b for a in range(self.order) for b in range(self.order) if mul[a][b] == one}

    @cached_property
    def units(self) -> frozenset[int]:
        return frozenset(self.inverses)

    @cached_property
    def homogeneous_units(self) -> frozenset[int]:
        return self.units & self.homogeneous

    @cached_property
    def regular_module(self):
        """R as a graded module over itself."""
        from .modules import regular_module

        return regular_module(self)

    def ideal_generated(self, gens: Iterable[int]) -> frozenset[int]:
        mul = self.ring.mul
        seed = {mul[r][g] for g in gens for r in range(self.order)}
        return _additive_closure(seed, self.ring.add, self.zero)

    def product_set(self, A: Iterable[int], B: Iterable[int]) -> frozenset[int]:
        """The ideal-style product: additive closure of all a*b."""
        mul = self.ring.mul
        return _additive_closure({mul[a][b] for a in A for b in B}, self.ring.add, self.zero)

    def __repr__(self) -> str:
        return f"GradedRing({self.name or 'order=%d' % self.order}, |G|={self.group.order})"


def graded_ring(ring: FiniteRing, group: FiniteGroup | None = None, components=None, name: str = "") -> GradedRing:
    """Build and validate; ``components=None`` means the trivial grading."""
    group = group or trivial_group()
    if components is None:
        grading = Grading.trivial(group, ring.order, ring.zero)
    else:
        grading = Grading(group, components, ring.zero)
    return GradedRing(ring, grading, name)


def decompose(R: GradedRing, x: int) -> dict[int, int]:
    return R.decompose(x)


def h_star(R: GradedRing) -> frozenset[int]:
    return R.h_star


def homogeneous_units(R: GradedRing) -> frozenset[int]:
    return R.homogeneous_units


def ideal_check(R: GradedRing, I: frozenset[int]) -> Check:
    if R.zero not in I:
        return Check(False, (R.zero,), "ideal contains zero")
    for a in sorted(I):
        for b in sorted(I):
            if R.add(a, b) not in I:
                return Check(False, (a, b), "ideal closed under addition")
    for r in range(R.order):
        for a in sorted(I):
            if R.mul(r, a) not in I:
                return Check(False, (r, a), "ideal absorbs multiplication")
    return Check(True)


def is_graded_ideal(R: GradedRing, I: Iterable[int]) -> Check:
    """Ideal axioms first, then component closure.

    A component failure carries the witness ``(x, g, x_g)``.
    """
    I = frozenset(I)
    base = ideal_check(R, I)
    if not base:
        return base
    for x in sorted(I):
        for g, xg in R.decompose(x).items():
            if xg not in I:
                return Check(False, (x, g, xg), "homogeneous component escapes")
    return Check(True)


def is_graded_field(R: GradedRing) -> bool:
    return R.h_star <= R.homogeneous_units


def crossed_product_units(R: GradedRing) -> dict[int, int] | None:
    """Smallest unit in each supported component, or None if some component has none."""
    out = {}
    for g in R.support:
        found = sorted(R.components[g] & R.units)
        if not found:
            return None
        out[g] = found[0]
    return out


def is_crossed_product(R: GradedRing) -> bool:
    return crossed_product_units(R) is not None


def is_strongly_graded(R: GradedRing) -> bool:
    G = R.group
    return all(R.one in R.product_set(R.components[g], R.components[G.inverse[g]]) for g in range(G.order))
