"""Finitely generated Z-modules with grade tags, decided exactly via Hermite normal form.

Elements are integer (or, for divisible fixtures, rational) vectors. Free
coordinates come first, torsion coordinates after them; the grade of a
coordinate is an element of the cyclic group Z_k stored as an int.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import PreconditionError, StructureError

Vector = tuple


def hnf_with_transform(A: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style Hermite normal form ``H`` and unimodular ``U`` with ``U A = H``.

    ``H`` is in echelon form with positive pivots, entries above each pivot
    reduced into ``[0, pivot)``, and zero rows last.
    """
    H = [[int(v) for v in row] for row in A]
    m = len(H)
    n = len(H[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]

    def sub_row(i, k, q):
        if q:
            H[i] = [a - q * b for a, b in zip(H[i], H[k])]
            U[i] = [a - q * b for a, b in zip(U[i], U[k])]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(H[i][c]), i))
            H[r], H[p] = H[p], H[r]
            U[r], U[p] = U[p], U[r]
            clean = True
            for i in range(r + 1, m):
                if H[i][c]:
                    sub_row(i, r, H[i][c] // H[r][c])
                    clean = clean and H[i][c] == 0
            if clean:
                break
        if r < m and H[r][c]:
            if H[r][c] < 0:
                H[r] = [-a for a in H[r]]
                U[r] = [-a for a in U[r]]
            for i in range(r):
                sub_row(i, r, H[i][c] // H[r][c])
            r += 1
    return H, U


def hnf(A: Sequence[Sequence[int]]) -> list[list[int]]:
    """Nonzero rows of the Hermite normal form of ``A``."""
    if not A:
        return []
    H, _ = hnf_with_transform(A)
    return [row for row in H if any(row)]


def left_kernel(A: Sequence[Sequence[int]]) -> list[list[int]]:
    """Integer basis of {x : x A = 0}."""
    H, U = hnf_with_transform(A)
    return [u for u, h in zip(U, H) if not any(h)]


def _back_substitute(H: list[list[int]], v: Sequence, exact: bool) -> tuple[list, list]:
    """Coefficients c with v = c H (rational if ``exact`` is False), plus the residual."""
    v = list(v)
    coeffs = []
    for row in H:
        p = next(j for j, a in enumerate(row) if a)
        if exact:
            q, rem = divmod(v[p], row[p])
            if rem:
                return coeffs, v
        else:
            q = Fraction(v[p], row[p])
        coeffs.append(q)
        v = [a - q * b for a, b in zip(v, row)]
    return coeffs, v


# --------------------------------------------------------------------------
# modules and submodules


@dataclass(frozen=True)
class IntLatticeModule:
    free_rank: int
    torsion_moduli: tuple[int, ...] = ()
    coordinate_grades: tuple[int, ...] = ()
    group_order: int = 2
    rational: bool = False
    name: str = ""

    def __post_init__(self):
        if any(q < 2 for q in self.torsion_moduli):
            raise StructureError("torsion moduli must be >= 2")
        if self.rational and self.torsion_moduli:
            raise StructureError("rational coordinates carry no torsion")
        if len(self.coordinate_grades) != self.dim:
            raise StructureError("one grade per coordinate")
        if any(not 0 <= g < self.group_order for g in self.coordinate_grades):
            raise StructureError("grade outside the grading group")

    @property
    def dim(self) -> int:
        return self.free_rank + len(self.torsion_moduli)

    def relations(self) -> list[list[int]]:
        out = []
        for k, q in enumerate(self.torsion_moduli):
            row = [0] * self.dim
            row[self.free_rank + k] = q
            out.append(row)
        return out

    def reduce(self, v: Sequence) -> Vector:
        if len(v) != self.dim:
            raise StructureError(f"expected a vector of length {self.dim}")
        v = [Fraction(a) if self.rational else int(a) for a in v]
        for k, q in enumerate(self.torsion_moduli):
            v[self.free_rank + k] %= q
        return tuple(v)

    def generators(self) -> list[Vector]:
        if self.rational:
            raise PreconditionError("a rational vector space is not finitely generated over Z")
        return [tuple(int(i == j) for j in range(self.dim)) for i in range(self.dim)]

    def grade(self, v: Sequence) -> int | None:
        """Grade of a nonzero homogeneous vector, None otherwise."""
        v = self.reduce(v)
        grades = {self.coordinate_grades[i] for i, a in enumerate(v) if a}
        return grades.pop() if len(grades) == 1 else None

    def is_homogeneous(self, v: Sequence) -> bool:
        v = self.reduce(v)
        return not any(v) or self.grade(v) is not None

    def scale(self, r, v: Sequence) -> Vector:
        return self.reduce([r * a for a in v])


@dataclass(frozen=True)
class LatticeSubmodule:
    parent: IntLatticeModule
    generators: tuple[Vector, ...]

    @cached_property
    def denominator(self) -> int:
        d = 1
        for g in self.generators:
            for a in g:
                d = math.lcm(d, Fraction(a).denominator)
        return d

    @cached_property
    def reduced_form(self) -> list[list[int]]:
        """HNF of the scaled generators together with the torsion relations."""
        d = self.denominator
        rows = [[int(Fraction(a) * d) for a in g] for g in self.generators]
        rows += [[d * a for a in rel] for rel in self.parent.relations()]
        return hnf(rows) if rows else []

    def __contains__(self, v) -> bool:
        return lattice_membership(self, v)

    def __le__(self, other: "LatticeSubmodule") -> bool:
        return all(lattice_membership(other, g) for g in self.generators)

    def same_as(self, other: "LatticeSubmodule") -> bool:
        return self <= other and other <= self


def submodule(M: IntLatticeModule, gens: Iterable[Sequence]) -> LatticeSubmodule:
    return LatticeSubmodule(M, tuple(M.reduce(g) for g in gens))


def lattice_membership(N: LatticeSubmodule, v: Sequence) -> bool:
    M = N.parent
    if len(v) != M.dim:
        raise StructureError(f"dimension mismatch: {len(v)} vs {M.dim}")
    scaled = [Fraction(a) * N.denominator for a in v]
    if any(a.denominator != 1 for a in scaled):
        return False
    ints = [int(a) for a in scaled]
    if not N.reduced_form:
        return not any(M.reduce(v))
    _, residual = _back_substitute(N.reduced_form, ints, exact=True)
    return not any(residual)


def lattice_colon_ideal(N: LatticeSubmodule, gens: Iterable[Sequence] | None = None) -> int:
    """d >= 0 with (N :_Z M) = dZ; d = 0 encodes {0}."""
    M = N.parent
    if gens is None:
        if M.rational:
            # rM = M for r != 0, and M is not contained in a finitely generated N
            return 0 if M.free_rank else 1
        gens = M.generators()
    d = 1
    for g in gens:
        dg = _order_modulo(N, g)
        if dg == 0:
            return 0
        d = math.lcm(d, dg)
    return d


def _order_modulo(N: LatticeSubmodule, g: Sequence) -> int:
    """Least r > 0 with r g in N, or 0 if none exists."""
    H = N.reduced_form
    v = [Fraction(a) * N.denominator for a in g]
    if not H:
        return 0 if any(N.parent.reduce(g)) else 1
    coeffs, residual = _back_substitute(H, v, exact=False)
    if any(residual):
        return 0
    d = 1
    for c in coeffs:
        d = math.lcm(d, Fraction(c).denominator)
    return d


def lattice_colon_submodule(N: LatticeSubmodule, t: int) -> LatticeSubmodule:
    """(N :_M t) = {m : tm in N}, for integer modules."""
    M = N.parent
    if M.rational:
        raise PreconditionError("colon submodules are computed for integer lattices only")
    if t == 0:
        return submodule(M, M.generators())
    H = N.reduced_form
    n = M.dim
    rows = [list(h) for h in H] + [[-t * int(i == j) for j in range(n)] for i in range(n)]
    ker = left_kernel(rows)
    gens = [tuple(k[len(H):]) for k in ker]
    return submodule(M, gens or [tuple([0] * n)])


# --------------------------------------------------------------------------
# witnesses and bounded search


def verify_nonprime_witness(N: LatticeSubmodule, r: int, m: Sequence, s: int = 1) -> bool:
    """rm in N, sr outside (N :_Z M) and sm outside N.

    With s = 1 this certifies that N is not graded prime.
    """
    M = N.parent
    d = lattice_colon_ideal(N)
    in_colon = (s * r == 0) if d == 0 else (s * r) % d == 0
    return lattice_membership(N, M.scale(r, m)) and not in_colon and not lattice_membership(N, M.scale(s, m))


@dataclass
class FalsifyResult:
    counterexample: tuple[int, Vector] | None
    bound: int
    checked: int

    @property
    def label(self) -> str:
        if self.counterexample is None:
            return f"no counterexample up to bound {self.bound}"
        return "counterexample found"


def _signed_range(B: int) -> list[int]:
    return [0] + [x for k in range(1, B + 1) for x in (k, -k)]


def homogeneous_vectors(M: IntLatticeModule, B: int) -> Iterable[Vector]:
    """Homogeneous vectors with every coordinate bounded by B, ordered by grade then coordinates."""
    seen = set()
    for g in sorted(set(M.coordinate_grades)):
        ranges = []
        for i in range(M.dim):
            if M.coordinate_grades[i] != g:
                ranges.append([0])
            elif i >= M.free_rank:
                ranges.append(list(range(min(B, M.torsion_moduli[i - M.free_rank] - 1) + 1)))
            elif M.rational:
                ranges.append(sorted({Fraction(a, b) for a in range(-B, B + 1) for b in range(1, B + 1)}, key=lambda x: (abs(x), x < 0)))
            else:
                ranges.append(_signed_range(B))
        for v in itertools.product(*ranges):
            if v not in seen:
                seen.add(v)
                yield v


def bounded_sprime_falsify(N: LatticeSubmodule, s: int, B: int) -> FalsifyResult:
    """Search homogeneous r (|r| <= B) and m (coordinates bounded by B) violating s-primeness.

    The first violation in the order (|r|, sign of r, grade, coordinates) is
    returned; finding none is bounded evidence only.
    """
    if s == 0:
        raise PreconditionError("s must be nonzero")
    M = N.parent
    d = lattice_colon_ideal(N)
    if B <= 0:
        return FalsifyResult(None, B, 0)

    def in_colon(x: int) -> bool:
        return x == 0 if d == 0 else x % d == 0

    ms = list(homogeneous_vectors(M, B))
    s_ok = [lattice_membership(N, M.scale(s, m)) for m in ms]
    checked = 0
    for r in _signed_range(B):
        if in_colon(s * r):
            continue
        for m, sm_in in zip(ms, s_ok):
            checked += 1
            if not sm_in and lattice_membership(N, M.scale(r, m)):
                return FalsifyResult((r, M.reduce(m)), B, checked)
    return FalsifyResult(None, B, checked)


@dataclass
class LatticeColonFamily:
    base: LatticeSubmodule
    entries: list[tuple[int, LatticeSubmodule]]
    maximal_ts: list[int] = field(default_factory=list)
    distinct_maximal: list[LatticeSubmodule] = field(default_factory=list)

    @property
    def witness(self) -> int:
        return self.maximal_ts[0]


def lattice_colon_family(N: LatticeSubmodule, t_range: Iterable[int]) -> LatticeColonFamily:
    """Colons (N :_M t) over a finite range; maximality is relative to that range."""
    d = lattice_colon_ideal(N)
    entries = []
    for t in t_range:
        if t == 0 or (d and t % d == 0):
            raise PreconditionError(f"t = {t} lies in (N :_Z M)")
        entries.append((t, lattice_colon_submodule(N, t)))
    maximal = []
    for t, C in entries:
        if not any(C <= D and not D <= C for _, D in entries):
            maximal.append(t)
    distinct: list[LatticeSubmodule] = []
    for t, C in entries:
        if t in maximal and not any(C.same_as(D) for D in distinct):
            distinct.append(C)
    return LatticeColonFamily(N, entries, maximal, distinct)
