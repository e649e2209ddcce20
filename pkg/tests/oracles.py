"""Slow, independent reference implementations used as test oracles.

Everything here works on native Python values (ints and tuples) with the
arithmetic written out by hand, and shares no code with the package. Labels
are produced in the package's format so results can be compared as strings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable


def _term_label(coeffs, var):
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts) or "0"


@dataclass
class Brute:
    R: list
    radd: Callable
    rmul: Callable
    rcomps: list  # list of sets, identity component first
    M: list
    madd: Callable
    act: Callable
    mcomps: list
    rlabel: Callable = str
    mlabel: Callable = str

    @property
    def rzero(self):
        return next(x for x in self.R if all(self.radd(x, y) == y for y in self.R))

    @property
    def mzero(self):
        return next(x for x in self.M if all(self.madd(x, y) == y for y in self.M))

    @property
    def hR(self):
        return set().union(*self.rcomps)

    @property
    def hM(self):
        return set().union(*self.mcomps)

    def span(self, X):
        out = {self.mzero} | set(X)
        while True:
            new = {self.madd(a, b) for a in out for b in out} | {self.act(r, a) for r in self.R for a in out}
            if new <= out:
                return frozenset(out)
            out |= new

    def decompose(self, m):
        for parts in itertools.product(*self.mcomps):
            acc = self.mzero
            for p in parts:
                acc = self.madd(acc, p)
            if acc == m:
                return parts
        raise AssertionError("no decomposition")

    def is_graded(self, N):
        return all(p in N for m in N for p in self.decompose(m))

    def submodules(self):
        seen = {self.span([])}
        frontier = list(seen)
        while frontier:
            nxt = []
            for N in frontier:
                for m in self.M:
                    if m not in N:
                        K = self.span(set(N) | {m})
                        if K not in seen:
                            seen.add(K)
                            nxt.append(K)
            frontier = nxt
        return seen

    def graded_submodules(self):
        return [N for N in self.submodules() if self.is_graded(N)]

    def colon(self, N):
        return {r for r in self.R if all(self.act(r, m) in N for m in self.M)}

    def is_s_prime(self, N, s):
        col = self.colon(N)
        if s in col or len(N) == len(self.M):
            return False
        for r in self.hR:
            for m in self.hM:
                if self.act(r, m) in N and self.rmul(s, r) not in col and self.act(s, m) not in N:
                    return False
        return True

    def witnesses(self, N):
        hstar = self.hR - {self.rzero}
        return {s for s in hstar if self.is_s_prime(N, s)}

    def is_mcs(self, S):
        one = next(x for x in self.R if all(self.rmul(x, y) == y for y in self.R))
        return one in S and self.rzero not in S and S <= self.hR and all(self.rmul(a, b) in S for a in S for b in S)

    def all_mcs(self):
        hstar = sorted(self.hR - {self.rzero}, key=str)
        out = []
        for k in range(1, len(hstar) + 1):
            for S in itertools.combinations(hstar, k):
                if self.is_mcs(set(S)):
                    out.append(set(S))
        return out

    def is_S_prime(self, N, S):
        col = self.colon(N)
        if col & S:
            return False
        for s in S:
            ok = all(
                not (self.act(r, m) in N) or self.rmul(s, r) in col or self.act(s, m) in N
                for r in self.hR
                for m in self.hM
            )
            if ok:
                return True
        return False

    def rlabels(self, X):
        return sorted(self.rlabel(x) for x in X)

    def mlabels(self, X):
        return sorted(self.mlabel(x) for x in X)


def regular(R, radd, rmul, comps, label=str) -> Brute:
    return Brute(R, radd, rmul, comps, R, radd, rmul, comps, label, label)


def zn(n: int) -> Brute:
    R = list(range(n))
    return regular(R, lambda a, b: (a + b) % n, lambda a, b: (a * b) % n, [set(R)])


def zk_over_zn(n: int, k: int) -> Brute:
    R, M = list(range(n)), list(range(k))
    return Brute(R, lambda a, b: (a + b) % n, lambda a, b: (a * b) % n, [set(R)], M, lambda a, b: (a + b) % k, lambda r, m: (r * m) % k, [set(M)])


def group_ring_c2(k: int) -> Brute:
    """Z_k[C_2] as pairs (a, b) meaning a + b g, with g^2 = 1."""
    R = [(a, b) for b in range(k) for a in range(k)]
    add = lambda x, y: ((x[0] + y[0]) % k, (x[1] + y[1]) % k)
    mul = lambda x, y: ((x[0] * y[0] + x[1] * y[1]) % k, (x[0] * y[1] + x[1] * y[0]) % k)
    comps = [{(a, 0) for a in range(k)}, {(0, b) for b in range(k)}]
    return regular(R, add, mul, comps, lambda x: _term_label(x, "g"))


def quadratic(p: int, square: int, var: str, graded: bool) -> Brute:
    """Z_p[v]/(v^2 - square) as pairs (a, b) meaning a + b v."""
    R = [(a, b) for b in range(p) for a in range(p)]
    add = lambda x, y: ((x[0] + y[0]) % p, (x[1] + y[1]) % p)
    mul = lambda x, y: ((x[0] * y[0] + square * x[1] * y[1]) % p, (x[0] * y[1] + x[1] * y[0]) % p)
    comps = [{(a, 0) for a in range(p)}, {(0, b) for b in range(p)}] if graded else [set(R)]
    return regular(R, add, mul, comps, lambda x: _term_label(x, var))


def product(n1: int, n2: int) -> Brute:
    R = [(a, b) for a in range(n1) for b in range(n2)]
    add = lambda x, y: ((x[0] + y[0]) % n1, (x[1] + y[1]) % n2)
    mul = lambda x, y: ((x[0] * y[0]) % n1, (x[1] * y[1]) % n2)
    return regular(R, add, mul, [set(R)], lambda x: f"({x[0]},{x[1]})")


def idealization(n: int, k: int) -> Brute:
    """Z_n (+) Z_k: (x, a)(y, b) = (xy, xb + ya)."""
    R = [(x, a) for x in range(n) for a in range(k)]
    add = lambda u, v: ((u[0] + v[0]) % n, (u[1] + v[1]) % k)
    mul = lambda u, v: ((u[0] * v[0]) % n, (u[0] * v[1] + v[0] * u[1]) % k)
    return regular(R, add, mul, [set(R)], lambda x: f"({x[0]},{x[1]})")


def corpus() -> dict[str, Brute]:
    return {
        "Z4": zn(4),
        "Z6": zn(6),
        "Z8": zn(8),
        "Z2xZ4": product(2, 4),
        "Z2[C2]": group_ring_c2(2),
        "Z3[C2]": group_ring_c2(3),
        "Z4[C2]": group_ring_c2(4),
        "F3": quadratic(3, 1, "u", graded=True),
        "Z2(+)Z2": idealization(2, 2),
        "Z4(+)Z2": idealization(4, 2),
        "Z2[x]/(x^2)": quadratic(2, 0, "x", graded=False),
        "Z2 over Z4": zk_over_zn(4, 2),
    }


def localization_order(n: int, S: set[int]) -> int:
    """|S^-1 Z_n| by counting classes of pairs (r, s) under u(r s' - r' s) = 0."""
    pairs = [(r, s) for r in range(n) for s in sorted(S)]
    reps = []
    for r, s in pairs:
        if not any(any(u * (r * t - q * s) % n == 0 for u in S) for q, t in reps):
            reps.append((r, s))
    return len(reps)


# lattices -------------------------------------------------------------------


def lattice_closure(gens, relations, box: int, dim: int, coeff: int = 6):
    """All integer combinations with coefficients in [-coeff, coeff] landing in the box."""
    vecs = list(gens) + list(relations)
    out = set()
    for cs in itertools.product(range(-coeff, coeff + 1), repeat=len(vecs)):
        v = tuple(sum(c * g[i] for c, g in zip(cs, vecs)) for i in range(dim))
        if all(abs(a) <= box for a in v):
            out.add(v)
    return out
