"""Graded prime / s-prime / S-prime predicates, colon families and theorem checks."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable

from .algebra import Check, GradedRing, is_graded_field
from .errors import PreconditionError, SizeBoundError, TheoremViolation
from .modules import (
    GradedModule,
    Submodule,
    annihilator,
    colon_ideal,
    colon_submodule,
    enumerate_graded_submodules,
    graded_ideals,
    hz_set,
    ideal_times,
    is_graded_simple,
    is_graded_submodule,
    is_multiplication_module,
    ring_colon,
    submodule_product,
)

IDEAL_PAIR_BOUND = 16


@dataclass(frozen=True)
class SPrimeReport:
    """Outcome of a primality predicate.

    ``counterexample`` is ``(r, m, reason)`` with ``r`` and ``m`` homogeneous.
    ``s_in_colon`` marks the distinct failure where s already lies in
    (N :_R M), so no (r, m) pair is involved.
    """

    verdict: bool
    s: int | None = None
    counterexample: tuple[int, int, str] | None = None
    s_in_colon: bool = False
    failing_pair: tuple[frozenset, frozenset] | None = None

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self, M: GradedModule | None = None) -> dict:
        R = M.ring if M is not None else None
        rl = R.label if R is not None else str
        ml = M.label if M is not None else str
        out: dict = {"verdict": self.verdict}
        if self.s is not None:
            out["s"] = rl(self.s)
        if self.s_in_colon:
            out["s_in_colon"] = True
        if self.counterexample is not None:
            r, m, reason = self.counterexample
            out["counterexample"] = {"r": rl(r), "m": ml(m), "reason": reason}
        if self.failing_pair is not None:
            I, K = self.failing_pair
            out["failing_pair"] = {
                "I": R.fmt(I) if R else sorted(I),
                "K": M.fmt(K) if M else sorted(K),
            }
        return out


def _require_graded_proper(N: Submodule, what: str, allow_whole: bool = False) -> None:
    if not is_graded_submodule(N):
        raise PreconditionError(f"{what}: N is not a graded submodule")
    if N.parent.is_zero:
        raise PreconditionError(f"{what}: the zero module has no proper submodules")
    if not allow_whole and not N.is_proper:
        raise PreconditionError(f"{what}: N must be proper")


def _require_s(R: GradedRing, s: int) -> None:
    if s == R.zero:
        raise PreconditionError("s must be nonzero")
    if s not in R.homogeneous:
        raise PreconditionError(f"s = {R.label(s)} is not homogeneous")


def is_graded_prime(N: Submodule) -> SPrimeReport:
    """rm in N implies r in (N:M) or m in N, for homogeneous r and m."""
    _require_graded_proper(N, "is_graded_prime")
    M = N.parent
    col = colon_ideal(N)
    X = N.elements
    hm = sorted(M.homogeneous)
    for r in sorted(M.ring.homogeneous):
        if r in col:
            continue
        row = M.action[r]
        for m in hm:
            if row[m] in X and m not in X:
                return SPrimeReport(False, None, (r, m, "r not in (N:M) and m not in N"))
    return SPrimeReport(True)


def is_graded_s_prime(N: Submodule, s: int) -> SPrimeReport:
    M = N.parent
    R = M.ring
    _require_s(R, s)
    _require_graded_proper(N, "is_graded_s_prime", allow_whole=True)
    col = colon_ideal(N)
    if s in col:
        return SPrimeReport(False, s, s_in_colon=True)
    X = N.elements
    act = M.action
    srow = act[s]
    hm = sorted(M.homogeneous)
    for r in sorted(R.homogeneous):
        if R.mul(s, r) in col:
            continue
        row = act[r]
        for m in hm:
            if row[m] in X and srow[m] not in X:
                return SPrimeReport(False, s, (r, m, "sr not in (N:M) and sm not in N"))
    return SPrimeReport(True, s)


def is_mcs(R: GradedRing, S: Iterable[int]) -> Check:
    S = frozenset(S)
    if R.zero in S:
        return Check(False, (R.zero,), "0 in S")
    if R.one not in S:
        return Check(False, (R.one,), "1 not in S")
    for a in sorted(S):
        if a not in R.homogeneous:
            return Check(False, (a,), "S must consist of homogeneous elements")
    for a in sorted(S):
        for b in sorted(S):
            if R.mul(a, b) not in S:
                return Check(False, (a, b), "not closed under products")
    return Check(True)


def enumerate_mcs(R: GradedRing) -> list[frozenset[int]]:
    """Every multiplicatively closed subset of h(R), smallest first."""
    found: set[frozenset[int]] = set()
    start = frozenset({R.one})
    stack = [start]
    found.add(start)
    h = sorted(R.h_star)

    def close(X):
        X = set(X)
        while True:
            new = {R.mul(a, b) for a in X for b in X} - X
            if not new:
                return frozenset(X)
            X |= new

    while stack:
        X = stack.pop()
        for x in h:
            if x in X:
                continue
            Y = close(X | {x})
            if R.zero in Y or Y in found:
                continue
            found.add(Y)
            stack.append(Y)
    return sorted(found, key=lambda X: (len(X), sorted(X)))


def is_graded_S_prime(N: Submodule, S: Iterable[int]) -> SPrimeReport:
    """(N:M) misses S and some s in S makes N s-prime; reports the smallest such s."""
    M = N.parent
    S = frozenset(S)
    chk = is_mcs(M.ring, S)
    if not chk:
        raise PreconditionError(f"S is not a multiplicatively closed set of homogeneous elements: {chk.reason}")
    _require_graded_proper(N, "is_graded_S_prime", allow_whole=True)
    col = colon_ideal(N)
    hit = sorted(col & S)
    if hit:
        return SPrimeReport(False, hit[0], s_in_colon=True)
    last = None
    for s in sorted(S):
        rep = is_graded_s_prime(N, s)
        if rep:
            return rep
        last = last or rep
    return SPrimeReport(False, None, last.counterexample if last else None)


def sprime_witnesses(N: Submodule) -> frozenset[int]:
    """{s in h*(R) : N is graded s-prime}."""
    R = N.parent.ring
    return frozenset(s for s in sorted(R.h_star) if is_graded_s_prime(N, s))


def is_s_prime_via_ideal_pairs(N: Submodule, s: int, force: bool = False) -> SPrimeReport:
    """Same predicate decided over graded ideals I and graded submodules K.

    N is s-prime iff IK in N forces sI in (N:M) or sK in N. Exponential in the
    carrier, so modules above 16 elements need ``force=True``.
    """
    M = N.parent
    R = M.ring
    _require_s(R, s)
    _require_graded_proper(N, "is_s_prime_via_ideal_pairs", allow_whole=True)
    if M.order > IDEAL_PAIR_BOUND and not force:
        raise SizeBoundError(f"ideal-pair oracle limited to |M| <= {IDEAL_PAIR_BOUND}")
    col = colon_ideal(N)
    if s in col:
        return SPrimeReport(False, s, s_in_colon=True)
    X = N.elements
    ideals = graded_ideals(R)
    subs = enumerate_graded_submodules(M)
    for I in ideals:
        sI_ok = all(R.mul(s, a) in col for a in I)
        if sI_ok:
            continue
        for K in subs:
            if all(M.act(a, k) in X for a in I for k in K.elements):
                if not all(M.act(s, k) in X for k in K.elements):
                    return SPrimeReport(False, s, failing_pair=(I, K.elements))
    return SPrimeReport(True, s)


# --------------------------------------------------------------------------
# colon family and witnesses


@dataclass
class ColonFamily:
    base: Submodule
    entries: list[tuple[int, Submodule]]
    maximal_indices: list[int]

    def maximal(self) -> list[tuple[int, Submodule]]:
        return [self.entries[i] for i in self.maximal_indices]

    def to_dict(self) -> dict:
        M = self.base.parent
        return {
            "base": self.base.labels(),
            "entries": [{"t": M.ring.label(t), "colon": C.labels()} for t, C in self.entries],
            "maximal": [M.ring.label(self.entries[i][0]) for i in self.maximal_indices],
        }


def colon_family(N: Submodule) -> ColonFamily:
    """(N :_M t) for every t in h*(R) outside (N :_R M), with the inclusion-maximal entries marked."""
    _require_graded_proper(N, "colon_family")
    R = N.parent.ring
    col = colon_ideal(N)
    entries = [(t, colon_submodule(N, t)) for t in sorted(R.h_star - col)]
    maximal = [
        i for i, (_, C) in enumerate(entries) if not any(C.elements < D.elements for _, D in entries)
    ]
    return ColonFamily(N, entries, maximal)


def find_sprime_witness(N: Submodule, check: bool = True) -> int:
    """t of the first inclusion-maximal colon (N :_M t).

    The postconditions are asserted: N is t-prime and (N :_M t) is graded prime.
    """
    fam = colon_family(N)
    t, C = fam.entries[fam.maximal_indices[0]]
    if check:
        if not is_graded_s_prime(N, t):
            raise TheoremViolation("maximal colon gives an s-prime witness", _bundle(N, s=t))
        if not is_graded_prime(C):
            raise TheoremViolation("maximal colon is graded prime", _bundle(N, s=t))
    return t


def _bundle(N: Submodule | None = None, **extra) -> dict:
    out: dict = {}
    if N is not None:
        M = N.parent
        out["module"] = M.name or repr(M)
        out["N"] = N.labels()
    for k, v in extra.items():
        if isinstance(v, Submodule):
            v = v.labels()
        elif isinstance(v, frozenset):
            v = sorted(v)
        out[k] = v
    return out


# --------------------------------------------------------------------------
# theorem verification


@dataclass
class TheoremCheck:
    name: str
    anchor: str
    instances: int = 0
    vacuous: int = 0
    failure: dict | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def hit(self, ok: bool, **bundle) -> None:
        self.instances += 1
        if not ok and self.failure is None:
            self.failure = bundle

    def diagnosis(self) -> str:
        # the colon-of-s statement is only derivable when s^3 also avoids (N:M)
        if self.failure and self.failure.get("s_cubed_in_colon"):
            return "statement counterexample: s^3 lies in (N:M), so the colon-inclusion step is unavailable"
        return "engine defect: a proved statement failed"

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "anchor": self.anchor,
            "verdict": self.passed,
            "instances": self.instances,
        }
        if self.vacuous:
            out["vacuous"] = self.vacuous
        if self.failure is not None:
            out["failure"] = self.failure
            out["note"] = self.diagnosis()
        return out


@dataclass
class TheoremReport:
    module: str
    checks: list[TheoremCheck] = field(default_factory=list)
    premise_s: list[int] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> TheoremCheck:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self) -> dict:
        return {"module": self.module, "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def _scaled_into(M: GradedModule, s: int, Y, X) -> bool:
    return all(M.act(s, y) in X for y in Y)


def verify_module_theorems(
    M: GradedModule,
    ideal_pairs: bool | None = None,
    abort_on_failure: bool = False,
) -> TheoremReport:
    """Run every transfer statement over all enumerated instances in M.

    ``ideal_pairs`` adds the ideal-pair equivalence; by default it runs when
    |M| is within the oracle's size bound.
    """
    start = time.perf_counter()
    R = M.ring
    rep = TheoremReport(M.name or repr(M))
    if M.is_zero:
        rep.seconds = time.perf_counter() - start
        return rep
    lab = R.label
    subs = enumerate_graded_submodules(M)
    proper = [N for N in subs if N.is_proper]
    hstar = sorted(R.h_star)
    hu = sorted(R.homogeneous_units)
    mult = bool(is_multiplication_module(M))
    RM = R.regular_module
    ann_M = annihilator(M.whole)

    cols = {N.elements: colon_ideal(N) for N in subs}
    sp: dict[tuple[frozenset, int], bool] = {}
    for N in proper:
        for s in hstar:
            sp[N.elements, s] = bool(is_graded_s_prime(N, s))
    prime = {N.elements: bool(is_graded_prime(N)) for N in proper}

    def new(name, anchor):
        c = TheoremCheck(name, anchor)
        rep.checks.append(c)
        return c

    c_direct1 = new("prime implies s-prime", 'Lemma "direct" (1)')
    c_direct2 = new("homogeneous unit invariance", 'Lemma "direct" (2)')
    c_29 = new("colon ideal inherits s-primeness", "Prop 2.9")
    c_210 = new("s-prime colon ideal lifts on multiplication modules", "Prop 2.10")
    c_c210 = new("submodule-product characterisation", "Cor 2.10")
    c_212 = new("intersection property", "Prop 2.12")
    c_216 = new("colon inclusions", "Lemma 2.16")
    c_218a = new("prime colon implies s-prime", "Prop 2.18 (1)")
    c_218b = new("s-prime with s^2 outside colon gives prime colon", "Prop 2.18 (2)")
    c_218c = new("s-prime with s^3 outside colon gives prime colon", "Prop 2.18 (2), s^3 hypothesis")
    c_max = new("maximal colon entries are prime", 'Theorem "maximal"')
    c_exist = new("existence of an s-prime witness", 'Theorem "maximal-2"')
    c_227a = new("HZ(M) = Ann(M) on h(R)", "Theorem 2.27 (1)")
    c_227b = new("t outside HZ(M) gives tM = M", "Theorem 2.27 (2)")
    c_61 = new("colon differs from Ann forces N = M", "Cor 6.1")
    c_62 = new("multiplication module is graded simple", "Cor 6.2")
    c_63 = new("ring with all ideals s-prime is a graded field", "Cor 6.3")
    c_25 = new("ideal-pair characterisation", "Prop 2.5") if (
        ideal_pairs or (ideal_pairs is None and M.order <= IDEAL_PAIR_BOUND)
    ) else None

    ring_subs = enumerate_graded_submodules(RM)
    ring_sp_cache: dict[tuple[frozenset, int], bool] = {}

    def ideal_sp(I: frozenset, s: int) -> bool:
        key = (I, s)
        if key not in ring_sp_cache:
            ring_sp_cache[key] = bool(is_graded_s_prime(Submodule(RM, I), s))
        return ring_sp_cache[key]

    products = {}
    if mult:
        for L in subs:
            for K in subs:
                products[L.elements, K.elements] = submodule_product(L, K).elements

    for N in proper:
        X = N.elements
        col = cols[X]
        for s in hstar:
            ok = sp[X, s]
            if prime[X] and s not in col:
                c_direct1.hit(ok, N=N.labels(), s=lab(s))
            for t in hu:
                ts = R.mul(t, s)
                c_direct2.hit(ok == sp[X, ts], N=N.labels(), s=lab(s), t=lab(t))
            if ok:
                c_29.hit(ideal_sp(col, s), N=N.labels(), s=lab(s))
            if mult and ideal_sp(col, s):
                c_210.hit(ok, N=N.labels(), s=lab(s))
            if mult and s not in col:
                rhs = all(
                    _scaled_into(M, s, L.elements, X) or _scaled_into(M, s, K.elements, X)
                    for L in subs
                    for K in subs
                    if products[L.elements, K.elements] <= X
                )
                c_c210.hit(ok == rhs, N=N.labels(), s=lab(s))
            if mult and ok:
                for K in subs:
                    for L in subs:
                        if K.elements & L.elements <= X:
                            good = _scaled_into(M, s, K.elements, X) or _scaled_into(M, s, L.elements, X)
                            c_212.hit(good, N=N.labels(), s=lab(s), K=K.labels(), L=L.labels())
            if ok:
                cs = colon_submodule(N, s)
                cs_ring = ring_colon(col, R, s)
                for t in hstar:
                    if R.mul(s, t) in col:
                        continue
                    good = colon_submodule(N, t) <= cs and ring_colon(col, R, t) <= cs_ring
                    c_216.hit(good, N=N.labels(), s=lab(s), t=lab(t))
            C = colon_submodule(N, s)
            if C.is_proper and bool(is_graded_prime(C)):
                c_218a.hit(ok, N=N.labels(), s=lab(s))
            if ok and R.mul(s, s) not in col:
                good = C.is_proper and bool(is_graded_prime(C))
                cube_in = R.mul(s, R.mul(s, s)) in col
                c_218b.hit(good, N=N.labels(), s=lab(s), s_cubed_in_colon=cube_in)
                if not cube_in:
                    c_218c.hit(good, N=N.labels(), s=lab(s))
            if c_25 is not None:
                c_25.hit(ok == bool(is_s_prime_via_ideal_pairs(N, s, force=True)), N=N.labels(), s=lab(s))
        fam = colon_family(N)
        for t, C in fam.maximal():
            c_max.hit(bool(is_graded_prime(C)) and sp[X, t], N=N.labels(), t=lab(t))
        c_exist.hit(any(sp[X, s] for s in hstar), N=N.labels())

    # the last group of checks shares one premise: every proper graded submodule is s-prime
    hz = hz_set(M)
    for s in hstar:
        if not all(sp[N.elements, s] for N in proper):
            continue
        rep.premise_s.append(s)
        c_227a.hit(hz == ann_M & R.homogeneous, s=lab(s), HZ=R.fmt(hz), Ann=R.fmt(ann_M))
        for t in sorted(R.homogeneous - hz):
            tM = ideal_times(M, [t], range(M.order))
            c_227b.hit(len(tM) == M.order, s=lab(s), t=lab(t))
        for N in subs:
            if cols[N.elements] != ann_M:
                c_61.hit(not N.is_proper, s=lab(s), N=N.labels())
        if mult:
            c_62.hit(bool(is_graded_simple(M)), s=lab(s))
    for c in (c_227a, c_227b, c_61, c_62):
        if c.instances == 0:
            c.vacuous = 1

    ring_proper = [I for I in ring_subs if I.is_proper]
    for s in hstar:
        if all(ideal_sp(I.elements, s) for I in ring_proper):
            c_63.hit(is_graded_field(R), s=lab(s))
    if c_63.instances == 0:
        c_63.vacuous = 1

    rep.seconds = time.perf_counter() - start
    if abort_on_failure:
        for c in rep.checks:
            if c.failure is not None:
                raise TheoremViolation(f"{c.anchor}: {c.name}", {"module": rep.module, **c.failure})
    return rep
