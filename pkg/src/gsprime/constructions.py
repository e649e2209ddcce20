"""Quotients, products, homomorphisms, localization, idealization and group rings.

Each ``*_transfer`` / ``*_equiv`` function evaluates both sides of a transfer
statement independently and raises :class:`TheoremViolation` if they
disagree, so a successful return doubles as a consistency check of the engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import (
    MAX_ORDER,
    Check,
    FiniteGroup,
    FiniteRing,
    Grading,
    GradedRing,
    graded_ring,
    is_crossed_product,
    is_graded_ideal,
)
from .errors import HypothesisError, PreconditionError, SizeBoundError, TheoremViolation, ValidationError
from .algebra import Violation
from .modules import (
    GradedModule,
    Submodule,
    colon_between,
    colon_ideal,
    colon_submodule,
    is_graded_submodule,
    submodule_as_module,
    submodule_check,
)
from .sprime import SPrimeReport, is_graded_prime, is_graded_s_prime, is_mcs


@dataclass
class Transfer:
    """Shared verdict of a two-sided transfer statement plus the evaluated sides."""

    verdict: bool
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.verdict


def _sprime_or_false(N: Submodule, s: int) -> bool:
    """s-primeness that treats s = 0 and the zero module as plain failures."""
    M = N.parent
    if s == M.ring.zero or M.is_zero or not N.is_proper:
        return False
    return bool(is_graded_s_prime(N, s))


# --------------------------------------------------------------------------
# quotients


def _cosets(order: int, add, X: frozenset[int]) -> tuple[list[int], list[int]]:
    """Projection (element -> coset index) and representatives (smallest id per coset)."""
    proj: list[int | None] = [None] * order
    reps: list[int] = []
    for x in range(order):
        if proj[x] is None:
            for i in X:
                proj[add[x][i]] = len(reps)
            reps.append(x)
    return proj, reps  # type: ignore[return-value]


def quotient_graded(R: GradedRing, I: Iterable[int]) -> GradedRing:
    """R/I with (R/I)_g = (R_g + I)/I; ``meta['projection']`` maps old ids to cosets."""
    I = frozenset(I)
    chk = is_graded_ideal(R, I)
    if not chk:
        raise PreconditionError(f"quotient needs a graded ideal ({chk.reason})")
    if len(I) == R.order:
        raise PreconditionError("R/R is the zero ring, which has no unity distinct from zero")
    proj, reps = _cosets(R.order, R.ring.add, I)
    add = [[proj[R.add(a, b)] for b in reps] for a in reps]
    mul = [[proj[R.mul(a, b)] for b in reps] for a in reps]
    ring = FiniteRing(add, mul, proj[R.zero], proj[R.one], None, [R.labels[a] for a in reps])
    comps = [frozenset(proj[x] for x in c) for c in R.components]
    Q = GradedRing(ring, Grading(R.group, comps, proj[R.zero]), name=f"{R.name}/I" if R.name else "")
    Q.meta.update(projection=proj, base=R, ideal=I)
    return Q


def quotient_module(M: GradedModule, L: Submodule) -> GradedModule:
    """M/L with (M/L)_g = (M_g + L)/L over the same ring."""
    chk = is_graded_submodule(L)
    if not chk:
        raise PreconditionError(f"quotient needs a graded submodule ({chk.reason})")
    proj, reps = _cosets(M.order, M.add_table, L.elements)
    add = [[proj[M.add(a, b)] for b in reps] for a in reps]
    action = [[proj[M.act(r, a)] for a in reps] for r in range(M.ring.order)]
    comps = [frozenset(proj[x] for x in c) for c in M.components]
    Q = GradedModule(M.ring, add, action, comps, proj[M.zero], None, [M.labels[a] for a in reps], name=f"{M.name}/L")
    Q.meta.update(projection=proj, base=M, sub=L.elements)
    return Q


def image_in_quotient(N: Submodule, Q: GradedModule) -> Submodule:
    proj = Q.meta["projection"]
    return Submodule(Q, frozenset(proj[x] for x in N.elements))


def quotient_sprime_transfer(N: Submodule, L: Submodule, s: int) -> Transfer:
    """N is s-prime in M iff N/L is s-prime in M/L (for graded L inside N)."""
    M = N.parent
    if not L.elements <= N.elements:
        raise PreconditionError("quotient transfer needs L inside N")
    if not is_graded_submodule(L) or not submodule_check(N):
        raise PreconditionError("quotient transfer needs graded L and a submodule N")
    Q = quotient_module(M, L)
    NL = image_in_quotient(N, Q)
    graded_up = bool(is_graded_submodule(N))
    graded_down = bool(is_graded_submodule(NL))
    if graded_up != graded_down:
        raise TheoremViolation('Lemma "2": N graded iff N/L graded', {"N": N.labels(), "L": sorted(L.elements)})
    if not graded_up:
        raise PreconditionError("N is not graded")
    left = _sprime_or_false(N, s)
    right = _sprime_or_false(NL, s)
    if left != right:
        raise TheoremViolation(
            "Prop 2.8 (2): quotient transfer", {"N": N.labels(), "L": sorted(L.elements), "s": s}
        )
    return Transfer(left, {"N_s_prime": left, "N/L_s_prime": right, "quotient_order": Q.order})


def restrict_sprime(K: Submodule, L: Submodule, s: int) -> SPrimeReport:
    """L ∩ K is s-prime in L whenever K is s-prime in M and s is outside (K :_R L).

    The report's element ids refer to L viewed as a module on its own.
    """
    if not is_graded_submodule(L):
        raise PreconditionError("L must be a graded submodule")
    if s in colon_between(K, L):
        raise HypothesisError("s not in (K :_R L)")
    if not is_graded_s_prime(K, s):
        raise HypothesisError("K is graded s-prime in M")
    Lmod, incl = submodule_as_module(L)
    back = {old: new for new, old in enumerate(incl)}
    KL = Submodule(Lmod, frozenset(back[x] for x in K.elements & L.elements))
    rep = is_graded_s_prime(KL, s)
    if not rep:
        raise TheoremViolation(
            "Prop 2.8 (1): restriction", {"K": K.labels(), "L": L.labels(), "s": s}
        )
    return rep


# --------------------------------------------------------------------------
# graded homomorphisms


class GradedHom:
    """Degree-preserving R-linear map given by a table source -> target."""

    def __init__(self, source: GradedModule, target: GradedModule, table: Sequence[int]):
        if source.ring is not target.ring:
            raise PreconditionError("graded homomorphisms need a common ring object")
        table = tuple(int(v) for v in table)
        if len(table) != source.order or any(not 0 <= v < target.order for v in table):
            raise ValidationError("graded homomorphism", [Violation("total map", (len(table),))])
        self.source, self.target, self.table = source, target, table
        bad = self._violations()
        if bad:
            raise ValidationError("graded homomorphism", bad)

    def _violations(self) -> list[Violation]:
        S, T, f = self.source, self.target, self.table
        for a in range(S.order):
            for b in range(S.order):
                if f[S.add(a, b)] != T.add(f[a], f[b]):
                    return [Violation("additive", (a, b))]
        for r in range(S.ring.order):
            for a in range(S.order):
                if f[S.act(r, a)] != T.act(r, f[a]):
                    return [Violation("R-linear", (r, a))]
        for g, comp in enumerate(S.components):
            for a in sorted(comp):
                if f[a] not in T.components[g]:
                    return [Violation("f(M_g) in T_g", (g, a))]
        return []

    def __call__(self, m: int) -> int:
        return self.table[m]

    def kernel(self) -> Submodule:
        return Submodule(self.source, frozenset(m for m, v in enumerate(self.table) if v == self.target.zero))

    def image(self, N: Submodule | None = None) -> Submodule:
        X = range(self.source.order) if N is None else N.elements
        return Submodule(self.target, frozenset(self.table[m] for m in X))

    def preimage(self, K: Submodule) -> Submodule:
        return Submodule(self.source, frozenset(m for m, v in enumerate(self.table) if v in K.elements))

    @property
    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.target.order


def canonical_projection(M: GradedModule, L: Submodule) -> tuple[GradedModule, GradedHom]:
    Q = quotient_module(M, L)
    return Q, GradedHom(M, Q, Q.meta["projection"])


def hom_transfer(f: GradedHom, X: Submodule, s: int, direction: str) -> tuple[Submodule, SPrimeReport]:
    """Push or pull an s-prime submodule along ``f``; returns the new submodule and its report."""
    if direction == "preimage":
        if not is_graded_s_prime(X, s):
            raise HypothesisError("K in GSpec_s(T)")
        P = f.preimage(X)
        if s in colon_ideal(P):
            raise HypothesisError("s not in (f^-1(K) :_R M)")
        rep = is_graded_s_prime(P, s)
        anchor = "Prop 2.7 (1)"
    elif direction == "image":
        if not f.is_surjective:
            raise HypothesisError("f is an epimorphism")
        if not is_graded_s_prime(X, s):
            raise HypothesisError("N in GSpec_s(M)")
        if not f.kernel().elements <= X.elements:
            raise HypothesisError("Ker(f) inside N")
        P = f.image(X)
        rep = is_graded_s_prime(P, s)
        anchor = "Prop 2.7 (2)"
    else:
        raise PreconditionError(f"direction must be 'preimage' or 'image', not {direction!r}")
    if not rep:
        raise TheoremViolation(anchor, {"X": X.labels(), "s": s, "direction": direction})
    return P, rep


# --------------------------------------------------------------------------
# direct products


def _same_group(groups: Sequence[FiniteGroup]) -> FiniteGroup:
    G = groups[0]
    if any(not G.same_as(H) for H in groups[1:]):
        raise PreconditionError("factors must be graded by the same group")
    return G


def product_graded(*rings: GradedRing) -> GradedRing:
    """R_1 x ... x R_n graded by (R_1)_g x ... x (R_n)_g."""
    G = _same_group([R.group for R in rings])
    tuples = list(itertools.product(*(range(R.order) for R in rings)))
    if len(tuples) > MAX_ORDER:
        raise SizeBoundError(f"product has {len(tuples)} elements")
    index = {t: i for i, t in enumerate(tuples)}

    def op(name):
        return [[index[tuple(getattr(R, name)(a, b) for R, a, b in zip(rings, s, t))] for t in tuples] for s in tuples]

    labels = ["(" + ",".join(R.labels[a] for R, a in zip(rings, t)) + ")" for t in tuples]
    ring = FiniteRing(
        op("add"), op("mul"), index[tuple(R.zero for R in rings)], index[tuple(R.one for R in rings)], None, labels
    )
    comps = [
        frozenset(index[t] for t in itertools.product(*(sorted(R.components[g]) for R in rings)))
        for g in range(G.order)
    ]
    P = GradedRing(ring, Grading(G, comps, ring.zero), name="x".join(R.name for R in rings))
    P.meta.update(factors=rings, index=index, tuples=tuples)
    return P


def product_modules(*modules: GradedModule) -> GradedModule:
    """M_1 x ... x M_n over R_1 x ... x R_n, acting componentwise."""
    P = product_graded(*(M.ring for M in modules))
    tuples = list(itertools.product(*(range(M.order) for M in modules)))
    if len(tuples) > MAX_ORDER:
        raise SizeBoundError(f"product has {len(tuples)} elements")
    index = {t: i for i, t in enumerate(tuples)}
    add = [[index[tuple(M.add(a, b) for M, a, b in zip(modules, s, t))] for t in tuples] for s in tuples]
    action = [
        [index[tuple(M.act(r, a) for M, r, a in zip(modules, rt, t))] for t in tuples] for rt in P.meta["tuples"]
    ]
    comps = [
        frozenset(index[t] for t in itertools.product(*(sorted(M.components[g]) for M in modules)))
        for g in range(P.group.order)
    ]
    labels = ["(" + ",".join(M.labels[a] for M, a in zip(modules, t)) + ")" for t in tuples]
    out = GradedModule(
        P, add, action, comps, index[tuple(M.zero for M in modules)], None, labels,
        name="x".join(M.name for M in modules),
    )
    out.meta.update(factors=modules, index=index, tuples=tuples)
    return out


def _product_meta(M: GradedModule) -> dict:
    """Factor data of a product module; a product ring over itself counts too."""
    if "factors" in M.meta:
        return M.meta
    if M.meta.get("regular") and "factors" in M.ring.meta:
        R = M.ring
        return {"factors": [F.regular_module for F in R.meta["factors"]], "index": R.meta["index"], "tuples": R.meta["tuples"]}
    raise PreconditionError("parent module is not a product")


def product_submodule(M: GradedModule, parts: Sequence[Iterable[int]]) -> Submodule:
    index = _product_meta(M)["index"]
    return Submodule(M, frozenset(index[t] for t in itertools.product(*(sorted(p) for p in parts))))


def product_factors(L: Submodule) -> list[Submodule] | None:
    """Factor submodules N_i with L = N_1 x ... x N_n, or None when L is not of product form."""
    M = L.parent
    meta = _product_meta(M)
    tuples, factors = meta["tuples"], meta["factors"]
    parts = [frozenset(tuples[x][i] for x in L.elements) for i in range(len(factors))]
    if product_submodule(M, parts).elements != L.elements:
        return None
    return [Submodule(F, p) for F, p in zip(factors, parts)]


def product_graded_check(L: Submodule) -> Check:
    """L = N_1 x ... x N_n is graded iff every N_i is; asserts the equivalence."""
    parts = product_factors(L)
    if parts is None:
        return Check(False, None, "not of product form")
    whole = bool(is_graded_submodule(L))
    each = all(bool(is_graded_submodule(p)) for p in parts)
    if whole != each:
        raise TheoremViolation('Lemma "3"/"4": product gradedness', {"L": L.labels()})
    return Check(whole)


def product_sprime_decision(L: Submodule, s: int) -> Transfer:
    """Factor criterion vs. the direct predicate on the product.

    L is s-prime iff for some i, N_i is s_i-prime and s_j lies in
    (N_j : M_j) for every j != i.
    """
    M = L.parent
    parts = product_factors(L)
    if parts is None:
        raise PreconditionError("L is not of product form")
    s_parts = M.ring.meta["tuples"][s]
    cols = [colon_ideal(p) for p in parts]
    clauses = []
    for i, (Ni, si) in enumerate(zip(parts, s_parts)):
        others = all(sj in cols[j] for j, sj in enumerate(s_parts) if j != i)
        clauses.append(others and _sprime_or_false(Ni, si))
    criterion = any(clauses)
    direct = _sprime_or_false(L, s)
    if criterion != direct:
        raise TheoremViolation("Prop 2.15: product criterion", {"L": L.labels(), "s": M.ring.label(s)})
    return Transfer(direct, {"criterion": criterion, "direct": direct, "clauses": clauses})


# --------------------------------------------------------------------------
# idealization


def idealization(R: GradedRing, M: GradedModule) -> GradedRing:
    """R(+)M with (x, a)(y, b) = (xy, xb + ya), graded by R_g (+) M_g."""
    if M.ring is not R:
        raise PreconditionError("M must be a module over R")
    if not R.group.is_abelian:
        raise PreconditionError("idealization grading needs an abelian group")
    n = R.order * M.order
    if n > MAX_ORDER:
        raise SizeBoundError(f"idealization has {n} elements")
    pairs = [(r, m) for r in range(R.order) for m in range(M.order)]
    index = {p: i for i, p in enumerate(pairs)}
    add = [[index[R.add(x, y), M.add(a, b)] for (y, b) in pairs] for (x, a) in pairs]
    mul = [[index[R.mul(x, y), M.add(M.act(x, b), M.act(y, a))] for (y, b) in pairs] for (x, a) in pairs]
    labels = [f"({R.labels[x]},{M.labels[a]})" for x, a in pairs]
    ring = FiniteRing(add, mul, index[R.zero, M.zero], index[R.one, M.zero], None, labels)
    comps = [
        frozenset(index[x, a] for x in R.components[g] for a in M.components[g]) for g in range(R.group.order)
    ]
    X = GradedRing(ring, Grading(R.group, comps, ring.zero), name=f"{R.name}(+){M.name}")
    X.meta.update(base=R, module=M, index=index, pairs=pairs)
    return X


def idealization_ideal(X: GradedRing, P: Iterable[int], N: Iterable[int] | None = None) -> frozenset[int]:
    """P(+)N as element ids of X (N defaults to the whole module)."""
    M = X.meta["module"]
    N = range(M.order) if N is None else N
    N = list(N)
    return frozenset(X.meta["index"][p, n] for p in P for n in N)


def idealization_sprime_equiv(X: GradedRing, P: Iterable[int], s: int, m: int | None = None) -> Transfer:
    """P s-prime in R  <=>  P(+)M is (s, m)-prime  <=>  P(+)M is (s, 0)-prime.

    Statement (2) ranges over the m in h(M) for which (s, m) is homogeneous,
    i.e. m in M_deg(s); pass ``m`` to restrict it to a single element.
    """
    R, M = X.meta["base"], X.meta["module"]
    P = frozenset(P)
    if not is_graded_ideal(R, P):
        raise PreconditionError("P must be a graded ideal")
    if s not in R.h_star:
        raise PreconditionError("s must be a nonzero homogeneous element")
    if s in P:
        raise HypothesisError("s not in P")
    idx = X.meta["index"]
    PM = Submodule(X.regular_module, idealization_ideal(X, P))
    one = _sprime_or_false(Submodule(R.regular_module, P), s)
    g = R.degree(s)
    ms = sorted(M.components[g]) if m is None else [m]
    two = {}
    for mm in ms:
        if idx[s, mm] not in X.homogeneous:
            raise PreconditionError(f"(s, {M.labels[mm]}) is not homogeneous in R(+)M")
        two[M.labels[mm]] = _sprime_or_false(PM, idx[s, mm])
    three = _sprime_or_false(PM, idx[s, M.zero])
    if not (one == three == all(two.values())) or len(set(two.values())) > 1:
        raise TheoremViolation(
            "Prop 2.21: idealization equivalence", {"P": R.fmt(P), "s": R.label(s), "two": two}
        )
    return Transfer(one, {"(1)": one, "(2)": two, "(3)": three})


# --------------------------------------------------------------------------
# localization


class LocalizedRing:
    """S^-1 R built as the explicit quotient of pairs (r, s)."""

    def __init__(self, base: GradedRing, S: frozenset[int]):
        self.base = base
        self.mcs = S
        R = base
        Ss = sorted(S)
        pairs = [(r, s) for r in range(R.order) for s in Ss]

        def same(p, q):
            (a, s), (b, t) = p, q
            d = R.sub(R.mul(a, t), R.mul(b, s))
            return any(R.mul(u, d) == R.zero for u in Ss)

        reps: list[tuple[int, int]] = []
        cls: dict[tuple[int, int], int] = {}
        for p in pairs:
            for i, q in enumerate(reps):
                if same(p, q):
                    cls[p] = i
                    break
            else:
                cls[p] = len(reps)
                reps.append(p)
        if len(reps) < 2:
            raise PreconditionError("localization collapses to the zero ring")
        self.reps, self._cls = reps, cls
        add = [[cls[R.add(R.mul(a, t), R.mul(b, s)), R.mul(s, t)] for (b, t) in reps] for (a, s) in reps]
        mul = [[cls[R.mul(a, b), R.mul(s, t)] for (b, t) in reps] for (a, s) in reps]
        labels = [R.labels[a] if s == R.one else f"{R.labels[a]}/{R.labels[s]}" for a, s in reps]
        ring = FiniteRing(add, mul, cls[R.zero, R.one], cls[R.one, R.one], None, labels)
        G = R.group
        comps = []
        for g in range(G.order):
            comp = set()
            for h in range(G.order):
                den = S & R.components[G.op[h][G.inverse[g]]]
                comp |= {cls[a, s] for a in R.components[h] for s in den}
            comps.append(frozenset(comp))
        self.ring = GradedRing(ring, Grading(G, comps, ring.zero), name=f"S^-1 {R.name}".strip())

    def class_of(self, r: int, s: int) -> int:
        return self._cls[r, s]

    def canonical(self, r: int) -> int:
        """r -> r/1."""
        return self._cls[r, self.base.one]

    @property
    def order(self) -> int:
        return self.ring.order


class LocalizedModule:
    """S^-1 M as a graded module over S^-1 R."""

    def __init__(self, M: GradedModule, loc: LocalizedRing):
        self.base, self.loc = M, loc
        R, S = M.ring, sorted(loc.mcs)
        pairs = [(m, s) for m in range(M.order) for s in S]

        def same(p, q):
            (a, s), (b, t) = p, q
            d = M.add(M.act(t, a), M.neg(M.act(s, b)))
            return any(M.act(u, d) == M.zero for u in S)

        reps: list[tuple[int, int]] = []
        cls: dict[tuple[int, int], int] = {}
        for p in pairs:
            for i, q in enumerate(reps):
                if same(p, q):
                    cls[p] = i
                    break
            else:
                cls[p] = len(reps)
                reps.append(p)
        self.reps, self._cls = reps, cls
        add = [[cls[M.add(M.act(t, a), M.act(s, b)), R.mul(s, t)] for (b, t) in reps] for (a, s) in reps]
        action = [
            [cls[M.act(x, a), R.mul(u, s)] for (a, s) in reps] for (x, u) in loc.reps
        ]
        labels = [M.labels[a] if s == R.one else f"{M.labels[a]}/{R.labels[s]}" for a, s in reps]
        G = R.group
        comps = []
        for g in range(G.order):
            comp = set()
            for h in range(G.order):
                den = loc.mcs & R.components[G.op[h][G.inverse[g]]]
                comp |= {cls[a, s] for a in M.components[h] for s in den}
            comps.append(frozenset(comp))
        self.module = GradedModule(
            loc.ring, add, action, comps, cls[M.zero, R.one], None, labels, name=f"S^-1 {M.name}".strip()
        )

    def class_of(self, m: int, s: int) -> int:
        return self._cls[m, s]

    def canonical(self, m: int) -> int:
        return self._cls[m, self.base.ring.one]

    def localize_submodule(self, N: Submodule) -> Submodule:
        return Submodule(self.module, frozenset(self._cls[n, s] for n in N.elements for s in self.loc.mcs))


def _require_mcs(R: GradedRing, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    chk = is_mcs(R, S)
    if not chk:
        raise PreconditionError(f"invalid multiplicatively closed set: {chk.reason} {chk.witness}")
    return S


def localize(R: GradedRing, S: Iterable[int]) -> LocalizedRing:
    return LocalizedRing(R, _require_mcs(R, S))


def localize_module(M: GradedModule, S: Iterable[int], loc: LocalizedRing | None = None) -> LocalizedModule:
    S = _require_mcs(M.ring, S)
    if loc is None:
        loc = LocalizedRing(M.ring, S)
    return LocalizedModule(M, loc)


def saturation(R: GradedRing, S: Iterable[int]) -> frozenset[int]:
    """S* = {x in h(R) : x/1 is a homogeneous unit of S^-1 R}."""
    loc = localize(R, S)
    hu = loc.ring.homogeneous_units
    return frozenset(x for x in R.homogeneous if loc.canonical(x) in hu)


def localization_prime_transfer(N: Submodule, S: Iterable[int], s: int) -> Transfer:
    """Three-way check: (a) N s-prime; (b) S^-1 N graded prime; (c) colon inclusions over S.

    Asserts (a) => (b) and (a) <=> (b) and (c).
    """
    M = N.parent
    S = _require_mcs(M.ring, S)
    if not is_graded_submodule(N):
        raise PreconditionError("N must be graded")
    if colon_ideal(N) & S:
        raise HypothesisError("(N :_R M) ∩ S = ∅", f"meets S in {M.ring.fmt(colon_ideal(N) & S)}")
    if s not in S:
        raise PreconditionError("s must belong to S")
    a = _sprime_or_false(N, s)
    LM = localize_module(M, S)
    SN = LM.localize_submodule(N)
    b = SN.is_proper and not LM.module.is_zero and bool(is_graded_prime(SN))
    cs = colon_submodule(N, s)
    c = all(colon_submodule(N, t) <= cs for t in S)
    if a and not b:
        raise TheoremViolation("Prop 2.2: localization of s-prime", {"N": N.labels(), "s": s})
    if a != (b and c):
        raise TheoremViolation("Prop 2.17: localization criterion", {"N": N.labels(), "s": s})
    return Transfer(a, {"a_s_prime": a, "b_localized_prime": b, "c_colon_condition": c, "localized_order": LM.module.order})


# --------------------------------------------------------------------------
# group rings and crossed products


def group_ring(T: FiniteRing | GradedRing, G: FiniteGroup) -> GradedRing:
    """T[G] graded by R_g = T g; the output is checked to be a crossed product."""
    if isinstance(T, GradedRing):
        T = T.ring
    if not G.is_abelian:
        raise PreconditionError("T[G] is commutative only for abelian G")
    n = T.order ** G.order
    if n > MAX_ORDER:
        raise SizeBoundError(f"T[G] has {n} elements")
    coeffs = [tuple((x // T.order**i) % T.order for i in range(G.order)) for x in range(n)]
    code = {c: i for i, c in enumerate(coeffs)}

    def plus(f, h):
        return tuple(T.add[a][b] for a, b in zip(f, h))

    def times(f, h):
        out = [T.zero] * G.order
        for g, a in enumerate(f):
            if a == T.zero:
                continue
            for k, b in enumerate(h):
                gk = G.op[g][k]
                out[gk] = T.add[out[gk]][T.mul[a][b]]
        return tuple(out)

    def label(f):
        terms = []
        for g, a in enumerate(f):
            if a == T.zero:
                continue
            c = T.labels[a]
            if "+" in c:
                c = f"({c})"
            if g == G.identity:
                terms.append(c)
            else:
                terms.append(G.labels[g] if a == T.one else c + G.labels[g])
        return "+".join(terms) or T.labels[T.zero]

    add = [[code[plus(f, h)] for h in coeffs] for f in coeffs]
    mul = [[code[times(f, h)] for h in coeffs] for f in coeffs]
    one = code[tuple(T.one if g == G.identity else T.zero for g in range(G.order))]
    ring = FiniteRing(add, mul, code[(T.zero,) * G.order], one, None, [label(f) for f in coeffs])
    comps = [frozenset(i for i, f in enumerate(coeffs) if all(a == T.zero for k, a in enumerate(f) if k != g))
             for g in range(G.order)]
    R = GradedRing(ring, Grading(G, comps, ring.zero), name="T[G]")
    if not is_crossed_product(R):
        raise TheoremViolation("group rings are crossed products", {"order": n})
    return R


def identity_component_ring(R: GradedRing) -> tuple[GradedRing, list[int]]:
    """R_e as a trivially graded ring, with the inclusion (new id -> old id)."""
    old = sorted(R.components[R.group.identity])
    new = {x: i for i, x in enumerate(old)}
    add = [[new[R.add(a, b)] for b in old] for a in old]
    mul = [[new[R.mul(a, b)] for b in old] for a in old]
    ring = FiniteRing(add, mul, new[R.zero], new[R.one], None, [R.labels[x] for x in old])
    return graded_ring(ring, name=f"{R.name}_e"), old


def crossed_product_equiv(R: GradedRing, I: Iterable[int]) -> Transfer:
    """(exists s in h*(R): I s-prime in R)  <=>  (exists t in R_e \\ 0: I_e t-prime in R_e).

    I_e's primality is evaluated inside the ring R_e.
    """
    if not is_crossed_product(R):
        raise PreconditionError("R is not a crossed product")
    I = frozenset(I)
    if not is_graded_ideal(R, I) or len(I) == R.order:
        raise PreconditionError("I must be a proper graded ideal")
    N = Submodule(R.regular_module, I)
    s = next((x for x in sorted(R.h_star) if is_graded_s_prime(N, x)), None)
    Re, incl = identity_component_ring(R)
    back = {x: i for i, x in enumerate(incl)}
    Ie = frozenset(back[x] for x in I if x in back)
    Ne = Submodule(Re.regular_module, Ie)
    t = next((y for y in sorted(Re.h_star) if is_graded_s_prime(Ne, y)), None)
    if (s is None) != (t is None):
        raise TheoremViolation('Theorem "crossed-product"', {"I": R.fmt(I)})
    return Transfer(
        s is not None,
        {
            "s": None if s is None else R.label(s),
            "t": None if t is None else Re.label(t),
            "I_e": Re.fmt(Ie),
        },
    )
