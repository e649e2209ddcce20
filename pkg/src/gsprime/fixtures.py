"""Built-in infinite examples over Z, modelled with tagged integer coordinates."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PreconditionError
from .lattice import (
    IntLatticeModule,
    LatticeSubmodule,
    bounded_sprime_falsify,
    lattice_colon_family,
    lattice_colon_ideal,
    lattice_membership,
    submodule,
    verify_nonprime_witness,
)


def example_2_3() -> LatticeSubmodule:
    """N = 0 inside Z[i] x Z_2[i]; coordinates (Re T, Im T, Re L, Im L), graded by C_2."""
    M = IntLatticeModule(2, (2, 2), (0, 1, 0, 1), 2, name="Z[i] x Z2[i]")
    return submodule(M, [])


def example_7() -> LatticeSubmodule:
    """N = Z(2, 0) inside Z[i]^2; coordinates (Re, Im, Re, Im), graded by C_4 with i in degree 2."""
    M = IntLatticeModule(4, (), (0, 2, 0, 2), 4, name="Z[i]^2")
    return submodule(M, [(2, 0, 0, 0)])


def example_2_4() -> LatticeSubmodule:
    """N = Z x 0 inside Q[i]^2 with rational coordinates."""
    M = IntLatticeModule(4, (), (0, 1, 0, 1), 2, rational=True, name="Q[i]^2")
    return submodule(M, [(1, 0, 0, 0)])


def smallest_coprime_prime(s: int) -> int:
    p = 2
    while s % p == 0 or any(p % q == 0 for q in range(2, p)):
        p += 1
    return p


@dataclass
class FixtureCheck:
    name: str
    verdict: bool
    expected: bool
    anchor: str
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == self.expected

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.verdict,
            "expected": self.expected,
            "passed": self.passed,
            "anchor": self.anchor,
            "detail": self.detail,
        }


@dataclass
class FixtureReport:
    fixture: str
    checks: list[FixtureCheck]
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"fixture": self.fixture, "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def _vec(v) -> list:
    return [str(a) if isinstance(a, Fraction) and a.denominator != 1 else int(a) for a in v]


def _falsify_check(N, s, bound, anchor, expected=False) -> FixtureCheck:
    res = bounded_sprime_falsify(N, s, bound)
    detail = {"s": s, "bound": bound, "searched": res.checked, "result": res.label}
    if res.counterexample:
        r, m = res.counterexample
        detail["counterexample"] = {"r": r, "m": _vec(m)}
    return FixtureCheck(f"bounded search for an s-prime violation (s={s})", res.counterexample is not None, expected, anchor, detail)


def _run_2_3(s, bound):
    s = 2 if s is None else s
    bound = 25 if bound is None else bound
    N = example_2_3()
    return [
        FixtureCheck("colon ideal is {0}", lattice_colon_ideal(N) == 0, True, "Example 2.3", {"d": lattice_colon_ideal(N)}),
        FixtureCheck(
            "2 (0, 1) certifies N is not prime",
            verify_nonprime_witness(N, 2, (0, 0, 1, 0)),
            True,
            "Example 2.3",
            {"r": 2, "m": [0, 0, 1, 0]},
        ),
        _falsify_check(N, s, bound, "Example 2.3"),
    ]


def _run_7(s, bound):
    s = 2 if s is None else s
    bound = 10 if bound is None else bound
    N = example_7()
    fam = lattice_colon_family(N, range(1, 11))
    checks = [
        FixtureCheck("colon ideal is {0}", lattice_colon_ideal(N) == 0, True, "Example 7", {"d": lattice_colon_ideal(N)}),
        FixtureCheck("(6,0) lies in N", lattice_membership(N, (6, 0, 0, 0)), True, "Example 7"),
        FixtureCheck("(3,0) lies in N", lattice_membership(N, (3, 0, 0, 0)), False, "Example 7"),
        FixtureCheck(
            "2 (3, 0) certifies N is not prime",
            verify_nonprime_witness(N, 2, (3, 0, 0, 0)),
            True,
            "Example 7",
            {"r": 2, "m": [3, 0, 0, 0]},
        ),
        FixtureCheck(
            "colon family over t = 1..10 has a unique maximal member, first reached at t = 2",
            len(fam.distinct_maximal) == 1 and fam.witness == 2,
            True,
            "Theorem maximal",
            {
                "maximal_t": fam.maximal_ts,
                "maximal_basis": fam.distinct_maximal[0].reduced_form if fam.distinct_maximal else None,
                "range_relative": True,
            },
        ),
        _falsify_check(N, s, bound, "Example 7"),
    ]
    return checks


def _run_2_4(s, bound):
    N = example_2_4()
    ss = range(1, 11) if s is None else [s]
    checks = [FixtureCheck("colon ideal is {0}", lattice_colon_ideal(N) == 0, True, "Example 2.4")]
    for t in ss:
        if t == 0:
            raise PreconditionError("s must be nonzero")
        p = smallest_coprime_prime(abs(t))
        m = (Fraction(1, p), 0, 0, 0)
        checks.append(
            FixtureCheck(
                f"p (1/p, 0) certifies N is not {t}-prime",
                verify_nonprime_witness(N, p, m, s=t),
                True,
                "Example 2.4",
                {"s": t, "p": p, "m": _vec(m)},
            )
        )
    if bound is not None:
        t = 1 if s is None else s
        checks.append(_falsify_check(N, t, bound, "Example 2.4", expected=bound >= smallest_coprime_prime(abs(t))))
    return checks


FIXTURES = {
    "example2.3": (_run_2_3, example_2_3),
    "example7": (_run_7, example_7),
    "example2.4": (_run_2_4, example_2_4),
}


def run_fixture(name: str, s: int | None = None, bound: int | None = None) -> FixtureReport:
    if name not in FIXTURES:
        raise PreconditionError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
    start = time.perf_counter()
    checks = FIXTURES[name][0](s, bound)
    return FixtureReport(name, checks, time.perf_counter() - start)
