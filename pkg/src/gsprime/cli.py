"""Command line front end: ``gsprime <command> ...``.

Exit codes: 0 verdicts as asserted, 1 predicate false (check commands),
2 input error, 3 theorem-suite or fixture failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Callable

from . import __version__
from .algebra import GradedRing, cyclic_group, is_crossed_product, is_graded_field
from .constructions import group_ring, idealization, localize, product_graded, quotient_graded
from .definition import Definition, DefinitionError, dump_definition, fingerprint, load_definition, to_definition
from .errors import AlgebraError, TheoremViolation
from .fixtures import FIXTURES, run_fixture
from .modules import GradedModule, colon_ideal, enumerate_graded_submodules, is_graded_submodule
from .sprime import (
    colon_family,
    find_sprime_witness,
    is_graded_prime,
    is_graded_s_prime,
    is_graded_S_prime,
    sprime_witnesses,
    verify_module_theorems,
)

SCHEMA = "gsprime-report/1"
EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_SUITE = 0, 1, 2, 3


class Report:
    """Collects checks; ``to_dict`` is deterministic apart from the ``timing`` field."""

    def __init__(self, command: str, args: dict):
        self.command = command
        self.args = args
        self.structures: dict = {}
        self.checks: list[dict] = []
        self.data: dict = {}
        self.exit_code = EXIT_OK
        self.error: str | None = None
        self._start = time.perf_counter()

    def structure(self, key: str, obj: GradedRing | GradedModule) -> None:
        self.structures[key] = {"name": obj.name, "order": obj.order, "sha256": fingerprint(obj)}

    def check(self, name: str, verdict: bool, anchor: str | None = None, detail: dict | None = None) -> None:
        entry = {"name": name, "verdict": bool(verdict)}
        if anchor:
            entry["anchor"] = anchor
        if detail:
            entry["detail"] = detail
        self.checks.append(entry)

    def to_dict(self) -> dict:
        body = {
            "schema": SCHEMA,
            "version": __version__,
            "command": {"name": self.command, "args": self.args},
            "structures": self.structures,
            "checks": self.checks,
            "data": self.data,
            "exit_code": self.exit_code,
        }
        if self.error:
            body["error"] = self.error
        body["report_sha256"] = hashlib.sha256(json.dumps(body, sort_keys=True).encode()).hexdigest()
        body["timing"] = {"seconds": round(time.perf_counter() - self._start, 6)}
        return body

    def text(self) -> str:
        lines = [f"gsprime {self.command}"]
        for key, s in self.structures.items():
            lines.append(f"  {key}: {s['name'] or '?'} (order {s['order']}, sha256 {s['sha256'][:12]})")
        for c in self.checks:
            extra = c.get("detail")
            tail = f" [{c['anchor']}]" if "anchor" in c else ""
            lines.append(f"  {'PASS' if c['verdict'] else 'FAIL'} {c['name']}{tail}")
            if extra:
                lines.append("       " + json.dumps(extra, sort_keys=True))
        for k, v in self.data.items():
            lines.append(f"  {k}: {json.dumps(v, sort_keys=True)}")
        if self.error:
            lines.append(f"  error: {self.error}")
        lines.append(f"  exit {self.exit_code}")
        return "\n".join(lines)


def _load(rep: Report, path: str) -> Definition:
    defn = load_definition(path)
    rep.args["definition_sha256"] = defn.source_sha256
    rep.structure("ring", defn.ring)
    rep.structure("module", defn.module)
    return defn


def _elt(R: GradedRing, ref: str) -> int:
    return R.element(ref)


# --------------------------------------------------------------------------
# commands


def cmd_validate(rep: Report, a) -> None:
    d = _load(rep, a.definition)
    R, M = d.ring, d.module
    rep.data["ring"] = {
        "group_order": R.group.order,
        "components": {R.group.labels[g]: R.fmt(c) for g, c in enumerate(R.components)},
        "graded_field": is_graded_field(R),
        "crossed_product": is_crossed_product(R),
        "homogeneous_units": R.fmt(R.homogeneous_units),
    }
    rep.data["module"] = {"components": {R.group.labels[g]: M.fmt(c) for g, c in enumerate(M.components)}}
    rep.data["graded_submodules"] = len(enumerate_graded_submodules(M))
    for name, N in d.submodules.items():
        rep.check(f"submodule {name} is graded", bool(is_graded_submodule(N)))
    if any(not c["verdict"] for c in rep.checks):
        rep.exit_code = EXIT_FALSE


def cmd_check_prime(rep: Report, a) -> None:
    d = _load(rep, a.definition)
    N = d.submodule(a.N)
    res = is_graded_prime(N)
    rep.check(f"{a.N} is graded prime", res.verdict, detail=res.to_dict(d.module))
    rep.exit_code = EXIT_OK if res else EXIT_FALSE


def cmd_check_sprime(rep: Report, a) -> None:
    d = _load(rep, a.definition)
    N, s = d.submodule(a.N), _elt(d.ring, a.s)
    res = is_graded_s_prime(N, s)
    rep.check(f"{a.N} is graded {d.ring.label(s)}-prime", res.verdict, detail=res.to_dict(d.module))
    rep.exit_code = EXIT_OK if res else EXIT_FALSE


def cmd_check_Sprime(rep: Report, a) -> None:
    d = _load(rep, a.definition)
    N, S = d.submodule(a.N), d.subset(a.S)
    res = is_graded_S_prime(N, S)
    rep.check(f"{a.N} is graded S-prime", res.verdict, detail={"S": d.ring.fmt(S), **res.to_dict(d.module)})
    rep.exit_code = EXIT_OK if res else EXIT_FALSE


def cmd_witnesses(rep: Report, a) -> None:
    d = _load(rep, a.definition)
    N = d.submodule(a.N)
    rep.data["witnesses"] = d.ring.fmt(sprime_witnesses(N))
    rep.data["colon_ideal"] = d.ring.fmt(colon_ideal(N))


def cmd_find_witness(rep: Report, a) -> None:
    d = _load(rep, a.definition)
    N = d.submodule(a.N)
    s = find_sprime_witness(N)
    C = d.module.sub(x for x in range(d.module.order) if d.module.act(s, x) in N)
    rep.data["s"] = d.ring.label(s)
    rep.data["colon"] = C.labels()
    rep.check(f"{a.N} is graded s-prime", bool(is_graded_s_prime(N, s)), "Theorem maximal-2", {"s": d.ring.label(s)})
    rep.check("(N :_M s) is graded prime", bool(is_graded_prime(C)), "Theorem maximal", {"colon": C.labels()})


def cmd_colon_family(rep: Report, a) -> None:
    d = _load(rep, a.definition)
    rep.data["family"] = colon_family(d.submodule(a.N)).to_dict()


def cmd_verify(rep: Report, a) -> None:
    d = _load(rep, a.definition)
    res = verify_module_theorems(d.module, ideal_pairs=True if a.ideal_pairs else None)
    for c in res.checks:
        entry = c.to_dict()
        rep.check(entry.pop("name"), entry.pop("verdict"), entry.pop("anchor"), entry)
    rep.exit_code = EXIT_OK if res.passed else EXIT_SUITE


def _emit_structure(rep: Report, R: GradedRing, out: str | None) -> None:
    rep.structure("result", R)
    rep.data["components"] = {R.group.labels[g]: R.fmt(c) for g, c in enumerate(R.components)}
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(dump_definition(to_definition(R)))


def cmd_construct(rep: Report, a) -> None:
    d = _load(rep, a.definition)
    R = d.ring
    if a.kind == "quotient":
        Q = quotient_graded(R, d.ideal(a.name))
    elif a.kind == "product":
        Q = product_graded(R, *(load_definition(p).ring for p in a.others))
    elif a.kind == "idealize":
        Q = idealization(R, d.module)
    elif a.kind == "localize":
        Q = localize(R, d.subset(a.name)).ring
    else:
        Q = group_ring(R, cyclic_group(a.cyclic or 2))
    _emit_structure(rep, Q, a.out)


def cmd_fixtures(rep: Report, a) -> None:
    if a.action == "list":
        rep.data["fixtures"] = sorted(FIXTURES)
        return
    res = run_fixture(a.name, a.s, a.bound)
    for c in res.checks:
        entry = c.to_dict()
        rep.check(entry.pop("name"), entry.pop("passed"), entry.pop("anchor"), entry)
    rep.exit_code = EXIT_OK if res.passed else EXIT_SUITE


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gsprime", description="Exhaustive checker for graded s-prime submodules.")
    p.add_argument("--json", metavar="PATH", help="also write the JSON report here")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str, *positionals: str):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("definition", help="YAML or JSON definition file")
        for pos in positionals:
            sp.add_argument(pos)
        sp.set_defaults(fn=fn)
        return sp

    add("validate", cmd_validate, "parse and validate a definition")
    add("check-prime", cmd_check_prime, "is N graded prime", "N")
    add("check-sprime", cmd_check_sprime, "is N graded s-prime", "N", "s")
    add("check-Sprime", cmd_check_Sprime, "is N graded S-prime (S: set name or a,b,c)", "N", "S")
    add("witnesses", cmd_witnesses, "all s making N s-prime", "N")
    add("find-witness", cmd_find_witness, "witness from a maximal colon", "N")
    add("colon-family", cmd_colon_family, "the colons (N :_M t)", "N")
    v = add("verify-theorems", cmd_verify, "run every transfer statement on the module")
    v.add_argument("--ideal-pairs", action="store_true", help="include the ideal-pair oracle regardless of size")

    c = sub.add_parser("construct", help="build a derived ring")
    c.add_argument("kind", choices=["quotient", "product", "idealize", "localize", "groupring"])
    c.add_argument("definition")
    c.add_argument("name", nargs="?", help="ideal (quotient) or set (localize)")
    c.add_argument("--with", dest="others", nargs="*", default=[], help="further definition files (product)")
    c.add_argument("--cyclic", type=int, help="order of the cyclic group (groupring)")
    c.add_argument("--out", help="write the result as a definition file")
    c.set_defaults(fn=cmd_construct)

    f = sub.add_parser("fixtures", help="infinite examples over Z")
    f.add_argument("action", choices=["run", "list"])
    f.add_argument("name", nargs="?")
    f.add_argument("--s", type=int)
    f.add_argument("--bound", type=int)
    f.set_defaults(fn=cmd_fixtures)
    return p


def _echo(a) -> dict:
    skip = {"fn", "json", "command", "definition", "out", "others"}
    return {k: v for k, v in sorted(vars(a).items()) if k not in skip and v is not None}


def run(argv: list[str] | None = None) -> tuple[Report, int]:
    a = build_parser().parse_args(argv)
    rep = Report(a.command, _echo(a))
    try:
        if a.command == "construct" and a.kind in ("quotient", "localize") and not a.name:
            raise DefinitionError("", f"construct {a.kind} needs a name")
        if a.command == "fixtures" and a.action == "run" and not a.name:
            raise DefinitionError("", "fixtures run needs a fixture name")
        a.fn(rep, a)
    except TheoremViolation as exc:
        rep.error, rep.exit_code = str(exc), EXIT_SUITE
    except (AlgebraError, OSError) as exc:
        rep.error, rep.exit_code = str(exc), EXIT_INPUT
    if a.json:
        with open(a.json, "w", encoding="utf-8") as fh:
            json.dump(rep.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return rep, rep.exit_code


def main(argv: list[str] | None = None) -> int:
    rep, code = run(argv)
    print(rep.text())
    if rep.error:
        print(f"gsprime: {rep.error}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
