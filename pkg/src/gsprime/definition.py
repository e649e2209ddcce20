"""Definition files (YAML or JSON) describing a graded ring, a module and named subsets.

Schema, informally::

    group:  {cyclic: n} | {product: [group, ...]} | {table: [[...]], labels: [...]}
    ring:   {zn: n} | {table: {add, mul, zero, one, labels}} | {poly: {p, modulus, var}}
          | {product: [ring, ...]} | {quotient: {ring, ideal}}
          | {group_ring: {base: ring, group: group}} | {idealization: {ring, module}}
          | {localize: {ring, set}}
            plus an optional  grading: trivial | {group-label: [elements]}
    module: self | {zn: n, components?} | {direct_sum: [module, ...]}
          | {quotient: {module, submodule}} | {table: {add, action, components, labels, zero}}
    ideals / submodules / sets:  name -> [elements] | {generators: [elements]}

Elements are ids or labels. JSON files parse too, since JSON is YAML.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any

import yaml

from .algebra import (
    FiniteGroup,
    FiniteRing,
    GradedRing,
    cyclic_group,
    graded_ring,
    poly_quotient_ring,
    product_group,
    trivial_group,
    zn_ring,
)
from .constructions import group_ring, idealization, localize, product_graded, quotient_graded, quotient_module
from .errors import AlgebraError, StructureError
from .modules import GradedModule, Submodule, direct_sum, generated_submodule, zn_module


class DefinitionError(AlgebraError):
    """Problem in a definition file, located by field path and (when known) line."""

    def __init__(self, path: str, message: str, line: int | None = None):
        self.path = path
        self.line = line
        where = path or "<root>"
        if line is not None:
            where += f" (line {line})"
        super().__init__(f"{where}: {message}")


def _line_map(text: str) -> dict[str, int]:
    """Dotted field path -> 1-based line, from the YAML node tree."""
    out: dict[str, int] = {}

    def walk(node, path):
        out.setdefault(path, node.start_mark.line + 1)
        if isinstance(node, yaml.MappingNode):
            for k, v in node.value:
                walk(v, f"{path}.{k.value}" if path else str(k.value))
        elif isinstance(node, yaml.SequenceNode):
            for i, v in enumerate(node.value):
                walk(v, f"{path}[{i}]")

    try:
        root = yaml.compose(text)
    except yaml.YAMLError:
        return out
    if root is not None:
        walk(root, "")
    return out


@dataclass
class Definition:
    ring: GradedRing
    module: GradedModule
    ideals: dict[str, frozenset[int]] = field(default_factory=dict)
    submodules: dict[str, Submodule] = field(default_factory=dict)
    sets: dict[str, frozenset[int]] = field(default_factory=dict)
    source_sha256: str = ""

    def submodule(self, name: str) -> Submodule:
        if name in self.submodules:
            return self.submodules[name]
        if self.module.meta.get("regular") and name in self.ideals:
            return self.module.sub(self.ideals[name])
        raise StructureError(f"unknown submodule {name!r}")

    def ideal(self, name: str) -> frozenset[int]:
        if name in self.ideals:
            return self.ideals[name]
        if self.module.meta.get("regular") and name in self.submodules:
            return self.submodules[name].elements
        raise StructureError(f"unknown ideal {name!r}")

    def subset(self, ref: str) -> frozenset[int]:
        """A named set, or a comma separated literal list of ring elements."""
        if ref in self.sets:
            return self.sets[ref]
        return self.ring.elements(x for x in ref.split(",") if x.strip())


class _Parser:
    def __init__(self, lines: dict[str, int]):
        self.lines = lines

    def fail(self, path: str, msg: str):
        raise DefinitionError(path, msg, self.lines.get(path))

    def kind(self, spec, path: str, kinds: tuple[str, ...]) -> tuple[str, Any]:
        if not isinstance(spec, dict):
            self.fail(path, f"expected a mapping with one of {', '.join(kinds)}")
        found = [k for k in spec if k in kinds]
        if len(found) != 1:
            self.fail(path, f"expected exactly one of {', '.join(kinds)}")
        return found[0], spec[found[0]]

    def guarded(self, path: str, fn, *args):
        try:
            return fn(*args)
        except DefinitionError:
            raise
        except AlgebraError as exc:
            self.fail(path, str(exc))
        except (TypeError, ValueError, KeyError, IndexError) as exc:
            self.fail(path, f"malformed value ({exc})")

    # groups --------------------------------------------------------------
    def group(self, spec, path: str) -> FiniteGroup:
        if spec is None:
            return trivial_group()
        k, v = self.kind(spec, path, ("cyclic", "product", "table"))
        p = f"{path}.{k}"
        if k == "cyclic":
            return self.guarded(p, cyclic_group, int(v))
        if k == "product":
            return self.guarded(p, product_group, *(self.group(g, f"{p}[{i}]") for i, g in enumerate(v)))
        return self.guarded(p, lambda: FiniteGroup(v, spec.get("identity", 0), None, spec.get("labels")))

    # rings ---------------------------------------------------------------
    def ring(self, spec, path: str, group: FiniteGroup) -> GradedRing:
        kinds = ("zn", "table", "poly", "product", "quotient", "group_ring", "idealization", "localize")
        k, v = self.kind(spec, path, kinds)
        p = f"{path}.{k}"
        if k in ("zn", "table", "poly"):
            if k == "zn":
                base = self.guarded(p, zn_ring, int(v))
                name = f"Z{int(v)}"
            elif k == "table":
                base = self.guarded(
                    p, lambda: FiniteRing(v["add"], v["mul"], v.get("zero", 0), v.get("one", 1), None, v.get("labels"))
                )
                name = spec.get("name", "")
            else:
                base = self.guarded(p, lambda: poly_quotient_ring(int(v["p"]), v["modulus"], v.get("var", "x")))
                name = spec.get("name", "")
            return self.graded(base, spec.get("grading", "trivial"), group, f"{path}.grading", name)
        if k == "product":
            return self.guarded(p, product_graded, *(self.ring(r, f"{p}[{i}]", group) for i, r in enumerate(v)))
        if k == "quotient":
            R = self.ring(v.get("ring"), f"{p}.ring", group)
            I = self.element_set(R, v.get("ideal"), f"{p}.ideal", ideal=True)
            return self.guarded(p, quotient_graded, R, I)
        if k == "group_ring":
            G = self.group(v["group"], f"{p}.group") if "group" in v else group
            T = self.ring(v.get("base"), f"{p}.base", trivial_group())
            R = self.guarded(p, group_ring, T, G)
            R.name = f"{T.name}[G]" if T.name else R.name
            return R
        if k == "idealization":
            R = self.ring(v.get("ring"), f"{p}.ring", group)
            M = self.module(v.get("module", "self"), f"{p}.module", R)
            return self.guarded(p, idealization, R, M)
        R = self.ring(v.get("ring"), f"{p}.ring", group)
        S = self.element_set(R, v.get("set"), f"{p}.set")
        return self.guarded(p, lambda: localize(R, S).ring)

    def graded(self, base: FiniteRing, gspec, group: FiniteGroup, path: str, name: str) -> GradedRing:
        if gspec in (None, "trivial"):
            return self.guarded(path, graded_ring, base, group, None, name)
        if not isinstance(gspec, dict):
            self.fail(path, "grading must be 'trivial' or a mapping from group elements to element lists")
        comps = {}
        for g, elems in gspec.items():
            gp = f"{path}.{g}"
            gid = self.guarded(gp, group.element, g)
            comps[gid] = self.guarded(gp, base.elements, elems or [])
        return self.guarded(path, graded_ring, base, group, comps, name)

    # modules -------------------------------------------------------------
    def module(self, spec, path: str, R: GradedRing) -> GradedModule:
        if spec in (None, "self"):
            return R.regular_module
        k, v = self.kind(spec, path, ("zn", "direct_sum", "quotient", "table"))
        p = f"{path}.{k}"
        if k == "zn":
            comps = spec.get("components")
            if comps is not None:
                comps = {self.guarded(f"{path}.components", R.group.element, g): [int(x) for x in xs] for g, xs in comps.items()}
                comps = [comps.get(g, [0]) for g in range(R.group.order)]
            return self.guarded(p, zn_module, R, int(v), comps)
        if k == "direct_sum":
            return self.guarded(p, direct_sum, *(self.module(m, f"{p}[{i}]", R) for i, m in enumerate(v)))
        if k == "quotient":
            M = self.module(v.get("module", "self"), f"{p}.module", R)
            L = self.submodule_spec(M, v.get("submodule"), f"{p}.submodule")
            return self.guarded(p, quotient_module, M, L)

        def build():
            comps = {R.group.element(g): xs for g, xs in v["components"].items()}
            comps = [comps.get(g, [v.get("zero", 0)]) for g in range(R.group.order)]
            return GradedModule(R, v["add"], v["action"], comps, v.get("zero", 0), None, v.get("labels"), spec.get("name", ""))

        return self.guarded(p, build)

    # subsets -------------------------------------------------------------
    def element_set(self, X, spec, path: str, ideal: bool = False) -> frozenset[int]:
        if isinstance(spec, dict) and "generators" in spec:
            gens = self.guarded(f"{path}.generators", X.elements, spec["generators"])
            if isinstance(X, GradedRing):
                return X.ideal_generated(gens)
            return generated_submodule(X, gens).elements
        if not isinstance(spec, list):
            self.fail(path, "expected a list of elements or {generators: [...]}")
        elems = self.guarded(path, X.elements, spec)
        if ideal and isinstance(X, GradedRing) and X.ideal_generated(elems) != elems:
            self.fail(path, "not an ideal")
        return elems

    def submodule_spec(self, M: GradedModule, spec, path: str) -> Submodule:
        elems = self.element_set(M, spec, path)
        if M.span(elems) != elems:
            self.fail(path, "not a submodule (not closed under addition and the ring action)")
        return M.sub(elems)


def parse_definition(text: str) -> Definition:
    """Parse and validate; raises :class:`DefinitionError` with a field path and line."""
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        raise DefinitionError("", f"syntax error: {getattr(exc, 'problem', exc)}", mark.line + 1 if mark else None)
    if not isinstance(data, dict):
        raise DefinitionError("", "top level must be a mapping")
    unknown = set(data) - {"group", "ring", "module", "ideals", "submodules", "sets", "name"}
    if unknown:
        raise DefinitionError(sorted(unknown)[0], "unknown top-level field")
    if "ring" not in data:
        raise DefinitionError("ring", "missing required field")
    P = _Parser(_line_map(text))
    G = P.group(data.get("group"), "group")
    R = P.ring(data["ring"], "ring", G)
    if data.get("name"):
        R.name = str(data["name"])
    M = P.module(data.get("module", "self"), "module", R)
    defn = Definition(R, M, source_sha256=hashlib.sha256(text.encode()).hexdigest())
    for name, spec in (data.get("ideals") or {}).items():
        defn.ideals[str(name)] = P.element_set(R, spec, f"ideals.{name}", ideal=True)
    for name, spec in (data.get("submodules") or {}).items():
        defn.submodules[str(name)] = P.submodule_spec(M, spec, f"submodules.{name}")
    for name, spec in (data.get("sets") or {}).items():
        defn.sets[str(name)] = P.element_set(R, spec, f"sets.{name}")
    return defn


def load_definition(path: str) -> Definition:
    with open(path, encoding="utf-8") as fh:
        return parse_definition(fh.read())


# --------------------------------------------------------------------------
# serialisation


def _rows(t) -> list[list[int]]:
    return [[int(x) for x in row] for row in t]


def group_to_dict(G: FiniteGroup) -> dict:
    return {"table": _rows(G.op), "identity": G.identity, "labels": list(G.labels)}


def ring_to_dict(R: GradedRing) -> dict:
    """Explicit table form, using element ids throughout."""
    return {
        "table": {
            "add": _rows(R.ring.add),
            "mul": _rows(R.ring.mul),
            "zero": R.zero,
            "one": R.one,
            "labels": list(R.labels),
        },
        "grading": {R.group.labels[g]: sorted(c) for g, c in enumerate(R.components)},
        "name": R.name,
    }


def module_to_dict(M: GradedModule) -> dict | str:
    if M.meta.get("regular"):
        return "self"
    return {
        "table": {
            "add": _rows(M.add_table),
            "action": _rows(M.action),
            "components": {M.ring.group.labels[g]: sorted(c) for g, c in enumerate(M.components)},
            "zero": M.zero,
            "labels": list(M.labels),
        },
        "name": M.name,
    }


def to_definition(R: GradedRing, M: GradedModule | None = None, **named) -> dict:
    """A definition document that re-parses to identical tables."""
    doc: dict[str, Any] = {"group": group_to_dict(R.group), "ring": ring_to_dict(R)}
    if M is not None:
        doc["module"] = module_to_dict(M)
    for section, items in named.items():
        doc[section] = {k: sorted(v) for k, v in items.items()}
    return doc


def dump_definition(doc: dict) -> str:
    return yaml.safe_dump(doc, sort_keys=False, default_flow_style=None, width=120)


def fingerprint(obj: GradedRing | GradedModule) -> str:
    """sha256 of the canonical table serialisation (names excluded)."""
    if isinstance(obj, GradedRing):
        doc = {**ring_to_dict(obj), "group": group_to_dict(obj.group)}
    else:
        doc = module_to_dict(obj)
        if doc == "self":
            doc = {"regular": fingerprint(obj.ring)}
    doc = {k: v for k, v in doc.items() if k != "name"}
    return hashlib.sha256(json.dumps(doc, sort_keys=True).encode()).hexdigest()
