"""Analysis input files and deterministic report rendering.

Input is a YAML document with sections ``ring``, ``ideal``, ``reduction``
and ``config``::

    ring:
      variables: [x, y, z]
      field: p:32003
    ideal: [x^2, y^2, z^2, x*y + y*z + z*x]
    reduction: [x^2, y^2, z^2]
    config:
      seed: 7

A semigroup ring is written ``ring: {semigroup: [5, 6, 9]}``.  ``ideal`` may
be ``maximal``; ``reduction`` may be ``auto``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any

import yaml

from .field import FieldError, FieldSpec
from .ideal import Ideal
from .poly import ParseError, RingSpec
from .semigroup import NumericalSemigroup

CONFIG_KEYS = {
    "bound_reduction": int, "bound_gb_degree": int, "seed": int, "oracle": bool,
    "trials": int, "power_budget": int, "N": int, "j_max": int,
}
DEFAULT_CONFIG = {"bound_reduction": 25, "bound_gb_degree": 40, "seed": 0, "oracle": False,
                  "trials": 0}


class InputError(ValueError):
    """Malformed input, located by 1-based line and column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
        self.line, self.column = line, column


@dataclass
class AnalysisInput:
    variables: tuple[str, ...] | None = None
    semigroup: tuple[int, ...] | None = None
    field: str | None = None      # None: FieldSpec.default(), which honors $SALLYMOD_FIELD
    ideal: tuple[str, ...] | str = "maximal"
    reduction: tuple[str, ...] | str = "auto"
    config: dict = dc_field(default_factory=dict)

    def field_spec(self) -> FieldSpec:
        return FieldSpec.parse(self.field) if self.field else FieldSpec.default()

    @property
    def engine(self) -> str:
        return "semigroup" if self.semigroup is not None else "groebner"

    def setting(self, key: str):
        return self.config.get(key, DEFAULT_CONFIG.get(key))


def _node_pos(node) -> tuple[int, int]:
    m = node.start_mark
    return m.line + 1, m.column + 1


def _scalar(node, what: str) -> str:
    if not isinstance(node, yaml.ScalarNode):
        raise InputError(f"{what} must be a scalar", *_node_pos(node))
    return node.value


def _mapping(node, what: str) -> dict:
    if not isinstance(node, yaml.MappingNode):
        raise InputError(f"{what} must be a mapping", *_node_pos(node))
    out = {}
    for k, v in node.value:
        out[_scalar(k, "key")] = v
    return out


def _strings(node, what: str) -> tuple[tuple[str, ...], list]:
    if isinstance(node, yaml.ScalarNode):
        return (node.value,), [node]
    if not isinstance(node, yaml.SequenceNode):
        raise InputError(f"{what} must be a list or a word", *_node_pos(node))
    return tuple(_scalar(n, what) for n in node.value), list(node.value)


def load_input(text: str) -> AnalysisInput:
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.MarkedYAMLError as exc:
        m = exc.problem_mark
        raise InputError(str(exc.problem), m.line + 1 if m else None,
                         m.column + 1 if m else None) from None
    if root is None:
        raise InputError("empty input")
    top = _mapping(root, "document")
    for knode, _ in root.value:
        if knode.value not in ("ring", "ideal", "reduction", "config"):
            raise InputError(f"unknown section {knode.value!r}", *_node_pos(knode))
    if "ring" not in top:
        raise InputError("missing section 'ring'")
    inp = AnalysisInput()
    ring = _mapping(top["ring"], "ring")
    if "semigroup" in ring:
        vals, nodes = _strings(ring["semigroup"], "semigroup generators")
        try:
            inp.semigroup = tuple(int(v) for v in vals)
        except ValueError:
            raise InputError("semigroup generators must be integers", *_node_pos(ring["semigroup"])) from None
    elif "variables" in ring:
        vals, _ = _strings(ring["variables"], "variables")
        if len(vals) == 1 and "," in vals[0]:
            vals = tuple(v.strip() for v in vals[0].split(","))
        inp.variables = vals
    else:
        raise InputError("ring needs 'variables' or 'semigroup'", *_node_pos(top["ring"]))
    if "field" in ring:
        inp.field = _scalar(ring["field"], "field")
        try:
            FieldSpec.parse(inp.field)
        except (FieldError, ValueError) as exc:
            raise InputError(str(exc), *_node_pos(ring["field"])) from None
    inp._nodes = {}
    for sec in ("ideal", "reduction"):
        if sec in top:
            vals, nodes = _strings(top[sec], sec)
            word = {"ideal": "maximal", "reduction": "auto"}[sec]
            setattr(inp, sec, word if vals == (word,) else vals)
            inp._nodes[sec] = nodes
    if "config" in top:
        cfg = _mapping(top["config"], "config")
        for k, node in cfg.items():
            if k not in CONFIG_KEYS:
                raise InputError(f"unknown config key {k!r}", *_node_pos(node))
            raw = _scalar(node, k)
            typ = CONFIG_KEYS[k]
            try:
                if typ is bool:
                    if raw.lower() not in ("true", "false"):
                        raise ValueError
                    val = raw.lower() == "true"
                else:
                    val = typ(raw)
            except ValueError:
                raise InputError(f"config {k} expects {typ.__name__}", *_node_pos(node)) from None
            inp.config[k] = val
    return inp


def dump_input(inp: AnalysisInput) -> str:
    doc: dict[str, Any] = {}
    if inp.semigroup is not None:
        doc["ring"] = {"semigroup": list(inp.semigroup)}
    else:
        doc["ring"] = {"variables": list(inp.variables)}
    if inp.field:
        doc["ring"]["field"] = inp.field
    doc["ideal"] = inp.ideal if isinstance(inp.ideal, str) else list(inp.ideal)
    doc["reduction"] = inp.reduction if isinstance(inp.reduction, str) else list(inp.reduction)
    if inp.config:
        doc["config"] = dict(sorted(inp.config.items()))
    return yaml.safe_dump(doc, sort_keys=False, default_flow_style=None)


def _parse_gens(inp: AnalysisInput, sec: str, ring: RingSpec):
    out = []
    nodes = getattr(inp, "_nodes", {}).get(sec)
    for i, text in enumerate(getattr(inp, sec)):
        try:
            out.append(ring.parse(text))
        except ParseError as exc:
            if nodes:
                line, col = _node_pos(nodes[i])
                quoted = nodes[i].style in ("'", '"')
                raise InputError(f"{sec}: {exc.message}", line,
                                 col + exc.pos + (1 if quoted else 0)) from None
            raise InputError(f"{sec}: {exc}") from None
    return out


def build(inp: AnalysisInput, field: FieldSpec | None = None):
    """The pair (I, J); ``reduction: auto`` samples a generic minimal reduction."""
    from .invariants.pair import is_reduction
    from .invariants.sampling import _random_reduction

    fld = field or inp.field_spec()
    if inp.semigroup is not None:
        n_max = inp.setting("power_budget") or 30
        S = NumericalSemigroup(inp.semigroup, n_max=max(n_max, 30), field=fld)
        if inp.ideal == "maximal":
            I = S.maximal()
        else:
            I = S.ideal([p.terms[0][0][0] for p in _parse_gens(inp, "ideal", S.ring)])
        if inp.reduction == "auto":
            return I, S.ideal([I.least])
        elems = _parse_gens(inp, "reduction", S.ring)
        return I, I.ideal_from_elements(elems)
    ring = RingSpec(tuple(inp.variables), fld)
    cap = inp.setting("bound_gb_degree")
    if inp.ideal == "maximal":
        I = Ideal(ring, ring.gens(), degree_cap=cap)
    else:
        I = Ideal(ring, _parse_gens(inp, "ideal", ring), degree_cap=cap, name="I")
    if inp.reduction != "auto":
        return I, Ideal(ring, _parse_gens(inp, "reduction", ring), degree_cap=cap, name="J")
    rng = random.Random(inp.setting("seed"))
    for _ in range(20):
        J = _random_reduction(I, rng)
        if J.num_generators() == I.dim and is_reduction(J, I, inp.setting("bound_reduction")) is not None:
            return I, J
    raise InputError("could not find a minimal reduction by sampling")


# -- rendering ---------------------------------------------------------------

def jsonable(obj):
    """Integers become decimal strings; containers recurse; keys are strings."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, str):
        return obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "value") and isinstance(getattr(obj, "value"), str):
        return obj.value
    return str(obj)


def to_json(doc) -> str:
    return json.dumps(jsonable(doc), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
