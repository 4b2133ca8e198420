"""Structure files (a YAML subset) and the built-in examples.

A structure file looks like::

    name: example1
    generators: [[x, 2], [y, 2], [z, 2], [w, 5]]
    differential: {}
    cooperations:
      3:
        w: [[1, [x, y, z]]]
    flags: {connected: true, expected_primitive: true}

The unit ``1`` of a connected space is implicit.  ``cooperations[2]`` is the
reduced coproduct.  Coefficients are integers or ``"p/q"`` strings.
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import yaml

from .ainf import AInfCoalgebra
from .graded import UNIT, Gen, GradedSpace, Tensor

TOP_KEYS = {"name", "generators", "differential", "cooperations", "flags"}
FLAG_KEYS = {"connected", "expected_primitive"}


class StructureError(ValueError):
    """Malformed structure description; the message carries the line number."""


def _line(node) -> str:
    return f"line {node.start_mark.line + 1}"


def _scalar(node, what: str) -> str:
    if not isinstance(node, yaml.ScalarNode):
        raise StructureError(f"{_line(node)}: {what} must be a scalar")
    return node.value


def _mapping(node, what: str) -> list:
    if isinstance(node, yaml.ScalarNode) and node.value in ("", "~", "null"):
        return []
    if not isinstance(node, yaml.MappingNode):
        raise StructureError(f"{_line(node)}: {what} must be a mapping")
    return node.value


def _sequence(node, what: str) -> list:
    if not isinstance(node, yaml.SequenceNode):
        raise StructureError(f"{_line(node)}: {what} must be a list")
    return node.value


def _coefficient(node) -> Fraction:
    text = _scalar(node, "coefficient").strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise StructureError(f"{_line(node)}: bad coefficient {text!r} (use an integer or p/q)") from None


def _terms(node, arity: int | None, lookup, where: str) -> Tensor:
    out = []
    for term in _sequence(node, f"terms of {where}"):
        pair = _sequence(term, "term")
        if len(pair) != 2:
            raise StructureError(f"{_line(term)}: a term is [coefficient, [word]]")
        coeff = _coefficient(pair[0])
        word = tuple(lookup(f) for f in _sequence(pair[1], "word"))
        if arity is not None and len(word) != arity:
            raise StructureError(f"{_line(term)}: {where} needs words of length {arity}, got {len(word)}")
        out.append((word, coeff))
    return Tensor(out, arity)


def parse_text(text: str, source: str = "<string>") -> AInfCoalgebra:
    try:
        return _parse(text, source)
    except StructureError as exc:
        msg = str(exc)
        if msg.startswith(source + ":"):
            raise
        raise StructureError(f"{source}: {msg}") from None


def _parse(text: str, source: str) -> AInfCoalgebra:
    try:
        root = yaml.compose(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"line {mark.line + 1}" if mark else "?"
        raise StructureError(f"{source}: {where}: malformed syntax: {getattr(exc, 'problem', exc)}") from None
    if root is None:
        raise StructureError(f"{source}: empty structure file")
    fields = {}
    for k, v in _mapping(root, "structure"):
        key = _scalar(k, "field name")
        if key not in TOP_KEYS:
            raise StructureError(f"{source}: {_line(k)}: unknown field {key!r}")
        if key in fields:
            raise StructureError(f"{source}: {_line(k)}: duplicate field {key!r}")
        fields[key] = v
    if "generators" not in fields:
        raise StructureError(f"{source}: missing 'generators'")

    flags = {"connected": True, "expected_primitive": False}
    if "flags" in fields:
        for k, v in _mapping(fields["flags"], "flags"):
            key = _scalar(k, "flag")
            if key not in FLAG_KEYS:
                raise StructureError(f"{source}: {_line(k)}: unknown flag {key!r}")
            val = _scalar(v, "flag value").lower()
            if val not in ("true", "false"):
                raise StructureError(f"{source}: {_line(v)}: flag {key} must be true or false")
            flags[key] = val == "true"

    gens: dict[str, Gen] = {}
    for g in _sequence(fields["generators"], "generators"):
        pair = _sequence(g, "generator")
        if len(pair) != 2:
            raise StructureError(f"{source}: {_line(g)}: a generator is [id, degree]")
        name = _scalar(pair[0], "generator id")
        try:
            deg = int(_scalar(pair[1], "degree"))
        except ValueError:
            raise StructureError(f"{source}: {_line(pair[1])}: degree must be an integer") from None
        if name in gens or (flags["connected"] and name == UNIT.name):
            raise StructureError(f"{source}: {_line(g)}: duplicate generator id {name!r}")
        try:
            gens[name] = Gen(name, deg)
        except ValueError as exc:
            raise StructureError(f"{source}: {_line(g)}: {exc}") from None
    order = ([UNIT] if flags["connected"] else []) + list(gens.values())
    if flags["connected"]:
        gens[UNIT.name] = UNIT
    try:
        space = GradedSpace(tuple(order), connected=flags["connected"])
    except ValueError as exc:
        raise StructureError(f"{source}: {exc}") from None

    def lookup(node):
        name = _scalar(node, "generator id")
        if name not in gens:
            raise StructureError(f"{source}: {_line(node)}: unknown generator {name!r}")
        return gens[name]

    def table(node, arity, what):
        out = {}
        for k, v in _mapping(node, what):
            g = lookup(k)
            if g in out:
                raise StructureError(f"{source}: {_line(k)}: duplicate entry for {g.name}")
            t = _terms(v, arity, lookup, f"{what}({g.name})")
            for key in t:
                if sum(f.degree for f in key) != g.degree + arity - 2:
                    raise StructureError(
                        f"{source}: {_line(v)}: degree violation in {what}({g.name}): "
                        f"word of degree {sum(f.degree for f in key)}, expected {g.degree + arity - 2}")
            out[g] = t
        return out

    differential = table(fields["differential"], 1, "d") if "differential" in fields else {}
    coops = {}
    if "cooperations" in fields:
        for k, v in _mapping(fields["cooperations"], "cooperations"):
            try:
                r = int(_scalar(k, "arity"))
            except ValueError:
                raise StructureError(f"{source}: {_line(k)}: arity must be an integer") from None
            if r < 2:
                raise StructureError(f"{source}: {_line(k)}: cooperation arity must be >= 2")
            if r in coops:
                raise StructureError(f"{source}: {_line(k)}: duplicate arity {r}")
            coops[r] = table(v, r, f"Delta_{r}")
    name = _scalar(fields["name"], "name") if "name" in fields else Path(source).stem
    try:
        return AInfCoalgebra(space, coops, differential, name=name,
                             expected_primitive=flags["expected_primitive"])
    except ValueError as exc:
        raise StructureError(f"{source}: {exc}") from None


def parse_structure(path: str | Path) -> AInfCoalgebra:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise StructureError(f"{path}: {exc.strerror}") from None
    return parse_text(text, str(path))


def _coeff_text(c: Fraction):
    return int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_data(C: AInfCoalgebra) -> dict:
    def table(tab):
        return {g.name: [[_coeff_text(c), [f.name for f in key]] for key, c in t.sorted_items()]
                for g, t in sorted(tab.items(), key=lambda gt: gt[0].name) if t}

    return {
        "name": C.name,
        "generators": [[g.name, g.degree] for g in C.space.reduced],
        "differential": table(C.differential),
        "cooperations": {r: table(tab) for r, tab in sorted(C.tables.items())},
        "flags": {"connected": C.space.connected, "expected_primitive": C.expected_primitive},
    }


def serialize(C: AInfCoalgebra) -> str:
    return yaml.safe_dump(to_data(C), sort_keys=False, default_flow_style=None)


def same_structure(A: AInfCoalgebra, B: AInfCoalgebra) -> bool:
    return to_data(A) == to_data(B)


# ---------------------------------------------------------------------------
# built-ins

EXAMPLE1 = """\
name: example1
generators: [[x, 2], [y, 2], [z, 2], [w, 5]]
differential: {}
cooperations:
  3:
    w: [[1, [x, y, z]]]
flags: {connected: true, expected_primitive: true}
"""

EXAMPLE2 = """\
name: example2
generators: [[x, 2], [y, 2], [z, 2], [w, 5]]
differential: {}
cooperations: {}
flags: {connected: true, expected_primitive: true}
"""

# same homology, Delta_3(w) = [x,[y,z]] with x, y, z treated as odd (shifted grading);
# every signed unshuffle kills it, so it is C-infinity and symmetrizes to zero
EXAMPLE1_CINF = """\
name: example1-cinf
generators: [[x, 2], [y, 2], [z, 2], [w, 5]]
differential: {}
cooperations:
  3:
    w: [[1, [x, y, z]], [1, [x, z, y]], [-1, [y, z, x]], [-1, [z, y, x]]]
flags: {connected: true, expected_primitive: true}
"""

BUILTINS = {"example1": EXAMPLE1, "example2": EXAMPLE2, "example1-cinf": EXAMPLE1_CINF}


def builtin(name: str) -> AInfCoalgebra:
    try:
        return parse_text(BUILTINS[name], f"<builtin {name}>")
    except KeyError:
        raise StructureError(f"unknown built-in structure {name!r}; have {', '.join(BUILTINS)}") from None


def load(spec: str) -> AInfCoalgebra:
    """A built-in name or a path to a structure file."""
    return builtin(spec) if spec in BUILTINS else parse_structure(spec)
