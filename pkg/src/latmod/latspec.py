"""The LATSPEC document format: a line-oriented description of a
multiplicative lattice, an optional module over it, and optional
expansion-function tables.

Grammar (UTF-8, `#` starts a comment, names are whitespace-free tokens):

    #LATSPEC 1
    lattice
      elements n1 n2 ...
      leq a b
      mul a b c          # a*b = c; commutativity implied
    end
    module
      elements A B ...
      leq A B
      act a X Y          # a.X = Y; a is a lattice element
    end
    expansion <name> on <lattice|module>
      map A B
    end

Any generating set of the order is accepted; the closure is computed when
the document is turned into structures.  Emission is canonical: elements
sorted lexicographically, facts sorted, one fact per line, LF endings, so
parse -> emit -> parse is a fixpoint.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConflictingFact, InvalidStructure, LatSpecSyntaxError, UnknownElement
from .lattice import MulLattice, build_lattice, mul_table_from_facts, validate_mul
from .module import (
    InstanceBundle,
    LatticeModule,
    action_table_from_facts,
    make_bundle,
    self_module,
    validate_module,
)


@dataclass(frozen=True)
class ExpansionSection:
    name: str
    target: str  # "lattice" | "module"
    entries: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class LatSpecDocument:
    lattice_elements: tuple[str, ...]
    lattice_leq: tuple[tuple[str, str], ...]
    lattice_mul: tuple[tuple[str, str, str], ...]
    module_elements: tuple[str, ...] | None = None
    module_leq: tuple[tuple[str, str], ...] | None = None
    module_act: tuple[tuple[str, str, str], ...] | None = None
    expansions: tuple[ExpansionSection, ...] = ()

    @property
    def has_module(self) -> bool:
        return self.module_elements is not None


def make_document(
    lattice_elements,
    lattice_leq,
    lattice_mul,
    module_elements=None,
    module_leq=None,
    module_act=None,
    expansions=(),
) -> LatSpecDocument:
    """Canonicalize raw facts into a document (sorted, deduplicated)."""

    def canon_mul(triples):
        out = {}
        for a, b, c in triples:
            key = (a, b) if a <= b else (b, a)
            if out.get(key, c) != c:
                raise ConflictingFact(f"mul {a} {b}", 0)
            out[key] = c
        return tuple((a, b, c) for (a, b), c in sorted(out.items()))

    def canon_act(triples):
        out = {}
        for a, x, y in triples:
            if out.get((a, x), y) != y:
                raise ConflictingFact(f"act {a} {x}", 0)
            out[(a, x)] = y
        return tuple((a, x, y) for (a, x), y in sorted(out.items()))

    return LatSpecDocument(
        lattice_elements=tuple(sorted(lattice_elements)),
        lattice_leq=tuple(sorted(set(map(tuple, lattice_leq)))),
        lattice_mul=canon_mul(lattice_mul),
        module_elements=None if module_elements is None else tuple(sorted(module_elements)),
        module_leq=None if module_leq is None else tuple(sorted(set(map(tuple, module_leq)))),
        module_act=None if module_act is None else canon_act(module_act),
        expansions=tuple(
            sorted(
                (
                    ExpansionSection(e.name, e.target, tuple(sorted(set(e.entries))))
                    for e in expansions
                ),
                key=lambda e: e.name,
            )
        ),
    )


class _BlockReader:
    def __init__(self):
        self.elements: list[str] = []
        self.element_lines: dict[str, int] = {}
        self.leq: list[tuple[str, str]] = []
        self.triples: dict = {}  # mul or act facts with their lines
        self.maps: dict = {}  # expansion entries


def parse_latspec(text: str) -> LatSpecDocument:
    lines = text.replace("\r\n", "\n").split("\n")
    if not lines or lines[0].strip() != "#LATSPEC 1":
        raise LatSpecSyntaxError("missing '#LATSPEC 1' header", 1)

    lattice: _BlockReader | None = None
    module: _BlockReader | None = None
    expansions: list[tuple[str, str, _BlockReader, int]] = []
    block: _BlockReader | None = None
    kind = ""
    last = 1

    for lineno, raw in enumerate(lines[1:], start=2):
        last = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if block is None:
            if head == "lattice" and len(tokens) == 1:
                if lattice is not None:
                    raise LatSpecSyntaxError("duplicate lattice block", lineno)
                lattice = block = _BlockReader()
                kind = "lattice"
            elif head == "module" and len(tokens) == 1:
                if module is not None:
                    raise LatSpecSyntaxError("duplicate module block", lineno)
                module = block = _BlockReader()
                kind = "module"
            elif head == "expansion" and len(tokens) == 4 and tokens[2] == "on":
                if tokens[3] not in ("lattice", "module"):
                    raise LatSpecSyntaxError("expansion target must be lattice or module", lineno)
                if any(name == tokens[1] for name, _, _, _ in expansions):
                    raise ConflictingFact(f"expansion {tokens[1]}", lineno)
                block = _BlockReader()
                expansions.append((tokens[1], tokens[3], block, lineno))
                kind = "expansion"
            else:
                raise LatSpecSyntaxError(f"expected a block header, got {line!r}", lineno)
            continue
        if head == "end" and len(tokens) == 1:
            block = None
            continue
        if head == "elements" and kind in ("lattice", "module"):
            if len(tokens) < 2:
                raise LatSpecSyntaxError("elements fact needs at least one name", lineno)
            for name in tokens[1:]:
                if name in block.element_lines:
                    raise ConflictingFact(f"element {name} declared twice", lineno)
                block.element_lines[name] = lineno
                block.elements.append(name)
        elif head == "leq" and kind in ("lattice", "module") and len(tokens) == 3:
            block.leq.append(((tokens[1], tokens[2]), lineno))
        elif head == "mul" and kind == "lattice" and len(tokens) == 4:
            a, b, c = tokens[1:]
            key = (a, b) if a <= b else (b, a)
            if key in block.triples and block.triples[key][0] != c:
                raise ConflictingFact(f"mul {a} {b}", lineno)
            block.triples.setdefault(key, (c, lineno))
        elif head == "act" and kind == "module" and len(tokens) == 4:
            a, x, y = tokens[1:]
            if (a, x) in block.triples and block.triples[(a, x)][0] != y:
                raise ConflictingFact(f"act {a} {x}", lineno)
            block.triples.setdefault((a, x), (y, lineno))
        elif head == "map" and kind == "expansion" and len(tokens) == 3:
            a, b = tokens[1], tokens[2]
            if a in block.maps and block.maps[a][0] != b:
                raise ConflictingFact(f"map {a}", lineno)
            block.maps.setdefault(a, (b, lineno))
        else:
            raise LatSpecSyntaxError(f"unrecognized fact {line!r}", lineno)

    if block is not None:
        raise LatSpecSyntaxError("missing 'end'", last)
    if lattice is None:
        raise LatSpecSyntaxError("document has no lattice block", last)

    def check_names(names, declared, what):
        for name, lineno in names:
            if name not in declared:
                raise UnknownElement(name, lineno)

    ldecl = set(lattice.elements)
    check_names([(n, ln) for (pair, ln) in lattice.leq for n in pair], ldecl, "lattice")
    check_names(
        [(n, ln) for (key, (c, ln)) in lattice.triples.items() for n in (*key, c)],
        ldecl,
        "lattice",
    )
    mdecl = set(module.elements) if module is not None else set()
    if module is not None:
        check_names([(n, ln) for (pair, ln) in module.leq for n in pair], mdecl, "module")
        for (a, x), (y, ln) in module.triples.items():
            if a not in ldecl:
                raise UnknownElement(a, ln)
            if x not in mdecl or y not in mdecl:
                raise UnknownElement(x if x not in mdecl else y, ln)
    sections = []
    for name, target, reader, lineno in expansions:
        decl = ldecl if target == "lattice" else mdecl
        if target == "module" and module is None:
            raise LatSpecSyntaxError(f"expansion {name} is on module but there is none", lineno)
        for a, (b, ln) in reader.maps.items():
            if a not in decl or b not in decl:
                raise UnknownElement(a if a not in decl else b, ln)
        sections.append(
            ExpansionSection(name, target, tuple((a, b) for a, (b, _) in reader.maps.items()))
        )

    return make_document(
        lattice.elements,
        [pair for pair, _ in lattice.leq],
        [(a, b, c) for (a, b), (c, _) in lattice.triples.items()],
        module.elements if module is not None else None,
        [pair for pair, _ in module.leq] if module is not None else None,
        [(a, x, y) for (a, x), (y, _) in module.triples.items()] if module is not None else None,
        sections,
    )


def emit_latspec(doc: LatSpecDocument) -> str:
    out = ["#LATSPEC 1", "lattice"]
    out.append("elements " + " ".join(doc.lattice_elements))
    out += [f"leq {a} {b}" for a, b in doc.lattice_leq]
    out += [f"mul {a} {b} {c}" for a, b, c in doc.lattice_mul]
    out.append("end")
    if doc.has_module:
        out.append("module")
        out.append("elements " + " ".join(doc.module_elements))
        out += [f"leq {a} {b}" for a, b in doc.module_leq]
        out += [f"act {a} {x} {y}" for a, x, y in doc.module_act]
        out.append("end")
    for e in doc.expansions:
        out.append(f"expansion {e.name} on {e.target}")
        out += [f"map {a} {b}" for a, b in e.entries]
        out.append("end")
    return "\n".join(out) + "\n"


def load_instance(doc: LatSpecDocument, label: str = "instance") -> InstanceBundle:
    """Build and validate the structures a document describes.

    Without a module block the lattice acts on itself by multiplication.
    Raises `InvalidStructure` when an axiom sweep reports failures.
    """
    from .expansion import from_table_l, from_table_m

    lat = build_lattice(doc.lattice_elements, doc.lattice_leq)
    mul = mul_table_from_facts(lat, doc.lattice_mul)
    ml = MulLattice(lat, mul)
    report = validate_mul(ml)
    if not report.ok:
        raise InvalidStructure("multiplicative lattice", report)
    if doc.has_module:
        car = build_lattice(doc.module_elements, doc.module_leq)
        action = action_table_from_facts(ml, car, doc.module_act)
        mod = LatticeModule(ml, car, action)
    else:
        mod = self_module(ml)
    report = validate_module(mod)
    if not report.ok:
        raise InvalidStructure("module", report)
    extra_m = []
    extra_l = []
    reserved = {"delta0", "delta1", "delta2", "delta0_L", "delta1_L", "delta2_L"}
    for e in doc.expansions:
        if e.name in reserved or e.name.startswith(("E(", "meet(")):
            raise ConflictingFact(f"expansion name {e.name} is reserved", 0)
        if e.target == "module":
            extra_m.append(from_table_m(mod, dict(e.entries), label=e.name))
        else:
            extra_l.append(from_table_l(ml, dict(e.entries), label=e.name))
    return make_bundle(mod, label, extra_m=extra_m, extra_l=extra_l)


def doc_from_bundle(bundle: InstanceBundle) -> LatSpecDocument:
    """Render an instance as a canonical document (cover relations only)."""
    ml = bundle.scalars
    car = bundle.carrier
    mod = bundle.module
    lat_mul = [
        (ml.names[i], ml.names[j], ml.names[int(ml.mul[i, j])])
        for i in range(len(ml))
        for j in range(i, len(ml))
    ]
    acts = [
        (ml.names[a], car.names[x], car.names[int(mod.action[a, x])])
        for a in range(len(ml))
        for x in range(len(car))
    ]
    return make_document(
        ml.names,
        ml.lat.covers(),
        lat_mul,
        car.names,
        car.covers(),
        acts,
        [
            ExpansionSection(
                d.label, "module", tuple(zip(car.names, (car.names[int(v)] for v in d.table)))
            )
            for d in bundle.extra_expansions_m
        ]
        + [
            ExpansionSection(
                d.label, "lattice", tuple(zip(ml.names, (ml.names[int(v)] for v in d.table)))
            )
            for d in bundle.extra_expansions_l
        ],
    )
