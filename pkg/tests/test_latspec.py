from __future__ import annotations

import pytest

from conftest import NONFAITHFUL_DOC, SEPARATOR_DOC
from latmod.dot import emit_dot
from latmod.errors import (
    ConflictingFact,
    InvalidStructure,
    LatSpecSyntaxError,
    UnknownElement,
)
from latmod.generators import gen_frame, gen_zn
from latmod.latspec import doc_from_bundle, emit_latspec, load_instance, parse_latspec

CHAIN1_GOLDEN = """#LATSPEC 1
lattice
elements c0 c1
leq c0 c1
mul c0 c0 c0
mul c0 c1 c0
mul c1 c1 c1
end
module
elements c0 c1
leq c0 c1
act c0 c0 c0
act c0 c1 c0
act c1 c0 c0
act c1 c1 c1
end
"""


def test_chain1_golden_emission():
    assert emit_latspec(doc_from_bundle(gen_frame("chain(1)"))) == CHAIN1_GOLDEN


def test_parse_emit_fixpoint_on_generated_docs():
    for bundle in (gen_zn(12), gen_zn(30), gen_frame("boolean(2)"), gen_frame("chain(4)")):
        text = emit_latspec(doc_from_bundle(bundle))
        doc = parse_latspec(text)
        assert emit_latspec(doc) == text
        assert parse_latspec(emit_latspec(doc)) == doc


def test_parse_emit_fixpoint_on_handwritten_docs():
    for text in (SEPARATOR_DOC, NONFAITHFUL_DOC, CHAIN1_GOLDEN):
        doc = parse_latspec(text)
        canonical = emit_latspec(doc)
        assert parse_latspec(canonical) == doc
        assert emit_latspec(parse_latspec(canonical)) == canonical


def test_parse_accepts_any_generating_relation():
    # full order instead of covers, scrambled declaration order, comments
    text = """#LATSPEC 1
lattice
elements b a
elements 0 1   # more elements
leq 0 a
leq 0 b
leq 0 1
leq a 1
leq b 1
leq 0 0
mul a a a
mul a b 0
mul b b b
mul 1 1 1
mul 0 0 0
mul 1 a a
mul 1 b b
mul 1 0 0
mul 0 a 0
mul 0 b 0
end
"""
    bundle = load_instance(parse_latspec(text))
    assert bundle.scalars.names == ("0", "1", "a", "b")
    assert bundle.carrier.names == ("0", "1", "a", "b")  # self-module default


def test_missing_header():
    with pytest.raises(LatSpecSyntaxError):
        parse_latspec("lattice\nend\n")


def test_missing_end():
    with pytest.raises(LatSpecSyntaxError) as err:
        parse_latspec("#LATSPEC 1\nlattice\nelements x\n")
    assert "end" in str(err.value)


def test_unrecognized_fact_line_number():
    with pytest.raises(LatSpecSyntaxError) as err:
        parse_latspec("#LATSPEC 1\nlattice\nelements x\nfoo x y\nend\n")
    assert err.value.line == 4


def test_conflicting_mul_facts():
    text = "#LATSPEC 1\nlattice\nelements a b c d\nmul a b c\nmul b a d\nend\n"
    with pytest.raises(ConflictingFact) as err:
        parse_latspec(text)
    assert err.value.line == 5


def test_conflicting_expansion_and_duplicate_element():
    with pytest.raises(ConflictingFact):
        parse_latspec("#LATSPEC 1\nlattice\nelements x x\nend\n")
    text = (
        "#LATSPEC 1\nlattice\nelements x\nmul x x x\nend\n"
        "expansion d on lattice\nmap x x\nend\n"
        "expansion d on lattice\nmap x x\nend\n"
    )
    with pytest.raises(ConflictingFact):
        parse_latspec(text)


def test_unknown_element_with_line():
    with pytest.raises(UnknownElement) as err:
        parse_latspec("#LATSPEC 1\nlattice\nelements x\nleq x y\nend\n")
    assert err.value.name == "y"
    assert err.value.line == 4


def test_expansion_on_missing_module():
    text = "#LATSPEC 1\nlattice\nelements x\nmul x x x\nend\nexpansion d on module\nend\n"
    with pytest.raises(LatSpecSyntaxError):
        parse_latspec(text)


def test_load_separator_document(separator_bundle):
    assert not separator_bundle.multiplication_module
    assert [d.label for d in separator_bundle.extra_expansions_m] == ["dsep"]


def test_load_rejects_invalid_multiplication():
    # diamond with a*b = 1 violates join-distributivity and the sanity law
    text = """#LATSPEC 1
lattice
elements 0 1 a b
leq 0 a
leq 0 b
leq a 1
leq b 1
mul a a a
mul a b 1
mul b b b
mul 1 1 1
mul 0 0 0
mul 1 a a
mul 1 b b
mul 1 0 0
mul 0 a 0
mul 0 b 0
end
"""
    with pytest.raises(InvalidStructure) as err:
        load_instance(parse_latspec(text))
    failed = {axiom for axiom, _ in err.value.report.failures}
    assert "product-below-meet" in failed


def test_dot_two_chain_single_edge():
    out = emit_dot(gen_frame("chain(1)"), "lattice")
    assert out == 'digraph lattice {\n  "c0";\n  "c1";\n  "c0" -> "c1";\n}\n'


def test_dot_z12_nodes_and_cover_edges(z12):
    out = emit_dot(z12, "lattice")
    lines = out.strip().split("\n")
    edges = [l for l in lines if "->" in l]
    nodes = [l for l in lines if l.endswith(";") and "->" not in l]
    assert len(nodes) == 6 and len(edges) == 7


def test_dot_singleton():
    from latmod.lattice import build_lattice, MulLattice
    from latmod.module import make_bundle, self_module
    import numpy as np

    lat = build_lattice(["x"], [])
    bundle = make_bundle(self_module(MulLattice(lat, lat.meet.astype(np.int64))), "pt")
    out = emit_dot(bundle, "module")
    assert out == 'digraph module {\n  "x";\n}\n'


def test_dot_deterministic_bytes(z12):
    assert emit_dot(z12, "lattice") == emit_dot(z12, "lattice")
    assert emit_dot(z12, "module") == emit_dot(z12, "module")


def test_conflicting_act_facts():
    text = (
        "#LATSPEC 1\nlattice\nelements a\nmul a a a\nend\n"
        "module\nelements X Y\nleq X Y\nact a X X\nact a X Y\nend\n"
    )
    with pytest.raises(ConflictingFact) as err:
        parse_latspec(text)
    assert err.value.line == 10


def test_parse_tolerates_crlf_input():
    crlf = CHAIN1_GOLDEN.replace("\n", "\r\n")
    assert parse_latspec(crlf) == parse_latspec(CHAIN1_GOLDEN)


def test_reserved_expansion_names_rejected():
    text = (
        "#LATSPEC 1\nlattice\nelements x\nmul x x x\nend\n"
        "expansion delta1 on lattice\nmap x x\nend\n"
    )
    with pytest.raises(ConflictingFact):
        load_instance(parse_latspec(text))
