"""Text workspace format: parsing, serialization round-trips, DOT export.

Error positions are asserted exactly so editors can jump to the offending
line.  Round-trips reload the serialized text and compare structures.
"""

import pytest

from quiverhom import (
    QQ,
    CompositionError,
    DanglingIdError,
    InputError,
    ModuleValidationError,
    ParseError,
    PrimeField,
    export_dot,
    load_bundle,
    serialize_ideal,
    serialize_module,
    serialize_quiver,
    serialize_subquiver,
    standard_module,
)

GOOD = """\
quiver
  vertices 1 2 3 4
  arrow a 1 2
  arrow b 2 1
  arrow c 2 3
  arrow d 3 4

ideal
  truncation 4
  relation
    term 1 a b
  relation
    term 1 b a

module S1
  dim 1 1
  dim 2 0
  dim 3 0
  dim 4 0

subquiver
  vertices 1 2
"""


def write(tmp_path, text, name="w.qh"):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_load_full_bundle(tmp_path):
    bundle = load_bundle([write(tmp_path, GOOD)])
    assert bundle.quiver.vertices == ("1", "2", "3", "4")
    assert bundle.algebra is not None and bundle.algebra.dim == 11
    assert bundle.module_names == ("S1",)
    assert bundle.modules[0].dims["1"] == 1
    assert bundle.subquiver == frozenset({"1", "2"})
    assert bundle.field is QQ


def test_load_with_prime_field(tmp_path):
    bundle = load_bundle([write(tmp_path, GOOD)], field=PrimeField(5))
    assert bundle.algebra.field.name == "GF(5)"
    assert bundle.algebra.dim == 11


def test_round_trips(tmp_path, cycle_tail_quiver, cycle_tail_ideal, cycle_tail_algebra):
    q_text = serialize_quiver(cycle_tail_quiver)
    i_text = serialize_ideal(cycle_tail_ideal)
    p1 = standard_module(cycle_tail_algebra, "projective", "1")
    m_text = serialize_module(p1, "P1")
    s_text = serialize_subquiver({"1", "2"}, cycle_tail_quiver)
    bundle = load_bundle([write(tmp_path, q_text + i_text + m_text + s_text)])
    assert bundle.quiver == cycle_tail_quiver
    assert bundle.ideal == cycle_tail_ideal
    assert bundle.module_names == ("P1",)
    m = bundle.modules[0]
    assert m.dims == p1.dims and m.mats == p1.mats
    assert bundle.subquiver == frozenset({"1", "2"})
    # serializing the reloaded objects reproduces the text
    assert serialize_quiver(bundle.quiver) == q_text
    assert serialize_ideal(bundle.ideal) == i_text
    assert serialize_module(bundle.modules[0], "P1") == m_text


def test_module_with_fraction_entries(tmp_path):
    text = """\
quiver
  vertices 1 2
  arrow a 1 2

ideal
  truncation 3

module M
  dim 1 1
  dim 2 1
  matrix a
    row 1/2
"""
    bundle = load_bundle([write(tmp_path, text)])
    m = bundle.modules[0]
    assert m.mats["a"][0][0] == QQ.parse("1/2")
    assert serialize_module(m, "M").count("row 1/2") == 1


def test_tab_rejected_with_position(tmp_path):
    text = "quiver\n\tvertices 1\n"
    with pytest.raises(ParseError) as exc:
        load_bundle([write(tmp_path, text)])
    assert exc.value.line == 2 and exc.value.column == 1


def test_odd_indent_rejected(tmp_path):
    text = "quiver\n   vertices 1\n"
    with pytest.raises(ParseError) as exc:
        load_bundle([write(tmp_path, text)])
    assert exc.value.line == 2


def test_indent_jump_rejected(tmp_path):
    text = "quiver\n    vertices 1\n"
    with pytest.raises(ParseError) as exc:
        load_bundle([write(tmp_path, text)])
    assert exc.value.line == 2


def test_decimal_literals_rejected(tmp_path):
    text = """\
quiver
  vertices 1 2
  arrow a 1 2

ideal
  truncation 3

module M
  dim 1 1
  dim 2 1
  matrix a
    row 0.5
"""
    with pytest.raises(ParseError) as exc:
        load_bundle([write(tmp_path, text)])
    assert exc.value.line == 12


def test_duplicate_vertex_rejected(tmp_path):
    text = "quiver\n  vertices 1 1\n"
    with pytest.raises(ParseError):
        load_bundle([write(tmp_path, text)])


def test_unknown_arrow_in_relation(tmp_path):
    text = """\
quiver
  vertices 1 2
  arrow a 1 2

ideal
  truncation 3
  relation
    term 1 zz zz
"""
    with pytest.raises(DanglingIdError):
        load_bundle([write(tmp_path, text)])


def test_unknown_vertex_in_module(tmp_path):
    text = """\
quiver
  vertices 1 2
  arrow a 1 2

ideal
  truncation 3

module M
  dim 9 1
"""
    with pytest.raises(DanglingIdError):
        load_bundle([write(tmp_path, text)])


def test_noncomposable_relation(tmp_path):
    text = """\
quiver
  vertices 1 2 3
  arrow a 1 2
  arrow b 1 3

ideal
  truncation 3
  relation
    term 1 a b
"""
    with pytest.raises(CompositionError):
        load_bundle([write(tmp_path, text)])


def test_module_violating_relation_names_it(tmp_path):
    text = """\
quiver
  vertices 1 2
  arrow a 1 2
  arrow b 2 1

ideal
  truncation 3
  relation
    term 1 a b

module M
  dim 1 1
  dim 2 1
  matrix a
    row 1
  matrix b
    row 1
"""
    with pytest.raises(ModuleValidationError) as exc:
        load_bundle([write(tmp_path, text)])
    assert "a" in str(exc.value) and "b" in str(exc.value)


def test_matrix_shape_mismatch(tmp_path):
    text = """\
quiver
  vertices 1 2
  arrow a 1 2

ideal
  truncation 3

module M
  dim 1 2
  dim 2 1
  matrix a
    row 1
"""
    with pytest.raises(ParseError):
        load_bundle([write(tmp_path, text)])


def test_multi_file_bundle(tmp_path):
    q_part = "quiver\n  vertices 1 2\n  arrow a 1 2\n\nideal\n  truncation 3\n"
    m_part = "module M\n  dim 1 1\n  dim 2 0\n"
    bundle = load_bundle(
        [write(tmp_path, q_part, "a.qh"), write(tmp_path, m_part, "b.qh")]
    )
    assert bundle.module_names == ("M",)


def test_section_count_errors(tmp_path):
    q = "quiver\n  vertices 1\n"
    with pytest.raises(InputError):
        load_bundle([write(tmp_path, q + "\n" + q)])
    with pytest.raises(InputError):
        load_bundle([write(tmp_path, "module M\n  dim 1 1\n")])
    with pytest.raises(InputError):
        load_bundle([write(tmp_path, q + "\nmodule M\n  dim 1 1\n")])
    two_modules = (
        "quiver\n  vertices 1\n\nideal\n  truncation 2\n\n"
        "module M\n  dim 1 1\n\nmodule M\n  dim 1 0\n"
    )
    with pytest.raises(InputError):
        load_bundle([write(tmp_path, two_modules)])


def test_default_module_names(tmp_path):
    text = (
        "quiver\n  vertices 1\n\nideal\n  truncation 2\n\n"
        "module\n  dim 1 1\n\nmodule\n  dim 1 0\n"
    )
    bundle = load_bundle([write(tmp_path, text)])
    assert bundle.module_names == ("m1", "m2")


def test_comments_and_blank_lines_ignored(tmp_path):
    text = "# leading comment\n\nquiver\n  # inner comment\n  vertices 1\n"
    bundle = load_bundle([write(tmp_path, text)])
    assert bundle.quiver.vertices == ("1",)


def test_dot_export_highlights_heart(cycle_tail_quiver):
    hp = cycle_tail_quiver.homological_heart()
    dot = export_dot(cycle_tail_quiver, hp.heart)
    assert dot.startswith("digraph")
    assert dot.rstrip().endswith("}")
    assert '"1" [class="inside"' in dot
    assert '"2" [class="inside"' in dot
    assert '"3" [class="plus"' in dot
    assert '"4" [class="plus"' in dot
    assert '"2" -> "3" [label="c"];' in dot


def test_dot_export_plain_and_empty(line_quiver):
    dot = export_dot(line_quiver)
    assert "class=" not in dot
    assert '"v" -> "w" [label="alpha"];' in dot
    from quiverhom import Quiver

    empty = export_dot(Quiver.build([], []))
    assert empty.startswith("digraph") and empty.rstrip().endswith("}")
