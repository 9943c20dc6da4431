"""Randomized verification suites and the block decomposition pipeline.

The suites must be deterministic in their master seed: the same seed gives a
byte-identical report, and generated instances respect the documented size
caps.  Decomposition is pinned against the three fixtures.
"""

import pytest

from quiverhom import (
    build_algebra,
    DecompositionTree,
    InstanceSpec,
    InvariantViolation,
    PrimeField,
    QQ,
    SuiteReport,
    Witness,
    decompose,
    gen_instance,
    verify_convex_epi,
    verify_ext_cross,
    verify_heart_theorem,
    verify_subquiver_calculus,
)
from quiverhom.lab import ALGEBRA_DIM_CAP


def test_instance_spec_validation():
    with pytest.raises(InvariantViolation):
        InstanceSpec(seed=1, max_vertices=0)
    with pytest.raises(InvariantViolation):
        InstanceSpec(seed=1, max_arrows=-1)
    with pytest.raises(InvariantViolation):
        InstanceSpec(seed=1, truncation_bound=1)
    with pytest.raises(InvariantViolation):
        InstanceSpec(seed=1, relation_style="wild")
    with pytest.raises(InvariantViolation):
        InstanceSpec(seed=1, module_size_bound=0)


def test_gen_instance_is_deterministic_and_bounded():
    spec = InstanceSpec(seed=77)
    q1, i1, mods1 = gen_instance(spec)
    q2, i2, mods2 = gen_instance(spec)
    assert q1 == q2 and i1 == i2
    assert [m.dims for m in mods1] == [m.dims for m in mods2]
    # the dimension cap is an admission rule, enforced per suite case
    assert ALGEBRA_DIM_CAP == 40
    for s in range(20):
        q, ideal, mods = gen_instance(InstanceSpec(seed=s))
        assert len(q.vertices) <= 8
        assert len(q.arrows) <= 12
        for m in mods:
            m.validate()
            assert m.total_dim <= 12


def test_distinct_seeds_vary():
    dims = {
        build_algebra(*gen_instance(InstanceSpec(seed=s))[:2], QQ).dim
        for s in range(12)
    }
    assert len(dims) > 1


def test_subquiver_suite_small_run():
    report = verify_subquiver_calculus(InstanceSpec(seed=3), cases=40)
    assert report.all_passed
    assert report.attempted == 40 and report.passed == 40
    assert report.suite == "subquiver-calculus"


def test_convex_epi_suite_small_run():
    report = verify_convex_epi(InstanceSpec(seed=4), cases=12, cutoff=3)
    assert report.all_passed
    assert report.attempted == 12


def test_heart_suite_small_run():
    report = verify_heart_theorem(InstanceSpec(seed=5), cases=8)
    assert report.all_passed


def test_ext_cross_suite_small_run():
    report = verify_ext_cross(InstanceSpec(seed=6), cases=8, cutoff=2)
    assert report.all_passed


def test_suite_over_prime_field():
    report = verify_subquiver_calculus(
        InstanceSpec(seed=9), cases=15
    )
    assert report.all_passed
    epi = verify_convex_epi(InstanceSpec(seed=9), cases=6, cutoff=2)
    assert epi.all_passed


def test_reports_render_identically_for_same_seed():
    a = verify_subquiver_calculus(InstanceSpec(seed=11), cases=30).render()
    b = verify_subquiver_calculus(InstanceSpec(seed=11), cases=30).render()
    assert a == b
    c = verify_heart_theorem(InstanceSpec(seed=11), cases=5).render()
    d = verify_heart_theorem(InstanceSpec(seed=11), cases=5).render()
    assert c == d


def test_render_layout_and_failure_lines():
    report = SuiteReport(
        suite="demo",
        master_seed=42,
        attempted=2,
        passed=1,
        witnesses=(
            Witness(seed=9, check_id="beta", observed="1", expected="2"),
            Witness(seed=9, check_id="alpha", observed="0", expected="3"),
        ),
    )
    text = report.render()
    lines = text.splitlines()
    assert lines[0] == "suite demo"
    assert lines[1] == "seed 42"
    assert lines[2] == "cases 2"
    assert lines[3] == "passed 1"
    assert lines[4] == "failures 2"
    assert "check=beta" in lines[5] and "check=alpha" in lines[6]
    assert not report.all_passed
    ok = SuiteReport("demo", 42, 2, 2, ())
    assert ok.all_passed and "failures 0" in ok.render()


def test_decompose_line_is_acyclic_leaf(line_quiver, line_ideal):
    tree = decompose(line_quiver, line_ideal)
    assert isinstance(tree, DecompositionTree)
    assert tree.splits == 0
    assert tree.blocks == ()
    assert tree.root.kind == "acyclic"
    text = tree.render()
    assert "acyclic" in text and "split" not in text


def test_decompose_cycle_tail(cycle_tail_quiver, cycle_tail_ideal):
    tree = decompose(cycle_tail_quiver, cycle_tail_ideal)
    assert tree.splits == 1
    assert len(tree.blocks) == 1
    block = tree.blocks[0]
    assert block.vertices == ("1", "2")
    assert block.dim == 4
    assert block.simple_cycle
    assert tree.root.kind == "split"
    assert tree.root.eprime_e_dim == 0
    assert tree.root.child is not None and tree.root.child.kind == "acyclic"
    text = tree.render()
    assert "simple_cycle=yes" in text and "eprime_e=0" in text


def test_decompose_two_cycles(two_cycles_quiver, two_cycles_ideal):
    tree = decompose(two_cycles_quiver, two_cycles_ideal)
    assert tree.splits == 2
    assert [b.vertices for b in tree.blocks] == [("1", "2"), ("3", "4")]
    assert all(b.dim == 4 and b.simple_cycle for b in tree.blocks)
    # final stage is an acyclic leaf on whatever remains
    node = tree.root
    depth = 0
    while node.kind == "split":
        node = node.child
        depth += 1
    assert depth == 2 and node.kind == "acyclic"


def test_decompose_over_prime_field(two_cycles_quiver, two_cycles_ideal):
    tree = decompose(two_cycles_quiver, two_cycles_ideal, field=PrimeField(7))
    assert tree.splits == 2
    assert [b.dim for b in tree.blocks] == [4, 4]


def test_decompose_renders_block_dims(cycle_tail_quiver, cycle_tail_ideal):
    text = decompose(cycle_tail_quiver, cycle_tail_ideal).render()
    assert "block_dim=4" in text
    assert "heart=1,2" in text
