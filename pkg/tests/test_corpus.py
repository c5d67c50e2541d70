import pytest
from hypothesis import given, strategies as st

from engelkit import builtin, default_corpus, from_label, load, parse_group_file, render, resolve
from engelkit.corpus import CLOSED_FORM_ORDERS, CORPUS_LABELS, GroupFileError, GroupSpec, UnknownGroup
from engelkit.perm import CapExceeded


def test_closed_form_orders(corpus):
    assert [G.label for G in corpus] == list(CORPUS_LABELS)
    for G in corpus:
        assert G.order == CLOSED_FORM_ORDERS[G.label], G.label


@pytest.mark.parametrize("selector,order", [
    ("frobenius(7,3)", 21), ("direct_product(S3, C2)", 12), ("D8xS3", 48),
    ("dihedral(5)", 10), ("elem_abelian(2,3)", 8), ("quaternion8", 8),
])
def test_resolve(selector, order):
    assert resolve(selector).order == order


def test_unknown():
    with pytest.raises(UnknownGroup):
        resolve("M11")
    with pytest.raises(UnknownGroup):
        builtin("mathieu", 11)


def test_cap():
    with pytest.raises(CapExceeded):
        from_label("S6", max_order=100)


def test_parse_file():
    spec = parse_group_file("# triangle\nname=T\ndegree=3\ngens=(1 2),(1 2 3)\n")
    assert spec == GroupSpec("T", 3, ["(1 2)", "(1 2 3)"])
    assert load(spec).order == 6


def test_identity_generator():
    G = load(parse_group_file("name=I\ndegree=5\ngens=id"))
    assert G.order == 1 and G.degree == 5


def test_degree_inferred():
    assert parse_group_file("gens=(1 4)").degree == 4


@pytest.mark.parametrize("text,line,col", [
    ("name=X\ngens=(1 2(3)", 2, 10),
    ("degree=three\ngens=(1 2)", 1, 8),
    ("name=X\ncolour=red\ngens=(1 2)", 2, 1),
    ("degree=2\ngens=(1 5)", 2, 9),
])
def test_parse_errors_have_positions(text, line, col):
    with pytest.raises(GroupFileError) as e:
        parse_group_file(text)
    assert (e.value.line, e.value.col) == (line, col)
    assert f"line {line}" in str(e.value)


def test_missing_gens():
    with pytest.raises(GroupFileError):
        parse_group_file("name=X\n")


@given(st.sampled_from(CORPUS_LABELS[:16]))
def test_round_trip(label):
    G = from_label(label)
    spec = GroupSpec(label, G.degree, [str(g) for g in G.generators])
    assert parse_group_file(render(spec)) == spec
    assert load(spec).order == G.order
