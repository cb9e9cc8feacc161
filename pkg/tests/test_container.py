import pytest
from hypothesis import given, strategies as st

from dplump.container import (
    BaseSignature,
    InvalidShapeError,
    SignatureError,
    arity,
    concat_shapes,
    parse_signature,
)

SIG = BaseSignature({"s": 1, "p": 2})
shapes = st.lists(st.sampled_from(["s", "p"]), max_size=6).map(tuple)


def test_arity_examples():
    assert arity(SIG, []) == 0
    assert arity(BaseSignature({"s": 1}), ["s"]) == 1
    assert arity(SIG, ["s", "p"]) == 3


def test_arity_unknown_name():
    with pytest.raises(InvalidShapeError):
        arity(SIG, ["q"])


def test_concat_examples():
    assert concat_shapes([], []) == ()
    assert concat_shapes(["s"], ["s"]) == ("s", "s")
    assert arity(SIG, ["s"]) + arity(SIG, ["p"]) == arity(SIG, concat_shapes(["s"], ["p"])) == 3


@given(shapes, shapes)
def test_concat_is_coproduct_on_arities(s1, s2):
    assert arity(SIG, concat_shapes(s1, s2)) == arity(SIG, s1) + arity(SIG, s2)


@given(shapes, shapes, shapes)
def test_concat_associative_with_unit(a, b, c):
    assert concat_shapes(concat_shapes(a, b), c) == concat_shapes(a, concat_shapes(b, c))
    assert concat_shapes((), a) == a == concat_shapes(a, ())


def test_parse_signature():
    assert parse_signature("shape s 1\nshape p 2") == SIG
    assert parse_signature("") == BaseSignature({})
    sig = parse_signature("# header\n\nshape leaf 0  # trailing\n  shape node_2 2\n")
    assert dict(sig.shapes) == {"leaf": 0, "node_2": 2}


@pytest.mark.parametrize(
    "text, line",
    [
        ("shape s 1\nshape s 2", 2),
        ("shape s", 1),
        ("shape s 1\nshap p 2", 2),
        ("shape s -1", 1),
        ("shape 9s 1", 1),
        ("shape s one", 1),
    ],
)
def test_parse_signature_errors(text, line):
    with pytest.raises(SignatureError) as exc:
        parse_signature(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_duplicate_message():
    with pytest.raises(SignatureError, match="duplicate"):
        parse_signature("shape s 1\nshape s 2")


def test_signature_rejects_bad_arity():
    with pytest.raises(SignatureError):
        BaseSignature({"s": -1})
    with pytest.raises(SignatureError):
        BaseSignature({"": 1})
