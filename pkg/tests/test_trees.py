import pytest
from hypothesis import given

import oracles
from musicbox import (
    LEAF,
    DimensionError,
    MorphismParams,
    Node,
    ParseError,
    Pattern,
    StructureError,
    decompose,
    eval_tree,
    format_tree,
    mp_compose,
    mp_unit,
    parse_multipattern,
    parse_tree,
    phi,
)
from musicbox.trees import GENERATORS
from strategies import multipatterns, patterns

P = parse_multipattern

LIBRARY = {
    "m1": P("0 . ; . 0"),
    "m2": P("1 0 1 ; -7 0 0"),
    "m3": P("1 2 . 3 ; -1 0 . 1"),
}
TREE = "(m2 _ (m1 (m2 _ _ _)) (m3 _ _ _))"


def fold_reference():
    """Evaluate the reference tree with the row oracle, innermost first."""
    rows = {k: [list(r) for r in v.rows] for k, v in LIBRARY.items()}
    inner = oracles.compose_rows(rows["m1"], 1, rows["m2"])
    right = oracles.compose_rows(rows["m2"], 3, rows["m3"])
    return oracles.compose_rows(right, 2, inner)


class TestEval:
    def test_reference_tree(self):
        got = eval_tree(parse_tree(TREE, LIBRARY))
        assert [list(r) for r in got.rows] == fold_reference()
        assert got == P("1 1 0 1 . 2 3 . 4 ; -7 . -7 0 0 -1 0 . 1")
        assert got.rows[0][-1] == 4

    def test_phi_commutes_with_tree(self):
        params = MorphismParams((-1, 2), 3)
        image = {k: phi(v, params) for k, v in LIBRARY.items()}
        assert eval_tree(parse_tree(TREE, image)) == phi(eval_tree(parse_tree(TREE, LIBRARY)), params)

    def test_leaf(self):
        assert eval_tree(LEAF, 2) == P("0 ; 0")
        assert eval_tree(LEAF) == P("0")

    def test_all_leaves(self):
        x = LIBRARY["m3"]
        assert eval_tree(Node(x, (LEAF,) * x.arity)) == x

    def test_arity_mismatch(self):
        with pytest.raises(StructureError):
            eval_tree(Node(LIBRARY["m2"], (LEAF,)))

    def test_mixed_voices(self):
        with pytest.raises(StructureError):
            eval_tree(Node(P("0"), (Node(P("0 ; 0"), (LEAF,)),)))

    def test_m_disagrees(self):
        with pytest.raises(DimensionError):
            eval_tree(Node(P("0"), (LEAF,)), m=2)

    def test_deep_tree(self):
        t = LEAF
        for _ in range(5000):
            t = Node(P("1"), (t,))
        assert eval_tree(t) == P("5000")
        assert format_tree(t).count("(") == 5000


class TestText:
    def test_round_trip(self):
        t = parse_tree(TREE, LIBRARY)
        assert format_tree(t) == TREE
        assert parse_tree(format_tree(t), LIBRARY) == t

    def test_inline_literal(self):
        t = parse_tree("([1 0] _ [.])")
        assert eval_tree(t) == P("1 .")
        assert format_tree(t) == "([1 0] _ [.])"

    def test_generators_resolve(self):
        assert eval_tree(parse_tree("(g eps _)")) == P("1")

    def test_unknown_name(self):
        with pytest.raises(StructureError):
            parse_tree("(zz _)")

    def test_unbalanced(self):
        with pytest.raises(StructureError):
            parse_tree("(m1 _", LIBRARY)
        with pytest.raises(StructureError):
            parse_tree("(m1 _))", LIBRARY)

    def test_two_roots(self):
        with pytest.raises(StructureError):
            parse_tree("_ _")

    def test_open_needs_name(self):
        with pytest.raises(StructureError):
            parse_tree("(_ _)")

    def test_bad_literal(self):
        with pytest.raises(ParseError):
            parse_tree("([0 x])")


class TestDecompose:
    def test_unit_is_leaf(self):
        assert decompose(Pattern.parse("0")) is LEAF

    def test_rest(self):
        t = decompose(Pattern.parse("."))
        assert eval_tree(t) == P(".")

    def test_example(self):
        p = P("-1 . . 1 . 3")
        assert eval_tree(decompose(p)) == p

    def test_empty(self):
        assert eval_tree(decompose(Pattern(()))) == P("")

    def test_labels_are_generators(self):
        labels = set(GENERATORS.values())
        stack = [decompose(P("2 . -3 0 ."))]
        while stack:
            node = stack.pop()
            if isinstance(node, Node):
                assert node.label in labels
                stack.extend(node.children)

    def test_multi_voice_rejected(self):
        with pytest.raises(DimensionError):
            decompose(P("0 ; 0"))

    @given(patterns(max_length=24))
    def test_inverse(self, p):
        assert eval_tree(decompose(p)).voices[0] == p


@given(multipatterns(2, 5, min_arity=1), multipatterns(2, 4))
def test_single_node_tree_is_partial_composition(x, y):
    children = (LEAF,) * (x.arity - 1) + (Node(y, (LEAF,) * y.arity),)
    assert eval_tree(Node(x, children)) == mp_compose(x, x.arity, y)
    assert eval_tree(Node(x, (LEAF,) * x.arity)) == x
    assert eval_tree(LEAF, 2) == mp_unit(2)
