import json
import random
from itertools import product
from math import factorial

import pytest

from derivgraph.brute import brute_automorphism_count, brute_rooted_trees, isomorphic
from derivgraph.trees import (
    LEAF,
    Colour,
    Tree,
    TreeSyntaxError,
    canonicalize,
    cardinality,
    compare_trees,
    complexity_number,
    entrance_count,
    format_tree,
    make_palette,
    parse_tree,
    symmetry_number,
    tree_from_dict,
    tree_to_dict,
)


def chain(n: int) -> Tree:
    t = LEAF
    for _ in range(n - 1):
        t = Tree(children=(t,))
    return t


def star(n: int) -> Tree:
    return Tree(children=(LEAF,) * n)


def all_trees_upto(max_vertices: int) -> list[Tree]:
    out = []
    for n in range(1, max_vertices + 1):
        out.extend(canonicalize(t) for t in brute_rooted_trees(n))
    return out


def shuffled(t: Tree, rng: random.Random) -> Tree:
    kids = [shuffled(c, rng) for c in t.children]
    rng.shuffle(kids)
    return Tree(t.colour, tuple(kids))


class TestCompare:
    def test_leaf_precedes_chain(self):
        assert compare_trees(LEAF, chain(2)) == -1

    def test_reflexive(self):
        t = parse_tree("*{*{},*{*{}}}")
        assert compare_trees(t, t) == 0

    def test_order_4_natural_order(self):
        trees = [
            chain(4),
            Tree(children=(Tree(children=(LEAF, LEAF)),)),
            Tree(children=(LEAF, chain(2))),
            star(3),
        ]
        for a, b in zip(trees, trees[1:]):
            assert compare_trees(a, b) == -1

    def test_colour_precedes_degree(self):
        black, white = Colour(0, "b"), Colour(1, "w")
        # black with two children still precedes white leaf
        assert compare_trees(Tree(black, (Tree(black), Tree(black))), Tree(white)) == -1

    def test_total_order_exhaustive(self):
        trees = all_trees_upto(5)
        for a, b in product(trees, repeat=2):
            ab, ba = compare_trees(a, b), compare_trees(b, a)
            assert ab == -ba
            assert (ab == 0) == (format_tree(a) == format_tree(b))
        for a, b, c in product(trees, repeat=3):
            if compare_trees(a, b) <= 0 and compare_trees(b, c) <= 0:
                assert compare_trees(a, c) <= 0

    def test_equal_iff_isomorphic(self):
        trees = all_trees_upto(5)
        for a, b in product(trees, repeat=2):
            assert (compare_trees(a, b) == 0) == isomorphic(a, b)


class TestCanonicalize:
    def test_child_order_irrelevant(self):
        a = Tree(children=(LEAF, chain(2)))
        b = Tree(children=(chain(2), LEAF))
        assert canonicalize(a) == canonicalize(b)

    def test_idempotent(self):
        t = Tree(children=(chain(3), LEAF, chain(2)))
        assert canonicalize(canonicalize(t)) == canonicalize(t)

    def test_random_shuffles_converge(self):
        rng = random.Random(7)
        for n in range(1, 8):
            for t in brute_rooted_trees(n):
                reference = canonicalize(t)
                for _ in range(10):
                    assert canonicalize(shuffled(t, rng)) == reference


class TestSymmetry:
    @pytest.mark.parametrize(
        "tree,expected",
        [
            (chain(4), 1),
            (star(3), 6),
            (canonicalize(Tree(children=(LEAF, chain(2)))), 1),
        ],
    )
    def test_paper_values(self, tree, expected):
        assert symmetry_number(tree) == expected

    def test_coloured_binomial_graph(self):
        pal = make_palette("b", "w", "F")
        t = canonicalize(
            Tree(pal["F"], (Tree(pal["b"]),) * 2 + (Tree(pal["w"]),) * 3)
        )
        assert symmetry_number(t) == 12

    def test_matches_brute_force_automorphisms(self):
        for t in all_trees_upto(7):
            assert symmetry_number(t) == brute_automorphism_count(t)

    def test_degree_factorial_formula_when_siblings_isomorphic(self):
        def siblings_all_isomorphic(t: Tree) -> bool:
            own = all(
                compare_trees(t.children[0], c) == 0 for c in t.children
            ) if t.children else True
            return own and all(siblings_all_isomorphic(c) for c in t.children)

        def degree_factorial_product(t: Tree) -> int:
            out = factorial(t.degree)
            for c in t.children:
                out *= degree_factorial_product(c)
            return out

        checked = 0
        for t in all_trees_upto(7):
            if siblings_all_isomorphic(t):
                assert symmetry_number(t) == degree_factorial_product(t)
                checked += 1
        assert checked > 10


class TestComplexity:
    def test_chain_of_four(self):
        assert complexity_number(chain(4)) == 6

    def test_star(self):
        assert complexity_number(star(3)) == 1

    def test_single_vertex(self):
        assert complexity_number(LEAF) == 1

    def test_chain_is_factorial(self):
        for n in range(1, 9):
            assert complexity_number(chain(n)) == factorial(n - 1)


class TestCounts:
    def test_cardinality_and_entrances(self):
        assert (cardinality(LEAF), entrance_count(LEAF)) == (1, 1)
        assert (cardinality(chain(4)), entrance_count(chain(4))) == (4, 1)
        t = canonicalize(Tree(children=(LEAF, chain(2))))
        assert (cardinality(t), entrance_count(t)) == (4, 2)


class TestNotation:
    def test_round_trip(self):
        for t in all_trees_upto(6):
            assert parse_tree(format_tree(t)) == t

    def test_chain_notation(self):
        assert format_tree(chain(3)) == "*{*{*{}}}"
        assert parse_tree("*{*{*{}}}") == chain(3)

    def test_bare_star_is_leaf(self):
        assert parse_tree("*") == LEAF

    def test_coloured_round_trip(self):
        pal = make_palette("x", "g", "f")
        t = Tree(pal["f"], (Tree(pal["g"], (Tree(pal["x"]),)),))
        assert parse_tree(format_tree(t), pal) == t

    def test_error_carries_position(self):
        with pytest.raises(TreeSyntaxError) as err:
            parse_tree("*{*{},")
        assert err.value.position == 6

    def test_unknown_colour_rejected(self):
        with pytest.raises(TreeSyntaxError):
            parse_tree("h{}", make_palette("f"))


class TestJson:
    def test_round_trip(self):
        pal = make_palette("x", "f")
        t = Tree(pal["f"], (Tree(pal["x"]), Tree(pal["x"])))
        blob = json.dumps(tree_to_dict(t))
        assert tree_from_dict(json.loads(blob)) == t
