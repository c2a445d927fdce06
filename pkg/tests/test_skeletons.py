import pytest

from derivgraph.enumeration import composite_context
from derivgraph.skeletons import (
    Skeleton,
    SkeletonSyntaxError,
    base_variables,
    parse_skeleton,
)


class TestParse:
    def test_nested_application(self):
        s = parse_skeleton("f(g(x),h(x,y))")
        assert str(s) == "f(g(x),h(x,y))"
        assert s.arity == 2
        assert s.children[1].children[1].is_variable

    def test_base_variable_order(self):
        assert base_variables(parse_skeleton("f(g(x),h(x,y))")) == ["x", "y"]

    def test_whitespace_tolerated(self):
        assert str(parse_skeleton(" f( g( x ) ) ")) == "f(g(x))"

    def test_nullary_function_versus_variable(self):
        s = parse_skeleton("f(c(),x)")
        assert s.children[0].function and s.children[0].arity == 0
        assert s.children[1].is_variable

    def test_error_position(self):
        with pytest.raises(SkeletonSyntaxError) as err:
            parse_skeleton("f(g(x)")
        assert err.value.position == 6

    def test_root_must_be_function(self):
        with pytest.raises(SkeletonSyntaxError):
            parse_skeleton("x")

    def test_variable_with_children_rejected(self):
        with pytest.raises(ValueError):
            Skeleton("x", (Skeleton("y"),), function=False)


class TestContext:
    def test_variables_rank_before_functions(self):
        ctx = composite_context(parse_skeleton("F(f(x),g(x))"))
        names = sorted(ctx.palette, key=lambda n: ctx.palette[n].index)
        assert names == ["x", "F", "f", "g"]

    def test_repeated_function_names_disambiguated(self):
        ctx = composite_context(parse_skeleton("F(f(x),f(x))"))
        assert {"f", "f.2"} <= set(ctx.palette)

    def test_evaluation_points(self):
        ctx = composite_context(parse_skeleton("f(g(x))"))
        assert ctx.point[ctx.palette["f"].index] == "g(x)"
        assert ctx.point[ctx.palette["g"].index] == "x"
