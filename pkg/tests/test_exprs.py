import pytest

from sp4solvable.exprs import eval_expr
from sp4solvable.rational import Q


def test_arithmetic():
    assert eval_expr("3/2") == Q(3, 2)
    assert eval_expr("1+2*3") == 7
    assert eval_expr("(1+2)*3") == 9
    assert eval_expr("-a", {"a": Q(5)}) == -5
    assert eval_expr("2^3") == 8
    assert eval_expr("-2*(a+1)/(a+3)^2", {"a": Q(2)}) == Q(-6, 25)
    assert eval_expr("(1-a^2)/(4*a^2)", {"a": Q(3)}) == Q(-2, 9)
    assert eval_expr("  1 - 1/2 ") == Q(1, 2)
    assert eval_expr("--3") == 3


def test_errors():
    with pytest.raises(ValueError):
        eval_expr("1+")
    with pytest.raises(ValueError):
        eval_expr("(1+2")
    with pytest.raises(ValueError):
        eval_expr("b", {"a": Q(1)})
    with pytest.raises(ValueError):
        eval_expr("1 2")
    with pytest.raises(ZeroDivisionError):
        eval_expr("1/a", {"a": Q(0)})
