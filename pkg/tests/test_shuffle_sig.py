import math
from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thrallkit.free_lie import exp_truncated, is_lie_element, random_lie_element
from thrallkit.group_algebra import higher_lie_idempotent
from thrallkit.invariants import random_unimodular_matrix
from thrallkit.shuffle_sig import (
    PiecewiseLinearPath,
    WordFunctional,
    act_on_functional,
    is_group_like,
    levy_area,
    levy_functional,
    log_signature,
    shuffle_functionals,
    shuffle_grading_check,
    shuffle_words,
    signature,
)
from thrallkit.tensors import Tensor, TensorSeries, series_product
from thrallkit.words import all_words


from oracles import integration_oracle, shuffle_oracle


word_strategy = st.lists(st.integers(1, 3), min_size=0, max_size=4).map(tuple)


@given(word_strategy, word_strategy)
@settings(max_examples=60)
def test_shuffle_words_match_position_oracle(a, b):
    got = shuffle_words(a, b, 3)
    want = shuffle_oracle(a, b)
    assert {w: int(c) for w, c in got.terms.items()} == {
        w: c for w, c in want.items() if c
    }
    assert sum(got.terms.values()) == math.comb(len(a) + len(b), len(a))


def test_shuffle_reference_expansions():
    got = shuffle_words((1, 2), (3, 4))
    assert {w: int(c) for w, c in got.terms.items()} == {
        (1, 2, 3, 4): 1, (1, 3, 2, 4): 1, (1, 3, 4, 2): 1,
        (3, 1, 2, 4): 1, (3, 1, 4, 2): 1, (3, 4, 1, 2): 1,
    }
    assert shuffle_words((1,), (2,)).terms == {
        (1, 2): Fraction(1), (2, 1): Fraction(1)
    }
    assert shuffle_words((1,), (1,)).terms == {(1, 1): Fraction(2)}


def test_shuffle_functionals_unit_and_commutativity():
    rng = Random(21)
    unit = WordFunctional(2, {(): Fraction(1)})

    def rand_functional():
        words = [w for k in (1, 2) for w in all_words(2, k)]
        return WordFunctional(
            2, {w: Fraction(rng.randint(-3, 3)) for w in rng.sample(words, 3)}
        )

    for _ in range(5):
        beta, gamma = rand_functional(), rand_functional()
        assert shuffle_functionals(beta, unit) == beta
        assert shuffle_functionals(beta, gamma) == shuffle_functionals(gamma, beta)


def test_levy_shuffle_square_is_four_beta22():
    levy = levy_functional()
    square = shuffle_functionals(levy, levy)
    want = WordFunctional(
        2,
        {
            (1, 1, 2, 2): Fraction(1), (1, 2, 2, 1): Fraction(-1),
            (2, 1, 1, 2): Fraction(-1), (2, 2, 1, 1): Fraction(1),
        },
    )
    assert square == want  # = 4 * (reference quarter-sum invariant)


def test_group_like_exponentials_and_counterexample():
    rng = Random(22)
    for _ in range(5):
        series = exp_truncated(random_lie_element(2, 4, rng).to_series(4))
        assert is_group_like(series)
    bad = TensorSeries.from_levels(
        2, 3, {0: Tensor.scalar(2, 1), 2: Tensor.basis(2, (1, 2))}
    )
    assert not is_group_like(bad)
    assert is_group_like(TensorSeries.unit(2, 3))
    with pytest.raises(ValueError):
        is_group_like(TensorSeries.zero(2, 2))


def test_staircase_against_integration_oracle():
    stair = PiecewiseLinearPath.from_lists([[0, 0], [1, 0], [1, 1]])
    sig = signature(stair, 2)
    level2 = sig.level(2)
    assert level2[(1, 1)] == Fraction(1, 2)
    assert level2[(1, 2)] == Fraction(1)
    assert level2[(2, 1)] == Fraction(0)
    assert level2[(2, 2)] == Fraction(1, 2)
    assert sig == integration_oracle(stair, 2)


def test_signature_matches_integration_oracle_random_paths():
    rng = Random(23)
    for _ in range(4):
        points = [
            [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(2)]
            for _ in range(rng.randint(2, 4))
        ]
        path = PiecewiseLinearPath.from_lists(points)
        assert signature(path, 3) == integration_oracle(path, 3)


def test_signature_trivial_cases():
    v = [Fraction(3), Fraction(-2)]
    seg = PiecewiseLinearPath.from_lists([[0, 0], v])
    sig = signature(seg, 4)
    vt = Tensor.from_vector(2, v)
    power = vt
    for k in range(2, 5):
        from thrallkit.tensors import tensor_product

        power = tensor_product(power, vt)
        assert sig.level(k) == power.scale(Fraction(1, math.factorial(k)))
    constant = PiecewiseLinearPath.from_lists([[1, 1]])
    assert signature(constant, 3) == TensorSeries.unit(2, 3)


def test_chen_concatenation():
    rng = Random(24)
    for _ in range(5):
        pts1 = [[rng.randint(-2, 2) for _ in range(2)] for _ in range(3)]
        pts2 = [[rng.randint(-2, 2) for _ in range(2)] for _ in range(3)]
        x = PiecewiseLinearPath.from_lists(pts1)
        y = PiecewiseLinearPath.from_lists(pts2)
        joined = x.concatenate(y)
        assert signature(joined, 4) == series_product(signature(x, 4), signature(y, 4))


def test_log_signature_cases():
    seg = PiecewiseLinearPath.from_lists([[0, 0], [3, 2]])
    log = log_signature(seg, 4)
    assert log.level(1) == Tensor.from_vector(2, [3, 2])
    assert all(log.level(k).is_zero() for k in (2, 3, 4))

    stair = PiecewiseLinearPath.from_lists([[0, 0], [1, 0], [1, 1]])
    from thrallkit.free_lie import lyndon_bracketing

    assert log_signature(stair, 2).level(2) == lyndon_bracketing((1, 2), 2).scale(
        Fraction(1, 2)
    )

    out_and_back = PiecewiseLinearPath.from_lists([[0, 0], [2, 1], [0, 0]])
    sig = signature(out_and_back, 4)
    assert sig == TensorSeries.unit(2, 4)


def test_log_signature_levels_are_lie():
    rng = Random(25)
    for _ in range(3):
        points = [[rng.randint(-2, 2) for _ in range(2)] for _ in range(4)]
        log = log_signature(PiecewiseLinearPath.from_lists(points), 4)
        for k in range(1, 5):
            level = log.level(k)
            assert level.is_zero() or is_lie_element(level)


def test_levy_area_values():
    stair = PiecewiseLinearPath.from_lists([[0, 0], [1, 0], [1, 1]])
    assert levy_area(signature(stair, 2)) == Fraction(1, 2)
    seg = PiecewiseLinearPath.from_lists([[0, 0], [5, 7]])
    assert levy_area(signature(seg, 2)) == 0
    assert levy_area(signature(stair.reversed(), 2)) == Fraction(-1, 2)
    with pytest.raises(ValueError):
        levy_area(signature(PiecewiseLinearPath.from_lists([[0, 0, 0], [1, 1, 1]]), 2))


def test_levy_area_invariant_under_unimodular_maps():
    rng = Random(26)
    stair = PiecewiseLinearPath.from_lists([[0, 0], [1, 0], [1, 1], [3, 2]])
    base = levy_area(signature(stair, 2))
    for _ in range(5):
        g = random_unimodular_matrix(2, rng)
        moved = PiecewiseLinearPath.from_lists(
            [[sum(g[i][j] * p[j] for j in range(2)) for i in range(2)] for p in stair.points]
        )
        assert levy_area(signature(moved, 2)) == base


def test_act_on_functional_duality():
    rng = Random(27)
    from thrallkit.group_algebra import ga_act
    from thrallkit.tensors import random_tensor

    x = higher_lie_idempotent((2, 2))
    for _ in range(5):
        t = random_tensor(2, 4, rng)
        beta = WordFunctional(
            2, {w: Fraction(rng.randint(-2, 2)) for w in all_words(2, 4)}
        )
        assert act_on_functional(x, beta, 4).evaluate_tensor(t) == beta.evaluate_tensor(
            ga_act(x, t)
        )


def test_shuffle_grading():
    levy = levy_functional()
    assert shuffle_grading_check(levy, levy, (2,), (2,))
    empty = WordFunctional(2, {(): Fraction(2)})
    gamma = act_on_functional(
        higher_lie_idempotent((2,)),
        WordFunctional(2, {(1, 2): Fraction(1)}),
        2,
    )
    assert shuffle_grading_check(empty, gamma, (), (2,))
    # random graded functionals of small degree
    rng = Random(28)
    for lam, mu in [((2,), (1,)), ((1, 1), (2,)), ((2, 1), (1,)), ((2,), (2,))]:
        for _ in range(2):
            beta = _random_graded(rng, lam)
            gamma = _random_graded(rng, mu)
            if beta.terms and gamma.terms:
                assert shuffle_grading_check(beta, gamma, lam, mu)
    with pytest.raises(ValueError):
        shuffle_grading_check(levy, levy, (1, 1), (2,))


def _random_graded(rng, lam):
    k = sum(lam)
    raw = WordFunctional(
        2, {w: Fraction(rng.randint(-2, 2)) for w in all_words(2, k)}
    )
    return act_on_functional(higher_lie_idempotent(lam), raw, k)


def test_path_validation():
    with pytest.raises(ValueError):
        PiecewiseLinearPath(2, ())
    with pytest.raises(ValueError):
        PiecewiseLinearPath(2, ((Fraction(0),),))
    path = PiecewiseLinearPath.from_lists([[0, 0], [0, 0], [1, 1]])
    assert signature(path, 2) == signature(
        PiecewiseLinearPath.from_lists([[0, 0], [1, 1]]), 2
    )


def test_collinearity_detection():
    assert PiecewiseLinearPath.from_lists([[0, 0], [1, 1], [3, 3], [2, 2]]).is_collinear()
    assert not PiecewiseLinearPath.from_lists([[0, 0], [1, 0], [1, 1]]).is_collinear()
    assert PiecewiseLinearPath.from_lists([[5, 5]]).is_collinear()


def test_path_signatures_are_group_like():
    rng = Random(29)
    for d in (2, 3):
        for _ in range(3):
            points = [[rng.randint(-2, 2) for _ in range(d)] for _ in range(4)]
            assert is_group_like(signature(PiecewiseLinearPath.from_lists(points), 4))
