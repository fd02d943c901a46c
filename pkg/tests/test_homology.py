import random

import pytest

from cablefloer import (
    BigradedComplex,
    ComplexError,
    RankTable,
    TensorGenerator,
    build_model,
    build_typea_minus,
    build_typed,
    grading_filter,
    pair_modules,
    parse_delta,
    reduce_complex,
)

from conftest import DELTA_11N50, DELTA_TREFOIL


def gen(a_side, d_side, alexander, maslov):
    return TensorGenerator(a_side=a_side, d_side=d_side, N=maslov - 2 * alexander,
                           Aprime=alexander, alexander=alexander, maslov=maslov)


def complex_for(delta_text, tau, p, n):
    model = build_model(parse_delta(delta_text), tau)
    return pair_modules(build_typea_minus(p), build_typed(model, n), model.params.l, n)


class TestRankTable:
    def test_totals_and_order(self):
        table = RankTable({(1, 0): 1, (0, -1): 2, (1, 2): 1, (2, 2): 0})
        assert table.total == 4
        assert table.entries() == [(1, 2, 1), (1, 0, 1), (0, -1, 2)]
        assert table.alexander_multiset() == {1: 2, 0: 2}

    def test_zero_entries_dropped(self):
        assert RankTable({(0, 0): 0}).ranks == {}


class TestGradingFilter:
    def test_empty_complex_unchanged(self):
        complex_ = BigradedComplex(generators=(), arrows=())
        filtered, report = grading_filter(complex_)
        assert filtered == complex_
        assert report.dropped == ()

    def test_repair_drops_and_reports(self):
        bad = BigradedComplex(
            generators=(gen("a", "u1", 0, 0), gen("b1", "v1", 3, 6)),
            arrows=((0, 1),),
        )
        filtered, report = grading_filter(bad, mode="repair")
        assert filtered.arrows == ()
        assert len(report.dropped) == 1
        assert report.dropped[0]["source"] == "a u1"
        assert report.dropped[0]["target_bigrading"] == [3, 6]

    def test_strict_raises(self):
        bad = BigradedComplex(
            generators=(gen("a", "u1", 0, 0), gen("b1", "v1", 0, 0)),
            arrows=((0, 1),),
        )
        with pytest.raises(ComplexError):
            grading_filter(bad, mode="strict")

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            grading_filter(BigradedComplex((), ()), mode="loose")

    def test_left_trefoil_p2_has_no_misfits(self):
        # the long-staircase arrow that would break the bigrading does not
        # arise at p = 2 (no matching operation), so nothing is dropped
        filtered, report = grading_filter(complex_for(DELTA_TREFOIL, -1, 2, -2), mode="strict")
        assert report.dropped == ()
        assert len(filtered.arrows) == 1

    def test_11n50_strict_clean(self):
        _, report = grading_filter(complex_for(DELTA_11N50, 0, 5, 3), mode="strict")
        assert report.dropped == ()


class TestReduce:
    def test_no_arrows(self):
        complex_ = BigradedComplex(
            generators=(gen("a", "u1", 0, 0), gen("b1", "v1", 1, 1), gen("b2", "v1", 1, 3)),
            arrows=(),
        )
        assert reduce_complex(complex_).total == 3

    def test_right_trefoil_cable(self):
        complex_ = complex_for(DELTA_TREFOIL, 1, 2, 1)
        assert len(complex_.generators) == 9
        assert len(complex_.arrows) == 2
        table = reduce_complex(complex_)
        assert table.total == 5
        assert sorted(table.alexander_multiset()) == [-3, -2, 0, 2, 3]

    def test_11n50_total(self):
        assert reduce_complex(complex_for(DELTA_11N50, 0, 5, 3)).total == 181

    def test_acyclic_chain(self):
        # da = b, dc = b + d: full rank, nothing survives
        complex_ = BigradedComplex(
            generators=(gen("a", "g0", 0, 1), gen("b1", "g1", 0, 0),
                        gen("b1", "g2", 0, 1), gen("b2", "g3", 0, 0)),
            arrows=((0, 1), (2, 1), (2, 3)),
        )
        assert reduce_complex(complex_).total == 0

    def test_zigzag_composition(self):
        # da = b + d, dc = b, de = d: rank 2 differential on 5 generators,
        # so exactly one class survives; cancelling (a, b) must toggle the
        # composite arrow c -> d for the count to come out right
        complex_ = BigradedComplex(
            generators=(gen("a", "g0", 0, 1), gen("b1", "g1", 0, 0),
                        gen("b1", "g2", 0, 0), gen("b2", "g3", 0, 1),
                        gen("b2", "g4", 0, 1)),
            arrows=((0, 1), (0, 2), (3, 1), (4, 2)),
        )
        table = reduce_complex(complex_)
        assert table.total == 1
        assert table.ranks == {(0, 1): 1}

    def test_d_squared_violation_raises(self):
        # a -> b -> c is not a differential
        complex_ = BigradedComplex(
            generators=(gen("a", "g0", 0, 2), gen("b1", "g1", 0, 1), gen("b1", "g2", 0, 0)),
            arrows=((0, 1), (1, 2)),
        )
        with pytest.raises(ComplexError):
            reduce_complex(complex_)

    def test_unfiltered_cross_grading_arrow_raises(self):
        complex_ = BigradedComplex(
            generators=(gen("a", "g0", 1, 1), gen("b1", "g1", 0, 0)),
            arrows=((0, 1),),
        )
        with pytest.raises(ComplexError):
            reduce_complex(complex_)


@pytest.mark.parametrize("seed", range(6))
def test_reduction_order_invariance(seed):
    """Shuffling arrow order never changes the reduced table."""
    base = complex_for(DELTA_11N50, 0, 3, -2)
    reference = reduce_complex(base)
    rng = random.Random(seed)
    arrows = list(base.arrows)
    rng.shuffle(arrows)
    shuffled = BigradedComplex(generators=base.generators, arrows=tuple(arrows))
    assert reduce_complex(shuffled).ranks == reference.ranks


def test_symmetry_of_reduced_output():
    table = reduce_complex(complex_for(DELTA_11N50, 0, 2, -1))
    assert all(table.ranks.get((-a, m - 2 * a)) == r for (a, m), r in table.ranks.items())
