from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ratknot.invariants import (
    InvariantError,
    LegendrianRecord,
    SeifertData,
    SingularityCounts,
    TransverseRecord,
    bennequin_legendrian,
    bennequin_slack,
    canonical_counts,
    legendrian_stabilize,
    lk_pushoff,
    poincare_hopf_check,
    sl_defect,
    sl_from_counts,
    transverse_pushoff,
    transverse_stabilize,
)

UNKNOT = SeifertData(order=1)
L51 = SeifertData(order=5)  # rational unknot in L(5,1)

small = st.integers(min_value=0, max_value=30)
count_st = st.builds(SingularityCounts, small, small, small, small)


@st.composite
def legendrian_records(draw):
    r = draw(st.integers(min_value=1, max_value=40))
    s = draw(st.integers(min_value=-50, max_value=50))
    tb = F(draw(st.integers(min_value=-500, max_value=500)), r)
    rot = F(draw(st.integers(min_value=-500, max_value=500)), r)
    return LegendrianRecord(SeifertData(r, s), tb, rot)


def test_seifert_multiplicity():
    assert SeifertData(6, 4).multiplicity == 2
    assert SeifertData(5, 0).multiplicity == 5
    assert SeifertData(3, -2).multiplicity == 1
    with pytest.raises(InvariantError):
        SeifertData(0)


def test_reframe_shifts_slope_by_multiples_of_order():
    assert SeifertData(3, 1).reframe(2).boundary_slope == 7


def test_record_denominators():
    with pytest.raises(InvariantError):
        LegendrianRecord(L51, F(-1, 3), F(0))
    with pytest.raises(InvariantError):
        TransverseRecord(SeifertData(2), F(1, 4))
    with pytest.raises(InvariantError):
        SingularityCounts(-1, 0, 0, 0)


@pytest.mark.parametrize("r, s, f, value", [(1, 0, 0, F(0)), (2, 1, 0, F(-1, 2)), (2, 1, -1, F(-3, 2)), (3, 2, 1, F(1, 3))])
def test_lk_pushoff(r, s, f, value):
    assert lk_pushoff(r, s, f) == value


@given(st.integers(1, 50), st.integers(-100, 100), st.integers(-100, 100))
def test_lk_pushoff_framing_shift(r, s, f):
    assert lk_pushoff(r, s, f - 1) == lk_pushoff(r, s, f) - 1
    # shifting the framing by n moves s by n*r and leaves lk of the same push-off unchanged
    assert lk_pushoff(r, s + 3 * r, f + 3) == lk_pushoff(r, s, f)


@pytest.mark.parametrize(
    "r, c, sl",
    [
        (1, SingularityCounts(1, 0, 0, 0), F(-1)),
        (1, SingularityCounts(2, 0, 1, 0), F(-1)),
        (5, SingularityCounts(3, 1, 2, 0), F(0)),
    ],
)
def test_sl_from_counts(r, c, sl):
    assert sl_from_counts(r, c) == sl


@pytest.mark.parametrize(
    "chi, c, ok",
    [(1, SingularityCounts(1, 0, 0, 0), True), (-1, SingularityCounts(1, 0, 2, 0), True), (0, SingularityCounts(1, 0, 0, 0), False)],
)
def test_poincare_hopf(chi, c, ok):
    assert poincare_hopf_check(chi, c) is ok


def test_sl_defect():
    assert sl_defect(1, F(-1), 1) == 0
    assert sl_defect(5, F(-7, 5), 1) == -6
    assert sl_defect(2, F(-3, 2), 1) == -2
    with pytest.raises(InvariantError):
        sl_defect(2, F(1, 3), 0)


def test_bennequin_slack():
    assert bennequin_slack(F(-1), 1, 1) == 0
    assert bennequin_slack(F(-7, 5), 1, 5) == F(6, 5)
    assert bennequin_slack(F(1), 1, 1) == -2


def test_bennequin_legendrian():
    assert bennequin_legendrian(F(-4, 5), F(3, 5), 1, 5)
    assert F(-4, 5) + F(3, 5) == F(-1, 5)  # equality case
    assert bennequin_legendrian(F(-1), F(0), 1, 1)
    for rot in (F(3, 5), F(-1, 5), F(0)):
        assert not bennequin_legendrian(F(-4, 5) + 1, rot, 1, 5)


def test_pushoff_examples():
    assert transverse_pushoff(LegendrianRecord(UNKNOT, F(-1), F(0))).sl == -1
    assert transverse_pushoff(LegendrianRecord(L51, F(-4, 5), F(3, 5))).sl == F(-7, 5)
    assert transverse_pushoff(LegendrianRecord(L51, F(-4, 5), F(-3, 5))).sl == F(-1, 5)


def test_stabilize_examples():
    s = legendrian_stabilize(LegendrianRecord(UNKNOT, F(-1), F(0)), "+")
    assert (s.tb, s.rot) == (-2, 1)
    peak = LegendrianRecord(L51, F(-4, 5), F(3, 5))
    s = legendrian_stabilize(peak, "-")
    assert (s.tb, s.rot) == (F(-9, 5), F(-2, 5))
    a = legendrian_stabilize(legendrian_stabilize(peak, "+"), "-")
    b = legendrian_stabilize(legendrian_stabilize(peak, "-"), "+")
    assert a == b
    assert (a.tb, a.rot) == (F(-14, 5), F(3, 5))
    with pytest.raises(InvariantError):
        legendrian_stabilize(peak, "x")


def test_transverse_stabilize_examples():
    assert transverse_stabilize(TransverseRecord(UNKNOT, F(-1))).sl == -3
    assert transverse_stabilize(TransverseRecord(L51, F(-7, 5))).sl == F(-17, 5)
    t = TransverseRecord(L51, F(-1, 5))
    assert transverse_stabilize(transverse_stabilize(t)).sl == F(-21, 5)


@given(legendrian_records())
def test_pushoff_stabilization_compatibility(L):
    base = transverse_pushoff(L)
    assert transverse_pushoff(legendrian_stabilize(L, "-")).sl == base.sl
    assert transverse_pushoff(legendrian_stabilize(L, "+")) == transverse_stabilize(base)
    assert legendrian_stabilize(L, "-").seifert == L.seifert


@given(count_st, st.integers(1, 12))
def test_counts_recover_defect(c, r):
    chi = c.index_sum
    sl = sl_from_counts(r, c)
    assert poincare_hopf_check(chi, c)
    assert sl_defect(r, sl, chi) == 2 * (c.e_minus - c.h_minus)
    assert (bennequin_slack(sl, chi, r) >= 0) == (c.e_minus - c.h_minus <= 0)


@given(st.integers(-20, 20))
def test_canonical_counts(chi):
    c = canonical_counts(chi)
    assert poincare_hopf_check(chi, c)
    assert c.e_minus == c.h_minus == 0
