from fractions import Fraction

from hypothesis import strategies as st

from pbern.series import Series


def rationals(max_value: int = 20, max_denominator: int = 12):
    return st.builds(
        Fraction,
        st.integers(-max_value, max_value),
        st.integers(1, max_denominator),
    )


def nonzero_rationals():
    return rationals().filter(lambda q: q != 0)


@st.composite
def series(draw, min_order=16, extra=4, unit=False):
    """Nonzero series with absolute order >= min_order."""
    valuation = 0 if unit else draw(st.integers(-3, 3))
    width = draw(st.integers(min_order - min(valuation, 0), min_order + extra + 3))
    lead = draw(nonzero_rationals())
    rest = draw(st.lists(rationals(), min_size=width - 1, max_size=width - 1))
    return Series([lead] + rest, valuation, valuation + width)
