import pytest
from hypothesis import given
from hypothesis import strategies as st

from digroot.errors import UnsupportedRootKindError
from digroot.natural import DecimalNatural
from digroot.oracle import floor_root, floor_root_int
from digroot.oracle.range_verifier import Mismatch, VerificationReport, merge_reports, random_inputs


def test_floor_root_examples():
    assert floor_root(DecimalNatural.from_int(34965783), 3) == 327
    assert floor_root("1", 2) == 1
    assert floor_root(6859, 3) == 19
    assert floor_root(0, 2) == 0
    assert floor_root(0, 3) == 0
    assert floor_root(10, 2) == 3
    assert floor_root(10, 3) == 2


def test_floor_root_rejects_other_exponents():
    with pytest.raises(UnsupportedRootKindError):
        floor_root_int(16, 4)
    with pytest.raises(ValueError):
        floor_root_int(-1, 2)


@given(st.integers(min_value=1, max_value=10**20), st.sampled_from([2, 3]))
def test_floor_root_two_sided(r, k):
    assert floor_root_int(r**k, k) == r
    assert floor_root_int(r**k - 1, k) == r - 1
    assert floor_root_int((r + 1) ** k - 1, k) == r


def test_merge_reports_keeps_smallest_mismatch():
    late = Mismatch(x=900, k=2, engine_root=1, engine_remainder=0, oracle_root=30, oracle_remainder=0)
    early = Mismatch(x=40, k=2, engine_root=1, engine_remainder=0, oracle_root=6, oracle_remainder=4)
    merged = merge_reports(2, [VerificationReport(2, 10, late), VerificationReport(2, 5, None),
                               VerificationReport(2, 7, early)])
    assert merged.checked == 22
    assert merged.mismatch == early
    assert not merged.success
    assert "x=40" in merged.describe()


def test_random_inputs_are_reproducible():
    first = random_inputs(50, 60, seed=7)
    assert first == random_inputs(50, 60, seed=7)
    assert all(0 <= v < 10**60 for v in first)
    assert len(first) == 50


@pytest.mark.parametrize("k", [2, 3])
def test_floor_root_beyond_str_digit_limit(k):
    x = DecimalNatural.from_decimal_string("1" + "0" * 4500)
    assert floor_root(x, k) == DecimalNatural.from_int(10 ** (4500 // k))
    r = 10**1600 + 12345
    assert floor_root_int(r**k, k) == r
    assert floor_root_int(r**k - 1, k) == r - 1


def test_mismatch_describes_huge_values():
    big = 10**4500
    mismatch = Mismatch(x=big, k=2, engine_root=1, engine_remainder=0, oracle_root=10**2250, oracle_remainder=0)
    assert mismatch.describe().startswith("x=1" + "0" * 4500 + " k=2")
