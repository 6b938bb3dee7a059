import pytest

from padkit import core, tables
from padkit.errors import InvalidColumn, InvalidDimensions, InvalidIndex

FIVE_COLUMNS = [
    [1, 1, 2, 2, 3],
    [4, 5, 7, 9, 12],
    [16, 21, 28, 37, 49],
    [65, 86, 114, 151, 200],
]

SIX_COLUMNS = [
    [1, 1, 2, 2, 3, 4],
    [5, 7, 9, 12, 16, 21],
    [28, 37, 49, 65, 86, 114],
    [151, 200, 265, 351, 465, 616],
]

# partial sums of the 3-column table, rows m = 0..4
R3_SUMS = [
    [1, 1, 2],
    [3, 4, 6],
    [8, 11, 15],
    [20, 27, 36],
    [48, 64, 85],
]

# partial sums of the 4-column table, rows m = 0..4
R4_SUMS = [
    [1, 1, 2, 2],
    [4, 5, 7, 9],
    [13, 17, 23, 30],
    [41, 54, 72, 95],
    [127, 168, 223, 295],
]


def test_five_column_table():
    t = tables.build_table(5, 4)
    assert [list(r) for r in t.entries] == FIVE_COLUMNS


def test_six_column_table():
    t = tables.build_table(6, 4)
    assert [list(r) for r in t.entries] == SIX_COLUMNS


def test_entry_addressing():
    t = tables.build_table(4, 6)
    for i in range(6):
        for b in range(1, 5):
            assert t.entry(i, b) == core.pad(4 * i + b)


def test_entry_bounds():
    t = tables.build_table(3, 2)
    with pytest.raises(InvalidColumn):
        t.entry(0, 4)
    with pytest.raises(InvalidColumn):
        t.entry(0, 0)
    with pytest.raises(InvalidDimensions):
        t.entry(2, 1)


def test_build_table_validates():
    with pytest.raises(InvalidDimensions):
        tables.build_table(0, 3)
    with pytest.raises(InvalidDimensions):
        tables.build_table(3, 0)


@pytest.mark.parametrize("b", [1, 2, 3])
def test_r3_sum_table(b):
    got = tables.sum_series(3, b, 4).values
    assert list(got) == [row[b - 1] for row in R3_SUMS]


@pytest.mark.parametrize("b", [1, 2, 3, 4])
def test_r4_sum_table(b):
    got = tables.sum_series(4, b, 4).values
    assert list(got) == [row[b - 1] for row in R4_SUMS]


def test_sum_series_is_cumulative():
    s = tables.sum_series(7, 3, 30)
    assert len(s.values) == 31
    direct = 0
    for i, v in enumerate(s.values):
        direct += core.pad(7 * i + 3)
        assert v == direct


def test_sum_series_validates():
    with pytest.raises(InvalidColumn):
        tables.sum_series(4, 5, 3)
    with pytest.raises(InvalidIndex):
        tables.sum_series(4, 2, -1)


def test_column_sum():
    assert tables.column_sum(3, 1, 4) == 48
    assert tables.column_sum(4, 4, 4) == 295
    assert tables.column_sum(5, 2, 0) == core.pad(2)


def test_r3_step_against_sums():
    for b in (1, 2, 3):
        v = tables.sum_series(3, b, 60).values
        for m in range(3, 61):
            assert v[m] == tables.r3_step(b, (v[m - 1], v[m - 2], v[m - 3]))


def test_r3_step_instance():
    # r(3) for the first column: 20 = 3*8 - 2*3 + 1 + 1
    assert tables.r3_step(1, (8, 3, 1)) == 20


def test_r4_step_against_sums():
    for b in (1, 2, 3, 4):
        v = tables.sum_series(4, b, 60).values
        for m in range(3, 61):
            assert v[m] == tables.r4_step(b, (v[m - 1], v[m - 2], v[m - 3]))


def test_r4_step_instance():
    # r(4) for the first column: 127 = 2*41 + 3*13 + 4 + 2
    assert tables.r4_step(1, (41, 13, 4)) == 127


def test_step_column_validation():
    with pytest.raises(InvalidColumn):
        tables.r3_step(4, (1, 1, 1))
    with pytest.raises(InvalidColumn):
        tables.r4_step(0, (1, 1, 1))


def test_sum_4k_closed():
    running = 0
    for m in range(0, 120):
        running += core.pad(4 * m)
        assert tables.sum_4k_closed(m) == running


def test_sum_4k_closed_validates():
    with pytest.raises(InvalidIndex):
        tables.sum_4k_closed(-1)
