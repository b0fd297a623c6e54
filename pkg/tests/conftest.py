import pytest

from pathword import diagram_from_rows, make_alphabet, make_path

# Well-known 6x6 hex demo pair, frozen as the golden derivation vector.
# Note the grid contains only 15 of the 16 hex letters ("0" never occurs),
# so it doubles as the canonical partially-covered example.
WORKED_GRID_ROWS = [
    "a c e 2 3 4".split(),
    "a 1 6 f 7 2".split(),
    "d 2 a 1 9 4".split(),
    "f c f a 9 6".split(),
    "e 1 b 5 b c".split(),
    "8 7 3 4 d 9".split(),
]

WORKED_PATH_COORDS = [
    (1, 1), (1, 2), (1, 6), (1, 5),
    (2, 1), (2, 2), (2, 5), (2, 6),
    (5, 1), (5, 2), (5, 6), (5, 5),
    (6, 1), (6, 2), (6, 6), (6, 5),
]

WORKED_PASSWORD = "ac43a172e1cb879d"


@pytest.fixture
def worked_diagram():
    return diagram_from_rows(make_alphabet("hex"), WORKED_GRID_ROWS)


@pytest.fixture
def worked_path():
    return make_path((6, 6), WORKED_PATH_COORDS)
