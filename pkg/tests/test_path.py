import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathword import (
    PathError,
    SchemaError,
    canonicalize_password,
    derive,
    diagram_from_rows,
    format_path,
    generate_diagram,
    make_alphabet,
    make_path,
    parse_path,
    path_from_dict,
    path_to_dict,
    random_path,
    render_path_overlay,
)

from conftest import WORKED_PASSWORD, WORKED_PATH_COORDS

HEX = make_alphabet("hex")
BINARY = make_alphabet(["0", "1"])
QUAD = make_alphabet(["0", "1", "2", "3"])


# -- construction -----------------------------------------------------------

def test_worked_path_is_valid(worked_path):
    assert worked_path.length == 16
    assert worked_path.dims == (6, 6)


def test_repeated_coordinate_rejected():
    with pytest.raises(PathError):
        make_path((6, 6), [(1, 1), (1, 1)])


def test_out_of_bounds_rejected():
    with pytest.raises(PathError):
        make_path((6, 6), [(7, 1)])


def test_empty_path_rejected():
    with pytest.raises(PathError):
        make_path((6, 6), [])


# -- derivation ----------------------------------------------------------------

def test_golden_derivation(worked_diagram, worked_path):
    assert derive(worked_path, worked_diagram).text == WORKED_PASSWORD


def test_single_step_derivation(worked_diagram):
    p = make_path((6, 6), [(1, 1)])
    assert derive(p, worked_diagram).text == "a"


def test_two_by_two_read_off():
    d = diagram_from_rows(BINARY, [["0", "1"], ["1", "0"]])
    p = make_path((2, 2), [(1, 1), (2, 2)])
    assert derive(p, d).text == "00"


def test_dims_mismatch_rejected(worked_diagram):
    p = make_path((5, 5), [(1, 1)])
    with pytest.raises(PathError):
        derive(p, worked_diagram)


def test_derive_is_pure(worked_diagram, worked_path):
    assert derive(worked_path, worked_diagram) == derive(worked_path, worked_diagram)


@given(st.integers(0, 10**9), st.integers(1, 36))
@settings(max_examples=50, deadline=None)
def test_derive_length_and_letter_membership(seed, n):
    d = generate_diagram(HEX, 6, 6, seed=seed)
    p = random_path((6, 6), n, seed=seed + 1)
    pw = derive(p, d)
    assert pw.length == n
    assert all(letter in HEX for letter in pw.letters)
    assert pw.text == "".join(pw.letters)


def test_derive_injective_on_permutation_diagram():
    # On a grid whose cells are all distinct, distinct paths must give
    # distinct passwords.  Exhaustive over every path of length 1..4.
    d = diagram_from_rows(QUAD, [["0", "1"], ["2", "3"]])
    cells = [(r, c) for r in (1, 2) for c in (1, 2)]
    seen = set()
    for n in range(1, 5):
        for combo in itertools.permutations(cells, n):
            text = derive(make_path((2, 2), list(combo)), d).text
            assert text not in seen
            seen.add(text)


# -- random paths -----------------------------------------------------------------

def test_random_path_valid_and_seeded():
    p1 = random_path((6, 6), 10, seed="walk")
    p2 = random_path((6, 6), 10, seed="walk")
    assert p1 == p2
    assert p1.length == 10
    assert len(set(p1.steps)) == 10


def test_random_path_forced_single_cell():
    assert random_path((1, 1), 1).steps == ((1, 1),)


def test_random_path_length_out_of_range():
    with pytest.raises(PathError):
        random_path((2, 2), 5)
    with pytest.raises(PathError):
        random_path((2, 2), 0)


def test_random_path_outputs_revalidate():
    for seed in range(30):
        p = random_path((3, 4), 7, seed=seed)
        make_path(p.dims, [tuple(s) for s in p.steps])


def test_random_path_first_step_uniformity():
    # Chi-square over the first step of 9000 seeded draws on a 3x3 grid.
    # 8 degrees of freedom; critical value 26.12 at the 0.001 level.
    counts = {}
    trials = 9000
    for seed in range(trials):
        first = random_path((3, 3), 3, seed=seed).steps[0]
        counts[first] = counts.get(first, 0) + 1
    expected = trials / 9
    stat = sum((counts.get((r, c), 0) - expected) ** 2 / expected
               for r in (1, 2, 3) for c in (1, 2, 3))
    assert stat < 26.12, f"chi-square statistic {stat:.2f}"


# -- overlay render ------------------------------------------------------------------

def test_overlay_shows_all_ordinals(worked_diagram, worked_path):
    text = render_path_overlay(worked_diagram, worked_path)
    assert "a^1" in text and "c^2" in text and "d^16" in text


def test_overlay_dims_mismatch(worked_diagram):
    with pytest.raises(PathError):
        render_path_overlay(worked_diagram, make_path((5, 5), [(1, 1)]))


# -- codecs -------------------------------------------------------------------------

def test_path_text_round_trip(worked_path):
    assert parse_path(format_path(worked_path)) == worked_path


def test_format_path_shape():
    p = make_path((6, 6), WORKED_PATH_COORDS[:2])
    assert format_path(p) == "6x6: (1,1) (1,2)"


def test_parse_path_tolerates_whitespace():
    assert parse_path(" 6 x 6 :  ( 1 , 1 )   (2,2) ").length == 2


@pytest.mark.parametrize("bad", ["", "6x6", "6x6: (1,1) junk", "(1,1) (2,2)"])
def test_parse_path_rejects_malformed(bad):
    with pytest.raises(SchemaError):
        parse_path(bad)


def test_path_dict_round_trip(worked_path):
    assert path_from_dict(path_to_dict(worked_path)) == worked_path


def test_path_dict_missing_key():
    with pytest.raises(SchemaError):
        path_from_dict({"rows": 6, "steps": []})


# -- canonical form ---------------------------------------------------------------------

def test_canonicalize_password():
    assert canonicalize_password("AC43 A172 E1CB 879D") == WORKED_PASSWORD
    assert canonicalize_password("  ab\tcd\n") == "abcd"
