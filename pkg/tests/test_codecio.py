from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fraccut.codecio import (ParseError, format_rational, load_matrix, parse_alist, parse_dense, parse_rational,
                             read_cut_log, save_matrix, write_alist, write_cut_log, write_dense)
from fraccut.cutplane import CutRecord
from fraccut.gf2 import BitMatrix, BitVector

HAMMING_ALIST = """7 3
3 4
2 2 2 3 1 1 1
4 4 4
1 2
2 3
1 3
1 2 3
1
2
3
1 3 4 5
1 2 4 6
2 3 4 7
"""


def test_parse_hamming(hamming):
    assert parse_alist(HAMMING_ALIST) == hamming
    assert write_alist(hamming) == HAMMING_ALIST


def test_column_degrees(hamming):
    lines = write_alist(hamming).splitlines()
    assert lines[2] == "2 2 2 3 1 1 1"


def test_zero_padding_accepted(hamming):
    padded = HAMMING_ALIST.replace("\n1\n2\n3\n", "\n1 0 0\n2 0 0\n3 0 0\n")
    assert parse_alist(padded) == hamming


def test_minimal():
    H = BitMatrix.from_rows([[1]])
    assert write_alist(H) == "1 1\n1 1\n1\n1\n1\n1\n"
    assert parse_alist(write_alist(H)) == H


def test_truncated_names_section():
    text = "\n".join(HAMMING_ALIST.splitlines()[:-2]) + "\n"
    with pytest.raises(ParseError, match="row entry block"):
        parse_alist(text)


@pytest.mark.parametrize("edit,msg", [
    (lambda s: s.replace("1 3 4 5", "1 3 4 9"), "out of range"),
    (lambda s: s.replace("1 3 4 5", "1 3 4 6"), "disagree"),
    (lambda s: s.replace("2 2 2 3 1 1 1", "2 2 2 3 1 1"), "column degrees"),
    (lambda s: s.replace("1 2 4 6", "1 2 4 x"), "non-integer"),
])
def test_malformed(edit, msg):
    with pytest.raises(ParseError, match=msg):
        parse_alist(edit(HAMMING_ALIST))


def test_error_has_line_number():
    with pytest.raises(ParseError) as e:
        parse_alist(HAMMING_ALIST.replace("1 3 4 5", "1 3 4 9"))
    assert e.value.line == 12  # 4 header lines, 7 column lines, then row 1


matrices = st.integers(1, 8).flatmap(lambda m: st.integers(1, 12).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n).filter(any), min_size=m, max_size=m)))


@given(matrices)
def test_round_trips(rows):
    H = BitMatrix.from_rows(rows)
    assert parse_alist(write_alist(H)) == H
    assert parse_dense(write_dense(H)) == H
    lines = write_alist(H).splitlines()
    n, m = map(int, lines[0].split())
    col = list(map(int, lines[2].split()))
    row = list(map(int, lines[3].split()))
    assert sum(col) == sum(row) == int(np.sum(H.to_numpy()))


def test_dense_and_alist_files_agree(tmp_path, hamming_star):
    save_matrix(hamming_star, tmp_path / "a.alist")
    save_matrix(hamming_star, tmp_path / "a.txt")
    (tmp_path / "noext").write_text(write_alist(hamming_star))
    assert load_matrix(tmp_path / "a.alist") == load_matrix(tmp_path / "a.txt") == hamming_star
    assert load_matrix(tmp_path / "noext") == hamming_star


def test_dense_errors():
    with pytest.raises(ParseError):
        parse_dense("2 3\n101\n")
    with pytest.raises(ParseError):
        parse_dense("1 3\n1021\n")


def test_rationals():
    assert format_rational(F(21, 8)) == "21/8 (2.625)"
    assert format_rational(F(2)) == "2/1 (2.000)"
    assert parse_rational("21/8 (2.625)") == F(21, 8)


def test_cut_log_round_trip():
    assert write_cut_log([]) == ""
    rec = CutRecord(1, (0, F(2, 3), F(2, 3), F(2, 3), 0, 0, 0), BitVector.from_string("1010011"),
                    F(2), F(5, 2), 6)
    text = write_cut_log([rec, rec])
    assert len(text.splitlines()) == 2
    assert '"d_frac_after": "5/2 (2.500)"' in text
    back = read_cut_log(text)
    assert back[0] == rec
