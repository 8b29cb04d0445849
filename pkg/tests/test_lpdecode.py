from fractions import Fraction as F

import pytest

from fraccut.gf2 import BitVector, enumerate_codewords
from fraccut.lpdecode import CODEWORD, FRACTIONAL, LpDecoder, bsc_cost, guaranteed_errors, lp_decode


def test_guaranteed_errors():
    assert guaranteed_errors(2) == 0
    assert guaranteed_errors(3) == 1
    assert guaranteed_errors(F(21, 8)) == 1
    assert guaranteed_errors(4) == 1
    assert guaranteed_errors(F(9, 2)) == 2
    assert guaranteed_errors(3.0) == 1
    with pytest.raises(ValueError):
        guaranteed_errors(0)


def test_bsc_cost():
    assert bsc_cost(BitVector.from_string("0110")) == (1, -1, -1, 1)


@pytest.mark.parametrize("engine", ["exact", "float"])
def test_codewords_decode_to_themselves(hamming, engine):
    dec = LpDecoder(hamming, engine)
    for c in enumerate_codewords(hamming):
        res = dec.decode(c)
        assert res.status == CODEWORD and res.word() == c and res.unique
        assert res.succeeded(c)


@pytest.mark.parametrize("engine", ["exact", "float"])
def test_hamming_star_corrects_single_flips(hamming_star, engine):
    dec = LpDecoder(hamming_star, engine)
    zero = BitVector.zeros(7)
    for j in range(7):
        assert dec.decode(BitVector.from_support(7, [j])).succeeded(zero)


def test_original_hamming_has_ties(hamming):
    # d_frac = 2 guarantees nothing; single flips on the degree-one columns tie with a fractional point
    zero = BitVector.zeros(7)
    ok = [lp_decode(hamming, BitVector.from_support(7, [j])).succeeded(zero) for j in range(7)]
    assert ok.count(False) >= 1


@pytest.mark.parametrize("name", ["hamming", "hamming_star"])
def test_engines_agree_on_success(request, name):
    H = request.getfixturevalue(name)
    ex, fl = LpDecoder(H, "exact"), LpDecoder(H, "float")
    zero = BitVector.zeros(7)
    for w in range(1 << 7):
        y = BitVector(7, w)
        a, b = ex.decode(y), fl.decode(y)
        assert a.succeeded(zero) == b.succeeded(zero), str(y)
        assert a.objective == b.objective


def test_fractional_output_is_reported(hamming):
    res = lp_decode(hamming, BitVector.from_string("0000100"), "float")
    if res.status == FRACTIONAL:
        assert res.word() is None and not res.succeeded(BitVector.zeros(7))


def test_length_check(hamming):
    with pytest.raises(ValueError):
        lp_decode(hamming, BitVector.from_string("101"))
