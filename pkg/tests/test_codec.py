from fractions import Fraction
import random

from hypothesis import given, strategies as st
import pytest

from runrich.codec import (
    FormatError,
    decode_hex,
    encode_hex,
    format_hex_file,
    load_manifest,
    load_text,
    parse_hex_file,
    parse_manifest,
    parse_raw,
)

from conftest import DATA

bits = st.text(alphabet="01", min_size=1, max_size=300)


def test_small_conversions():
    assert decode_hex("0", 4) == b"0000"
    assert decode_hex("A5", 8) == b"10100101"
    assert decode_hex("a5", 10) == b"0010100101"
    assert decode_hex("0x3", 2) == b"11"
    assert decode_hex("0", 0) == b""
    enc = encode_hex("10100101")
    assert (enc.digits, enc.length) == ("A5", 8)
    assert encode_hex("0000").digits == "0"


def test_decode_errors():
    with pytest.raises(FormatError, match="shorter"):
        decode_hex("FF", 7)
    with pytest.raises(FormatError, match="invalid"):
        decode_hex("FG", 8)
    with pytest.raises(FormatError):
        decode_hex("", 3)


def test_encode_errors():
    with pytest.raises(FormatError):
        encode_hex("")
    with pytest.raises(FormatError, match="position 3"):
        encode_hex("012")


@given(bits)
def test_round_trip(w):
    enc = encode_hex(w)
    assert enc.length == len(w)
    assert decode_hex(enc.digits, enc.length) == w.encode()
    assert parse_hex_file(format_hex_file(enc)) == w.encode()


@given(st.text(alphabet="0123456789abcdefABCDEF", min_size=1, max_size=40), st.integers(0, 16))
def test_hex_canonical_form(digits, pad):
    length = int(digits, 16).bit_length() + pad
    enc = encode_hex(decode_hex(digits, length)) if length else None
    if enc is not None:
        assert enc.digits == format(int(digits, 16), "X")


def test_random_round_trips():
    rng = random.Random(2)
    for _ in range(1000):
        w = "".join(rng.choice("01") for _ in range(rng.randint(1, 200)))
        enc = encode_hex(w)
        assert decode_hex(enc.digits, enc.length).decode() == w


def test_fixture_raw_and_hex_agree(tau1558):
    raw = load_text(DATA / "tau1558.txt")
    hexed = load_text(DATA / "tau1558.hex", "hex")
    assert raw == hexed == tau1558
    assert len(raw) == 1558
    assert encode_hex(raw).digits.startswith("35A5AD2D66B4")


def test_raw_ignores_whitespace(tmp_path):
    rng = random.Random(4)
    w = "".join(rng.choice("01") for _ in range(300))
    wrapped = "".join(c + rng.choice(["", "", " ", "\n", "\r\n", "\t"]) for c in w)
    path = tmp_path / "w.txt"
    path.write_text(wrapped)
    assert load_text(path, alphabet=b"01") == w.encode()


def test_raw_rejects_stray_symbol(tmp_path):
    path = tmp_path / "w.txt"
    path.write_text("0101\n0121\n")
    with pytest.raises(FormatError, match="position 7"):
        load_text(path, alphabet=b"01")
    assert load_text(path) == b"01010121"


def test_hex_file_needs_length(tmp_path):
    with pytest.raises(FormatError, match="length"):
        parse_hex_file("35A5\n")
    with pytest.raises(FormatError):
        parse_hex_file("length=4\nformat=raw\nF\n")
    assert parse_hex_file("LENGTH=6\n\n0 f\n") == b"001111"
    with pytest.raises(FormatError):
        load_text(tmp_path / "x", "bin")


def test_parse_raw_alphabet():
    assert parse_raw(" ab\nc ") == b"abc"
    with pytest.raises(FormatError):
        parse_raw("0 1 x", b"01")


def test_bundled_manifest():
    m = load_manifest(DATA / "tau1558.manifest")
    assert (m.length, m.r1, m.r2, m.r3, m.growth, m.offset) == (1558, 1445, 2915, 4374, 1459, 3)
    assert m.alpha == Fraction(1459, 1558)
    assert len(m.load()) == 1558


def test_expectation_only_manifest(tmp_path):
    m = load_manifest(DATA / "tau60064.manifest")
    assert m.source is None and m.alpha == Fraction(56733, 60064)
    with pytest.raises(FormatError):
        m.load()
    (tmp_path / "w.txt").write_text("0011")
    assert m.load(str(tmp_path / "w.txt")) == b"0011"


def test_manifest_parsing():
    m = parse_manifest("source=0101 1\nformat=inline\nr1=1  # comment\n")
    assert m.load() == b"01011" and m.r1 == 1
    for bad in [
        "",
        "source=x\n",
        "r1=one\n",
        "r1\n",
        "colour=blue\nr1=1\n",
        "alpha_num=1\nr1=1\n",
        "alpha_num=1\nalpha_den=0\n",
        "format=zip\nr1=1\n",
    ]:
        with pytest.raises(FormatError):
            parse_manifest(bad)
