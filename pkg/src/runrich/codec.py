"""Binary strings, their hexadecimal form, text files and claim manifests.

A hex file looks like::

    length=1558
    format=hex
    35A5AD2D66B4...

The length header is mandatory because the integer reading of a binary
string drops its leading zeros.  Raw files hold the symbols themselves and
any whitespace is ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
import re
import string

from runrich.runs import TextLike, as_text

BINARY = b"01"
_HEXDIGITS = set(string.hexdigits)
_WS = re.compile(rb"\s+")


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class HexEncoding:
    digits: str
    length: int

    def __str__(self) -> str:
        return self.digits


def _check_alphabet(w: bytes, alphabet: bytes) -> None:
    allowed = set(alphabet)
    for pos, sym in enumerate(w, 1):
        if sym not in allowed:
            raise FormatError(f"symbol {chr(sym)!r} at position {pos} is outside the alphabet {alphabet.decode()!r}")


def decode_hex(digits: str, length: int) -> bytes:
    """Expand hex digits into exactly ``length`` binary symbols, zero-padded on the left."""
    digits = "".join(digits.split())
    if digits[:2].lower() == "0x":
        digits = digits[2:]
    if not digits:
        raise FormatError("no hex digits")
    bad = next((c for c in digits if c not in _HEXDIGITS), None)
    if bad is not None:
        raise FormatError(f"invalid hex digit {bad!r}")
    value = int(digits, 16)
    if length < value.bit_length():
        raise FormatError(f"declared length {length} is shorter than the value's {value.bit_length()} bits")
    return format(value, "b").zfill(length).encode() if length else b""


def encode_hex(w: TextLike) -> HexEncoding:
    w = as_text(w)
    if not w:
        raise FormatError("cannot encode an empty string")
    _check_alphabet(w, BINARY)
    return HexEncoding(format(int(w, 2), "X"), len(w))


def format_hex_file(enc: HexEncoding, width: int = 64) -> str:
    lines = [f"length={enc.length}", "format=hex"]
    lines += [enc.digits[i : i + width] for i in range(0, len(enc.digits), width)]
    return "\n".join(lines) + "\n"


def parse_hex_file(content: str) -> bytes:
    length = None
    body = []
    for line in content.splitlines():
        line = line.strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if sep:
            key = key.strip().lower()
            if key == "length":
                length = int(value)
            elif key == "format":
                if value.strip().lower() != "hex":
                    raise FormatError(f"unexpected format {value.strip()!r} in hex file")
            else:
                raise FormatError(f"unknown header {key!r}")
        else:
            body.append(line)
    if length is None:
        raise FormatError("hex file lacks a length=<n> header")
    return decode_hex("".join(body), length)


def parse_raw(content: bytes | str, alphabet: bytes | None = None) -> bytes:
    w = _WS.sub(b"", as_text(content))
    if alphabet is not None:
        _check_alphabet(w, alphabet)
    return w


def load_text(path, format: str = "raw", alphabet: bytes | None = None) -> bytes:
    path = Path(path)
    if format == "raw":
        return parse_raw(path.read_bytes(), alphabet)
    if format == "hex":
        return parse_hex_file(path.read_text())
    raise FormatError(f"unknown format {format!r}")


@dataclass(frozen=True)
class ClaimManifest:
    """Expected run counts for one string, plus where to find the string.

    ``source`` is a path relative to the manifest, or the literal string when
    ``format`` is ``inline``; it may be absent for expectation-only manifests.
    """

    source: str | None
    format: str = "raw"
    length: int | None = None
    r1: int | None = None
    r2: int | None = None
    r3: int | None = None
    growth: int | None = None
    offset: int | None = None
    alpha: Fraction | None = None
    base_dir: Path = Path(".")

    def load(self, source: str | None = None, format: str | None = None) -> bytes:
        source = source if source is not None else self.source
        fmt = format or self.format
        if source is None:
            raise FormatError("manifest names no source string; supply one")
        if fmt == "inline":
            return parse_raw(source)
        path = Path(source)
        if not path.is_absolute():
            path = self.base_dir / path
        return load_text(path, fmt)


_INT_KEYS = {"length": "length", "r1": "r1", "r2": "r2", "r3": "r3", "A": "growth", "B": "offset"}


def parse_manifest(content: str, base_dir=".") -> ClaimManifest:
    fields: dict = {"base_dir": Path(base_dir)}
    alpha_num = alpha_den = None
    for lineno, line in enumerate(content.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not value:
            raise FormatError(f"line {lineno}: expected key=value")
        try:
            if key in ("source", "format"):
                fields[key] = value
            elif key in _INT_KEYS:
                fields[_INT_KEYS[key]] = int(value)
            elif key == "alpha_num":
                alpha_num = int(value)
            elif key == "alpha_den":
                alpha_den = int(value)
            else:
                raise FormatError(f"line {lineno}: unknown key {key!r}")
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {lineno}: {key} must be an integer") from None
    if (alpha_num is None) != (alpha_den is None):
        raise FormatError("alpha_num and alpha_den must be given together")
    if alpha_num is not None:
        if alpha_den <= 0:
            raise FormatError("alpha_den must be positive")
        fields["alpha"] = Fraction(alpha_num, alpha_den)
    if fields.get("format", "raw") not in ("raw", "hex", "inline"):
        raise FormatError(f"unknown format {fields['format']!r}")
    manifest = ClaimManifest(**{"source": None, **fields})
    expectations = ("length", "r1", "r2", "r3", "growth", "offset", "alpha")
    if all(getattr(manifest, name) is None for name in expectations):
        raise FormatError("manifest carries no expectations")
    return manifest


def load_manifest(path) -> ClaimManifest:
    path = Path(path)
    return parse_manifest(path.read_text(), path.parent)
