"""
Image I/O
PBM (P1/P4) binary input, 16-bit PGM (P5) label output and equivalence-table dumps
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Iterable, List, Tuple, Union

import numpy as np
import logging

from ..stream.stream_model import BinaryImage, LabelImage
from .errors import ImageFormatError

logger = logging.getLogger(__name__)

PathLike = Union[str, os.PathLike]

MAX_DIMENSION = 1 << 16
PGM16_MAXVAL = 65535


def _read_header(raw: bytes, fields: int) -> Tuple[List[bytes], int]:
    """
    Read `fields` whitespace-separated header tokens after the magic number,
    skipping '#' comments. Returns the tokens and the offset of the payload.
    """
    tokens: List[bytes] = []
    pos = 2
    size = len(raw)
    while len(tokens) < fields:
        while pos < size and raw[pos:pos + 1].isspace():
            pos += 1
        if pos >= size:
            raise ImageFormatError("Truncated header")
        if raw[pos:pos + 1] == b"#":
            end = raw.find(b"\n", pos)
            pos = size if end < 0 else end + 1
            continue
        start = pos
        while pos < size and not raw[pos:pos + 1].isspace() and raw[pos:pos + 1] != b"#":
            pos += 1
        tokens.append(raw[start:pos])
    # exactly one whitespace byte separates the header from raw payloads
    return tokens, pos + 1


def _dimensions(tokens: List[bytes]) -> Tuple[int, int]:
    try:
        width, height = int(tokens[0]), int(tokens[1])
    except ValueError as e:
        raise ImageFormatError(f"Malformed dimensions {tokens[:2]!r}") from e
    if width < 1 or height < 1:
        raise ImageFormatError(f"Invalid dimensions {width}x{height}")
    if width > MAX_DIMENSION or height > MAX_DIMENSION:
        raise ImageFormatError(f"Dimensions {width}x{height} exceed {MAX_DIMENSION}")
    return width, height


def read_pbm(path: PathLike) -> BinaryImage:
    """Read a plain (P1) or raw (P4) PBM; 1 is foreground"""
    raw = Path(path).read_bytes()
    magic = raw[:2]
    if magic not in (b"P1", b"P4"):
        raise ImageFormatError(f"{path}: not a PBM file (magic {magic!r})")

    tokens, offset = _read_header(raw, 2)
    width, height = _dimensions(tokens)

    if magic == b"P1":
        body = bytes(ch for ch in _strip_comments(raw[offset - 1:]) if ch in b"01")
        if len(body) < width * height:
            raise ImageFormatError(f"{path}: expected {width * height} pixels, found {len(body)}")
        data = (np.frombuffer(body[:width * height], dtype=np.uint8) - ord("0")).reshape(height, width)
    else:
        row_bytes = (width + 7) // 8
        payload = np.frombuffer(raw, dtype=np.uint8, offset=offset)
        if payload.size < row_bytes * height:
            raise ImageFormatError(f"{path}: raw payload truncated")
        rows = payload[:row_bytes * height].reshape(height, row_bytes)
        data = np.unpackbits(rows, axis=1)[:, :width]

    logger.debug(f"Read {path}: {width}x{height}")
    return BinaryImage(width, height, np.ascontiguousarray(data, dtype=np.uint8))


def _strip_comments(body: bytes) -> bytes:
    lines = [line.split(b"#", 1)[0] for line in body.split(b"\n")]
    return b"\n".join(lines)


def write_pbm(path: PathLike, img: BinaryImage, plain: bool = False) -> None:
    """Write P4 (default) or P1"""
    header = f"P{1 if plain else 4}\n{img.width} {img.height}\n".encode("ascii")
    if plain:
        rows = ("".join("1" if p else "0" for p in row) for row in img.data.tolist())
        body = ("\n".join(rows) + "\n").encode("ascii")
    else:
        body = np.packbits(img.data.astype(np.uint8), axis=1).tobytes()
    Path(path).write_bytes(header + body)


def write_pgm16(path: PathLike, img: LabelImage) -> None:
    """Write labels as P5 with maxval 65535, big-endian samples"""
    data = np.asarray(img.data)
    if data.size and int(data.max()) > PGM16_MAXVAL:
        raise ImageFormatError(
            f"Label {int(data.max())} does not fit a 16-bit PGM (max {PGM16_MAXVAL})"
        )
    header = f"P5\n{img.width} {img.height}\n{PGM16_MAXVAL}\n".encode("ascii")
    Path(path).write_bytes(header + data.astype(">u2").tobytes())


def read_pgm16(path: PathLike) -> LabelImage:
    raw = Path(path).read_bytes()
    if raw[:2] != b"P5":
        raise ImageFormatError(f"{path}: not a P5 PGM file")
    tokens, offset = _read_header(raw, 3)
    width, height = _dimensions(tokens)
    try:
        maxval = int(tokens[2])
    except ValueError as e:
        raise ImageFormatError(f"{path}: malformed maxval {tokens[2]!r}") from e
    if maxval < 256 or maxval > PGM16_MAXVAL:
        raise ImageFormatError(f"{path}: expected a 16-bit PGM, maxval is {maxval}")

    payload = np.frombuffer(raw, dtype=">u2", offset=offset)
    if payload.size < width * height:
        raise ImageFormatError(f"{path}: payload truncated")
    data = payload[:width * height].astype(np.uint32).reshape(height, width)
    return LabelImage(width, height, data)


def format_table_dump(entries: Iterable[Tuple[int, int]]) -> str:
    return "".join(f"{address} {data}\n" for address, data in entries)


def write_table_dump(path: PathLike, entries: Iterable[Tuple[int, int]]) -> None:
    """Equivalence table as 'address data' lines in ascending address order"""
    Path(path).write_text(format_table_dump(sorted(entries)), encoding="ascii")
