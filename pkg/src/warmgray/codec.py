"""Image file I/O: 8-bit PNG via Pillow, binary PPM (P6) and PGM (P5) natively.

All decoding clamps samples into [0, 1] (the single normalization point of
the pipeline); all encoding quantizes with round-half-up so golden-byte
tests are stable.
"""

from __future__ import annotations

import os

import numpy as np
from PIL import Image, UnidentifiedImageError

from .core import PlanarImage


class CodecError(Exception):
    """Unsupported or malformed image file."""


def quantize_u8(data: np.ndarray) -> np.ndarray:
    """[0, 1] float samples to uint8 with clamping and round-half-up."""
    clipped = np.clip(data, 0.0, 1.0)
    return np.floor(clipped * 255.0 + 0.5).astype(np.uint8)


def dequantize_u8(data: np.ndarray) -> np.ndarray:
    return data.astype(np.float64) / 255.0


def _from_u8(arr: np.ndarray) -> PlanarImage:
    # uint8 sources are in range by construction; clip guards float paths
    return PlanarImage(np.clip(dequantize_u8(arr), 0.0, 1.0))


def _read_pnm_token(buf: bytes, pos: int) -> tuple[bytes, int]:
    n = len(buf)
    while pos < n:
        c = buf[pos : pos + 1]
        if c == b"#":
            while pos < n and buf[pos : pos + 1] not in (b"\n", b"\r"):
                pos += 1
        elif c.isspace():
            pos += 1
        else:
            break
    start = pos
    while pos < n and not buf[pos : pos + 1].isspace():
        pos += 1
    if start == pos:
        raise CodecError("truncated PNM header")
    return buf[start:pos], pos


def _load_pnm(buf: bytes, path: str) -> PlanarImage:
    magic, pos = _read_pnm_token(buf, 0)
    if magic not in (b"P5", b"P6"):
        raise CodecError(f"{path}: unsupported PNM magic {magic!r} (need binary P5/P6)")
    fields = []
    for _ in range(3):
        token, pos = _read_pnm_token(buf, pos)
        try:
            fields.append(int(token))
        except ValueError:
            raise CodecError(f"{path}: bad PNM header token {token!r}") from None
    width, height, maxval = fields
    if width < 1 or height < 1:
        raise CodecError(f"{path}: bad PNM dimensions {width}x{height}")
    if maxval != 255:
        raise CodecError(f"{path}: only 8-bit PNM supported, maxval={maxval}")
    channels = 3 if magic == b"P6" else 1
    data = buf[pos + 1 :]  # single whitespace byte after maxval
    need = width * height * channels
    if len(data) < need:
        raise CodecError(f"{path}: PNM pixel data truncated")
    arr = np.frombuffer(data[:need], dtype=np.uint8)
    if channels == 3:
        arr = arr.reshape(height, width, 3)
    else:
        arr = arr.reshape(height, width)
    return _from_u8(arr)


def _load_png(path: str) -> PlanarImage:
    try:
        with Image.open(path) as im:
            if im.format != "PNG":
                raise CodecError(f"{path}: unsupported format {im.format!r} (need PNG or binary PPM/PGM)")
            mode = im.mode
            if mode == "L":
                return _from_u8(np.asarray(im))
            if mode == "LA":
                return _from_u8(np.asarray(im.convert("L")))
            if mode in ("RGB", "RGBA", "P"):
                return _from_u8(np.asarray(im.convert("RGB")))
            raise CodecError(f"{path}: unsupported PNG mode {mode!r} (need 8-bit gray/RGB)")
    except UnidentifiedImageError:
        raise CodecError(f"{path}: not a decodable image") from None


def load_image(path: str | os.PathLike) -> PlanarImage:
    """Decode a PNG/PPM/PGM file into a PlanarImage."""
    path = os.fspath(path)
    with open(path, "rb") as f:
        head = f.read(2)
        f.seek(0)
        if head[:1] == b"P" and head[1:2] in b"123456":
            return _load_pnm(f.read(), path)
    return _load_png(path)


def save_image(path: str | os.PathLike, img: PlanarImage) -> None:
    """Encode to PNG/PPM/PGM chosen by file extension.

    PPM holds RGB only and PGM luminance only; PNG handles both.
    """
    path = os.fspath(path)
    ext = os.path.splitext(path)[1].lower()
    u8 = quantize_u8(img.data)
    if ext == ".png":
        Image.fromarray(u8, mode="RGB" if img.kind == "rgb" else "L").save(path, format="PNG")
    elif ext == ".ppm":
        if img.kind != "rgb":
            raise CodecError("PPM stores rgb images; use .pgm or .png for luminance")
        _write_pnm(path, b"P6", u8)
    elif ext == ".pgm":
        if img.kind != "luminance":
            raise CodecError("PGM stores luminance images; use .ppm or .png for rgb")
        _write_pnm(path, b"P5", u8)
    else:
        raise CodecError(f"unsupported output extension {ext!r} (use .png/.ppm/.pgm)")


def _write_pnm(path: str, magic: bytes, u8: np.ndarray) -> None:
    height, width = u8.shape[0], u8.shape[1]
    header = magic + b"\n%d %d\n255\n" % (width, height)
    with open(path, "wb") as f:
        f.write(header)
        f.write(u8.tobytes())
