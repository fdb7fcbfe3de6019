"""File I/O: PFM float maps, 16-bit PGM/PNG images, ascii PLY clouds, JSON.

PFM is the float interchange format (little-endian, scale -1.0, float32
samples, bottom-up rows as per the de-facto standard). Masked containers
are stored with NaN on invalid pixels and re-read with ``allow_nan``;
plain ``read_pfm`` rejects NaN unless told otherwise.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from PIL import Image

from ..errors import DomainError, ParseError, ShapeError
from .types import DepthMap, DisparityMap, ImageF, NormalMap, PointCloud

__all__ = [
    "read_pfm",
    "write_pfm",
    "read_depth_pfm",
    "write_depth_pfm",
    "read_disparity_pfm",
    "write_disparity_pfm",
    "read_normal_pfm",
    "write_normal_pfm",
    "read_pgm16",
    "write_pgm16",
    "read_png16",
    "write_png16",
    "read_ply",
    "write_ply",
    "read_json",
    "write_json",
]


# ---------------------------------------------------------------------------
# PFM


def _read_token(buf: bytes, pos: int) -> tuple[bytes, int]:
    while pos < len(buf) and buf[pos : pos + 1].isspace():
        pos += 1
    start = pos
    while pos < len(buf) and not buf[pos : pos + 1].isspace():
        pos += 1
    if start == pos:
        raise ParseError("PFM: unexpected end of header", offset=start)
    return buf[start:pos], pos


def read_pfm(path, allow_nan: bool = False) -> np.ndarray:
    """Read a PFM file into a float64 array of shape (H, W) or (H, W, 3)."""
    buf = Path(path).read_bytes()
    magic, pos = _read_token(buf, 0)
    if magic == b"Pf":
        channels = 1
    elif magic == b"PF":
        channels = 3
    else:
        raise ParseError(f"PFM: bad magic {magic!r}", offset=0)
    wtok, pos = _read_token(buf, pos)
    htok, pos = _read_token(buf, pos)
    stok, pos = _read_token(buf, pos)
    try:
        width, height = int(wtok), int(htok)
        scale = float(stok)
    except ValueError as e:
        raise ParseError(f"PFM: bad header field ({e})", offset=pos) from None
    if width <= 0 or height <= 0 or scale == 0:
        raise ParseError("PFM: non-positive dimensions or zero scale", offset=pos)
    pos += 1  # single whitespace byte after the scale line
    count = width * height * channels
    data = buf[pos : pos + 4 * count]
    if len(data) != 4 * count:
        raise ParseError(
            f"PFM: expected {4 * count} data bytes, found {len(data)}", offset=pos
        )
    dtype = "<f4" if scale < 0 else ">f4"
    arr = np.frombuffer(data, dtype=dtype).astype(np.float64)
    if channels == 1:
        arr = arr.reshape(height, width)
    else:
        arr = arr.reshape(height, width, 3)
    arr = arr[::-1].copy()  # PFM rows are stored bottom-up
    if not allow_nan and np.any(np.isnan(arr)):
        raise ParseError("PFM: NaN samples present (pass allow_nan to accept)", offset=pos)
    return arr


def write_pfm(path, arr: np.ndarray) -> None:
    """Write float data as little-endian PFM (scale -1.0)."""
    a = np.asarray(arr, dtype=np.float64)
    if a.ndim == 2:
        magic = b"Pf"
    elif a.ndim == 3 and a.shape[2] == 3:
        magic = b"PF"
    else:
        raise ShapeError(f"write_pfm: expected (H,W) or (H,W,3), got {a.shape}")
    h, w = a.shape[:2]
    header = magic + b"\n" + f"{w} {h}\n".encode() + b"-1.0\n"
    body = a[::-1].astype("<f4").tobytes()
    Path(path).write_bytes(header + body)


def write_depth_pfm(path, depth: DepthMap) -> None:
    z = depth.z.copy()
    z[~depth.mask] = np.nan
    write_pfm(path, z)


def read_depth_pfm(path) -> DepthMap:
    arr = read_pfm(path, allow_nan=True)
    if arr.ndim != 2:
        raise ParseError("depth PFM must be single-channel")
    mask = np.isfinite(arr) & (arr > 0)
    arr = np.where(mask, arr, 0.0)
    return DepthMap(arr, mask)


def write_disparity_pfm(path, disp: DisparityMap) -> None:
    d = disp.d.copy()
    d[~disp.mask] = np.nan
    write_pfm(path, d)


def read_disparity_pfm(path) -> DisparityMap:
    arr = read_pfm(path, allow_nan=True)
    if arr.ndim != 2:
        raise ParseError("disparity PFM must be single-channel")
    mask = np.isfinite(arr)
    arr = np.where(mask, arr, 0.0)
    return DisparityMap(arr, mask)


def write_normal_pfm(path, normals: NormalMap) -> None:
    n = normals.n.copy()
    n[~normals.mask] = np.nan
    write_pfm(path, n)


def read_normal_pfm(path) -> NormalMap:
    arr = read_pfm(path, allow_nan=True)
    if arr.ndim != 3:
        raise ParseError("normal PFM must be three-channel")
    mask = np.all(np.isfinite(arr), axis=2)
    arr = np.where(mask[:, :, None], arr, 0.0)
    # renormalize against float32 quantization of unit vectors
    norms = np.linalg.norm(arr, axis=2)
    ok = mask & (norms > 0.5)
    arr = np.where(ok[:, :, None], arr / np.where(norms == 0, 1.0, norms)[:, :, None], 0.0)
    return NormalMap(arr, ok)


# ---------------------------------------------------------------------------
# PGM (P5, 16-bit big-endian) and PNG-16 for patterns/captures in [0, 1]


def write_pgm16(path, img: ImageF) -> None:
    if img.channels != 1:
        raise ShapeError("write_pgm16: single-channel images only")
    a = np.clip(img.data, 0.0, 1.0)
    q = np.floor(a * 65535.0 + 0.5).astype(">u2")
    header = f"P5\n{img.width} {img.height}\n65535\n".encode()
    Path(path).write_bytes(header + q.tobytes())


def read_pgm16(path) -> ImageF:
    buf = Path(path).read_bytes()
    magic, pos = _read_token(buf, 0)
    if magic != b"P5":
        raise ParseError(f"PGM: bad magic {magic!r}", offset=0)
    fields = []
    while len(fields) < 3:
        tok, pos = _read_token(buf, pos)
        if tok.startswith(b"#"):  # comment: skip to end of line
            nl = buf.find(b"\n", pos)
            pos = len(buf) if nl < 0 else nl
            continue
        fields.append(tok)
    try:
        width, height, maxval = (int(f) for f in fields)
    except ValueError as e:
        raise ParseError(f"PGM: bad header field ({e})", offset=pos) from None
    if maxval != 65535:
        raise ParseError(f"PGM: expected 16-bit maxval 65535, got {maxval}", offset=pos)
    pos += 1
    data = buf[pos : pos + 2 * width * height]
    if len(data) != 2 * width * height:
        raise ParseError("PGM: truncated sample data", offset=pos)
    q = np.frombuffer(data, dtype=">u2").reshape(height, width)
    return ImageF(q.astype(np.float64) / 65535.0)


def write_png16(path, img: ImageF) -> None:
    if img.channels != 1:
        raise ShapeError("write_png16: single-channel images only")
    a = np.clip(img.data, 0.0, 1.0)
    q = np.floor(a * 65535.0 + 0.5).astype(np.uint16)
    Image.fromarray(q, mode="I;16").save(path, format="PNG")

def read_png16(path) -> ImageF:
    with Image.open(path) as im:
        if im.mode not in ("I;16", "I;16B", "I"):
            raise ParseError(f"PNG: expected 16-bit grayscale, got mode {im.mode}")
        q = np.asarray(im, dtype=np.uint32)
    return ImageF(q.astype(np.float64) / 65535.0)


# ---------------------------------------------------------------------------
# PLY (ascii 1.0)


def _fmt(x: float) -> str:
    return repr(float(x))


def write_ply(path, cloud: PointCloud) -> None:
    """Write an ascii PLY with double precision (values round-trip exactly)."""
    lines = ["ply", "format ascii 1.0", f"element vertex {len(cloud)}"]
    lines += ["property double x", "property double y", "property double z"]
    if cloud.normals is not None:
        lines += ["property double nx", "property double ny", "property double nz"]
    if cloud.view_id is not None:
        lines += ["property int view_id"]
    lines.append("end_header")
    for i in range(len(cloud)):
        row = [_fmt(v) for v in cloud.points[i]]
        if cloud.normals is not None:
            row += [_fmt(v) for v in cloud.normals[i]]
        if cloud.view_id is not None:
            row.append(str(int(cloud.view_id[i])))
        lines.append(" ".join(row))
    Path(path).write_text("\n".join(lines) + "\n")


def read_ply(path) -> PointCloud:
    text = Path(path).read_text()
    lines = text.splitlines()
    if not lines or lines[0].strip() != "ply":
        raise ParseError("PLY: missing 'ply' magic", offset=0)
    n_vertex = None
    props = []
    i = 1
    offset = len(lines[0]) + 1
    while i < len(lines):
        line = lines[i].strip()
        if line == "end_header":
            i += 1
            break
        if line.startswith("format"):
            if line.split()[1] != "ascii":
                raise ParseError("PLY: only ascii format supported", offset=offset)
        elif line.startswith("element"):
            parts = line.split()
            if parts[1] == "vertex":
                n_vertex = int(parts[2])
            elif n_vertex is not None:
                raise ParseError("PLY: only vertex elements supported", offset=offset)
        elif line.startswith("property") and n_vertex is not None:
            props.append(line.split()[-1])
        offset += len(lines[i]) + 1
        i += 1
    else:
        raise ParseError("PLY: missing end_header", offset=offset)
    if n_vertex is None:
        raise ParseError("PLY: no vertex element", offset=offset)
    body = lines[i : i + n_vertex]
    if len(body) != n_vertex:
        raise ParseError(f"PLY: expected {n_vertex} vertex rows, found {len(body)}", offset=offset)
    if not set(props) >= {"x", "y", "z"}:
        raise ParseError("PLY: missing x/y/z properties", offset=offset)
    cols = {name: idx for idx, name in enumerate(props)}
    rows = [ln.split() for ln in body]
    arr = np.array([[float(r[cols["x"]]), float(r[cols["y"]]), float(r[cols["z"]])] for r in rows])
    normals = None
    if {"nx", "ny", "nz"} <= set(props):
        normals = np.array(
            [[float(r[cols["nx"]]), float(r[cols["ny"]]), float(r[cols["nz"]])] for r in rows]
        )
    view_id = None
    if "view_id" in cols:
        view_id = np.array([int(r[cols["view_id"]]) for r in rows], dtype=np.int64)
    return PointCloud(arr, normals=normals, view_id=view_id)


# ---------------------------------------------------------------------------
# JSON


def write_json(path, obj) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def read_json(path):
    return json.loads(Path(path).read_text())
