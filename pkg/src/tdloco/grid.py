"""Writing frames onto the track grid as 3-bit columns, and reading them back.

A grid has ``3 * groups`` tracks.  Each group of three tracks carries an
independent bridged stream; column ``j`` of a group holds the GF(8)
symbol chosen for stream symbol ``j`` by its selection bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .codec import decode_codeword, encode_message
from .enumeration import CodeParams
from .errors import FramingError
from .stream import assemble, disassemble
from .symbols import PAIRS, Gf4

# [gf4 level, selection bit] -> gf8 level
_REMAP = np.array([[int(PAIRS[Gf4(s)][b]) for b in (0, 1)] for s in range(4)], dtype=np.uint8)
# gf8 level -> gf4 level / selection bit
_DEMAP_SYM = np.zeros(8, dtype=np.uint8)
_DEMAP_BIT = np.zeros(8, dtype=np.uint8)
for _s in range(4):
    for _b in (0, 1):
        _DEMAP_SYM[_REMAP[_s, _b]] = _s
        _DEMAP_BIT[_REMAP[_s, _b]] = _b
_SHIFTS = np.array([2, 1, 0], dtype=np.uint8)


@dataclass(frozen=True)
class Frame:
    message: tuple[int, ...]
    selections: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "message", tuple(int(b) for b in self.message))
        object.__setattr__(self, "selections", tuple(int(b) for b in self.selections))

    def check(self, params: CodeParams) -> None:
        if len(self.message) != params.s_c:
            raise ValueError(f"frame message must be {params.s_c} bits, got {len(self.message)}")
        if len(self.selections) != params.m + 1:
            raise ValueError(
                f"frame needs {params.m + 1} selection bits, got {len(self.selections)}"
            )
        if any(b not in (0, 1) for b in self.message + self.selections):
            raise ValueError("frame bits must be 0 or 1")

    @property
    def bits(self) -> tuple[int, ...]:
        return self.message + self.selections


def write_symbols(symbols: Sequence[int] | np.ndarray, selections: Sequence[int] | np.ndarray) -> np.ndarray:
    """Columns for GF(4) symbols under the given selection bits.

    Broadcasts over leading axes: inputs of shape ``(..., W)`` give an
    array of shape ``(..., 3, W)`` with the top cell in row 0.
    """
    sym = np.asarray(symbols, dtype=np.uint8)
    sel = np.asarray(selections, dtype=np.uint8)
    if sym.shape[-1:] != sel.shape[-1:]:
        raise ValueError("need exactly one selection bit per symbol")
    gf8 = _REMAP[sym, sel]
    return (gf8[..., None, :] >> _SHIFTS[:, None]) & 1


def read_symbols(columns: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of :func:`write_symbols`: ``(3, W)`` columns to GF(4) levels and selections."""
    cols = np.asarray(columns, dtype=np.uint8)
    if cols.shape[-2] != 3:
        raise ValueError(f"columns must have 3 rows, got shape {cols.shape}")
    gf8 = (cols[..., 0, :] << 2) | (cols[..., 1, :] << 1) | cols[..., 2, :]
    return _DEMAP_SYM[gf8], _DEMAP_BIT[gf8]


def group_stream(frames: Sequence[Frame], params: CodeParams) -> tuple[Gf4, ...]:
    """The bridged GF(4) stream a group of frames writes, before selection."""
    for f in frames:
        f.check(params)
    return assemble(encode_message(f.message, params) for f in frames)


def write_group(frames: Sequence[Frame], params: CodeParams) -> np.ndarray:
    """Encode, bridge and map frames to a ``(3, k*(m+1))`` bit array."""
    frames = list(frames)
    stream = group_stream(frames, params)
    if not frames:
        return np.zeros((3, 0), dtype=np.uint8)
    selections = [b for f in frames for b in f.selections]
    return write_symbols(stream, selections)


def read_group(columns: np.ndarray, params: CodeParams) -> list[Frame]:
    cols = np.asarray(columns, dtype=np.uint8)
    if cols.ndim != 2 or cols.shape[0] != 3:
        raise FramingError(f"a track group is 3 rows, got shape {cols.shape}")
    frame = params.m + 1
    if cols.shape[1] % frame:
        raise FramingError(f"{cols.shape[1]} columns is not a multiple of m + 1 = {frame}")
    sym, sel = read_symbols(cols)
    words = disassemble(sym.tolist(), params.m)
    return [
        Frame(decode_codeword(w, params), tuple(sel[k * frame:(k + 1) * frame].tolist()))
        for k, w in enumerate(words)
    ]


@dataclass
class Grid:
    bits: np.ndarray

    def __post_init__(self):
        self.bits = np.asarray(self.bits, dtype=np.uint8)
        if self.bits.ndim != 2:
            raise ValueError("grid bits must be a 2-D array")
        if self.bits.shape[0] % 3:
            raise FramingError(f"track count {self.bits.shape[0]} is not a multiple of 3")

    @property
    def tracks(self) -> int:
        return self.bits.shape[0]

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    @property
    def groups(self) -> int:
        return self.tracks // 3

    def group(self, g: int) -> np.ndarray:
        return self.bits[3 * g:3 * g + 3]

    def __eq__(self, other):
        return isinstance(other, Grid) and np.array_equal(self.bits, other.bits)


def write_grid(
    frames_per_group: Sequence[Sequence[Frame]],
    params: CodeParams,
    tracks: int | None = None,
) -> Grid:
    """Group ``g`` occupies tracks ``3g .. 3g+2``; groups are independent streams."""
    n_groups = len(frames_per_group)
    if tracks is None:
        tracks = 3 * n_groups
    if tracks % 3:
        raise FramingError(f"track count {tracks} is not a multiple of 3")
    if tracks != 3 * n_groups:
        raise FramingError(f"{tracks} tracks need {tracks // 3} groups, got {n_groups}")
    blocks = [write_group(frames, params) for frames in frames_per_group]
    widths = {b.shape[1] for b in blocks}
    if len(widths) > 1:
        raise FramingError(f"groups have unequal column counts {sorted(widths)}")
    if not blocks:
        return Grid(np.zeros((0, 0), dtype=np.uint8))
    return Grid(np.vstack(blocks))


def read_grid(grid: Grid, params: CodeParams) -> list[list[Frame]]:
    return [read_group(grid.group(g), params) for g in range(grid.groups)]


def sis_mask(bits: np.ndarray) -> np.ndarray:
    """Boolean ``(..., groups, W)`` mask of SIS windows centred on middle tracks.

    Works on any array whose last two axes are ``(3 * groups, W)``; edge
    columns are never flagged.
    """
    b = np.asarray(bits, dtype=np.uint8)
    *lead, rows, width = b.shape
    g = b.reshape(*lead, rows // 3, 3, width)
    mask = np.zeros((*lead, rows // 3, width), dtype=bool)
    if width < 3:
        return mask
    col_sum = g.sum(axis=-2, dtype=np.int16)
    window = col_sum[..., :-2] + col_sum[..., 1:-1] + col_sum[..., 2:]
    centre = g[..., 1, 1:-1]
    mask[..., 1:-1] = ((window == 1) & (centre == 1)) | ((window == 8) & (centre == 0))
    return mask


def scan_sis(grid: Grid | np.ndarray) -> list[tuple[int, int]]:
    """``(group, column)`` of every square-isolation pattern on a middle track."""
    bits = grid.bits if isinstance(grid, Grid) else np.asarray(grid)
    if bits.shape[0] % 3:
        raise FramingError(f"track count {bits.shape[0]} is not a multiple of 3")
    return [(int(g), int(j)) for g, j in zip(*np.nonzero(sis_mask(bits)))]


def max_column_run(columns: np.ndarray) -> int:
    """Longest run of identical consecutive columns in a ``(3, W)`` block."""
    cols = np.asarray(columns)
    if cols.shape[1] == 0:
        return 0
    same = np.all(cols[:, 1:] == cols[:, :-1], axis=0)
    best = run = 1
    for s in same:
        run = run + 1 if s else 1
        best = max(best, run)
    return best


# -- bitstream framing and file formats ------------------------------------


def bytes_to_bits(data: bytes) -> np.ndarray:
    return np.unpackbits(np.frombuffer(data, dtype=np.uint8))


def bits_to_bytes(bits: Sequence[int] | np.ndarray) -> bytes:
    arr = np.asarray(bits, dtype=np.uint8)
    return np.packbits(arr[: len(arr) - len(arr) % 8]).tobytes()


def frames_from_bits(bits: Sequence[int] | np.ndarray, params: CodeParams) -> tuple[list[Frame], int]:
    """Carve a bitstream into whole frames; also return the leftover bit count."""
    arr = np.asarray(bits, dtype=np.uint8)
    size = params.frame_bits
    n = len(arr) // size
    frames = [
        Frame(tuple(chunk[: params.s_c].tolist()), tuple(chunk[params.s_c:].tolist()))
        for chunk in (arr[k * size:(k + 1) * size] for k in range(n))
    ]
    return frames, len(arr) - n * size


def frames_to_bits(frames: Iterable[Frame]) -> np.ndarray:
    out = [b for f in frames for b in f.bits]
    return np.asarray(out, dtype=np.uint8)


def format_grid(grid: Grid) -> str:
    return "".join("".join("1" if b else "0" for b in row) + "\n" for row in grid.bits)


def parse_grid(text: str) -> Grid:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if lines and len({len(ln) for ln in lines}) != 1:
        raise FramingError("grid tracks have unequal lengths")
    if any(set(ln) - {"0", "1"} for ln in lines):
        raise ValueError("grid files may only contain '0' and '1'")
    width = len(lines[0]) if lines else 0
    bits = np.array([[c == "1" for c in ln] for ln in lines], dtype=np.uint8).reshape(len(lines), width)
    return Grid(bits)


def save_grid(path: str | Path, grid: Grid) -> None:
    Path(path).write_text(format_grid(grid))


def load_grid(path: str | Path) -> Grid:
    return parse_grid(Path(path).read_text())
