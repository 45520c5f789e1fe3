"""
Writing a bitstream onto three tracks
=====================================

Input bits are carved into frames: ``s_c`` message bits then ``m + 1``
selection bits.  The message picks a codeword, codewords are bridged,
and each GF(4) symbol is written as one of its two GF(8) columns.
"""

import numpy as np

from tdloco import code_params, scan_sis, write_grid, read_grid
from tdloco.grid import format_grid, frames_from_bits
from tdloco.codec import encode_message
from tdloco.stream import assemble
from tdloco.symbols import format_symbols

p = code_params(5)
print(f"m = {p.m}: {p.s_c} message bits + {p.m + 1} selection bits per frame")

rng = np.random.default_rng(0)
bits = rng.integers(0, 2, size=4 * p.frame_bits)
frames, leftover = frames_from_bits(bits, p)

words = [encode_message(f.message, p) for f in frames]
print("stream:", format_symbols(assemble(words)))

# Two independent groups of three tracks.
grid = write_grid([frames[:2], frames[2:]], p)
print(format_grid(grid))
print("SIS violations:", scan_sis(grid))
print("read back ok:", read_grid(grid, p) == [frames[:2], frames[2:]])

# A hand-made isolated bit is found immediately.
grid.bits[0:3, 2:5] = 0
grid.bits[1, 3] = 1
print("after tampering:", scan_sis(grid))
