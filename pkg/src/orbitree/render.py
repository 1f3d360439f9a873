"""Text renderings of bit matrices: ``X``/space ASCII and plain PBM (P1)."""
from __future__ import annotations

import numpy as np


def matrix_to_ascii(matrix):
    """1 -> ``X``, 0 -> space; fixed-width rows joined by newlines."""
    matrix = np.asarray(matrix)
    return "\n".join("".join("X" if b else " " for b in row) for row in matrix)


def matrix_to_pbm(matrix):
    matrix = np.asarray(matrix)
    height, width = matrix.shape
    lines = ["P1", f"{width} {height}"]
    lines.extend(" ".join("1" if b else "0" for b in row) for row in matrix)
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_pbm(data):
    """Read a plain PBM back into a ``uint8`` matrix."""
    if isinstance(data, bytes):
        data = data.decode("ascii")
    tokens = []
    for line in data.splitlines():
        tokens.extend(line.split("#", 1)[0].split())
    if not tokens or tokens[0] != "P1":
        raise ValueError("not a plain PBM (P1) image")
    width, height = int(tokens[1]), int(tokens[2])
    # P1 allows pixels without separating whitespace
    bits = "".join(tokens[3:])
    if len(bits) != width * height or set(bits) - {"0", "1"}:
        raise ValueError("PBM pixel data does not match its dimensions")
    return np.frombuffer(bits.encode("ascii"), dtype=np.uint8).reshape(height, width) - ord("0")
