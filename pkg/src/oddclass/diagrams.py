"""
Diagrams and odd diagrams, in matrix coordinates (row 1 at the top).

The point of ``w`` in row ``i`` sits in column ``w(i)``. A cell ``(i, j)``
is in the diagram when it survives both the arm of row ``i`` (``j < w(i)``)
and the leg of column ``j`` (``w^{-1}(j) > i``); it is an odd cell when in
addition the point of column ``j`` lies an odd number of rows below.

>>> from oddclass.perms import parse
>>> sorted(diagram(parse("41325")))
[Cell(row=1, col=1), Cell(row=1, col=2), Cell(row=1, col=3), Cell(row=3, col=2)]
>>> canonical_key(odd_diagram(parse("41325")))
'5:{1.1,1.2,3.2}'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .perms import Permutation

__all__ = [
    "Cell", "OddDiagram", "diagram", "odd_diagram", "odd_row_masks",
    "canonical_key", "parse_key", "diagram_to_json", "diagram_from_json",
    "from_row_masks",
]


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class OddDiagram:
    degree: int
    cells: tuple[Cell, ...]

    def __post_init__(self):
        cells = tuple(Cell(*c) for c in self.cells)
        for r, c in cells:
            if not (1 <= r <= self.degree and 1 <= c <= self.degree):
                raise ValueError(f"cell ({r},{c}) outside [1,{self.degree}]^2")
        if any(a >= b for a, b in zip(cells, cells[1:])):
            cells = tuple(sorted(set(cells)))
        object.__setattr__(self, "cells", cells)

    @classmethod
    def of(cls, degree: int, cells: Iterable[tuple[int, int]]) -> "OddDiagram":
        return cls(degree, tuple(sorted({Cell(*c) for c in cells})))

    def __contains__(self, cell) -> bool:
        return Cell(*cell) in set(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __str__(self) -> str:
        return canonical_key(self)


def diagram(w: Permutation) -> set[Cell]:
    """All cells ``(i, j)`` with ``j < w(i)`` and ``w^{-1}(j) > i``."""
    word = w.entries
    n = len(word)
    pos = [0] * (n + 1)
    for i, value in enumerate(word, 1):
        pos[value] = i
    return {Cell(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
            if j < word[i - 1] and pos[j] > i}


def odd_diagram(w: Permutation) -> OddDiagram:
    """The cells of ``diagram(w)`` whose column point is an odd distance below."""
    word = w.entries
    n = len(word)
    pos = [0] * (n + 1)
    for i, value in enumerate(word, 1):
        pos[value] = i
    cells = [Cell(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
             if j < word[i - 1] and pos[j] > i and (pos[j] - i) % 2 == 1]
    return OddDiagram(n, tuple(cells))


def odd_row_masks(word: tuple[int, ...]) -> tuple[int, ...]:
    """
    Row ``i`` of the odd diagram as a bitmask over columns (bit ``j`` for
    column ``j``): the values below ``word[i]`` sitting at positions
    ``i+1, i+3, ...``. A compact class key for hot loops.
    """
    n = len(word)
    rows = []
    for i in range(n):
        top = word[i]
        mask = 0
        for x in range(i + 1, n, 2):
            if word[x] < top:
                mask |= 1 << word[x]
        rows.append(mask)
    return tuple(rows)


def from_row_masks(n: int, rows: Iterable[int]) -> OddDiagram:
    cells = [Cell(i, j) for i, mask in enumerate(rows, 1)
             for j in range(1, n + 1) if mask >> j & 1]
    return OddDiagram(n, tuple(cells))


def canonical_key(d: OddDiagram) -> str:
    """``"n:{r1.c1,r2.c2,...}"`` with cells in row-major order."""
    return f"{d.degree}:{{" + ",".join(f"{r}.{c}" for r, c in d.cells) + "}"


_KEY = re.compile(r"^(\d+):\{(.*)\}$")


def parse_key(key: str) -> OddDiagram:
    match = _KEY.match(key.strip())
    if not match:
        raise ValueError(f"not a diagram key: {key!r}")
    n = int(match.group(1))
    body = match.group(2)
    cells = []
    if body:
        for part in body.split(","):
            r, c = part.split(".")
            cells.append((int(r), int(c)))
    return OddDiagram.of(n, cells)


def diagram_to_json(d: OddDiagram) -> dict:
    return {"n": d.degree, "cells": [[r, c] for r, c in d.cells]}


def diagram_from_json(obj: dict) -> OddDiagram:
    return OddDiagram.of(int(obj["n"]), (tuple(c) for c in obj["cells"]))
