"""Straight and skew shapes: lower order ideals of a box poset, stored as bitmasks."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .poset import BoxPoset, bits, build_box_poset, popcount


class ShapeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Shape:
    poset: BoxPoset
    mask: int

    def __post_init__(self):
        if self.mask & ~self.poset.full:
            raise ShapeError("mask has boxes outside the poset")
        if not self.poset.is_ideal(self.mask):
            raise ShapeError("not a lower order ideal")

    def __eq__(self, other):
        return isinstance(other, Shape) and other.poset is self.poset and other.mask == self.mask

    def __hash__(self):
        return hash((id(self.poset), self.mask))

    def __lt__(self, other: "Shape"):
        return (popcount(self.mask), self.mask) < (popcount(other.mask), other.mask)

    def __le__(self, other: "Shape"):
        """Containment."""
        return self.mask & ~other.mask == 0

    def __len__(self):
        return popcount(self.mask)

    def __contains__(self, box: int):
        return bool(self.mask >> box & 1)

    def __repr__(self):
        return f"Shape({self.poset.space}, {print_shape(self)})"

    def __str__(self):
        return print_shape(self)

    @property
    def size(self) -> int:
        return popcount(self.mask)

    @property
    def boxes(self) -> list[int]:
        return list(bits(self.mask))

    @property
    def columns(self) -> tuple[int, ...]:
        return column_tuple(self.poset, self.mask)

    def complement(self) -> int:
        return complement(self)

    def dual(self) -> "Shape":
        return dual(self)


@dataclass(frozen=True, eq=False)
class SkewShape:
    inner: Shape
    outer: Shape

    def __post_init__(self):
        if self.inner.poset is not self.outer.poset:
            raise ShapeError("inner and outer shapes belong to different spaces")
        if not self.inner <= self.outer:
            raise ShapeError("inner shape is not contained in outer shape")

    def __eq__(self, other):
        return isinstance(other, SkewShape) and other.inner == self.inner and other.outer == self.outer

    def __hash__(self):
        return hash((self.inner, self.outer))

    def __len__(self):
        return popcount(self.mask)

    def __repr__(self):
        return f"SkewShape({self.poset.space}, {print_shape(self.outer)}/{print_shape(self.inner)})"

    @property
    def poset(self) -> BoxPoset:
        return self.outer.poset

    @property
    def mask(self) -> int:
        return self.outer.mask & ~self.inner.mask

    @property
    def size(self) -> int:
        return len(self)


def _poset(p) -> BoxPoset:
    return p if isinstance(p, BoxPoset) else build_box_poset(p)


def addable(poset: BoxPoset, mask: int) -> list[int]:
    return [i for i in range(len(poset)) if not mask >> i & 1 and poset.down[i] & ~mask == 0]


def removable(poset: BoxPoset, mask: int) -> list[int]:
    return [i for i in bits(mask) if poset.up[i] & mask == 0]


@lru_cache(maxsize=None)
def _ideal_masks(poset: BoxPoset) -> tuple[int, ...]:
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for m in frontier:
            for i in addable(poset, m):
                m2 = m | 1 << i
                if m2 not in seen:
                    seen.add(m2)
                    nxt.append(m2)
        frontier = nxt
    return tuple(sorted(seen, key=lambda m: (popcount(m), m)))


def all_shapes(poset) -> list[Shape]:
    """Every lower order ideal, ordered by size then bitmask."""
    poset = _poset(poset)
    return [Shape(poset, m) for m in _ideal_masks(poset)]


def shape_count(poset) -> int:
    return len(_ideal_masks(_poset(poset)))


def empty_shape(poset) -> Shape:
    return Shape(_poset(poset), 0)


def full_shape(poset) -> Shape:
    poset = _poset(poset)
    return Shape(poset, poset.full)


def complement(shape: Shape) -> int:
    """Box mask of the complement (an upper set)."""
    return shape.poset.full & ~shape.mask


def rotate_mask(poset: BoxPoset, mask: int) -> int:
    out = 0
    for i in bits(mask):
        out |= 1 << poset.rotate[i]
    return out


def rotate_shape(shape: Shape) -> int:
    """rotate applied boxwise; the result is an upper set mask."""
    return rotate_mask(shape.poset, shape.mask)


def dual(shape: Shape) -> Shape:
    """The shape rotate(shape^c)."""
    return Shape(shape.poset, rotate_mask(shape.poset, complement(shape)))


def shortroots(s: Shape | SkewShape) -> int:
    return popcount(s.mask & s.poset.short_mask)


def skew(outer: Shape, inner: Shape) -> SkewShape:
    return SkewShape(inner, outer)


# --- tuple notation -----------------------------------------------------------


def column_tuple(poset: BoxPoset, mask: int) -> tuple[int, ...]:
    cols = poset.columns()
    out = [popcount(mask & sum(1 << i for i in ids)) for ids in cols.values()]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def print_shape(shape: Shape) -> str:
    return "(" + ",".join(map(str, shape.columns)) + ")"


_TUPLE_RE = re.compile(r"^\s*\(?\s*([0-9\s,]*?)\s*\)?\s*$")


def parse_tuple(text: str) -> tuple[int, ...]:
    m = _TUPLE_RE.match(text)
    if not m:
        raise ShapeError(f"cannot read shape {text!r}; expected a tuple like (4,2,1)")
    body = m.group(1).strip().rstrip(",")
    if not body:
        return ()
    try:
        return tuple(int(x) for x in body.split(","))
    except ValueError:
        raise ShapeError(f"cannot read shape {text!r}; expected a tuple like (4,2,1)") from None


def shape_from_tuple(tup, poset) -> Shape:
    poset = _poset(poset)
    cols = list(poset.columns().values())
    mask = 0
    for c, k in enumerate(tup, 1):
        if k < 0:
            raise ShapeError(f"column {c} has negative length {k}")
        if k == 0:
            continue
        if c > len(cols):
            raise ShapeError(f"column {c} lies outside {poset.space}, which has {len(cols)} columns")
        if k > len(cols[c - 1]):
            raise ShapeError(f"column {c} asks for {k} boxes but {poset.space} has only {len(cols[c - 1])} there")
        for i in cols[c - 1][:k]:
            mask |= 1 << i
    if not poset.is_ideal(mask):
        bad = min(poset.grid[i][0] for i in bits(mask) if poset.down[i] & ~mask)
        raise ShapeError(f"column {bad} is not supported by the columns to its left; not a shape of {poset.space}")
    return Shape(poset, mask)


def parse_shape(text, poset) -> Shape:
    """Read '(4,2,1)', '4,2,1' or '()' as a shape; 'full' or 'Lambda' gives the whole poset."""
    poset = _poset(poset)
    if isinstance(text, str) and text.strip().lower() in ("full", "lambda", "Λ".lower()):
        return full_shape(poset)
    if isinstance(text, (tuple, list)):
        return shape_from_tuple(tuple(text), poset)
    return shape_from_tuple(parse_tuple(text), poset)
