"""Standard tableaux on skew shapes, jeu de taquin, rectification and infusion.

A tableau is a label vector indexed by box id with 0 meaning "no label",
together with the inner shape it is skew over.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .poset import BoxPoset, bits, popcount
from .shapes import Shape, SkewShape, addable, removable


class TableauError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class StandardTableau:
    poset: BoxPoset
    inner: int
    labels: tuple[int, ...]

    def __post_init__(self):
        P = self.poset
        if len(self.labels) != len(P):
            raise TableauError("label vector has the wrong length")
        sup = self.support
        if sup & self.inner:
            raise TableauError("labelled box inside the inner shape")
        m = popcount(sup)
        if sorted(l for l in self.labels if l) != list(range(1, m + 1)):
            raise TableauError("labels must be 1..m, each used once")
        if not P.is_ideal(self.inner) or not P.is_ideal(self.inner | sup):
            raise TableauError("inner or outer boundary is not a shape")
        for i, j in P.covers:
            a, b = self.labels[i], self.labels[j]
            if a and b and a >= b:
                raise TableauError(f"labels decrease along the cover {P.grid[i]} -> {P.grid[j]}")

    def __eq__(self, other):
        return (isinstance(other, StandardTableau) and other.poset is self.poset
                and other.inner == self.inner and other.labels == self.labels)

    def __hash__(self):
        return hash((id(self.poset), self.inner, self.labels))

    def __len__(self):
        return popcount(self.support)

    def __repr__(self):
        cells = ", ".join(f"{self.poset.grid[i]}:{l}" for i, l in enumerate(self.labels) if l)
        return f"StandardTableau({self.poset.space}; {cells})"

    @property
    def support(self) -> int:
        return sum(1 << i for i, l in enumerate(self.labels) if l)

    @property
    def outer(self) -> int:
        return self.inner | self.support

    @property
    def size(self) -> int:
        return len(self)

    @property
    def skew(self) -> SkewShape:
        return SkewShape(Shape(self.poset, self.inner), Shape(self.poset, self.outer))

    @property
    def shape(self) -> Shape:
        """Outer shape; for a straight tableau this is its shape."""
        return Shape(self.poset, self.outer)

    def is_straight(self) -> bool:
        return self.inner == 0

    def positions(self) -> tuple[int, ...]:
        """Box id of each label 1..m."""
        pos = [0] * len(self)
        for i, l in enumerate(self.labels):
            if l:
                pos[l - 1] = i
        return tuple(pos)

    def cells(self) -> list[list[int]]:
        """[[column, row, label], ...] sorted by label."""
        return [[*self.poset.grid[i], self.labels[i]] for i in self.positions()]

    def pretty(self) -> str:
        return render(self.poset, self.labels, self.inner)


def render(poset: BoxPoset, labels: Sequence[int], inner: int = 0) -> str:
    """ASCII picture, top row first; '.' marks inner boxes and '#' outer."""
    w = max(2, len(str(max(labels, default=0))))
    cmax = max(c for c, _ in poset.grid)
    rmax = max(r for _, r in poset.grid)
    at = {g: i for i, g in enumerate(poset.grid)}
    lines = []
    for r in range(rmax, 0, -1):
        row = []
        for c in range(1, cmax + 1):
            i = at.get((c, r))
            if i is None:
                row.append(" " * w)
            elif labels[i]:
                row.append(str(labels[i]).rjust(w))
            elif inner >> i & 1:
                row.append(".".rjust(w))
            else:
                row.append("#".rjust(w))
        lines.append(" ".join(row).rstrip())
    return "\n".join(lines)


def tableau_from_positions(poset: BoxPoset, inner: int, positions: Sequence[int]) -> StandardTableau:
    lab = [0] * len(poset)
    for k, i in enumerate(positions, 1):
        lab[i] = k
    return StandardTableau(poset, inner, tuple(lab))


def tableau_from_cells(poset: BoxPoset, cells, inner: int | None = None) -> StandardTableau:
    """Build from [(column, row, label), ...]; the inner shape defaults to the smallest one possible."""
    at = {g: i for i, g in enumerate(poset.grid)}
    lab = [0] * len(poset)
    for c, r, l in cells:
        i = at.get((int(c), int(r)))
        if i is None:
            raise TableauError(f"no box at column {c}, row {r} in {poset.space}")
        if lab[i]:
            raise TableauError(f"box at column {c}, row {r} labelled twice")
        lab[i] = int(l)
    if inner is None:
        sup = sum(1 << i for i, l in enumerate(lab) if l)
        inner = poset.down_closure(sup) & ~sup
    return StandardTableau(poset, inner, tuple(lab))


def canonical_tableau(shape: Shape) -> StandardTableau:
    """The lexicographically first standard tableau: label boxes in id order."""
    return tableau_from_positions(shape.poset, 0, list(bits(shape.mask)))


def canonical_skew_tableau(sk: SkewShape) -> StandardTableau:
    return tableau_from_positions(sk.poset, sk.inner.mask, list(bits(sk.mask)))


# --- enumeration --------------------------------------------------------------


def iter_syt(sk: SkewShape) -> Iterator[StandardTableau]:
    """All standard tableaux of a skew shape (unsorted DFS order)."""
    P = sk.poset
    inner, outer = sk.inner.mask, sk.outer.mask
    m = popcount(outer & ~inner)
    lab = [0] * len(P)

    def rec(filled, k):
        if k > m:
            yield StandardTableau(P, inner, tuple(lab))
            return
        for i in bits(outer & ~filled):
            if P.down[i] & ~filled == 0:
                lab[i] = k
                yield from rec(filled | 1 << i, k + 1)
                lab[i] = 0

    yield from rec(inner, 1)


def enumerate_syt(sk: SkewShape) -> list[StandardTableau]:
    """All standard tableaux, sorted lexicographically by label vector."""
    return sorted(iter_syt(sk), key=lambda t: t.labels)


@lru_cache(maxsize=4096)
def _count_between(poset: BoxPoset, inner: int, outer: int) -> int:
    memo = {outer: 1}

    def f(mask):
        v = memo.get(mask)
        if v is not None:
            return v
        v = 0
        for i in bits(outer & ~mask):
            if poset.down[i] & ~mask == 0:
                v += f(mask | 1 << i)
        memo[mask] = v
        return v

    return f(inner)


def count_syt(sk: SkewShape | Shape) -> int:
    """Number of standard tableaux, by the linear-extension recursion over intermediate shapes."""
    if isinstance(sk, Shape):
        return _count_between(sk.poset, 0, sk.mask)
    return _count_between(sk.poset, sk.inner.mask, sk.outer.mask)


# --- slides -------------------------------------------------------------------


def inner_corners(T: StandardTableau) -> list[int]:
    return removable(T.poset, T.inner)


def outer_corners(T: StandardTableau) -> list[int]:
    return addable(T.poset, T.outer)


def _jdt(P: BoxPoset, lab: list[int], x: int) -> int:
    """Slide into the hole x in place; returns the vacated box."""
    hole = x
    while True:
        cands = [y for y in P.up_lists[hole] if lab[y]]
        if not cands:
            return hole
        y = min(cands, key=lab.__getitem__)
        if __debug__:
            for z in P.down_lists[hole]:
                assert not lab[z] or lab[z] < lab[y], "slide produced a non-standard filling"
        lab[hole] = lab[y]
        lab[y] = 0
        hole = y


def _revjdt(P: BoxPoset, lab: list[int], x: int) -> int:
    hole = x
    while True:
        cands = [y for y in P.down_lists[hole] if lab[y]]
        if not cands:
            return hole
        y = max(cands, key=lab.__getitem__)
        if __debug__:
            for z in P.up_lists[hole]:
                assert not lab[z] or lab[z] > lab[y], "slide produced a non-standard filling"
        lab[hole] = lab[y]
        lab[y] = 0
        hole = y


def jdt_slide(T: StandardTableau, x: int) -> StandardTableau:
    """Forward slide into the inner corner x (smallest covering label moves)."""
    P = T.poset
    if not (T.inner >> x & 1) or P.up[x] & T.inner:
        raise TableauError(f"box {P.grid[x]} is not an inner corner")
    lab = list(T.labels)
    _jdt(P, lab, x)
    return StandardTableau(P, T.inner & ~(1 << x), tuple(lab))


def rev_slide(T: StandardTableau, x: int) -> StandardTableau:
    """Reverse slide into the outer corner x (largest covered label moves)."""
    P = T.poset
    if T.outer >> x & 1 or P.down[x] & ~T.outer:
        raise TableauError(f"box {P.grid[x]} is not an outer corner")
    lab = list(T.labels)
    hole = _revjdt(P, lab, x)
    return StandardTableau(P, T.inner | 1 << hole, tuple(lab))


def slide_with_vacated(T: StandardTableau, x: int) -> tuple[StandardTableau, int]:
    S = jdt_slide(T, x)
    return S, (T.outer & ~S.outer).bit_length() - 1


def rev_slide_with_vacated(T: StandardTableau, x: int) -> tuple[StandardTableau, int]:
    S = rev_slide(T, x)
    return S, (S.inner & ~T.inner).bit_length() - 1


Chooser = Callable[[list[int]], int]


def _chooser(order) -> Chooser:
    if order is None or order == "max":
        return max
    if order == "min":
        return min
    if isinstance(order, random.Random):
        return order.choice
    if callable(order):
        return order
    raise ValueError(f"unknown slide order {order!r}")


def rectify(T: StandardTableau, order=None) -> StandardTableau:
    """Slide until the inner shape is empty.

    ``order`` picks the next corner: "max" (default, largest box id), "min",
    a random.Random, or any callable taking the list of corners.
    """
    P = T.poset
    pick = _chooser(order)
    lab = list(T.labels)
    inner = T.inner
    while inner:
        x = pick(removable(P, inner))
        _jdt(P, lab, x)
        inner &= ~(1 << x)
    return StandardTableau(P, 0, tuple(lab))


def revrectify(T: StandardTableau, order=None) -> StandardTableau:
    """Reverse-slide until the labels fill an upper set; default picks the smallest outer corner."""
    P = T.poset
    pick = _chooser("min" if order is None else order)
    lab = list(T.labels)
    inner = T.inner
    outer = T.outer
    while outer != P.full:
        x = pick(addable(P, outer))
        hole = _revjdt(P, lab, x)
        inner |= 1 << hole
        outer |= 1 << x
    return StandardTableau(P, inner, tuple(lab))


# --- infusion -----------------------------------------------------------------


def _check_pair(T: StandardTableau, U: StandardTableau):
    if T.poset is not U.poset:
        raise TableauError("tableaux belong to different spaces")
    if not T.is_straight():
        raise TableauError("first tableau must have straight shape")
    if T.outer != U.inner:
        raise TableauError("shape of the first tableau must equal the inner shape of the second")


def infusion(T: StandardTableau, U: StandardTableau) -> tuple[StandardTableau, StandardTableau]:
    """Slide U into the boxes of T from T's largest label down, freezing each label in the vacated box."""
    _check_pair(T, U)
    P = T.poset
    lab = list(U.labels)
    frozen = [0] * len(P)
    inner = U.inner
    for k, x in reversed(list(enumerate(T.positions(), 1))):
        h = _jdt(P, lab, x)
        inner &= ~(1 << x)
        frozen[h] = k
    return StandardTableau(P, 0, tuple(lab)), StandardTableau(P, sum(1 << i for i, l in enumerate(lab) if l), tuple(frozen))


def revinfusion(T: StandardTableau, U: StandardTableau) -> tuple[StandardTableau, StandardTableau]:
    """Reverse-slide T into the boxes of U from U's smallest label up, freezing each label in the vacated box."""
    _check_pair(T, U)
    P = T.poset
    lab = list(T.labels)
    frozen = [0] * len(P)
    for k, x in enumerate(U.positions(), 1):
        h = _revjdt(P, lab, x)
        frozen[h] = k
    X = StandardTableau(P, 0, tuple(frozen))
    return X, StandardTableau(P, X.outer, tuple(lab))


# --- rectification counting ---------------------------------------------------


def count_rectifying_to(sk: SkewShape, target: StandardTableau) -> int:
    """Number of standard tableaux of ``sk`` whose rectification is ``target``.

    Labels are added one at a time while tracking, for each slide of the
    default rectification order, the box it vacates.  A new largest label only
    moves during a slide when it covers that slide's vacated box, so its final
    position is known as soon as it is placed and mismatches prune at once.
    """
    P = sk.poset
    if target.poset is not P or not target.is_straight():
        raise TableauError("target must be a straight tableau of the same space")
    m = len(sk)
    if len(target) != m:
        return 0
    inner, outer = sk.inner.mask, sk.outer.mask
    goal = target.positions()
    h0 = tuple(sorted(bits(inner), reverse=True))
    up = P.up
    memo: dict = {}

    def rec(filled, h, k):
        if k == m:
            return 1
        key = (filled, h)
        v = memo.get(key)
        if v is not None:
            return v
        v = 0
        want = goal[k]
        for p in bits(outer & ~filled):
            if P.down[p] & ~filled:
                continue
            hh = list(h)
            q = p
            for j, z in enumerate(hh):
                if up[z] >> q & 1:
                    hh[j], q = q, z
            if q == want:
                v += rec(filled | 1 << p, tuple(hh), k + 1)
        memo[key] = v
        return v

    return rec(inner, h0, 0)


def count_rectifying_to_naive(sk: SkewShape, target: StandardTableau) -> int:
    return sum(1 for U in iter_syt(sk) if rectify(U) == target)
