"""The box poset of a (co)minuscule flag variety.

A space is named by a short spec string::

    Gr:k,n   Grassmannian Gr(k, C^n)            (A_{n-1}, node k)
    QB:n     odd quadric Q^{2n-1}               (B_n, node 1)
    LG:n     Lagrangian Grassmannian LG(n, 2n)  (C_n, node n)
    QD:n     even quadric Q^{2n-2}              (D_n, node 1)
    OG:n     spinor variety of D_n, n(n-1)/2 boxes  (D_n, node n)
    E6       Cayley plane                       (E6, node 1)
    E7       Freudenthal variety                (E7, node 7)
    Pmin:n   projective space P^{2n-1}          (C_n, node 1; minuscule)
    OGmin:n  OG(n, 2n+1)                        (B_n, node n; minuscule, realized on D_{n+1})

Boxes are the positive roots containing the distinguished simple root.  They
are numbered by their (column, row) grid coordinate in lexicographic order,
which is a linear extension of the poset.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .roots import (
    Root,
    RootSystem,
    WeylElement,
    build_root_system,
    element_from_inversions,
    height,
    longest_element,
    simple,
)

# Node translation from the mirrored E7 diagram (chain 1-3-4-5-6-7 with 2 on 5)
# to Bourbaki's (2 on 4).  The two E6 numberings agree.
E7_DIAGRAM_TO_BOURBAKI = {1: 7, 2: 2, 3: 6, 4: 5, 5: 4, 6: 3, 7: 1}


class SpaceSpecError(ValueError):
    pass


@dataclass(frozen=True)
class SpaceSpec:
    family: str
    params: tuple[int, ...]
    type_label: str
    rank: int
    node: int
    flavor: str  # "cominuscule" or "minuscule"

    @property
    def text(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}:" + ",".join(map(str, self.params))

    def __str__(self) -> str:
        return self.text


_SPEC_RE = re.compile(r"^\s*([A-Za-z]+[0-9]?)\s*(?::\s*([0-9]+(?:\s*,\s*[0-9]+)*))?\s*$")


def parse_space(text: str | SpaceSpec) -> SpaceSpec:
    """Parse a space spec string; raises SpaceSpecError when malformed or unsupported."""
    if isinstance(text, SpaceSpec):
        return text
    m = _SPEC_RE.match(text or "")
    if not m:
        raise SpaceSpecError(f"malformed space spec {text!r}")
    fam = m.group(1)
    params = tuple(int(x) for x in m.group(2).split(",")) if m.group(2) else ()
    canon = {f.lower(): f for f in ("Gr", "QB", "LG", "QD", "OG", "E6", "E7", "Pmin", "OGmin")}
    fam = canon.get(fam.lower())
    if fam is None:
        raise SpaceSpecError(f"unknown space family in {text!r}; expected one of Gr, QB, LG, QD, OG, E6, E7, Pmin, OGmin")
    want = {"Gr": 2, "E6": 0, "E7": 0}.get(fam, 1)
    if len(params) != want:
        raise SpaceSpecError(f"{fam} takes {want} integer parameter(s), got {text!r}")
    if fam == "Gr":
        k, n = params
        if not 1 <= k < n:
            raise SpaceSpecError(f"Gr:k,n needs 1 <= k < n, got {text!r}")
        return SpaceSpec(fam, params, "A", n - 1, k, "cominuscule")
    if fam in ("E6", "E7"):
        return SpaceSpec(fam, (), fam, int(fam[1]), 1 if fam == "E6" else 7, "cominuscule")
    (n,) = params
    table = {
        "QB": ("B", n, 1, "cominuscule", 3),
        "LG": ("C", n, n, "cominuscule", 2),
        "QD": ("D", n, 1, "cominuscule", 4),
        "OG": ("D", n, n, "cominuscule", 4),
        "Pmin": ("C", n, 1, "minuscule", 2),
        "OGmin": ("D", n + 1, n + 1, "minuscule", 3),
    }
    t, r, node, flavor, least = table[fam]
    if n < least:
        raise SpaceSpecError(f"{fam}:n needs n >= {least}, got {text!r}")
    return SpaceSpec(fam, params, t, r, node, flavor)


# Reference shapes (column tuples) that fix the orientation of the grid.
def _reference_tuples(spec: SpaceSpec) -> list[tuple[int, ...]]:
    f, p = spec.family, spec.params
    if f == "Gr":
        k, n = p
        return [(k,) * (n - k)]
    if f == "QB":
        return [(1,) * (2 * p[0] - 1)]
    if f == "Pmin":
        return [(1,) * (2 * p[0] - 1)]
    if f in ("LG", "OG", "OGmin"):
        m = {"LG": p[0], "OG": p[0] - 1, "OGmin": p[0]}[f]
        return [tuple(range(m, 0, -1)), (2, 1)]
    if f == "QD":
        n = p[0]
        return [(1,) * (n - 3) + (2,), (1,) * (n - 1), (1,) * (n - 3) + (2, 2) + (1,) * (n - 3)]
    if f == "E6":
        return [(1, 1, 2, 3, 1), (1, 1, 2, 1, 1), (1, 1, 2, 2, 1), (1, 1, 2, 4, 4, 1),
                (1, 1, 2, 3, 3, 1), (1, 1, 2, 2), (1, 1, 2, 3), (1, 1, 2, 4)]
    if f == "E7":
        return [(1, 1, 1, 2, 3, 3, 1), (1, 1, 1, 2, 5, 5), (1, 1, 1, 2, 5, 3),
                (1, 1, 1, 2, 1), (1, 1, 1, 2, 5, 5, 2, 1, 1), (1, 1, 1, 2, 4, 4, 1),
                (1, 1, 1, 2, 4, 4, 2, 1, 1), (1, 1, 1, 2, 5, 4, 2, 1, 1), (1, 1, 1, 2, 4),
                (1, 1, 1, 2, 5, 5, 3, 3), (1,) * 6]
    return []


@dataclass(eq=False)
class BoxPoset:
    """The poset of boxes of one space.  Treat as immutable."""

    spec: SpaceSpec
    rs: RootSystem = field(repr=False)
    node: int
    boxes: tuple[Root, ...] = field(repr=False)
    grid: tuple[tuple[int, int], ...] = field(repr=False)
    short: tuple[bool, ...] = field(repr=False)
    rotate: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        n = len(self.boxes)
        self.index = {b: i for i, b in enumerate(self.boxes)}
        up = [0] * n
        down = [0] * n
        covers = []
        for i, a in enumerate(self.boxes):
            for k in range(self.rs.rank):
                c = list(a)
                c[k] += 1
                j = self.index.get(tuple(c))
                if j is not None:
                    up[i] |= 1 << j
                    down[j] |= 1 << i
                    covers.append((i, j))
        self.up = tuple(up)
        self.down = tuple(down)
        self.covers = tuple(covers)
        self.up_lists = tuple(tuple(_bits(m)) for m in up)
        self.down_lists = tuple(tuple(_bits(m)) for m in down)
        # strict order closures; ids are a linear extension so one pass suffices
        below = [0] * n
        for i in range(n):
            for j in self.down_lists[i]:
                below[i] |= below[j] | (1 << j)
        above = [0] * n
        for i in reversed(range(n)):
            for j in self.up_lists[i]:
                above[i] |= above[j] | (1 << j)
        self.below = tuple(below)
        self.above = tuple(above)
        self.full = (1 << n) - 1
        self.short_mask = sum(1 << i for i, s in enumerate(self.short) if s)
        self.heights = tuple(height(b) for b in self.boxes)

    @property
    def space(self) -> str:
        return self.spec.text

    @property
    def flavor(self) -> str:
        return self.spec.flavor

    def __len__(self) -> int:
        return len(self.boxes)

    def __repr__(self) -> str:
        return f"BoxPoset({self.space}, {len(self)} boxes)"

    def leq(self, i: int, j: int) -> bool:
        return i == j or bool(self.below[j] >> i & 1)

    def is_ideal(self, mask: int) -> bool:
        return all(self.down[i] & ~mask == 0 for i in _bits(mask))

    def down_closure(self, mask: int) -> int:
        out = mask
        for i in _bits(mask):
            out |= self.below[i]
        return out

    def up_closure(self, mask: int) -> int:
        out = mask
        for i in _bits(mask):
            out |= self.above[i]
        return out

    def columns(self) -> dict[int, list[int]]:
        """Box ids of each column, bottom to top."""
        cols: dict[int, list[int]] = {}
        for i, (c, r) in enumerate(self.grid):
            cols.setdefault(c, []).append(i)
        for c in cols:
            cols[c].sort(key=lambda i: self.grid[i][1])
        return dict(sorted(cols.items()))


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


bits = _bits


def popcount(mask: int) -> int:
    return bin(mask).count("1")


# --- grid embedding -----------------------------------------------------------


def _embeddings(roots: list[Root], down: dict[Root, list[Root]]) -> Iterator[dict[Root, tuple[int, int]]]:
    """All planar embeddings with covers as unit steps right/up, min box at the origin.

    Boxes with a single lower cover try the step to the right first.
    """
    order = sorted(roots, key=lambda r: (height(r), r))
    pos: dict[Root, tuple[int, int]] = {}
    occupied: dict[tuple[int, int], Root] = {}

    def candidates(b):
        lows = down[b]
        if not lows:
            return [(0, 0)]
        a = pos[lows[0]]
        cands = [(a[0] + 1, a[1]), (a[0], a[1] + 1)]
        out = []
        for p in cands:
            if p in occupied:
                continue
            neighbours = {occupied.get((p[0] - 1, p[1])), occupied.get((p[0], p[1] - 1))} - {None}
            if neighbours == set(lows):
                out.append(p)
        return out

    def rec(k):
        if k == len(order):
            yield dict(pos)
            return
        b = order[k]
        for p in candidates(b):
            pos[b] = p
            occupied[p] = b
            yield from rec(k + 1)
            del pos[b]
            del occupied[p]

    yield from rec(0)


def _column_tuple_mask(grid: dict[Root, tuple[int, int]], tup: tuple[int, ...]) -> set[Root] | None:
    cols: dict[int, list[Root]] = {}
    for r, (c, row) in grid.items():
        cols.setdefault(c, []).append(r)
    mincol = min(cols)
    out: set[Root] = set()
    for i, k in enumerate(tup):
        col = sorted(cols.get(mincol + i, []), key=lambda r: grid[r][1])
        if k > len(col):
            return None
        out.update(col[:k])
    return out


def _is_ideal_roots(S: set[Root], down: dict[Root, list[Root]]) -> bool:
    return all(all(x in S for x in down[r]) for r in S)


def _choose_grid(spec: SpaceSpec, roots: list[Root], down) -> dict[Root, tuple[int, int]]:
    refs = _reference_tuples(spec)

    def ok(g):
        for t in refs:
            S = _column_tuple_mask(g, t)
            if S is None or len(S) != sum(t) or not _is_ideal_roots(S, down):
                return False
        return True

    for count, emb in enumerate(_embeddings(roots, down)):
        for g in (emb, {r: (y, x) for r, (x, y) in emb.items()}):
            mc = min(c for c, _ in g.values())
            mr = min(r for _, r in g.values())
            g = {r: (c - mc + 1, w - mr + 1) for r, (c, w) in g.items()}
            if ok(g):
                return g
        if count > 100000:
            break
    raise RuntimeError(f"no grid embedding of {spec} reproduces its reference shapes")


# --- construction -------------------------------------------------------------


def _lambda_roots(rs: RootSystem, node: int) -> list[Root]:
    return [a for a in rs.positive_roots if a[node - 1] >= 1]


@lru_cache(maxsize=None)
def build_box_poset(space: str | SpaceSpec) -> BoxPoset:
    """Build the box poset for a space spec such as ``"Gr:4,7"`` or ``"E6"``."""
    spec = parse_space(space)
    if spec.family == "OGmin":
        # realized on the D_{n+1} spinor poset; short flags are irrelevant (minuscule)
        return _build(spec, clear_short=True)
    if spec.family == "Pmin":
        return _build(spec, clear_short=True, chain_rotate=True)
    return _build(spec)


@lru_cache(maxsize=None)
def build_poset_at(type_label: str, rank: int, node: int) -> BoxPoset:
    """Box poset for an arbitrary cominuscule node, named after its standard space when one exists."""
    rs = build_root_system(type_label, rank)
    if rs.highest_root[node - 1] != 1:
        raise SpaceSpecError(f"node {node} of {rs.name} is not cominuscule")
    spec = SpaceSpec(f"{rs.name}@{node}", (), rs.type_label, rank, node, "cominuscule")
    return _build(spec)


def _build(spec: SpaceSpec, clear_short: bool = False, chain_rotate: bool = False) -> BoxPoset:
    rs = build_root_system(spec.type_label, spec.rank)
    node = spec.node
    roots = _lambda_roots(rs, node)
    rootset = set(roots)
    down = {}
    for a in roots:
        lows = []
        for k in range(rs.rank):
            b = list(a)
            b[k] -= 1
            if tuple(b) in rootset:
                lows.append(tuple(b))
        down[a] = lows
    grid = _choose_grid(spec, roots, down)
    boxes = sorted(roots, key=lambda r: grid[r])
    index = {b: i for i, b in enumerate(boxes)}
    if chain_rotate:
        rot = tuple(len(boxes) - 1 - i for i in range(len(boxes)))
    else:
        J = [i for i in range(1, rs.rank + 1) if i != node]
        u0 = longest_element(rs, J)
        rot = tuple(index[u0.act(b)] for b in boxes)
    short = tuple(False if clear_short else rs.is_short(b) for b in boxes)
    return BoxPoset(spec, rs, node, tuple(boxes), tuple(grid[b] for b in boxes), short, rot)


def rotate_map(poset: BoxPoset) -> tuple[int, ...]:
    return poset.rotate


def grid_embedding(poset: BoxPoset) -> tuple[tuple[int, int], ...]:
    return poset.grid


def beta(poset: BoxPoset) -> Root:
    return simple(poset.rs.rank, poset.node)


def shape_to_weyl(mask: int, poset: BoxPoset) -> WeylElement:
    """The Grassmannian element whose inversion set is the ideal ``mask``."""
    if not poset.is_ideal(mask):
        raise ValueError("not a lower order ideal")
    return element_from_inversions(poset.rs, [poset.boxes[i] for i in _bits(mask)])


class NotGrassmannian(ValueError):
    pass


def weyl_to_shape(w: WeylElement, poset: BoxPoset) -> int:
    """Inverse of :func:`shape_to_weyl`."""
    bad = sorted(w.descents() - {poset.node})
    if bad:
        raise NotGrassmannian(f"element has descent at node {bad[0]}, expected only node {poset.node}")
    inv = w.inversion_set()
    mask = 0
    for a in inv:
        if a not in poset.index:
            raise NotGrassmannian(f"inversion {a} lies outside the box poset")
        mask |= 1 << poset.index[a]
    return mask
