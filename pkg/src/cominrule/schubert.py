"""Schubert structure constants by counting rectifications to a fixed tableau."""
from __future__ import annotations

import csv
import io
import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .poset import BoxPoset, bits, build_box_poset, popcount
from .shapes import (
    Shape,
    ShapeError,
    SkewShape,
    _ideal_masks,
    addable,
    all_shapes,
    parse_shape,
    print_shape,
)
from .tableaux import canonical_tableau, count_rectifying_to, count_rectifying_to_naive

INT64_LIMIT = 2 ** 63


class TableTooLarge(ValueError):
    pass


def _poset(space) -> BoxPoset:
    return space if isinstance(space, BoxPoset) else build_box_poset(space)


def _as_shape(x, poset: BoxPoset) -> Shape:
    if isinstance(x, Shape):
        if x.poset is not poset:
            raise ShapeError(f"shape {x} belongs to {x.poset.space}, not {poset.space}")
        return x
    return parse_shape(x, poset)


def _same_space(lam, mu, nu, space):
    if space is None:
        for s in (lam, mu, nu):
            if isinstance(s, Shape):
                space = s.poset
                break
        else:
            raise ShapeError("a space is needed when shapes are given as tuples")
    P = _poset(space)
    return P, _as_shape(lam, P), _as_shape(mu, P), _as_shape(nu, P)


def shortroot_count(poset: BoxPoset, mask: int) -> int:
    return popcount(mask & poset.short_mask)


def _scale(poset: BoxPoset, count: int, skew_mask: int, mu_mask: int) -> int:
    if poset.flavor != "cominuscule" or count == 0:
        return count
    e = shortroot_count(poset, skew_mask) - shortroot_count(poset, mu_mask)
    if e >= 0:
        v = count << e
    else:
        q, r = divmod(count, 1 << -e)
        if r:
            raise ArithmeticError("structure constant is not an integer")
        v = q
    if v >= INT64_LIMIT:
        raise OverflowError("structure constant exceeds 64-bit range")
    return v


def structural_zero(lam: Shape, mu: Shape, nu: Shape) -> bool:
    """True when the coefficient vanishes for containment or degree reasons alone."""
    return bool(lam.mask & ~nu.mask) or len(lam) + len(mu) != len(nu)


_LRC_CACHE: dict = {}


def lrc(lam, mu, nu, space=None, naive: bool = False) -> int:
    """The structure constant c_{lam,mu}^{nu}.

    Counts standard fillings of nu/lam that rectify to the first tableau of
    shape mu, times the power of two on short boxes in the cominuscule case.
    """
    P, lam, mu, nu = _same_space(lam, mu, nu, space)
    if structural_zero(lam, mu, nu):
        return 0
    key = (id(P), lam.mask, mu.mask, nu.mask, naive)
    v = _LRC_CACHE.get(key)
    if v is None:
        sk = SkewShape(lam, nu)
        counter = count_rectifying_to_naive if naive else count_rectifying_to
        v = _scale(P, counter(sk, canonical_tableau(mu)), sk.mask, mu.mask)
        _LRC_CACHE[key] = v
    return v


def lrc_naive(lam, mu, nu, space=None) -> int:
    """Same as lrc but enumerates every filling and rectifies it."""
    return lrc(lam, mu, nu, space, naive=True)


def rectification_profile(poset: BoxPoset, inner: int, outer: int) -> dict[int, int]:
    """For each straight shape mu, how many fillings of outer/inner rectify to the first tableau of mu.

    One pass: the rectified tableau is the first tableau of its shape exactly
    when the final positions of labels 1, 2, ... increase in box id.
    """
    m = popcount(outer & ~inner)
    h0 = tuple(sorted(bits(inner), reverse=True))
    up, down = poset.up, poset.down
    memo: dict = {}

    def rec(filled, h, last, k):
        if k == m:
            return {0: 1}
        key = (filled, h, last)
        v = memo.get(key)
        if v is not None:
            return v
        acc: Counter = Counter()
        for p in bits(outer & ~filled):
            if down[p] & ~filled:
                continue
            hh = list(h)
            q = p
            for j, z in enumerate(hh):
                if up[z] >> q & 1:
                    hh[j], q = q, z
            if q <= last:
                continue
            for rest, c in rec(filled | 1 << p, tuple(hh), q, k + 1).items():
                acc[rest | 1 << q] += c
        v = dict(acc)
        memo[key] = v
        return v

    return rec(inner, h0, -1, 0)


def product_expand(lam, mu, space=None) -> dict[Shape, int]:
    """sigma_lam * sigma_mu as {nu: coefficient}, zeros omitted."""
    P, lam, mu, _ = _same_space(lam, mu, mu if isinstance(mu, Shape) else lam, space)
    out = {}
    target = len(lam) + len(mu)
    for nu in all_shapes(P):
        if len(nu) != target or lam.mask & ~nu.mask or mu.mask & ~nu.mask:
            continue
        c = lrc(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def chevalley_product(lam, space=None) -> dict[Shape, int]:
    """sigma_box * sigma_lam, using 2 for short added boxes in the cominuscule case."""
    if space is None and not isinstance(lam, Shape):
        raise ShapeError("a space is needed when shapes are given as tuples")
    P = lam.poset if space is None else _poset(space)
    lam = _as_shape(lam, P)
    out = {}
    for b in addable(P, lam.mask):
        short = P.flavor == "cominuscule" and bool(P.short_mask >> b & 1)
        out[Shape(P, lam.mask | 1 << b)] = 2 if short else 1
    return dict(sorted(out.items()))


def box_power(i: int, space) -> dict[Shape, int]:
    P = _poset(space)
    if not 0 <= i <= len(P):
        raise ValueError(f"power must lie in 0..{len(P)}")
    cur: dict[Shape, int] = {Shape(P, 0): 1}
    for _ in range(i):
        nxt: Counter = Counter()
        for lam, c in cur.items():
            for mu, d in chevalley_product(lam).items():
                nxt[mu] += c * d
        cur = dict(sorted(nxt.items()))
    return cur


# --- tables -------------------------------------------------------------------


@dataclass
class CoeffTable:
    """Memoized structure constants of one space, keyed by shape bitmasks."""

    space: str
    entries: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        # a BoxPoset may be passed for posets that have no spec string
        self.poset = _poset(self.space)
        self.space = self.poset.space

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, CoeffTable) and other.space == self.space and other.entries == self.entries

    def shapes(self) -> list[Shape]:
        return all_shapes(self.poset)

    def get(self, lam, mu, nu) -> int:
        P = self.poset
        lam, mu, nu = _as_shape(lam, P), _as_shape(mu, P), _as_shape(nu, P)
        key = (lam.mask, mu.mask, nu.mask)
        v = self.entries.get(key)
        if v is None:
            v = lrc(lam, mu, nu)
            self.entries[key] = v
        return v

    def __call__(self, lam, mu, nu) -> int:
        return self.get(lam, mu, nu)

    def product(self, lam, mu) -> dict[int, int]:
        """{nu mask: c} for sigma_lam * sigma_mu."""
        lm = lam.mask if isinstance(lam, Shape) else lam
        mm = mu.mask if isinstance(mu, Shape) else mu
        size = popcount(lm) + popcount(mm)
        out = {}
        for nm in _ideal_masks(self.poset):
            if popcount(nm) != size or lm & ~nm or mm & ~nm:
                continue
            c = self.get(Shape(self.poset, lm), Shape(self.poset, mm), Shape(self.poset, nm))
            if c:
                out[nm] = c
        return out

    def nonzero(self) -> dict[tuple[int, int, int], int]:
        return {k: v for k, v in self.entries.items() if v}

    def rows(self) -> list[dict]:
        P = self.poset
        name = lambda m: print_shape(Shape(P, m))
        order = {m: i for i, m in enumerate(_ideal_masks(P))}
        keys = sorted(self.entries, key=lambda k: (order[k[2]], order[k[0]], order[k[1]]))
        return [{"lam": name(l), "mu": name(m), "nu": name(n), "c": self.entries[(l, m, n)]} for l, m, n in keys]

    def to_json(self) -> str:
        return json.dumps(self.rows())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["lam", "mu", "nu", "c"], lineterminator="\n")
        w.writeheader()
        w.writerows(self.rows())
        return buf.getvalue()

    @classmethod
    def from_rows(cls, space, rows: Iterable[dict]) -> "CoeffTable":
        t = cls(space)
        P = t.poset
        for r in rows:
            key = tuple(parse_shape(r[k], P).mask for k in ("lam", "mu", "nu"))
            t.entries[key] = int(r["c"])
        return t

    @classmethod
    def from_json(cls, space: str, text: str) -> "CoeffTable":
        return cls.from_rows(space, json.loads(text))

    @classmethod
    def from_csv(cls, space: str, text: str) -> "CoeffTable":
        return cls.from_rows(space, csv.DictReader(io.StringIO(text)))


def _table_rows_for(space, pairs: list[tuple[int, int]]) -> list[tuple[tuple[int, int, int], int]]:
    P = _poset(space)
    masks = _ideal_masks(P)
    out = []
    for lm, nm in pairs:
        prof = rectification_profile(P, lm, nm)
        size = popcount(nm) - popcount(lm)
        for mm in masks:
            if popcount(mm) != size or mm & ~nm:
                continue
            c = _scale(P, prof.get(mm, 0), nm & ~lm, mm)
            out.append(((lm, mm, nm), c))
    return out


def default_workers() -> int:
    env = os.environ.get("COMINRULE_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def full_table(space, bound: int = 70, workers: int | None = 1) -> CoeffTable:
    """Every triple with lam, mu inside nu and matching degrees; other triples are zero."""
    P = _poset(space)
    masks = _ideal_masks(P)
    if len(masks) > bound:
        raise TableTooLarge(f"{P.space} has {len(masks)} shapes, above the bound {bound}")
    pairs = [(lm, nm) for nm in masks for lm in masks if lm & ~nm == 0]
    workers = workers or default_workers()
    if workers <= 1 or len(pairs) < 2 * workers:
        rows = _table_rows_for(P, pairs)
    else:
        chunks = [pairs[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_table_rows_for, [P] * workers, chunks))
        rows = [r for part in parts for r in part]
    t = CoeffTable(P)
    for key, c in sorted(rows):
        t.entries[key] = c
    return t
