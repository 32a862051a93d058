"""Embeddings of a smaller box poset into the E6 and E7 posets, built from root data.

The small Dynkin diagram is identified with a subdiagram of the big one, and
boxes are carried over by the inverse of a fixed Weyl element delta.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..poset import BoxPoset, bits, build_box_poset, build_poset_at, popcount, shape_to_weyl
from ..roots import Root, WeylElement
from ..schubert import CoeffTable, full_table
from ..shapes import Shape, _ideal_masks, print_shape


class RecursionInvariantError(ValueError):
    """A construction invariant failed; the message names the clause."""


@dataclass(frozen=True)
class RecursionData:
    """Node identification and delta word (Bourbaki numbering on both sides)."""

    name: str
    small: tuple[str, int, int]  # (type, rank, node)
    big: str
    node_map: dict
    delta_word: tuple[int, ...]  # acts rightmost first


RECURSIONS = {
    "E6": RecursionData("E6", ("D", 5, 4), "E6", {1: 6, 2: 5, 3: 4, 4: 3, 5: 2}, (1,)),
    "E7a": RecursionData("E7a", ("E", 6, 1), "E7", {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}, (7,)),
    "E7b": RecursionData("E7b", ("D", 6, 6), "E7", {1: 7, 2: 6, 3: 5, 4: 4, 5: 3, 6: 2}, (1, 3, 4, 5, 6, 7)),
}


@dataclass(eq=False)
class Recursion:
    data: RecursionData
    small: BoxPoset
    big: BoxPoset
    delta: WeylElement
    theta: tuple[int, ...]  # small box id -> big box id
    L: int
    Gamma: int
    image: int = field(init=False)

    def __post_init__(self):
        self.image = sum(1 << j for j in self.theta)
        self._inv = {j: i for i, j in enumerate(self.theta)}

    @property
    def name(self) -> str:
        return self.data.name

    @property
    def node_map(self) -> dict:
        return self.data.node_map

    def bar(self, big_mask: int) -> int:
        """Theta^{-1} of a big shape, as a small shape mask."""
        return sum(1 << self._inv[j] for j in bits(big_mask & self.image))

    def hat(self, small_mask: int) -> int:
        return self.L | sum(1 << self.theta[i] for i in bits(small_mask))

    def image_tuple(self) -> str:
        outer = Shape(self.big, self.image | self.L)
        return f"{print_shape(outer)}/{print_shape(Shape(self.big, self.L))}"

    def summary(self) -> dict:
        return {
            "name": self.name,
            "small": self.small.space,
            "big": self.big.space,
            "image": popcount(self.image),
            "L": popcount(self.L),
            "Gamma": popcount(self.Gamma),
            "image_tuple": self.image_tuple(),
            "delta": list(self.delta.word),
        }


def _translate(root: Root, node_map: dict, rank: int) -> Root:
    out = [0] * rank
    for i, c in enumerate(root, 1):
        out[node_map[i] - 1] += c
    return tuple(out)


def _fail(clause: str):
    raise RecursionInvariantError(clause)


def build_recursion(which: str) -> Recursion:
    """Build one of "E6", "E7a", "E7b" and check every construction invariant."""
    if which not in RECURSIONS:
        raise ValueError(f"unknown recursion {which!r}; expected one of {', '.join(RECURSIONS)}")
    data = RECURSIONS[which]
    small = build_poset_at(*data.small)
    big = build_box_poset(data.big)
    rs = big.rs
    delta = WeylElement(rs, data.delta_word)
    dinv = delta.inverse()

    theta = []
    for a in small.boxes:
        b = dinv.act(_translate(a, data.node_map, rs.rank))
        if b not in big.index:
            _fail(f"Theta sends {a} to {b}, which is not a box of {big.space}")
        theta.append(big.index[b])
    if len(set(theta)) != len(theta):
        _fail("Theta is not injective")
    n = len(small)
    for i in range(n):
        for j in range(n):
            if small.leq(i, j) != big.leq(theta[i], theta[j]):
                _fail("Theta does not preserve and reflect the order")

    image = sum(1 << j for j in theta)
    inv = delta.inversion_set()
    L = 0
    for a in inv:
        if a not in big.index:
            _fail(f"inversion {a} of delta is not a box")
        L |= 1 << big.index[a]
    if L & image:
        _fail("L(Theta) = I(delta) meets the image")
    Gamma = big.full & ~image & ~L
    for x in bits(L):
        if big.below[x] & image:
            _fail("an element of L lies above an image box")
    for x in bits(Gamma):
        if big.above[x] & image:
            _fail("an element of Gamma lies below an image box")
    if not big.is_ideal(L):
        _fail("L(Theta) is not a shape")

    rec = Recursion(data, small, big, delta, tuple(theta), L, Gamma)
    # I(w delta) = gamma-hat for every Grassmannian w of the small space
    for m in _ideal_masks(small):
        w = shape_to_weyl(m, small)
        word = tuple(data.node_map[i] for i in w.word) + delta.word
        got = WeylElement(rs, word).inversion_set()
        want = {big.boxes[j] for j in bits(rec.hat(m))}
        if got != want:
            _fail(f"I(w delta) differs from gamma-hat for the small shape {print_shape(Shape(small, m))}")
        if not big.is_ideal(rec.hat(m)):
            _fail("gamma-hat is not a shape")
    return rec


def check_recursion(rec: Recursion, table_big: CoeffTable | None = None, table_small: CoeffTable | None = None,
                    mu_all: bool = True) -> dict:
    """Check d_{lam,mu}^{nu} = sum_gamma c_{bar lam, gamma}^{bar nu} d_{L,mu}^{hat gamma} under the hypothesis
    lam inside nu, L inside lam, Gamma outside nu."""
    t0 = time.perf_counter()
    tb = table_big if table_big is not None else full_table(rec.big)
    ts = table_small if table_small is not None else _small_table(rec)
    big_masks = _ideal_masks(rec.big)
    small_masks = _ideal_masks(rec.small)

    def d(l, m, n):
        if l & ~n or popcount(l) + popcount(m) != popcount(n):
            return 0
        v = tb.entries.get((l, m, n))
        if v is None:
            v = tb.get(Shape(rec.big, l), Shape(rec.big, m), Shape(rec.big, n))
        return v

    def c(l, m, n):
        if l & ~n or popcount(l) + popcount(m) != popcount(n):
            return 0
        v = ts.entries.get((l, m, n))
        if v is None:
            v = ts.get(Shape(rec.small, l), Shape(rec.small, m), Shape(rec.small, n))
        return v

    checked = 0
    violations = []
    for nm in big_masks:
        if nm & rec.Gamma:
            continue
        for lm in big_masks:
            if lm & ~nm or rec.L & ~lm:
                continue
            lb, nb = rec.bar(lm), rec.bar(nm)
            gammas = [g for g in small_masks if popcount(g) == popcount(nb) - popcount(lb)]
            for mm in big_masks:
                if not mu_all and popcount(mm) != popcount(nm) - popcount(lm):
                    continue
                lhs = d(lm, mm, nm)
                rhs = sum(c(lb, g, nb) * d(rec.L, mm, rec.hat(g)) for g in gammas)
                checked += 1
                if lhs != rhs:
                    sh = lambda x: print_shape(Shape(rec.big, x))
                    violations.append(f"lam={sh(lm)} mu={sh(mm)} nu={sh(nm)}: {lhs} != {rhs}")
    return {
        "recursion": rec.name,
        "checked": checked,
        "violations": violations,
        "image_tuple": rec.image_tuple(),
        "elapsed_ms": round((time.perf_counter() - t0) * 1000, 1),
    }


_SMALL_TABLES: dict = {}


def _small_table(rec: Recursion) -> CoeffTable:
    key = rec.small.spec.family
    t = _SMALL_TABLES.get(key)
    if t is None:
        t = full_table(rec.small)
        _SMALL_TABLES[key] = t
    return t
