"""Root systems of types A-E7 and their Weyl groups, over integer coordinates.

Roots are stored as tuples of simple-root coefficients.  Nodes are numbered
1..rank in Bourbaki order.  The symmetric Gram matrix is kept doubled so that
every pairing is an integer: in the normalization where long roots have
squared length 2 (and short roots 1 in types B/C), ``gram[i][j]`` equals
``2 * (alpha_i, alpha_j)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

Root = tuple[int, ...]

SUPPORTED = "A_n (n>=1), B_n (n>=3), C_n (n>=2), D_n (n>=4), E6, E7"

# Bourbaki numbering.  E6: 1-3-4-5-6 with 2 on 4.  E7: 1-3-4-5-6-7 with 2 on 4.
_E_EDGES = {
    6: [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
    7: [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
}


class UnsupportedRootSystem(ValueError):
    pass


def _chain_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, n)]


def _dynkin(type_label: str, rank: int) -> tuple[list[tuple[int, int]], list[int]]:
    """Edges and doubled squared lengths (2 = short, 4 = long) of the simple roots."""
    t = type_label.upper()
    if t == "A" and rank >= 1:
        return _chain_edges(rank), [4] * rank
    if t == "B" and rank >= 3:
        return _chain_edges(rank), [4] * (rank - 1) + [2]
    if t == "C" and rank >= 2:
        return _chain_edges(rank), [2] * (rank - 1) + [4]
    if t == "D" and rank >= 4:
        return _chain_edges(rank - 1) + [(rank - 2, rank)], [4] * rank
    if t in ("E", "E6", "E7"):
        if t != "E":
            rank = int(t[1])
        if rank in _E_EDGES:
            return list(_E_EDGES[rank]), [4] * rank
    raise UnsupportedRootSystem(
        f"unsupported root system ({type_label}, {rank}); supported: {SUPPORTED}"
    )


@dataclass(frozen=True, eq=False)
class RootSystem:
    type_label: str
    rank: int
    gram: tuple[tuple[int, ...], ...] = field(repr=False)
    positive_roots: tuple[Root, ...] = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_positive", frozenset(self.positive_roots))

    @property
    def name(self) -> str:
        return self.type_label if self.type_label.startswith("E") else f"{self.type_label}{self.rank}"

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(simple(self.rank, i) for i in range(1, self.rank + 1))

    def doubled_pairing(self, a: Sequence[int], b: Sequence[int]) -> int:
        """``2 * (a, b)``; always an integer."""
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank) if a[i] for j in range(self.rank) if b[j])

    def inner(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        return Fraction(self.doubled_pairing(a, b), 2)

    def sq_length(self, a: Sequence[int]) -> int:
        d = self.doubled_pairing(a, a)
        assert d % 2 == 0
        return d // 2

    def coroot_pairing(self, a: Sequence[int], i: int) -> int:
        """<a, alpha_i^vee> for node i (1-based)."""
        k = i - 1
        num = 2 * sum(a[j] * self.gram[j][k] for j in range(self.rank) if a[j])
        q, r = divmod(num, self.gram[k][k])
        assert r == 0
        return q

    def reflect(self, a: Sequence[int], i: int) -> Root:
        c = self.coroot_pairing(a, i)
        if not c:
            return tuple(a)
        v = list(a)
        v[i - 1] -= c
        return tuple(v)

    def is_positive(self, a: Root) -> bool:
        return a in self._positive

    def is_root(self, a: Root) -> bool:
        return a in self._positive or tuple(-x for x in a) in self._positive

    @property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=sum)

    @property
    def max_sq_length(self) -> int:
        return max(self.sq_length(a) for a in self.positive_roots)

    def is_short(self, a: Root) -> bool:
        return self.sq_length(a) < self.max_sq_length


def simple(rank: int, i: int) -> Root:
    v = [0] * rank
    v[i - 1] = 1
    return tuple(v)


def height(a: Root) -> int:
    return sum(a)


def _generate_positive_roots(rank: int, gram: list[list[int]]) -> list[Root]:
    """Close the simple roots under root strings, one height at a time."""

    def coroot(a, k):
        return 2 * sum(a[j] * gram[j][k] for j in range(rank)) // gram[k][k]

    roots = {simple(rank, i) for i in range(1, rank + 1)}
    layer = sorted(roots)
    while layer:
        nxt = set()
        for a in layer:
            for k in range(rank):
                # alpha_k-string through a: a - p alpha_k .. a + q alpha_k, p - q = <a, alpha_k^vee>
                p = 0
                b = list(a)
                while True:
                    b[k] -= 1
                    if tuple(b) in roots:
                        p += 1
                    else:
                        break
                q = p - coroot(a, k)
                if q > 0:
                    c = list(a)
                    c[k] += 1
                    nxt.add(tuple(c))
        nxt -= roots
        roots |= nxt
        layer = sorted(nxt)
    return sorted(roots, key=lambda r: (sum(r), tuple(-x for x in r)))


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int | None = None) -> RootSystem:
    """Build the root system of the given type.

    ``type_label`` is one of A, B, C, D (with ``rank``) or E6/E7.  B2 is not
    accepted (use C2) and D3 is not accepted (use A3).
    """
    t = type_label.upper()
    if t in ("E6", "E7"):
        rank = int(t[1])
    elif t == "E":
        t = f"E{rank}"
    if rank is None:
        raise UnsupportedRootSystem(f"rank required for type {type_label}; supported: {SUPPORTED}")
    edges, lengths = _dynkin(t, rank)
    gram = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        gram[i][i] = lengths[i]
    for i, j in edges:
        # doubled inner product of adjacent simple roots: -(smaller doubled length)/... see below
        a, b = lengths[i - 1], lengths[j - 1]
        # (alpha_i, alpha_j) = -max(|a_i|^2, |a_j|^2)/2 for single and double bonds
        gram[i - 1][j - 1] = gram[j - 1][i - 1] = -max(a, b) // 2
    pos = _generate_positive_roots(rank, gram)
    return RootSystem(t if t.startswith("E") else t, rank, tuple(map(tuple, gram)), tuple(pos))


def cominuscule_nodes(rs: RootSystem) -> set[int]:
    """Nodes whose simple root occurs with coefficient one in the highest root."""
    top = rs.highest_root
    return {i + 1 for i, c in enumerate(top) if c == 1}


def dynkin_edges(rs: RootSystem) -> list[tuple[int, int]]:
    return [(i + 1, j + 1) for i, j in combinations(range(rs.rank), 2) if rs.gram[i][j]]


# --- Weyl group -------------------------------------------------------------


@dataclass(frozen=True)
class WeylElement:
    """An element of W given by a word in simple reflections (1-based nodes).

    The word ``(i1, ..., ik)`` stands for ``s_i1 s_i2 ... s_ik``; it acts on a
    root by applying ``s_ik`` first.
    """

    rs: RootSystem = field(compare=False, repr=False)
    word: tuple[int, ...]

    def act(self, a: Sequence[int]) -> Root:
        v = tuple(a)
        for i in reversed(self.word):
            v = self.rs.reflect(v, i)
        return v

    def inverse(self) -> WeylElement:
        return WeylElement(self.rs, tuple(reversed(self.word)))

    def __mul__(self, other: WeylElement) -> WeylElement:
        return WeylElement(self.rs, self.word + other.word)

    def signature(self) -> tuple[Root, ...]:
        """Images of the simple roots; determines the element."""
        return tuple(self.act(s) for s in self.rs.simple_roots)

    def same_as(self, other: WeylElement) -> bool:
        return self.signature() == other.signature()

    def inversion_set(self) -> frozenset[Root]:
        return frozenset(a for a in self.rs.positive_roots if not self.rs.is_positive(self.act(a)))

    def length(self) -> int:
        return len(self.inversion_set())

    def descents(self) -> set[int]:
        """Right descents: nodes i with l(w s_i) < l(w)."""
        return {i for i, s in enumerate(self.rs.simple_roots, 1) if not self.rs.is_positive(self.act(s))}

    def reduced(self) -> WeylElement:
        """A reduced word for the same element, built from the inversion set."""
        return element_from_inversions(self.rs, self.inversion_set())


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, ())


def element_from_inversions(rs: RootSystem, target: Iterable[Root]) -> WeylElement:
    """Return a reduced w with I(w) equal to ``target``.

    Grows w on the left: I(s_i w) = I(w) + {w^-1 alpha_i} whenever that root is
    positive.  Raises ValueError when ``target`` is not an inversion set.
    """
    target = frozenset(target)
    word: list[int] = []
    current: set[Root] = set()
    while len(current) < len(target):
        winv = WeylElement(rs, tuple(reversed(word)))
        for i, s in enumerate(rs.simple_roots, 1):
            b = winv.act(s)
            if b in target and b not in current:
                word.insert(0, i)
                current.add(b)
                break
        else:
            raise ValueError("root set is not the inversion set of any Weyl group element")
    return WeylElement(rs, tuple(word))


def longest_element(rs: RootSystem, nodes: Iterable[int] | None = None) -> WeylElement:
    """Longest element of the parabolic subgroup generated by ``nodes``."""
    nodes = sorted(range(1, rs.rank + 1) if nodes is None else nodes)
    word: list[int] = []
    w = identity(rs)
    grew = True
    while grew:
        grew = False
        for i in nodes:
            if rs.is_positive(w.act(simple(rs.rank, i))):
                word.append(i)
                w = WeylElement(rs, tuple(word))
                grew = True
                break
    return w


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Subword criterion: u <= v iff some subword of a reduced word of v is a reduced word for u."""
    rs = u.rs
    v = v.reduced()
    lu = u.length()
    target = u.signature()
    for positions in combinations(range(len(v.word)), lu):
        w = WeylElement(rs, tuple(v.word[p] for p in positions))
        if w.signature() == target:
            return True
    return False


# --- rank-two subsystems and biconvexity ------------------------------------


def _in_span(a: Root, b: Root, c: Root) -> bool:
    """Whether c lies in the rational span of a and b (a, b independent)."""
    n = len(a)
    for i, j in combinations(range(n), 2):
        det = a[i] * b[j] - a[j] * b[i]
        if det:
            x = Fraction(c[i] * b[j] - c[j] * b[i], det)
            y = Fraction(a[i] * c[j] - a[j] * c[i], det)
            return all(x * a[k] + y * b[k] == c[k] for k in range(n))
    raise ValueError("dependent roots")


@lru_cache(maxsize=None)
def rank_two_orderings(rs: RootSystem) -> tuple[tuple[Root, ...], ...]:
    """Ordered positive roots of every irreducible rank-two subsystem.

    Orders are (eta, eta+gamma, gamma) for A2 and
    (eta, eta+gamma, eta+2gamma, gamma) for B2 with gamma short.
    """
    seen: set[frozenset[Root]] = set()
    out = []
    pos = rs.positive_roots
    for a, b in combinations(pos, 2):
        sub = frozenset(c for c in pos if _in_span(a, b, c))
        if sub in seen:
            continue
        seen.add(sub)
        if len(sub) == 2:
            continue  # A1 x A1: every subset is an initial or final segment
        sums = {tuple(x + y for x, y in zip(p, q)) for p, q in combinations(sub, 2)}
        simples = [c for c in sub if c not in sums]
        assert len(simples) == 2, (rs.name, sub)
        eta, gamma = sorted(simples, key=lambda r: -rs.sq_length(r))
        if len(sub) == 3:
            order = (eta, _add(eta, gamma), gamma)
        elif len(sub) == 4:
            order = (eta, _add(eta, gamma), _add(eta, gamma, gamma), gamma)
        else:
            raise AssertionError(f"unexpected rank-two subsystem of size {len(sub)}")
        assert set(order) == sub
        out.append(order)
    return tuple(out)


def _add(*roots: Root) -> Root:
    return tuple(map(sum, zip(*roots)))


def is_biconvex(S: Iterable[Root], rs: RootSystem) -> bool:
    """Whether S meets every rank-two subsystem in an initial or final segment."""
    S = frozenset(S)
    for order in rank_two_orderings(rs):
        flags = [r in S for r in order]
        k = sum(flags)
        if flags != [True] * k + [False] * (len(flags) - k) and flags != [False] * (len(flags) - k) + [True] * k:
            return False
    return True


# --- Weyl group orders ------------------------------------------------------


def _component_order(edges: list[tuple[int, int]], nodes: set[int], lengths: dict[int, int]) -> int:
    from math import factorial

    m = len(nodes)
    deg = {v: 0 for v in nodes}
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    branch = [v for v in nodes if deg[v] == 3]
    double = any(lengths[i] != lengths[j] for i, j in edges)
    if double:
        return 2**m * factorial(m)
    if not branch:
        return factorial(m + 1)
    b = branch[0]
    adj = {v: set() for v in nodes}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    arms = []
    for start in adj[b]:
        length, prev, cur = 1, b, start
        while len(adj[cur]) == 2:
            prev, cur = cur, next(x for x in adj[cur] if x != prev)
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return 2 ** (m - 1) * factorial(m)
    return {6: 51840, 7: 2903040, 8: 696729600}[m]


def weyl_group_order(rs: RootSystem, nodes: Iterable[int] | None = None) -> int:
    """|W_J| from the Dynkin subdiagram on ``nodes`` (all nodes by default), by classification."""
    nodes = set(range(1, rs.rank + 1) if nodes is None else nodes)
    edges = [(i, j) for i, j in dynkin_edges(rs) if i in nodes and j in nodes]
    lengths = {i: rs.gram[i - 1][i - 1] for i in nodes}
    comps: list[set[int]] = []
    for v in sorted(nodes):
        if any(v in c for c in comps):
            continue
        comp, stack = {v}, [v]
        while stack:
            x = stack.pop()
            for i, j in edges:
                for p, q in ((i, j), (j, i)):
                    if p == x and q not in comp:
                        comp.add(q)
                        stack.append(q)
        comps.append(comp)
    order = 1
    for c in comps:
        order *= _component_order([e for e in edges if e[0] in c], c, lengths)
    return order
