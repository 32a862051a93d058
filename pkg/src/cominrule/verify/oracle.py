"""Classical Littlewood-Richardson numbers by counting lattice-word skew tableaux.

Deliberately self-contained: no jeu de taquin and nothing from the rest of
the package, so that agreement with it means something.
"""
from __future__ import annotations


def _clean(p) -> list[int]:
    p = [int(x) for x in p]
    if any(x < 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{tuple(p)} is not a partition")
    while p and p[-1] == 0:
        p.pop()
    return p


def lr_coefficient(lam, mu, nu) -> int:
    """Number of semistandard fillings of nu/lam with content mu whose reverse reading word is a lattice word."""
    lam, mu, nu = _clean(lam), _clean(mu), _clean(nu)
    if sum(lam) + sum(mu) != sum(nu) or len(lam) > len(nu):
        return 0
    lam = lam + [0] * (len(nu) - len(lam))
    if any(a > b for a, b in zip(lam, nu)):
        return 0
    # cells in reading order: rows top to bottom, each right to left
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    used = [0] * (len(mu) + 1)

    def rec(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        hi = len(mu)
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filling.get((r - 1, c))
        if above is not None:
            lo = above + 1
        total = 0
        for v in range(lo, hi + 1):
            if used[v] >= mu[v - 1]:
                continue
            if v > 1 and used[v] + 1 > used[v - 1]:
                continue
            used[v] += 1
            filling[(r, c)] = v
            total += rec(k + 1)
            del filling[(r, c)]
            used[v] -= 1
        return total

    return rec(0)


def lr_oracle_typeA(lam, mu, nu, k: int, n: int) -> int:
    """LR coefficient for Gr(k, n); partitions must fit in the k by (n-k) rectangle.

    Shapes may be given in either orientation (rows of length <= n-k or
    columns of height <= k); the coefficient is invariant under conjugation.
    """
    for p in (lam, mu, nu):
        q = _clean(p)
        fits = (len(q) <= k and (not q or q[0] <= n - k)) or (len(q) <= n - k and (not q or q[0] <= k))
        if not fits:
            raise ValueError(f"{tuple(q)} does not fit in a {k} x {n - k} rectangle")
    return lr_coefficient(lam, mu, nu)
