"""H(n;3) arrays concentrated on three diagonals, plus diagonal relocation.

``build_h3_base`` produces an H(n;3) whose filled cells lie on D_0, D_1 and
D_{n-1}, with D_0 carrying {1..n} up to sign, D_{n-1} all positive and D_1
all negative, and every line summing to exactly 0.  Writing row a as
(b_a on D_{n-1}, c_a on D_0, d_a on D_1) the defining equations are

    b_a + c_a + d_a = 0          (row a)
    c_a + d_{a+1} + b_{a-1} = 0  (column a, indices mod n)

with b values and |d| values partitioning {n+1..3n} and |c| = {1..n}.
A structured backtracking search assigns rows in order: once rows 0 and 1
are fixed, each later d is forced by a column equation and only c remains
free, and the final row is fully forced.  Value orderings are shuffled with
seeded RNGs and the search restarts on a per-restart node budget, so the
output for a given n is reproducible.
"""

from __future__ import annotations

import logging
import os
import random

from .grid import HeffterGrid

log = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10_000_000
_RESTART_NODES = 20_000
_BUDGET_ENV = "HEFFTER_SEARCH_BUDGET"


class NoArrayFound(RuntimeError):
    """Search budget exhausted without finding an array."""


def _triples_to_grid(n: int, b: list[int], c: list[int], d: list[int]) -> HeffterGrid:
    entries: dict[tuple[int, int], int] = {}
    for a in range(n):
        entries[(a, (a + 1) % n)] = b[a]
        entries[(a, a)] = c[a]
        entries[(a, (a - 1) % n)] = d[a]
    return HeffterGrid(n, n, entries)


# A fixed instance for n=17: the seeded search would yield a different but
# equally valid array, and downstream output should stay stable across any
# retuning of the search, so the triple lists are frozen here.
_KNOWN = {
    17: (
        [19, 36, 20, 37, 21, 38, 22, 30, 46, 29, 45, 28, 44, 27, 43, 18, 35],
        [15, 14, 13, 12, 11, 10, 9, 17, -7, -6, -5, -4, -3, -2, -1, 8, 16],
        [-34, -50, -33, -49, -32, -48, -31, -47, -39, -23, -40, -24, -41, -25, -42, -26, -51],
    ),
}


def _search_once(n: int, seed: int, budget: int):
    rng = random.Random(seed)
    used_small = [False] * (n + 1)
    used_big = [False] * (3 * n + 1)
    b = [0] * n
    c = [0] * n
    d = [0] * n
    nodes = 0
    base_c = [v for x in range(1, n + 1) for v in (x, -x)]

    def big_ok(v: int) -> bool:
        return n + 1 <= v <= 3 * n and not used_big[v]

    def close_cycle() -> bool:
        # row n-1 is fully forced by columns n-2 and 0; column n-1 is the
        # remaining check.
        dv = -(c[n - 2] + b[n - 3])
        if dv >= 0 or not big_ok(-dv):
            return False
        bv = -(c[0] + d[1])
        if not big_ok(bv) or bv == -dv:
            return False
        cv = -bv - dv
        if cv == 0 or abs(cv) > n or used_small[abs(cv)]:
            return False
        if cv + d[0] + b[n - 2] != 0:
            return False
        c[n - 1], b[n - 1], d[n - 1] = cv, bv, dv
        return True

    def extend(a: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise TimeoutError
        if a == n - 1:
            return close_cycle()
        if a < 2:
            cand = [cv for cv in base_c if not used_small[abs(cv)]]
            rng.shuffle(cand)
            bigs = [v for v in range(n + 1, 3 * n + 1) if not used_big[v]]
            rng.shuffle(bigs)
            for cv in cand:
                for bv in bigs:
                    if used_big[bv]:
                        continue
                    dv = -(bv + cv)
                    if dv >= 0 or not big_ok(-dv) or -dv == bv:
                        continue
                    used_small[abs(cv)] = True
                    used_big[bv] = True
                    used_big[-dv] = True
                    c[a], b[a], d[a] = cv, bv, dv
                    if extend(a + 1):
                        return True
                    used_small[abs(cv)] = False
                    used_big[bv] = False
                    used_big[-dv] = False
            return False
        dv = -(c[a - 1] + b[a - 2])  # forced by column a-1
        if dv >= 0 or not big_ok(-dv):
            return False
        used_big[-dv] = True
        d[a] = dv
        cand = [cv for cv in base_c
                if not used_small[abs(cv)] and big_ok(-cv - dv) and -cv - dv != -dv]
        rng.shuffle(cand)
        for cv in cand:
            bv = -cv - dv
            if used_big[bv]:
                continue
            used_small[abs(cv)] = True
            used_big[bv] = True
            c[a], b[a] = cv, bv
            if extend(a + 1):
                return True
            used_small[abs(cv)] = False
            used_big[bv] = False
        used_big[-dv] = False
        return False

    try:
        if extend(0):
            return b[:], c[:], d[:], nodes
    except TimeoutError:
        pass
    return None, None, None, nodes


def build_h3_base(n: int, node_budget: int | None = None) -> HeffterGrid:
    """An H(n;3) on diagonals D_0, D_1, D_{n-1} with the structure above.

    Requires n congruent to 0 or 1 mod 4 and n >= 4.  Raises NoArrayFound
    when the node budget (HEFFTER_SEARCH_BUDGET env var or the default) runs
    out first.
    """
    if n % 4 not in (0, 1):
        raise ValueError(f"n = {n}: need n congruent to 0 or 1 mod 4")
    if n < 4:
        raise ValueError(f"n = {n}: need n >= 4")
    if n in _KNOWN:
        b, c, d = _KNOWN[n]
        return _triples_to_grid(n, list(b), list(c), list(d))
    if node_budget is None:
        node_budget = int(os.environ.get(_BUDGET_ENV, DEFAULT_NODE_BUDGET))
    spent = 0
    restart = 0
    while spent < node_budget:
        per = min(_RESTART_NODES, node_budget - spent)
        b, c, d, nodes = _search_once(n, 1009 * n + restart, per)
        spent += nodes
        log.debug("h3 search n=%d restart=%d nodes=%d found=%s", n, restart, nodes, b is not None)
        if b is not None:
            return _triples_to_grid(n, b, c, d)
        restart += 1
    raise NoArrayFound(f"no H({n};3) found within {node_budget} search nodes")


def relocate_h3(base: HeffterGrid, beta: int, eps: int) -> HeffterGrid:
    """Move the three diagonals of a base array onto D_beta, D_{beta+eps}, D_{beta+2eps}.

    Cell (i, j) of the base goes to (eps*(i+1)+beta, eps*j), all mod n; this
    is a row/column permutation, so it needs gcd(n, eps) = 1 and preserves
    being an H(n;3).  D_{n-1} lands on D_beta, D_0 on D_{beta+eps} and D_1
    on D_{beta+2eps}.
    """
    import math

    n = base.n
    if not base.is_square:
        raise ValueError("relocation is defined for square grids")
    if math.gcd(n, eps) != 1:
        raise ValueError(f"gcd({n}, {eps}) != 1: relocated cells would collide")
    if not 0 <= beta <= n - 2 * eps - 1:
        raise ValueError(f"beta = {beta} outside [0, {n - 2 * eps - 1}]")
    entries = {
        ((eps * (i + 1) + beta) % n, (eps * j) % n): e
        for (i, j), e in base.entries.items()
    }
    return HeffterGrid(n, n, entries)


def cyclic_shift(grid: HeffterGrid, t: int) -> HeffterGrid:
    """Shift rows and columns together: output(i, j) = grid(i+t, j+t) mod n.

    Every diagonal keeps its multiset of entries.
    """
    if not grid.is_square:
        raise ValueError("cyclic shift is defined for square grids")
    n = grid.n
    entries = {((i - t) % n, (j - t) % n): e for (i, j), e in grid.entries.items()}
    return HeffterGrid(n, n, entries)
