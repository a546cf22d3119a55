"""Nilpotent-orbit combinatorics for gl_n and the Robinson-Schensted map.

Orbits of nilpotent n x n matrices are indexed by partitions of n
(Jordan type); orbit closure is dominance order on partitions.  The
dimension of the orbit of type lam is n^2 - sum of squares of the
transpose parts, and the fiber of the cotangent-bundle resolution over
a point of the orbit is equidimensional of half the codimension inside
the nilpotent cone (dim N = n^2 - n).  The number of irreducible
components of that fiber is the number of standard Young tableaux of
shape lam, counted here by direct enumeration (no hook-length formula
in the trusted path).
"""

from __future__ import annotations

from typing import Iterator

from .errors import InputError, InternalError

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def check_partition(parts) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise InputError(f"{parts!r} is not a partition (weakly decreasing, positive)")
    return p


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, largest part first, in descending lex order."""
    def rec(remaining: int, maxpart: int, prefix: Partition) -> Iterator[Partition]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(maxpart, remaining), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))
    yield from rec(n, n, ())


def transpose(lam: Partition) -> Partition:
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def orbit_dim(lam: Partition) -> int:
    """Dimension of the nilpotent orbit with Jordan type lam in gl_n."""
    lam = check_partition(lam)
    n = sum(lam)
    return n * n - sum(t * t for t in transpose(lam))


def fiber_dim(lam: Partition) -> int:
    """Dimension of the Springer fiber over the orbit of type lam:
    half the codimension of the orbit in the nilpotent cone."""
    lam = check_partition(lam)
    n = sum(lam)
    dim_cone = n * n - n
    codim = dim_cone - orbit_dim(lam)
    if codim < 0 or codim % 2:
        raise InternalError(f"odd or negative codimension {codim} for {lam}")
    return codim // 2


def dominance(mu: Partition, lam: Partition) -> bool:
    """mu <= lam in dominance order (equivalently, orbit closure order)."""
    mu, lam = check_partition(mu), check_partition(lam)
    if sum(mu) != sum(lam):
        raise InputError("dominance compares partitions of the same n")
    acc_mu = acc_lam = 0
    for k in range(max(len(mu), len(lam))):
        acc_mu += mu[k] if k < len(mu) else 0
        acc_lam += lam[k] if k < len(lam) else 0
        if acc_mu > acc_lam:
            return False
    return True


# ---------------------------------------------------------------------
# Robinson-Schensted.
# ---------------------------------------------------------------------

def check_tableau(rows) -> Tableau:
    t = tuple(tuple(int(x) for x in row) for row in rows)
    shape = tuple(len(r) for r in t)
    check_partition(shape)
    n = sum(shape)
    if sorted(x for row in t for x in row) != list(range(1, n + 1)):
        raise InputError("tableau entries must be exactly 1..n")
    for row in t:
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            raise InputError("tableau rows must strictly increase")
    for i in range(1, len(t)):
        if any(t[i][j] <= t[i - 1][j] for j in range(len(t[i]))):
            raise InputError("tableau columns must strictly increase")
    return t


def shape(t: Tableau) -> Partition:
    return tuple(len(r) for r in t)


def rs(perm) -> tuple[Tableau, Tableau]:
    """Row-insertion Robinson-Schensted: a permutation of 1..n gives a
    pair (P, Q) of standard tableaux of equal shape."""
    w = [int(x) for x in perm]
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise InputError(f"{perm!r} is not a permutation of 1..{n}")
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, x in enumerate(w, start=1):
        row = 0
        while True:
            if row == len(p):
                p.append([x])
                q.append([step])
                break
            bumped = next((j for j, y in enumerate(p[row]) if y > x), None)
            if bumped is None:
                p[row].append(x)
                q[row].append(step)
                break
            p[row][bumped], x = x, p[row][bumped]
            row += 1
    pt = tuple(tuple(r) for r in p)
    qt = tuple(tuple(r) for r in q)
    check_tableau(pt), check_tableau(qt)
    if shape(pt) != shape(qt):
        raise InternalError("insertion produced unequal shapes")
    return pt, qt


def standard_tableaux(lam: Partition) -> Iterator[Tableau]:
    """All standard Young tableaux of shape lam, by backtracking over
    which row receives each of 1..n in turn."""
    lam = check_partition(lam)
    n = sum(lam)
    rows: list[list[int]] = [[] for _ in lam]

    def rec(k: int) -> Iterator[Tableau]:
        if k > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i, row in enumerate(rows):
            if len(row) >= lam[i]:
                continue
            if i > 0 and len(rows[i - 1]) <= len(row):
                continue
            row.append(k)
            yield from rec(k + 1)
            row.pop()

    yield from rec(1)


def syt_count(lam: Partition) -> int:
    """Number of standard tableaux of shape lam = number of components
    of the Springer fiber; exhaustive count, no closed formula."""
    return sum(1 for _ in standard_tableaux(lam))


# ---------------------------------------------------------------------
# Tables.
# ---------------------------------------------------------------------

def orbit_table(n: int) -> list[dict]:
    """One row per partition of n: orbit dimension, codimension, fiber
    dimension and component count, partitions in descending lex order."""
    if n < 1:
        raise InputError("need n >= 1")
    rows = []
    for lam in partitions(n):
        rows.append({
            "partition": lam,
            "dim_orbit": orbit_dim(lam),
            "codim": orbit_dim((n,)) - orbit_dim(lam),
            "fiber_dim": fiber_dim(lam),
            "n_components": syt_count(lam),
        })
    return rows


def wiggins_divisibility(n: int) -> dict:
    """Whether dim T*B = n(n-1) is divisible by every nonzero orbit
    codimension.  Reported as an observation only; nothing asserts it."""
    total = n * (n - 1)
    codims = [row["codim"] for row in orbit_table(n) if row["codim"] != 0]
    return {
        "n": n,
        "dim_cotangent_flag": total,
        "codims": codims,
        "holds": all(total % c == 0 for c in codims),
    }
