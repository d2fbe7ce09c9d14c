"""Ternary operation tables and the identities imposed on them.

A ternary table stores mu(a,b,c) flat at index (a*n + b)*n + c.  The two
identities M1 and M2 are exactly what makes the derived pair/triple maps
satisfy the braid relation, hence what makes the constructed map a
dynamical Yang-Baxter map.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from .binary import Bijection, LeftQuasigroup, check_binary_condition
from .errors import IdempotenceRequired, PreconditionFailed
from .result import PASS, CheckResult

#: Identities checkable on a ternary table:
#:   M1   mu(a, mu(a,b,c), mu(mu(a,b,c), c, d)) = mu(a, b, mu(b,c,d))
#:   M2   mu(mu(a,b,c), c, d) = mu(mu(a,b,mu(b,c,d)), mu(b,c,d), d)
#:   A11  mu(a, b, mu(b,c,d)) = mu(a, c, d)      A12  mu(a,a,b) = b
#:   A21  mu(mu(a,b,c), c, d) = mu(a, b, d)      A22  mu(a,b,b) = a
#:   A31  mu(a,b,c) = mu(d, b, mu(a,d,c))        A32  mu(a,a,b) = b
#:   U    mu(a, mu(a,b,c), c) = b   (self-inverse pair maps; unitarity)
TERNARY_CONDITIONS = ("M1", "M2", "A11", "A12", "A21", "A22", "A31", "A32", "U")

#: Identities required of each derived-from-binary family.
MU_G_PRECONDITIONS = {1: ("LQ1",), 2: ("LQ1",), 3: ("LQ22", "LQ21")}


@dataclass(frozen=True)
class TernaryTable:
    """An n^3 operation table, flat, row-major in (a, b, c)."""

    order: int
    table: tuple[int, ...]

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise ValueError("order must be >= 1")
        if len(self.table) != n**3:
            raise ValueError(f"table length {len(self.table)}, expected {n**3}")
        for i, x in enumerate(self.table):
            if not 0 <= x < n:
                raise ValueError(f"entry {i} = {x} out of range 0..{n - 1}")

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int, int], int]) -> TernaryTable:
        flat = tuple(
            int(fn(a, b, c)) for a, b, c in product(range(n), repeat=3)
        )
        return cls(n, flat)

    @classmethod
    def from_flat(cls, n: int, entries) -> TernaryTable:
        return cls(n, tuple(int(x) for x in entries))

    def mu(self, a: int, b: int, c: int) -> int:
        n = self.order
        return self.table[(a * n + b) * n + c]


def check_ternary_condition(M: TernaryTable, cond: str) -> CheckResult:
    """Exhaustively test one of TERNARY_CONDITIONS; witness is lexicographically first."""
    n = M.order
    t = M.table
    rng = range(n)

    def mu(a, b, c):
        return t[(a * n + b) * n + c]

    if cond == "M1":
        for a, b, c, d in product(rng, repeat=4):
            x = mu(a, b, c)
            if mu(a, x, mu(x, c, d)) != mu(a, b, mu(b, c, d)):
                return CheckResult(False, (a, b, c, d), cond)
        return PASS
    if cond == "M2":
        for a, b, c, d in product(rng, repeat=4):
            y = mu(b, c, d)
            if mu(mu(a, b, c), c, d) != mu(mu(a, b, y), y, d):
                return CheckResult(False, (a, b, c, d), cond)
        return PASS
    if cond == "A11":
        for a, b, c, d in product(rng, repeat=4):
            if mu(a, b, mu(b, c, d)) != mu(a, c, d):
                return CheckResult(False, (a, b, c, d), cond)
        return PASS
    if cond == "A12":
        for a, b in product(rng, repeat=2):
            if mu(a, a, b) != b:
                return CheckResult(False, (a, b), cond)
        return PASS
    if cond == "A21":
        for a, b, c, d in product(rng, repeat=4):
            if mu(mu(a, b, c), c, d) != mu(a, b, d):
                return CheckResult(False, (a, b, c, d), cond)
        return PASS
    if cond == "A22":
        for a, b in product(rng, repeat=2):
            if mu(a, b, b) != a:
                return CheckResult(False, (a, b), cond)
        return PASS
    if cond == "A31":
        for a, b, c, d in product(rng, repeat=4):
            if mu(a, b, c) != mu(d, b, mu(a, d, c)):
                return CheckResult(False, (a, b, c, d), cond)
        return PASS
    if cond == "A32":
        for a, b in product(rng, repeat=2):
            if mu(a, a, b) != b:
                return CheckResult(False, (a, b), cond)
        return PASS
    if cond == "U":
        for a, b, c in product(rng, repeat=3):
            if mu(a, mu(a, b, c), c) != b:
                return CheckResult(False, (a, b, c), cond)
        return PASS
    raise ValueError(f"unknown ternary condition {cond!r}")


def satisfies_m1m2(M: TernaryTable) -> bool:
    return bool(check_ternary_condition(M, "M1")) and bool(
        check_ternary_condition(M, "M2")
    )


def make_mu_g(G: LeftQuasigroup, variant: int, checked: bool = True) -> TernaryTable:
    """Derive a ternary table from a left quasigroup (G, *) with division \\.

    variant 1: mu(a,b,c) = a*(b\\c)
    variant 2: mu(a,b,c) = c*(b\\a)
    variant 3: mu(a,b,c) = b*(a\\c)

    Variants 1 and 2 need G to satisfy LQ1, variant 3 needs LQ22 and LQ21;
    those preconditions are what guarantees the result passes M1 and M2.
    `checked=False` skips the guard for experimentation with failing inputs.
    """
    if variant not in (1, 2, 3):
        raise ValueError(f"variant must be 1, 2 or 3, got {variant}")
    if checked:
        for cond in MU_G_PRECONDITIONS[variant]:
            res = check_binary_condition(G, cond)
            if not res:
                raise PreconditionFailed(cond, res.witness)
    mul = G.rows
    ld = G.ldiv
    n = G.order
    if variant == 1:
        fn = lambda a, b, c: mul[a][ld[b][c]]
    elif variant == 2:
        fn = lambda a, b, c: mul[c][ld[b][a]]
    else:
        fn = lambda a, b, c: mul[b][ld[a][c]]
    return TernaryTable.from_function(n, fn)


def make_constant_mu(n: int, f: Sequence[int], position: str) -> TernaryTable:
    """Projection-through-f table: mu(a,b,c) = f(a), f(b) or f(c).

    The middle position requires f to be idempotent (f(f(x)) = f(x)).
    """
    fm = tuple(int(x) for x in f)
    if len(fm) != n or any(not 0 <= x < n for x in fm):
        raise ValueError("f must map 0..n-1 into 0..n-1")
    if position == "first":
        fn = lambda a, b, c: fm[a]
    elif position == "third":
        fn = lambda a, b, c: fm[c]
    elif position == "middle":
        for x in range(n):
            if fm[fm[x]] != fm[x]:
                raise IdempotenceRequired(f"f(f({x})) = {fm[fm[x]]} != f({x}) = {fm[x]}")
        fn = lambda a, b, c: fm[b]
    else:
        raise ValueError(f"position must be first, middle or third, got {position!r}")
    return TernaryTable.from_function(n, fn)


def direct_product(M1: TernaryTable, M2: TernaryTable) -> TernaryTable:
    """Componentwise operation on pairs, with pair (a1, a2) encoded as a1*n2 + a2."""
    for M in (M1, M2):
        for cond in ("M1", "M2"):
            res = check_ternary_condition(M, cond)
            if not res:
                raise PreconditionFailed(cond, res.witness)
    n1, n2 = M1.order, M2.order

    def fn(a, b, c):
        a1, a2 = divmod(a, n2)
        b1, b2 = divmod(b, n2)
        c1, c2 = divmod(c, n2)
        return M1.mu(a1, b1, c1) * n2 + M2.mu(a2, b2, c2)

    return TernaryTable.from_function(n1 * n2, fn)


def is_ternary_hom(h, M: TernaryTable, M2: TernaryTable) -> CheckResult:
    """Check h(mu(a,b,c)) = mu'(h(a), h(b), h(c)) for all triples.

    `h` may be a Bijection or any sequence mapping M's carrier into M2's.
    """
    hm = tuple(h.map) if isinstance(h, Bijection) else tuple(int(x) for x in h)
    if len(hm) != M.order:
        raise ValueError("h must be total on the source carrier")
    if any(not 0 <= x < M2.order for x in hm):
        raise ValueError("h must land in the target carrier")
    for a, b, c in product(range(M.order), repeat=3):
        if hm[M.mu(a, b, c)] != M2.mu(hm[a], hm[b], hm[c]):
            return CheckResult(False, (a, b, c))
    return PASS


def point_maps(M: TernaryTable, a: int):
    """The pair map fixing a and the middle-slot triple map.

    Returns (s_a, s) with s_a(x, y) = (mu(a,x,y), y) and
    s(x, y, z) = (x, mu(x,y,z), z).
    """

    def s_a(x: int, y: int) -> tuple[int, int]:
        return (M.mu(a, x, y), y)

    def s(x: int, y: int, z: int) -> tuple[int, int, int]:
        return (x, M.mu(x, y, z), z)

    return s_a, s


def braid_check(M: TernaryTable) -> CheckResult:
    """Check s(a)_12 s s(a)_12 = s s(a)_12 s on all triples, for every a.

    Equivalent to M1 and M2 together; the two sides differ exactly in the
    first two slots, which reproduce the M1 and M2 instances at (a,x,y,z).
    """
    n = M.order
    t = M.table

    def mu(a, b, c):
        return t[(a * n + b) * n + c]

    for a, x, y, z in product(range(n), repeat=4):
        x1 = mu(a, x, y)
        m1 = mu(x1, y, z)
        y2 = mu(x, y, z)
        x2 = mu(a, x, y2)
        if mu(a, x1, m1) != x2 or m1 != mu(x2, y2, z):
            return CheckResult(False, (a, x, y, z))
    return PASS
