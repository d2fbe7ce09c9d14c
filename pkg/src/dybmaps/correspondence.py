"""Gauge correspondence between two dynamical maps sharing a ternary table.

Two triples (L1, M, pi1) and (L2, M, pi2) over the same ternary table give
maps conjugate to each other through an explicit per-weight gauge map J on
pairs.  When the second map is weight-independent the relation is a
vertex-IRF correspondence; any map in class D1 admits one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .binary import BinaryTable, Bijection, LeftQuasigroup, check_binary_condition, classify_structure, validate_left_quasigroup
from .engine import DynamicalMap, Triple, build_dyb
from .errors import AlgebraError, LQ1Violation, M1M2Violation, NotQuasigroup, OrderMismatch
from .result import PASS, CheckResult
from .ternary import TernaryTable, check_ternary_condition, make_mu_g

PairTable = tuple[tuple[tuple[tuple[int, int], ...], ...], ...]


@dataclass(frozen=True)
class CorrespondenceInstance:
    """Both maps of a shared ternary table plus the materialised gauge.

    J[lam1][u][v] is the image pair in L2 x L2; it is stored explicitly so
    a failing identity check localises to a concrete object.
    """

    L1: LeftQuasigroup
    L2: LeftQuasigroup
    M: TernaryTable
    pi1: Bijection
    pi2: Bijection
    R1: DynamicalMap
    R2: DynamicalMap
    J: PairTable

    @property
    def order(self) -> int:
        return self.L1.order

    def rho(self) -> Bijection:
        """The carrier transfer pi2^-1 o pi1: L1 -> L2."""
        return self.pi2.invert().compose(self.pi1)


def build_correspondence(
    L1: LeftQuasigroup,
    L2: LeftQuasigroup,
    M: TernaryTable,
    pi1: Bijection,
    pi2: Bijection,
) -> CorrespondenceInstance:
    """Build both maps and the gauge J(lam1) = g2^-1 o (rho x rho) o g1 o swap,

    where g_i is the two-step product map (u, v) -> (lam u, (lam u) v) of
    L_i anchored at lam1 (for g1) and rho(lam1) (for g2).
    """
    orders = {L1.order, L2.order, M.order, pi1.order, pi2.order}
    if len(orders) != 1:
        raise OrderMismatch(f"orders differ: {sorted(orders)}")
    for cond in ("M1", "M2"):
        res = check_ternary_condition(M, cond)
        if not res:
            raise M1M2Violation(cond, res.witness)
    n = M.order
    mul1, mul2 = L1.rows, L2.rows
    ld2 = L2.ldiv
    rho = tuple(pi2.inverse[pi1.map[i]] for i in range(n))

    jt = []
    for lam1 in range(n):
        rl = rho[lam1]
        lam_rows = []
        for u in range(n):
            row = []
            for v in range(n):
                t0 = mul1[lam1][v]
                t1 = mul1[t0][u]
                r0, r1 = rho[t0], rho[t1]
                row.append((ld2[rl][r0], ld2[r0][r1]))
            lam_rows.append(tuple(row))
        seen = {pair for r in lam_rows for pair in r}
        if len(seen) != n * n:
            raise AlgebraError(f"gauge at weight {lam1} is not bijective")
        jt.append(tuple(lam_rows))

    return CorrespondenceInstance(
        L1=L1,
        L2=L2,
        M=M,
        pi1=pi1,
        pi2=pi2,
        R1=build_dyb(Triple(L1, M, pi1)),
        R2=build_dyb(Triple(L2, M, pi2)),
        J=tuple(jt),
    )


def verify_irf_irf(c: CorrespondenceInstance) -> CheckResult:
    """Check R1(lam1) = J(lam1)^-1 o swap R2(rho lam1) swap o (swap J(lam1) swap)."""
    n = c.order
    rho = tuple(c.pi2.inverse[c.pi1.map[i]] for i in range(n))
    r1, r2 = c.R1.r, c.R2.r
    for lam1 in range(n):
        jt = c.J[lam1]
        jinv = {}
        for u, v in product(range(n), repeat=2):
            jinv[jt[u][v]] = (u, v)
        rl = rho[lam1]
        for u, v in product(range(n), repeat=2):
            # the inner swaps of (swap R2 swap) o (swap J swap) cancel
            x, y = jt[v][u]
            a, b = r2[rl][x][y]
            if jinv[(b, a)] != r1[lam1][u][v]:
                return CheckResult(False, (lam1, u, v))
    return PASS


def is_constant_in_lambda(R: DynamicalMap) -> bool:
    """True iff R(lam) is the same map for every weight."""
    return all(rl == R.r[0] for rl in R.r)


def vertex_counterpart(
    L: LeftQuasigroup, G: LeftQuasigroup, pi: Bijection
) -> tuple[LeftQuasigroup, DynamicalMap]:
    """Weight-independent partner of the map built from (L, variant-1 of G, pi).

    Transports G's multiplication through pi onto L's carrier:
    u o v = pi^-1(pi(u) * pi(v)).  Over that structure the second output
    component collapses to the identity and the first loses its weight
    dependence, so the resulting map solves the ordinary Yang-Baxter
    equation and is gauge-conjugate to the original.
    """
    if L.order != G.order or pi.order != L.order:
        raise OrderMismatch(f"orders differ: L={L.order}, G={G.order}, pi={pi.order}")
    res = check_binary_condition(G, "LQ1")
    if not res:
        raise LQ1Violation("LQ1", res.witness)
    n = L.order
    p = pi.map
    q = pi.inverse
    gmul = G.rows
    rows = tuple(tuple(q[gmul[p[u]][p[v]]] for v in range(n)) for u in range(n))
    L_prime = validate_left_quasigroup(BinaryTable(rows))
    R_prime = build_dyb(Triple(L_prime, make_mu_g(G, 1), pi))
    return L_prime, R_prime


def vertex_counterpart_from_map(
    L: LeftQuasigroup, R: DynamicalMap, basepoint: int = 0
) -> tuple[LeftQuasigroup, DynamicalMap]:
    """vertex_counterpart for a bare class-D1 map, via reconstruction.

    Recovers a generating left quasigroup from the extracted ternary table
    at the given basepoint and delegates to vertex_counterpart.
    """
    from .engine import extract_mu_L, reconstruct_G

    M = extract_mu_L(R)
    t = Triple(L, M, Bijection.identity(L.order))
    G, pi_prime = reconstruct_G(t, "A1", basepoint)
    return vertex_counterpart(L, G, pi_prime)


def eq26_family(G: LeftQuasigroup) -> DynamicalMap:
    """The weight-dependent family R(lam)(u, v) = (v, lam*(u\\v)).

    G must be a quasigroup satisfying LQ1.  The family lives over G's
    carrier equipped with the projection product u.v = v, equals the
    triple construction for (that structure, variant-1 table of G, id)
    entry-for-entry, and determines lam whenever |G| > 1.
    """
    flags = classify_structure(G.base)
    if not flags.is_quasigroup:
        raise NotQuasigroup("columns are not permutations")
    res = check_binary_condition(G, "LQ1")
    if not res:
        raise LQ1Violation("LQ1", res.witness)
    n = G.order
    gmul = G.rows
    gld = G.ldiv
    phi = tuple(tuple(range(n)) for _ in range(n))
    r = tuple(
        tuple(
            tuple((v, gmul[lam][gld[u][v]]) for v in range(n)) for u in range(n)
        )
        for lam in range(n)
    )
    return DynamicalMap(phi=phi, r=r)
