r"""Construction and exhaustive verification of dynamical Yang-Baxter maps.

A dynamical map is a family R(lambda) of self-maps of X x X indexed by a
weight set H, together with a shift phi: H x X -> H.  The central
construction takes a triple (L, M, pi) of a left quasigroup, a ternary
table and a bijection and produces such a family over H = X = L with
phi(lambda, u) = lambda*u:

    xi_lam(u)(v)  = lam \ pi^-1( mu(pi(lam), pi(lam*u), pi((lam*u)*v)) )
    eta_lam(v)(u) = (lam * xi_lam(u)(v)) \ ((lam*u)*v)
    R(lam)(u, v)  = (eta_lam(v)(u), xi_lam(u)(v))

By construction (lam * xi) * eta = (lam*u)*v, the invariance condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .binary import (
    BinaryTable,
    Bijection,
    LeftQuasigroup,
    classify_structure,
    validate_left_quasigroup,
)
from .errors import (
    ClassViolation,
    IndexOutOfRange,
    InvarianceViolated,
    M1M2Violation,
    NotAGroup,
    NotALoop,
    NotLeftQuasigroup,
    OrderMismatch,
    ShapeMismatch,
    UnitNotPreserved,
)
from .result import PASS, CheckResult
from .ternary import TernaryTable, check_ternary_condition

D_CLASSES = ("D1", "D2", "D3")
A_CLASSES = ("A1", "A2", "A3")

#: Membership identities per reconstruction class.
A_CLASS_CONDITIONS = {"A1": ("A11", "A12"), "A2": ("A21", "A22"), "A3": ("A31", "A32")}

PairRows = tuple[tuple[tuple[tuple[int, int], ...], ...], ...]


@dataclass(frozen=True)
class DynamicalMap:
    """A weight-indexed family of maps on X x X plus the weight shift.

    phi[lam][u] is the shifted weight; r[lam][u][v] is the output pair.
    """

    phi: tuple[tuple[int, ...], ...]
    r: PairRows

    @property
    def weight_order(self) -> int:
        return len(self.phi)

    @property
    def set_order(self) -> int:
        return len(self.phi[0])

    def apply(self, lam: int, u: int, v: int) -> tuple[int, int]:
        return self.r[lam][u][v]

    def sigma(self, lam: int, u: int, v: int) -> tuple[int, int]:
        """The braiding companion: output of R(lam) with slots swapped."""
        a, b = self.r[lam][u][v]
        return (b, a)

    def __repr__(self) -> str:
        return f"DynamicalMap(weight_order={self.weight_order}, set_order={self.set_order})"


@dataclass(frozen=True)
class Triple:
    """Input triple: left quasigroup L, ternary table M, bijection pi: L -> M."""

    L: LeftQuasigroup
    M: TernaryTable
    pi: Bijection

    def __post_init__(self):
        if not (self.L.order == self.M.order == self.pi.order):
            raise OrderMismatch(
                f"orders differ: L={self.L.order}, M={self.M.order}, pi={self.pi.order}"
            )


def build_dyb(t: Triple, checked: bool = True) -> DynamicalMap:
    """Construct the dynamical map of a triple by direct evaluation.

    With `checked` (the default) the ternary table must satisfy M1 and M2,
    which is exactly the condition for the result to solve the dynamical
    Yang-Baxter equation.  `checked=False` builds from arbitrary tables so
    the failure direction can be exercised.
    """
    if checked:
        for cond in ("M1", "M2"):
            res = check_ternary_condition(t.M, cond)
            if not res:
                raise M1M2Violation(cond, res.witness)
    n = t.L.order
    mul = t.L.rows
    ld = t.L.ldiv
    p = t.pi.map
    q = t.pi.inverse
    mt = t.M.table
    r = []
    for lam in range(n):
        plam_n = p[lam] * n
        lam_rows = []
        for u in range(n):
            lu = mul[lam][u]
            base = (plam_n + p[lu]) * n
            row = []
            for v in range(n):
                luv = mul[lu][v]
                xi = ld[lam][q[mt[base + p[luv]]]]
                eta = ld[mul[lam][xi]][luv]
                row.append((eta, xi))
            lam_rows.append(tuple(row))
        r.append(tuple(lam_rows))
    return DynamicalMap(phi=mul, r=tuple(r))


def eval_xi(R: DynamicalMap, lam: int, u: int, v: int) -> int:
    """Second output slot of R(lam)(u, v)."""
    _check_indices(R, lam, u, v)
    return R.r[lam][u][v][1]


def eval_eta(R: DynamicalMap, lam: int, v: int, u: int) -> int:
    """First output slot of R(lam)(u, v); note the (v, u) argument order."""
    _check_indices(R, lam, u, v)
    return R.r[lam][u][v][0]


def _check_indices(R: DynamicalMap, lam: int, u: int, v: int) -> None:
    if not (0 <= lam < R.weight_order and 0 <= u < R.set_order and 0 <= v < R.set_order):
        raise IndexOutOfRange(f"(lam,u,v)=({lam},{u},{v})")


def verify_qdybe(R: DynamicalMap) -> CheckResult:
    """Check the dynamical Yang-Baxter equation on every (lam, u, v, w).

    Legs 1 and 2 act on the first two slots, and so on; a leg whose weight
    argument carries a slot superscript reads that slot of the tuple it is
    applied to.  Both sides are evaluated right to left.
    """
    h = R.weight_order
    nx = R.set_order
    r = R.r
    phi = R.phi
    rngx = range(nx)
    for lam in range(h):
        rlam = r[lam]
        for u in rngx:
            ru = rlam[u]
            for v in rngx:
                a, b = ru[v]
                for w in rngx:
                    # left side: legs 12, then 13 shifted by slot 2, then 23
                    c, d = r[phi[lam][b]][a][w]
                    e, f = rlam[b][d]
                    # right side: legs 23 shifted by slot 1, then 13,
                    # then 12 shifted by slot 3
                    p2, q2 = r[phi[lam][u]][v][w]
                    s2, t2 = rlam[u][q2]
                    x2, y2 = r[phi[lam][t2]][s2][p2]
                    if c != x2 or e != y2 or f != t2:
                        return CheckResult(False, (lam, u, v, w))
    return PASS


def verify_braiding(R: DynamicalMap) -> CheckResult:
    """Check the braid-type equation for sigma = swap o R.

    Agreement with verify_qdybe on every input is itself a tested property.
    """
    h = R.weight_order
    nx = R.set_order
    r = R.r
    phi = R.phi

    def sig(lam, x, y):
        o = r[lam][x][y]
        return o[1], o[0]

    for lam, u, v, w in product(range(h), range(nx), range(nx), range(nx)):
        a, b = sig(lam, u, v)
        c, d = sig(phi[lam][a], b, w)
        l1, l2 = sig(lam, a, c)
        p2, q2 = sig(phi[lam][u], v, w)
        g, hh = sig(lam, u, p2)
        m1, m2 = sig(phi[lam][g], hh, q2)
        if (l1, l2, d) != (g, m1, m2):
            return CheckResult(False, (lam, u, v, w))
    return PASS


def _weight_multiplication(R: DynamicalMap):
    """Interpret phi as a left-quasigroup multiplication; ShapeMismatch otherwise."""
    if R.weight_order != R.set_order:
        raise ShapeMismatch(
            f"weight order {R.weight_order} != set order {R.set_order}"
        )
    try:
        L = validate_left_quasigroup(BinaryTable.from_rows(R.phi))
    except (NotLeftQuasigroup, ValueError) as exc:
        raise ShapeMismatch(f"phi is not a left-quasigroup multiplication: {exc}") from exc
    return L.rows, L.ldiv


def verify_invariance(R: DynamicalMap) -> CheckResult:
    """Check (lam*xi)*eta = (lam*u)*v with * read off the weight shift."""
    mul, _ = _weight_multiplication(R)
    n = R.set_order
    r = R.r
    for lam, u, v in product(range(n), repeat=3):
        eta, xi = r[lam][u][v]
        if mul[mul[lam][xi]][eta] != mul[mul[lam][u]][v]:
            return CheckResult(False, (lam, u, v))
    return PASS


def verify_unitary(R: DynamicalMap) -> CheckResult:
    """Check R(lam) swap R(lam) = swap for every weight."""
    r = R.r
    for lam in range(R.weight_order):
        rlam = r[lam]
        for u, v in product(range(R.set_order), repeat=2):
            a, b = rlam[u][v]
            if rlam[b][a] != (v, u):
                return CheckResult(False, (lam, u, v))
    return PASS


def extract_mu_L(R: DynamicalMap) -> TernaryTable:
    """Recover the ternary table mu(a,b,c) = a * xi_a(a\\b)(b\\c) from the map.

    Requires the invariance condition; on a map built from a triple the
    bijection pi carries this table homomorphically onto the original one.
    """
    mul, ld = _weight_multiplication(R)
    inv = verify_invariance(R)
    if not inv:
        raise InvarianceViolated(f"invariance fails at {inv.witness}")
    n = R.set_order
    r = R.r

    def fn(a, b, c):
        u = ld[a][b]
        v = ld[b][c]
        return mul[a][r[a][u][v][1]]

    return TernaryTable.from_function(n, fn)


def check_D_class(R: DynamicalMap, cls: str) -> CheckResult:
    """Exhaustively test membership of (L, R) in one of the map classes D1-D3.

    Each class pairs a four-variable composition law on the output
    components with a normalisation law; the failing sub-condition is
    named in the result label.
    """
    if cls not in D_CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    mul, ld = _weight_multiplication(R)
    n = R.set_order
    r = R.r

    def xi(lam, u, v):
        return r[lam][u][v][1]

    rng = range(n)
    if cls == "D1":
        for lam, u, v, w in product(rng, repeat=4):
            lu = mul[lam][u]
            if xi(lam, u, xi(lu, v, w)) != xi(lam, ld[lam][mul[lu][v]], w):
                return CheckResult(False, (lam, u, v, w), "composition")
        for lam, w in product(rng, repeat=2):
            if xi(lam, ld[lam][lam], w) != w:
                return CheckResult(False, (lam, w), "normalisation")
        return PASS
    if cls == "D2":
        for lam, u, v, w in product(rng, repeat=4):
            eta_uv, xi_uv = r[lam][u][v]
            lx = mul[lam][xi_uv]
            lu = mul[lam][u]
            luv = mul[lu][v]
            lhs = mul[lx][xi(lx, eta_uv, w)]
            rhs = mul[lam][xi(lam, u, ld[lu][mul[luv][w]])]
            if lhs != rhs:
                return CheckResult(False, (lam, u, v, w), "composition")
        for lam, u in product(rng, repeat=2):
            lu = mul[lam][u]
            if xi(lam, u, ld[lu][lu]) != ld[lam][lam]:
                return CheckResult(False, (lam, u), "normalisation")
        return PASS
    for lam, u, v, w in product(rng, repeat=4):
        lu = mul[lam][u]
        lv = mul[lam][v]
        lw = mul[lam][w]
        inner = xi(lu, ld[lu][lam], w)
        lhs = mul[lam][xi(lam, v, ld[lv][mul[lu][inner]])]
        rhs = mul[lu][xi(lu, ld[lu][lv], ld[lv][lw])]
        if lhs != rhs:
            return CheckResult(False, (lam, u, v, w), "composition")
    for lam, w in product(rng, repeat=2):
        if xi(lam, ld[lam][lam], w) != w:
            return CheckResult(False, (lam, w), "normalisation")
    return PASS


def reconstruct_G(
    t: Triple, cls: str, basepoint: int = 0
) -> tuple[LeftQuasigroup, Bijection]:
    """Rebuild a generating left quasigroup and bijection from a class member.

    For a triple whose ternary table satisfies the membership identities of
    `cls` (A1, A2 or A3), returns (G, pi_prime) such that the triple
    (L, derived table of G, pi_prime) is equivalent to `t`: the composite
    pi o pi_prime^-1 is a ternary homomorphism onto t.M and the rebuilt
    dynamical map coincides with the original.

    The basepoint is an arbitrary element of L; different choices give
    isomorphic results, not necessarily equal tables.
    """
    if cls not in A_CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    for cond in A_CLASS_CONDITIONS[cls]:
        res = check_ternary_condition(t.M, cond)
        if not res:
            raise ClassViolation(cond, res.witness)
    n = t.L.order
    if not 0 <= basepoint < n:
        raise IndexOutOfRange(f"basepoint {basepoint} outside 0..{n - 1}")
    lam = basepoint
    mul = t.L.rows
    ld = t.L.ldiv
    p = t.pi.map
    mu = t.M.mu
    q = t.pi.inverse

    if cls == "A1":
        star = lambda a, b: ld[lam][q[mu(p[mul[lam][a]], p[lam], p[mul[lam][b]])]]
    elif cls == "A2":
        star = lambda a, b: ld[lam][q[mu(p[mul[lam][b]], p[lam], p[mul[lam][a]])]]
    else:
        star = lambda a, b: ld[lam][q[mu(p[lam], p[mul[lam][a]], p[mul[lam][b]])]]

    rows = tuple(tuple(star(a, b) for b in range(n)) for a in range(n))
    G = validate_left_quasigroup(BinaryTable(rows))
    pi_prime = Bijection.make(tuple(ld[lam][u] for u in range(n)))
    return G, pi_prime


def is_D_morphism(f, V, V2) -> bool:
    """Is f: L -> L' a multiplication-preserving map intertwining the two maps?

    V and V2 are (LeftQuasigroup, DynamicalMap) pairs; f may be a Bijection
    or a sequence.  Checks f(u*v) = f(u)*'f(v) and
    R'(f(lam))(f(u), f(v)) = (f x f)(R(lam)(u, v)) for all inputs.
    """
    L, R = V
    L2, R2 = V2
    fm = tuple(f.map) if isinstance(f, Bijection) else tuple(int(x) for x in f)
    if len(fm) != L.order or any(not 0 <= x < L2.order for x in fm):
        return False
    n = L.order
    mul, mul2 = L.rows, L2.rows
    for u, v in product(range(n), repeat=2):
        if fm[mul[u][v]] != mul2[fm[u]][fm[v]]:
            return False
    for lam, u, v in product(range(n), repeat=3):
        a, b = R.r[lam][u][v]
        if R2.r[fm[lam]][fm[u]][fm[v]] != (fm[a], fm[b]):
            return False
    return True


def conjugation_selfcheck(t: Triple) -> bool:
    """Recompute the map through its factorisations and compare.

    Three identities are checked exhaustively: the pair-map factorisation
    of R(lam) through the anchored pair map of M conjugated by the
    two-step product map, and the two triple-leg factorisations of the
    braiding through the three-step product map.  They hold for every
    triple by pure algebra, independent of M1/M2, so False indicates an
    implementation bug.
    """
    R = build_dyb(t, checked=False)
    n = t.L.order
    mul = t.L.rows
    ld = t.L.ldiv
    p = t.pi.map
    q = t.pi.inverse
    mu = t.M.mu
    r = R.r

    for lam, u, v in product(range(n), repeat=3):
        x1 = mul[lam][u]
        x2 = mul[x1][v]
        y1 = q[mu(p[lam], p[x1], p[x2])]
        # swap o (two-step)^-1 o (pi x pi)^-1 o s(pi(lam)) o (pi x pi) o two-step
        if (ld[y1][x2], ld[lam][y1]) != r[lam][u][v]:
            return False

    for lam, u, v, w in product(range(n), repeat=4):
        a1 = mul[lam][u]
        a2 = mul[a1][v]
        a3 = mul[a2][w]
        eta_uv, xi_uv = r[lam][u][v]
        # legs 1-2 route: conjugate s(pi(lam)) on the first two slots
        b1 = q[mu(p[lam], p[a1], p[a2])]
        got = (ld[lam][b1], ld[b1][a2], ld[a2][a3])
        if got != (xi_uv, eta_uv, w):
            return False
        # legs 2-3 route: conjugate the middle-slot triple map
        c2 = q[mu(p[a1], p[a2], p[a3])]
        got = (ld[lam][a1], ld[a1][c2], ld[c2][a3])
        eta_vw, xi_vw = r[mul[lam][u]][v][w]
        if got != (u, xi_vw, eta_vw):
            return False
    return True


def build_theta_dyb(LP, G, pi: Bijection) -> DynamicalMap:
    """Construct the map of a loop/group pair through translation defects.

    LP must be a loop and G a group (both as LeftQuasigroup or BinaryTable)
    with pi carrying the unit of LP to the unit of G.  For each u the
    translation defect theta(u)(x) = pi(u)^-1 * pi(u * pi^-1(x)) is a
    bijection of G; the second output component is
    pi^-1(theta(lam)^-1(theta(lam*u)(pi(v)))) and the first follows from
    the invariance condition.  The result must agree entry-for-entry with
    the triple construction applied to (LP, variant-1 table of G, pi).
    """
    LP = _as_left_quasigroup(LP)
    G = _as_left_quasigroup(G)
    flags_lp = classify_structure(LP.base)
    if not flags_lp.is_loop:
        raise NotALoop("first structure has no two-sided unit or is not a quasigroup")
    flags_g = classify_structure(G.base)
    if not flags_g.is_group:
        raise NotAGroup("second structure is not an associative loop")
    if LP.order != G.order or pi.order != LP.order:
        raise OrderMismatch(
            f"orders differ: LP={LP.order}, G={G.order}, pi={pi.order}"
        )
    e_g = flags_g.identity
    if pi.map[flags_lp.identity] != e_g:
        raise UnitNotPreserved(
            f"pi({flags_lp.identity}) = {pi.map[flags_lp.identity]} != {e_g}"
        )
    n = LP.order
    lmul = LP.rows
    ld = LP.ldiv
    gmul = G.rows
    gld = G.ldiv
    p = pi.map
    q = pi.inverse
    ginv = tuple(gld[g][e_g] for g in range(n))

    theta = []
    theta_inv = []
    for u in range(n):
        row = tuple(gmul[ginv[p[u]]][p[lmul[u][q[x]]]] for x in range(n))
        back = [-1] * n
        for x, y in enumerate(row):
            back[y] = x
        assert -1 not in back, "translation defect is not bijective"
        theta.append(row)
        theta_inv.append(tuple(back))

    r = []
    for lam in range(n):
        ti = theta_inv[lam]
        lam_rows = []
        for u in range(n):
            th = theta[lmul[lam][u]]
            lu = lmul[lam][u]
            row = []
            for v in range(n):
                xi = q[ti[th[p[v]]]]
                eta = ld[lmul[lam][xi]][lmul[lu][v]]
                row.append((eta, xi))
            lam_rows.append(tuple(row))
        r.append(tuple(lam_rows))
    return DynamicalMap(phi=lmul, r=tuple(r))


def _as_left_quasigroup(x) -> LeftQuasigroup:
    if isinstance(x, LeftQuasigroup):
        return x
    if isinstance(x, BinaryTable):
        return validate_left_quasigroup(x)
    return validate_left_quasigroup(BinaryTable.from_rows(x))
