"""Shared structure builders for the test suite.

All tables are 0-based.  TABLE1 is the order-3 quasigroup with rows
(1,3,2)/(2,1,3)/(3,2,1) in 1-based labels.
"""

from itertools import permutations

from dybmaps import (
    Bijection,
    BinaryTable,
    LeftQuasigroup,
    TernaryTable,
    Triple,
    make_constant_mu,
    make_mu_g,
    validate_left_quasigroup,
)


def lq(rows) -> LeftQuasigroup:
    return validate_left_quasigroup(BinaryTable.from_rows(rows))


def cyclic(n: int) -> LeftQuasigroup:
    return lq([[(u + v) % n for v in range(n)] for u in range(n)])


def klein() -> LeftQuasigroup:
    return lq([[u ^ v for v in range(4)] for u in range(4)])


def shift(n: int) -> LeftQuasigroup:
    """The projection product u*v = v."""
    return lq([list(range(n)) for _ in range(n)])


def s3() -> LeftQuasigroup:
    """Symmetric group on 3 points, elements = permutations in lex order."""
    perms = list(permutations(range(3)))

    def compose(p, q):
        return tuple(p[q[x]] for x in range(3))

    return lq(
        [[perms.index(compose(a, b)) for b in perms] for a in perms]
    )


TABLE1 = lq([[0, 2, 1], [1, 0, 2], [2, 1, 0]])

BIJ3 = [Bijection.make(p) for p in permutations(range(3))]

GROUPS_LE6 = {
    "z1": cyclic(1),
    "z2": cyclic(2),
    "z3": cyclic(3),
    "z4": cyclic(4),
    "z5": cyclic(5),
    "z6": cyclic(6),
    "klein": klein(),
    "s3": s3(),
}

#: A ternary table on 2 elements failing the first defining identity.
NON_M1M2_FLAT = (0, 0, 0, 0, 0, 0, 1, 0)

#: Variant-1 table of Z/3 with its last cell corrupted; fails both identities.
NON_M1M2_FLAT3 = (0, 1, 2, 2, 0, 1, 1, 2, 0, 1, 2, 0, 0, 1, 2, 2, 0, 1,
                  2, 0, 1, 1, 2, 0, 0, 1, 0)


def corpus_triples() -> list[tuple[Triple, bool]]:
    """(triple, table_satisfies_identities) pairs spanning orders 1..6."""
    one = lq([[0]])
    z2, z3, z4 = cyclic(2), cyclic(3), cyclic(4)
    out = [
        (Triple(one, TernaryTable.from_flat(1, [0]), Bijection.identity(1)), True),
        (Triple(z2, make_mu_g(z2, 1), Bijection.identity(2)), True),
        (Triple(z2, TernaryTable.from_flat(2, NON_M1M2_FLAT), Bijection.identity(2)), False),
        (Triple(z2, make_constant_mu(2, [1, 1], "first"), Bijection.identity(2)), True),
        (Triple(TABLE1, make_mu_g(TABLE1, 1), Bijection.identity(3)), True),
        (Triple(TABLE1, make_mu_g(TABLE1, 2), Bijection.identity(3)), True),
        (Triple(TABLE1, make_mu_g(TABLE1, 3), Bijection.identity(3)), True),
        (Triple(TABLE1, make_mu_g(TABLE1, 1), Bijection.make((1, 2, 0))), True),
        (Triple(shift(3), make_mu_g(TABLE1, 1), Bijection.identity(3)), True),
        (Triple(z3, make_constant_mu(3, [0, 1, 2], "middle"), Bijection.make((2, 0, 1))), True),
        (Triple(z3, make_mu_g(z3, 3), Bijection.identity(3)), True),
        (Triple(z3, TernaryTable.from_flat(3, NON_M1M2_FLAT3), Bijection.identity(3)), False),
        (Triple(z4, make_mu_g(klein(), 1), Bijection.make((0, 2, 1, 3))), True),
        (Triple(s3(), make_mu_g(s3(), 1), Bijection.identity(6)), True),
    ]
    return out
