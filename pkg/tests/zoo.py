"""Randomly generated small pentads (with module blocks) for property tests.

All generated pentads are standard by construction: the algebra is abelian,
the representation is diagonal, B0 is a random symmetric invertible Gram
(invariance is automatic for abelian algebras), and the dual side is the
contragredient with the identity pairing.
"""

import random

from gradedlie.catalog import (
    adjoint_pentad,
    char2_pentad,
    gl1_sl_pentad,
    gl1gl1sl2_modules,
    sl2,
    sl2_trace_form,
)
from gradedlie.liealg import BilinearForm, LieAlgebra, Representation, contragredient
from gradedlie.linalg import Matrix, rank
from gradedlie.pentad import Pentad
from gradedlie.scalars import QQ, PrimeField


def _diag(entries, field):
    n = len(entries)
    return Matrix([[entries[i] if i == j else field.zero() for j in range(n)]
                   for i in range(n)], field=field, cols=n)


def random_abelian_pentad(rng, field=QQ, max_g=2, max_v=3):
    """A standard pentad with abelian g acting by random diagonal weights."""
    k = rng.randint(1, max_g)
    d = rng.randint(1, max_v)
    g = LieAlgebra.abelian(k, field=field)
    ops = [_diag([field.from_int(rng.randint(-2, 2)) for _ in range(d)], field)
           for _ in range(k)]
    rho = Representation(g, d, ops)
    while True:
        entries = [[0] * k for _ in range(k)]
        for i in range(k):
            for j in range(i, k):
                entries[i][j] = entries[j][i] = field.from_int(rng.randint(-3, 3))
        gram = Matrix(entries, field=field, cols=k)
        if rank(gram) == k:
            break
    return Pentad.build(g, rho, BilinearForm(gram))


def random_diagonal_module(rng, pentad, max_dim=2):
    """Module blocks (pi, varpi, pairing0) with diagonal weights over the
    same abelian algebra; varpi = -pi keeps the pairing invariant."""
    field = pentad.field
    du = rng.randint(1, max_dim)
    ops = [_diag([field.from_int(rng.randint(-2, 2)) for _ in range(du)], field)
           for _ in range(pentad.g.dim)]
    pi = Representation(pentad.g, du, ops)
    varpi = Representation(pentad.g, du, [-op for op in ops])
    return pi, varpi, Matrix.identity(du, field=field)


def random_pentads(seed=0, count=6):
    """A reproducible list of (pentad, module) pairs over Q and GF(3)."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        p = random_abelian_pentad(rng)
        out.append((p, random_diagonal_module(rng, p)))
    rng3 = random.Random(seed + 1)
    p3 = random_abelian_pentad(rng3, field=PrimeField(3))
    out.append((p3, random_diagonal_module(rng3, p3)))
    return out


def bundled_pentads():
    """The bundled examples, each with a module block for module properties."""
    out = []
    sl3 = gl1_sl_pentad(2)
    out.append((sl3, (sl3.rho, sl3.dual, sl3.pairing)))
    p, pi, varpi, pairing0 = gl1gl1sl2_modules()
    out.append((p, (pi, varpi, pairing0)))
    adj = adjoint_pentad(sl2(), sl2_trace_form())
    out.append((adj, (adj.rho, adj.dual, adj.pairing)))
    c2 = char2_pentad()
    out.append((c2, (c2.rho, contragredient(c2.rho),
                     Matrix.identity(2, field=c2.field))))
    return out
