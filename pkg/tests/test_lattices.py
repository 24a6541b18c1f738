import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g2tcs.exact import RationalMatrix
from g2tcs.lattices import (GramLattice, cokernel_presentation,
                            discriminant_form, even_dual_kernel,
                            overlattice_from_glue, quotient_by_2torsion,
                            radical_and_quotient, saturated_sum, signature)


def sym(rows):
    return GramLattice.from_rows(rows)


# ---------------------------------------------------------------- signature

def test_signature_known():
    assert signature(sym([[2, 0], [0, -2]])) == (1, 1, 0)
    assert signature(sym([[0, 1], [1, 0]])) == (1, 1, 0)
    assert signature(sym([[4, 9], [9, 8]])) == (1, 1, 0)
    assert signature(sym([[2, 2], [2, 2]])) == (1, 0, 1)


def _random_unimodular(n, rng):
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(6):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        for k in range(n):
            M[i][k] += c * M[j][k]
    return M


def test_signature_invariant_under_unimodular_change():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 4)
        G = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                G[i][j] = G[j][i] = rng.randint(-4, 4)
        U = _random_unimodular(n, rng)
        Um = RationalMatrix(U)
        G2 = (Um * RationalMatrix(G) * Um.transpose()).int_rows()
        assert signature(sym(G2)) == signature(sym(G))


# ------------------------------------------------------------------ radical

def test_radical_and_quotient_degenerate():
    # rank-4 presentation with one-dimensional radical
    W = sym([[4, 4, 5, 3], [4, 2, 2, 4], [5, 2, 4, 9], [3, 4, 9, 8]])
    radical, reduced = radical_and_quotient(W)
    assert len(radical) == 1
    assert reduced.rank == 3
    assert signature(reduced) == (2, 1, 0)


def test_radical_trivial_for_nondegenerate():
    radical, reduced = radical_and_quotient(sym([[2, 1], [1, 2]]))
    assert radical == []
    assert reduced.rank == 2


# ----------------------------------------------------------------- cokernel

def brute_force_order_counts(A, dets, max_k=8):
    """Number of cokernel classes killed by k, counted by coset enumeration."""
    m = len(A)
    M = RationalMatrix(A)
    counts = {}
    span = abs(dets)
    # enumerate representatives in the fundamental box of the image lattice
    reps = []
    from itertools import product as iproduct
    for t in iproduct(range(span), repeat=m):
        sol = M.solve(list(t))
        reps.append(t)
    # classes: t1 ~ t2 iff t1 - t2 in image (integral solution)
    classes = []
    for t in reps:
        placed = False
        for c in classes:
            d = [a - b for a, b in zip(t, c[0])]
            sol = M.solve(d)
            if sol is not None and all(x.denominator == 1 for x in sol):
                c.append(t)
                placed = True
                break
        if not placed:
            classes.append([t])
    for k in range(1, max_k + 1):
        n = 0
        for c in classes:
            t = c[0]
            kt = [k * x for x in t]
            sol = M.solve(kt)
            if sol is not None and all(x.denominator == 1 for x in sol):
                n += 1
        counts[k] = n
    return len(classes), counts


def test_cokernel_against_brute_force():
    from math import gcd
    rng = random.Random(11)
    done = 0
    while done < 25:
        n = rng.randint(1, 3)
        A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        d = RationalMatrix(A).det()
        if d == 0 or abs(d) > 24:
            continue
        pres = cokernel_presentation(A)
        assert pres.group.free_rank == 0
        assert pres.group.torsion_order == abs(d)
        total, counts = brute_force_order_counts(A, int(abs(d)))
        assert total == abs(d)
        factors = pres.group.invariant_factors
        for k, cnt in counts.items():
            expected = 1
            for f in factors:
                expected *= gcd(k, f)
            assert cnt == expected, (A, factors, k)
        done += 1


def test_cokernel_free_rank():
    pres = cokernel_presentation([[2, 0], [0, 0]])
    assert pres.group.invariant_factors == (2,)
    assert pres.group.free_rank == 1
    assert pres.order_of([1, 0]) == 2
    assert pres.order_of([0, 1]) is None
    k, x = pres.minimal_multiple_preimage([1, 0])
    assert k == 2 and [2 * x[0], 0] == [2, 0]


# --------------------------------------------------------- discriminant form

def test_discriminant_form_orders():
    rng = random.Random(13)
    done = 0
    while done < 40:
        n = rng.randint(1, 4)
        G = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                v = rng.randint(-4, 4)
                G[i][j] = G[j][i] = v
            G[i][i] = 2 * rng.randint(-3, 3)
        d = RationalMatrix(G).det()
        if d == 0:
            continue
        disc = discriminant_form(sym(G))
        assert disc.group.torsion_order == abs(d)
        # pairing is symmetric with entries in [0, 1)
        for i, row in enumerate(disc.pairing):
            for j, x in enumerate(row):
                assert 0 <= x < 1
                assert x == disc.pairing[j][i]
        done += 1


def test_discriminant_form_known():
    disc = discriminant_form(sym([[2]]))
    assert disc.group.invariant_factors == (2,)
    assert disc.pairing == ((F(1, 2),),)


def test_quotient_by_2torsion_doubles_pairing():
    disc = discriminant_form(sym([[6]]))
    assert disc.group.invariant_factors == (6,)
    q = quotient_by_2torsion(disc)
    assert q.group.invariant_factors == (3,)
    # generator pairing doubles: 2 * (1/6) = 1/3 on the order-3 part
    assert q.pairing == ((F(1, 3),),)


# -------------------------------------------------------------- overlattice

def test_overlattice_from_glue():
    base = sym([[196, 0, 98], [0, -98, 0], [98, 0, 98]])
    over = overlattice_from_glue(
        base, [[F(9, 49), F(8, 49), 0], [0, F(3, 14), F(5, 14)]])
    assert over.rank == 3
    assert over.is_even()
    # index of the base in the overlattice is 49 * 14; the determinant
    # shrinks by the square of the index: -98^3 / (49 * 14)^2 = -2
    assert over.determinant() == -2
    assert signature(over) == signature(base)


def test_overlattice_rejects_bad_glue():
    with pytest.raises(ValueError):
        overlattice_from_glue(sym([[2]]), [[F(1, 2)]])


def test_saturated_sum_rejects_fractional_pairings():
    with pytest.raises(ValueError):
        saturated_sum(sym([[2]]), [[F(1, 3)]])


# ----------------------------------------------------------- even dual part

def test_even_dual_kernel():
    # <2>: every pairing 2xy is already even, so the whole lattice qualifies
    assert even_dual_kernel(sym([[2]])) == [[1]]
    # all pairings already even
    assert even_dual_kernel(sym([[2, 4], [4, 2]])) == [[1, 0], [0, 1]]
    rows = even_dual_kernel(sym([[4, 4], [4, 2]]))
    G = RationalMatrix([[4, 4], [4, 2]])
    for r in rows:
        assert all(v % 2 == 0 for v in G.mul_vector(r))
