"""Independent brute-force checks used by the test suite.

None of these call into the code paths they are used to check.
"""

import itertools
import math
import random
from fractions import Fraction

import numpy as np


def halfplane_facets_2d(vertices):
    """Edges of a polygon by testing the line through every vertex pair."""
    out = set()
    for a, b in itertools.combinations(vertices, 2):
        nx, ny = b[1] - a[1], a[0] - b[0]
        g = math.gcd(nx, ny)
        nx, ny = nx // g, ny // g
        vals = [nx * x + ny * y for x, y in vertices]
        h = nx * a[0] + ny * a[1]
        if max(vals) == h:
            out.add(((nx, ny), h))
        elif min(vals) == h:
            out.add(((-nx, -ny), -h))
    return out


def cramer_solve(rows, rhs):
    """Solve a square system by Cramer's rule with Leibniz determinants."""
    n = len(rows)

    def leibniz(m):
        total = 0
        for perm in itertools.permutations(range(n)):
            inv = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
            total += (-1) ** inv * math.prod(m[i][perm[i]] for i in range(n))
        return total

    d = leibniz(rows)
    if d == 0:
        return None
    out = []
    for k in range(n):
        m = [list(r) for r in rows]
        for i in range(n):
            m[i][k] = rhs[i]
        out.append(Fraction(leibniz(m), d))
    return tuple(out)


def vertices_from_halfspaces(facets, n):
    """Intersect every n-subset of facet hyperplanes and keep feasible points."""
    pts = set()
    for subset in itertools.combinations(facets, n):
        x = cramer_solve([v for v, _ in subset], [h for _, h in subset])
        if x is None:
            continue
        if all(sum(a * b for a, b in zip(v, x)) <= h for v, h in facets):
            pts.add(x)
    return pts


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        total += (-1) ** inv * math.prod(m[i][perm[i]] for i in range(n))
    return total


def determinantal_divisors(m):
    """Invariant factors from gcds of k x k minors."""
    rows, cols = len(m), len(m[0])
    divisors = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                g = math.gcd(g, leibniz_det([[m[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        divisors.append(g)
    return tuple(divisors[k] // divisors[k - 1] for k in range(1, len(divisors)))


def random_unimodular(rng: random.Random, n: int, bound: int = 50, steps: int = 12):
    """Product of random elementary matrices, entries kept within ``bound``."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        kind = rng.random()
        trial = [row[:] for row in m]
        if kind < 0.15 or n == 1:
            trial[i] = [-x for x in trial[i]]
        elif kind < 0.3:
            trial[i], trial[j] = trial[j], trial[i]
        else:
            c = rng.choice([-3, -2, -1, 1, 2, 3])
            trial[i] = [x + c * y for x, y in zip(trial[i], trial[j])]
        if max(abs(x) for row in trial for x in row) <= bound:
            m = trial
    return tuple(tuple(r) for r in m)


def apply_rows(m, pts):
    return [tuple(sum(m[i][k] * p[k] for k in range(len(p))) for i in range(len(m))) for p in pts]


def bijection_equivalent(a, b):
    """Search vertex bijections for an integral unimodular linear map from a onto b."""
    if len(a) != len(b):
        return False
    n = len(a[0])
    sb = set(b)
    for basis in itertools.combinations(range(len(a)), n):
        A = [a[i] for i in basis]
        if leibniz_det(A) == 0:
            continue
        for image in itertools.permutations(range(len(b)), n):
            B = [b[i] for i in image]
            # g A^T = B^T, i.e. row r of g solves A g_r = (column r of B)
            rows = [cramer_solve(A, [B[k][r] for k in range(n)]) for r in range(n)]
            if any(x.denominator != 1 for row in rows for x in row):
                continue
            g = [[int(x) for x in row] for row in rows]
            if abs(leibniz_det(g)) != 1:
                continue
            if set(apply_rows(g, a)) == sb:
                return True
        return False
    return False


def matrix_box_equivalent_2d(a, b):
    """Exhaustive search over 2x2 integer matrices with a provably sufficient entry bound.

    If g maps a onto b then g = B A^{-1} for two independent vertices, and
    |adj(A)| <= max|a|, |det A| >= 1 bound each entry by 2 max|a| max|b|.
    Each row of g must send every vertex of a to a coordinate of b, so rows
    are filtered independently over the full box before pairing.
    """
    if len(a) != len(b):
        return False
    K = 2 * max(abs(x) for p in a for x in p) * max(abs(x) for p in b for x in p)
    r = np.arange(-K, K + 1)
    g0, g1 = np.meshgrid(r, r, indexing="ij")
    cand = np.stack([g0.ravel(), g1.ravel()], axis=1)
    A = np.array(a, dtype=np.int64)
    B = np.array(b, dtype=np.int64)
    images = cand @ A.T  # (candidates, vertices)
    rows = []
    for coord in range(2):
        ok = np.isin(images, B[:, coord]).all(axis=1)
        rows.append(cand[ok])
    sb = set(map(tuple, b))
    for r0 in rows[0]:
        for r1 in rows[1]:
            if abs(int(r0[0]) * int(r1[1]) - int(r0[1]) * int(r1[0])) != 1:
                continue
            g = ((int(r0[0]), int(r0[1])), (int(r1[0]), int(r1[1])))
            if set(apply_rows(g, a)) == sb:
                return True
    return False


def markov_triple_loop(limit):
    """All a <= b <= c <= limit with a^2 + b^2 + c^2 = 3abc by a full (a, b, c) scan."""
    out = set()
    v = np.arange(1, limit + 1, dtype=np.int64)
    sq = v * v
    for a in range(1, limit + 1):
        b, c = v[a - 1:, None], v[None, a - 1:]
        hit = (a * a + sq[a - 1:, None] + sq[None, a - 1:] == 3 * a * b * c) & (b <= c)
        for i, j in zip(*np.nonzero(hit)):
            out.add((a, int(b[i, 0]), int(c[0, j])))
    return out


def markov_pair_scan(limit):
    """Scan every (a, b) and solve the quadratic for c exactly."""
    out = set()
    for a in range(1, limit + 1):
        for b in range(a, limit + 1):
            disc = 9 * a * a * b * b - 4 * (a * a + b * b)
            if disc < 0:
                continue
            s = math.isqrt(disc)
            if s * s != disc:
                continue
            for c2 in (3 * a * b + s, 3 * a * b - s):
                if c2 % 2 == 0 and b <= c2 // 2 <= limit:
                    out.add((a, b, c2 // 2))
    return out


def t_shape_brute_force(r, q):
    for d in range(1, r + 1):
        for n in range(1, r + 1):
            if d * n * n != r:
                continue
            for a in range(1, r + 1):
                if math.gcd(a, n) == 1 and (d * n * a - 1 - q) % r == 0:
                    return True
    return False
