"""Acceptance criteria, one test each.  All comparisons are exact.

A PASS/FAIL line per criterion is printed in the terminal summary (see
conftest.py).
"""
import random
from fractions import Fraction

from somino import mseries as ms
from somino.dyck import DyckPath, enumerate_paths, path_to_tower, tower_to_path, validate_path
from somino.enumerator import EnumSpec, count, enumerate_row_convex, enumerate_towers, nvecs
from somino.exact import HnSpec, count_dyck, count_total, count_U, count_Wb
from somino.rowconvex import A_series, B_series, F_series, G_series, check_boundary, check_solution, f_dp, g_dp
from somino.series import Series
from somino.tower import ClassSpec, canonicalize, validate

WIDTH_LISTS = [(2,), (3,), (1, 2), (2, 3)]


def all_nvecs(m, n_max, n_min=1):
    for n in range(n_min, n_max + 1):
        yield from nvecs(m, n)


def test_1_closed_forms_match_enumeration():
    for ws in WIDTH_LISTS:
        for nv in all_nvecs(len(ws), 6):
            per_b = [len(enumerate_towers(EnumSpec(ws, nv, ClassSpec.Wb(b)))) for b in range(1, sum(nv) + 1)]
            assert [count_Wb(ws, nv, b) for b in range(1, sum(nv) + 1)] == per_b, (ws, nv)
            assert count_total(ws, nv, "sum") == count_total(ws, nv, "hyp2f1") == sum(per_b), (ws, nv)


def test_2_domino_constants():
    restricted = ms.restricted_transform(ms.W_total((2,), 8))
    for n in range(1, 9):
        assert count_total((2,), (n,)) == count_total((2,), (n,), "hyp2f1") == 4 ** (n - 1)
        assert restricted[(n,)] == 3 ** (n - 1)
    for n in range(1, 6):
        spec = EnumSpec((2,), (n,), ClassSpec.any_convex_bottom(), restricted=True)
        assert len(enumerate_towers(spec)) == 3 ** (n - 1)


def test_3_two_domino_class_sizes():
    sizes = [len(enumerate_towers(EnumSpec((2,), (2,), ClassSpec.parse(c)))) for c in ("W1", "U", "V1", "H1")]
    assert sizes == [3, 2, 6, 2]


def _enumerated(ws, cls, order):
    n_min = 0 if cls.platform is not None else 1
    return ms.MSeries(len(ws), order, {nv: count(EnumSpec(ws, nv, cls), cap=order) for nv in all_nvecs(len(ws), order, n_min)})


def _check_identities(ws):
    N = 8
    m = len(ws)
    U = ms.solve_U(ws, N)
    one_u = 1 + U
    V1 = ms.V1_series(ws, N)
    W1 = ms.W_series(ws, 1, N)
    # (a) platform and bottom-row decompositions, each side from independent sources
    for s in (1, 2, 3):
        assert _enumerated(ws, ClassSpec.Hl(s), N) == ms.mpow(one_u, s)
        assert _enumerated(ws, ClassSpec.Vl(s), N) == V1 * ms.mpow(one_u, s - 1)
    for b in (1, 2, 3):
        assert _enumerated(ws, ClassSpec.Wb(b), N) == W1 * ms.mpow(U, b - 1)
    # (b) fixed point, and agreement with the enumerated U
    rhs = sum((ms.MSeries.var(i, m, N) * ms.mpow(one_u, w) for i, w in enumerate(ws)), ms.MSeries(m, N))
    assert (U - rhs).is_zero()
    assert U == _enumerated(ws, ClassSpec.U(), N)
    # (c)
    inner = sum((ms.MSeries.var(i, m, N) * ms.mpow(one_u, w - 1) * w for i, w in enumerate(ws)), ms.MSeries(m, N))
    assert (ms.minverse(V1) - (1 - inner)).is_zero()
    # (d)
    assert (one_u * W1 - V1 * U).is_zero()
    # (e) with the derivative written as the Euler operator
    for b in (1, 2, 3):
        assert (ms.W_series(ws, b, N) - ms.mpow(U, b - 1) * ms.minverse(one_u) * ms.euler(U)).is_zero()


def test_4_series_identities():
    for ws in WIDTH_LISTS:
        _check_identities(ws)


def test_5_bijection():
    for ws in [(2,), (3,), (2, 3)]:
        for nv in all_nvecs(len(ws), 5):
            towers = enumerate_towers(EnumSpec(ws, nv, ClassSpec.U()))
            spec = HnSpec.from_towers(ws, nv)
            paths = list(enumerate_paths(spec))
            assert len(towers) == len(paths) == count_dyck(spec), (ws, nv)
            assert all(path_to_tower(tower_to_path(t), ws) == t for t in towers)
            assert all(tower_to_path(path_to_tower(p, ws)) == p for p in paths)
        for nv in all_nvecs(len(ws), 12):
            assert count_dyck(HnSpec.from_towers(ws, nv)) == count_U(ws, nv), (ws, nv)


def test_6_row_convex():
    for k in (2, 3, 4):
        for ell in range(1, 6):
            assert F_series(ell, k, 21).integers() == [f_dp(ell, n, k) for n in range(21)], (ell, k)
        assert G_series(k, 21).integers()[1:] == [g_dp(n, k) for n in range(1, 21)]
        for family in (A_series, B_series, F_series):
            report = check_solution(lambda l: family(l, k, 24), k, range(1, 5))
            assert report.passed, (family.__name__, k, report.failures())
        assert check_boundary(lambda l: F_series(l, k, 24), k).passed
    for k in (2, 3):
        for ell in range(1, 4):
            for n in range(6):
                assert len(enumerate_row_convex(ell, n, k)) == f_dp(ell, n, k), (ell, n, k)


def test_7_property_suites():
    rng = random.Random(20260101)

    # validator and canonical form
    for ws, nv in [((2, 3), (2, 2)), ((1, 2), (3, 1)), ((3,), (4,))]:
        for t in enumerate_towers(EnumSpec(ws, nv, ClassSpec.any_convex_bottom())):
            assert validate(t) is None
            d = rng.randint(-40, 40)
            c = canonicalize(t.shifted(d))
            assert c == t and canonicalize(c) == c
            if d:
                assert validate(t.shifted(d)) is not None

    # path prefix sums
    for pairs in [[(3, 1)], [(2, 1), (2, 2)], [(1, 1), (1, 2), (1, 3)]]:
        spec = HnSpec(pairs)
        for p in enumerate_paths(spec):
            levels = p.levels()
            assert validate_path(p) and min(levels) >= 0 and levels[-1] == 0
        word = list(p.word)
        rng.shuffle(word)
        q = DyckPath(spec, word)
        assert validate_path(q) == (min(q.levels()) >= 0)

    # ring axioms on a seeded corpus of small series
    def rand_series():
        return Series([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(6)])

    for _ in range(200):
        a, b, c = rand_series(), rand_series(), rand_series()
        assert a + b == b + a and a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a[0]:
            assert a * a.inverse() == Series.one(6)

    # integrality of every generating-function output
    for ws in WIDTH_LISTS:
        gfs = [ms.solve_U(ws, 8), ms.V1_series(ws, 8), ms.W_total(ws, 8), ms.restricted_transform(ms.W_total(ws, 8))]
        gfs += [ms.W_series(ws, b, 8) for b in (1, 2, 3)]
        gfs += [ms.H_series(ws, s, 8) for s in (1, 2, 3)] + [ms.V_series(ws, s, 8) for s in (1, 2, 3)]
        assert all(g.is_nonneg_integral() for g in gfs)
    for k in (2, 3, 4):
        assert all(F_series(ell, k, 24).is_integral() for ell in range(1, 6))
        assert G_series(k, 24).is_integral()
