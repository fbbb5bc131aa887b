"""Cross-checks between closed forms, series and brute-force enumeration.

Each check returns a :class:`CheckResult`; :func:`run_suite` runs a named
group of them.  The ``verify`` CLI command prints the results as a table.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import mseries as ms
from .dyck import enumerate_paths, path_to_tower, tower_to_path, validate_path
from .enumerator import EnumSpec, count, count_row_convex, enumerate_row_convex, enumerate_towers, nvecs
from .exact import HnSpec, count_dyck, count_total, count_U, count_Wb
from .rowconvex import A_series, B_series, F_series, G_series, check_boundary, check_solution, f_dp, g_dp
from .tower import ClassSpec, canonicalize, collapse, is_member, is_restricted, validate

WIDTH_LISTS = [(2,), (3,), (1, 2), (2, 3)]
BIJECTION_WIDTHS = [(2,), (3,), (2, 3)]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name: str, failures: list, total: int) -> CheckResult:
    if failures:
        return CheckResult(name, False, f"{len(failures)}/{total} failed; first: {failures[0]}")
    return CheckResult(name, True, f"{total} cases")


def all_nvecs(m: int, n_max: int, n_min: int = 1):
    for n in range(n_min, n_max + 1):
        yield from nvecs(m, n)


def check_closed_forms(n_max: int = 6) -> CheckResult:
    bad, total = [], 0
    for ws in WIDTH_LISTS:
        for nv in all_nvecs(len(ws), n_max):
            n = sum(nv)
            sizes = []
            for b in range(1, n + 1):
                got = len(enumerate_towers(EnumSpec(ws, nv, ClassSpec.Wb(b))))
                sizes.append(got)
                total += 1
                if got != count_Wb(ws, nv, b):
                    bad.append((ws, nv, b, got))
            totals = (count_total(ws, nv, "sum"), count_total(ws, nv, "hyp2f1"), sum(sizes))
            total += 1
            if len(set(totals)) != 1:
                bad.append((ws, nv, "total", totals))
    return _result("count_Wb/count_total == enumeration", bad, total)


def check_domino_constants(n_max: int = 8, n_enum: int = 5) -> CheckResult:
    bad = []
    for n in range(1, n_max + 1):
        if count_total((2,), (n,)) != 4 ** (n - 1):
            bad.append(("total", n))
    restricted = ms.restricted_transform(ms.W_total((2,), n_max)).total_by_degree()
    for n in range(1, n_max + 1):
        if restricted[n] != 3 ** (n - 1):
            bad.append(("restricted series", n, restricted[n]))
    for n in range(1, n_enum + 1):
        got = count(EnumSpec((2,), (n,), ClassSpec.any_convex_bottom(), restricted=True))
        if got != 3 ** (n - 1):
            bad.append(("restricted enumeration", n, got))
    return _result("domino totals 4^(n-1), restricted 3^(n-1)", bad, 2 * n_max + n_enum)


def check_two_domino_classes() -> CheckResult:
    classes = [ClassSpec.Wb(1), ClassSpec.U(), ClassSpec.Vl(1), ClassSpec.Hl(1)]
    got = tuple(len(enumerate_towers(EnumSpec((2,), (2,), c))) for c in classes)
    ok = got == (3, 2, 6, 2)
    return CheckResult("two-domino class sizes W1,U,V1,H1 = 3,2,6,2", ok, f"got {got}")


def identity_residuals(ws, order: int = 8, s_max: int = 3, b_max: int = 3) -> dict[str, bool]:
    """Every identity relating U, V_s, H_s and W_b, as a name -> holds map."""
    m = len(ws)
    U = ms.solve_U(ws, order)
    V1 = ms.V1_series(ws, order)
    one_u = 1 + U
    W1 = ms.W_series(ws, 1, order)
    out: dict[str, bool] = {}

    def enum_series(cls: ClassSpec) -> ms.MSeries:
        n_min = 0 if cls.platform is not None else 1
        return ms.MSeries(m, order, {nv: count(EnumSpec(ws, nv, cls), cap=order) for nv in all_nvecs(m, order, n_min)})

    for s in range(1, s_max + 1):
        H = ms.H_series(ws, s, order)
        out[f"(a) H_{s} = (1+U)^{s}"] = H == enum_series(ClassSpec.Hl(s))
        out[f"(a) H_{s + 1} = H_{s}(1+U)"] = (ms.H_series(ws, s + 1, order) - H * one_u).is_zero()
        out[f"(a) V_{s} = V_1 (1+U)^{s - 1}"] = enum_series(ClassSpec.Vl(s)) == V1 * ms.mpow(one_u, s - 1)
    for b in range(1, b_max + 1):
        Wb = ms.W_series(ws, b, order)
        out[f"(a) W_{b} = W_1 U^{b - 1}"] = Wb == enum_series(ClassSpec.Wb(b)) == W1 * ms.mpow(U, b - 1)
        out[f"(e) W_{b} = U^{b - 1} euler(U) / (1+U)"] = (
            Wb - ms.mpow(U, b - 1) * ms.minverse(one_u) * ms.euler(U)
        ).is_zero()
    out["(b) U fixed point"] = ms.fixed_point_residual(ws, U).is_zero() and U == enum_series(ClassSpec.U())
    inner = sum((ms.MSeries.var(i, m, order) * ms.mpow(one_u, w - 1) * w for i, w in enumerate(ws)), ms.MSeries(m, order))
    out["(c) 1/V_1 = 1 - sum y_i s_i (1+U)^(s_i-1)"] = (ms.minverse(V1) - (1 - inner)).is_zero()
    out["(d) (1+U) W_1 = V_1 U"] = (one_u * W1 - V1 * U).is_zero()
    return out


def check_identities(order: int = 8) -> CheckResult:
    bad, total = [], 0
    for ws in WIDTH_LISTS:
        for name, ok in identity_residuals(ws, order).items():
            total += 1
            if not ok:
                bad.append((ws, name))
    return _result(f"generating-function identities to degree {order}", bad, total)


def check_series_counts(order: int = 8, n_restricted: int = 5) -> CheckResult:
    """Series coefficients against closed forms and the restricted enumerator."""
    bad, total = [], 0
    for ws in WIDTH_LISTS:
        m = len(ws)
        series = [ms.solve_U(ws, order), ms.V1_series(ws, order), ms.W_total(ws, order)]
        wbs = {b: ms.W_series(ws, b, order) for b in range(1, order + 1)}
        series += list(wbs.values())
        series += [ms.H_series(ws, s, order) for s in range(1, 4)]
        for s in series:
            total += 1
            if not s.is_nonneg_integral():
                bad.append((ws, "integrality"))
        for nv in all_nvecs(m, order):
            n = sum(nv)
            for b in range(1, n + 1):
                total += 1
                if wbs[b][nv] != count_Wb(ws, nv, b):
                    bad.append((ws, nv, b))
            total += 1
            if series[0][nv] != count_U(ws, nv):
                bad.append((ws, nv, "U"))
        restricted = ms.restricted_transform(ms.W_total(ws, order))
        for nv in all_nvecs(m, n_restricted):
            total += 1
            got = count(EnumSpec(ws, nv, ClassSpec.any_convex_bottom(), restricted=True))
            if got != restricted[nv]:
                bad.append((ws, nv, "restricted", got, restricted[nv]))
        total += 1
        if ms.unrestricting_transform(restricted) != ms.W_total(ws, order):
            bad.append((ws, "substitution round trip"))
    return _result("series coefficients == closed forms and restricted enumeration", bad, total)


def check_bijection(n_max: int = 5, n_identity: int = 12) -> CheckResult:
    bad, total = [], 0
    for ws in BIJECTION_WIDTHS:
        for nv in all_nvecs(len(ws), n_max):
            towers = enumerate_towers(EnumSpec(ws, nv, ClassSpec.U()))
            spec = HnSpec.from_towers(ws, nv)
            paths = list(enumerate_paths(spec))
            total += 1
            if not len(towers) == len(paths) == count_dyck(spec):
                bad.append((ws, nv, "cardinality", len(towers), len(paths)))
            for t in towers:
                total += 1
                p = tower_to_path(t)
                if not validate_path(p) or path_to_tower(p, ws) != t:
                    bad.append((ws, nv, t.to_json()))
            for p in paths:
                total += 1
                if tower_to_path(path_to_tower(p, ws)) != p:
                    bad.append((ws, nv, str(p)))
        for nv in all_nvecs(len(ws), n_identity):
            total += 1
            if count_dyck(HnSpec.from_towers(ws, nv)) != count_U(ws, nv):
                bad.append((ws, nv, "identity"))
    return _result("U <-> Dyck path bijection and path-count identity", bad, total)


def check_rowconvex(ell_max: int = 5, n_max: int = 20, order: int = 24) -> CheckResult:
    bad, total = [], 0
    for k in (2, 3, 4):
        for ell in range(1, ell_max + 1):
            coeffs = F_series(ell, k, n_max + 1).integers()
            for n in range(n_max + 1):
                total += 1
                if coeffs[n] != f_dp(ell, n, k):
                    bad.append(("F", k, ell, n))
        g = G_series(k, n_max + 1).integers()
        for n in range(1, n_max + 1):
            total += 1
            if g[n] != g_dp(n, k):
                bad.append(("G", k, n))
        families = {
            "A": lambda l, k=k: A_series(l, k, order),
            "B": lambda l, k=k: B_series(l, k, order),
            "F": lambda l, k=k: F_series(l, k, order),
        }
        for name, fam in families.items():
            total += 1
            if not check_solution(fam, k, range(1, 5)).passed:
                bad.append(("recurrence", name, k))
        total += 1
        if not check_boundary(families["F"], k).passed:
            bad.append(("boundary", k))
    for k in (2, 3):
        for ell in range(1, 4):
            for n in range(6):
                total += 1
                if len(enumerate_row_convex(ell, n, k)) != f_dp(ell, n, k):
                    bad.append(("geometric", k, ell, n))
    return _result("row-convex closed form == recurrence == geometry", bad, total)


def check_tower_properties(n_max: int = 5) -> CheckResult:
    """Enumerated towers are valid members, unique, canonical, and collapse to restricted towers."""
    bad, total = [], 0
    for ws in WIDTH_LISTS:
        for nv in all_nvecs(len(ws), n_max):
            for cls in (ClassSpec.any_convex_bottom(), ClassSpec.U(), ClassSpec.Vl(2), ClassSpec.Hl(1)):
                towers = enumerate_towers(EnumSpec(ws, nv, cls))
                total += 1
                if len({t.key() for t in towers}) != len(towers):
                    bad.append((ws, nv, str(cls), "duplicate"))
                for t in towers:
                    if validate(t) is not None or not is_member(t, cls):
                        bad.append((ws, nv, str(cls), t.to_json()))
                    if cls.platform is not None:
                        continue
                    if canonicalize(t) != t or canonicalize(t.shifted(5)) != t:
                        bad.append((ws, nv, str(cls), "canonical", t.to_json()))
                    if not is_restricted(collapse(t)):
                        bad.append((ws, nv, str(cls), "collapse", t.to_json()))
    return _result("enumerated towers: valid, members, unique, canonical", bad, total)


def check_geometric_g(n_max: int = 5) -> CheckResult:
    got = {n: count_row_convex(n, 2) for n in range(1, n_max + 1)}
    bad = [(n, c) for n, c in got.items() if c != g_dp(n, 2)]
    return _result("free row-convex domino towers == g(n)", bad, n_max)


SUITES: dict[str, list[Callable[[], CheckResult]]] = {
    "counts": [check_closed_forms],
    "constants": [check_domino_constants, check_two_domino_classes],
    "identities": [check_identities, check_series_counts],
    "bijection": [check_bijection],
    "rowconvex": [check_rowconvex, check_geometric_g],
    "towers": [check_tower_properties],
}
SUITES["all"] = [c for name in ("counts", "constants", "identities", "bijection", "rowconvex", "towers") for c in SUITES[name]]


def run_suite(name: str = "all") -> list[CheckResult]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return [check() for check in SUITES[name]]
