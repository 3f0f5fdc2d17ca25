"""The acceptance sweep: every criterion as a list of parameter cells."""

from functools import partial

from . import lattice
from .combinatorics import Partition, partitions_in_box, position_vectors
from .grothendieck import grothendieck_symbolic
from .poly import MultiPoly
from .report import IdentityReport, dumps
from .verifier import (
    rectangular_rhs_symbolic, verify_commutation, verify_correspondences, verify_duality,
    verify_guo_sun, verify_prop51, verify_q_deformed, verify_rectangular)

CRITERIA = {
    "1": "worked example, rectangular identity at n=2, m=2, k=1 (symbolic)",
    "2": "determinant, lattice and F agree on the 3x3 box, n=3, L=6",
    "3": "Guo-Sun at beta=-1, n, m <= 4",
    "4": "rectangular identity and duality, n, m <= 4",
    "5": "q-deformed identity, n, m <= 3, lattice cross-check",
    "6": "Yang-Baxter, ice rule and operator relations on chains L <= 5",
    "7": "right-block wavefunction properties, n <= 4, n-k <= 3",
}

PAIR_RELATIONS = ("3.4", "3.5", "3.6", "3.7", "4.6", "4.7", "4.8", "4.9", "5.11", "5.12")
MAX_CHAIN = 5


def worked_example_polynomial() -> MultiPoly:
    """(a1 a2 - a1 - a2 + 1)(z1 + z2 - z1 z2) + a1 + a2 - a1 a2, written out by hand."""
    g = MultiPoly.gens(("z1", "z2", "alpha1", "alpha2"))
    z1, z2, a1, a2 = g["z1"], g["z2"], g["alpha1"], g["alpha2"]
    return (a1 * a2 - a1 - a2 + 1) * (z1 + z2 - z1 * z2) + a1 + a2 - a1 * a2


def worked_example() -> IdentityReport:
    rep = IdentityReport("worked-example", {"n": 2, "m": 2, "k": 1, "beta": "-1"})
    rhs = rectangular_rhs_symbolic(2, 2, 1)
    expected = worked_example_polynomial()
    det = grothendieck_symbolic(Partition((1, 0)), 2, 2, beta=-1)
    rep.points = 1
    if rhs != expected:
        rep.fail({"mode": "symbolic"}, rhs, expected, "subset sum vs hand expansion")
    if det != expected:
        rep.fail({"mode": "symbolic"}, det, expected, "determinant vs hand expansion")
    rep.details = {"comparison": "coefficient-wise", "polynomial": str(expected)}
    return rep


def cells():
    """Yield (criterion, identity, run, size); ``run(seed=...)`` builds the report and
    ``size`` is what ``--max-n`` filters on."""
    yield "1", "worked-example", lambda seed: worked_example(), 2

    for lam in partitions_in_box(3, 3):
        yield "2", "correspondence:2.12", partial(
            verify_correspondences, "2.12", n=3, L=6, lam=lam, points=10), 3

    for n in range(1, 5):
        for m in range(1, 5):
            for k in range(1, min(n, m) + 1):
                for lam in partitions_in_box(k, m - k):
                    yield "3", "guo-sun", partial(verify_guo_sun, lam, n, m, points=5), n

    for n in range(1, 5):
        for m in range(1, 5):
            for k in range(0, min(n, m) + 1):
                yield "4", "rectangular", partial(verify_rectangular, n, m, k, points=10), n
                yield "4", "duality", partial(verify_duality, n, m, k, points=10), n

    for n in range(1, 4):
        for m in range(1, 4):
            for k in range(0, min(n, m) + 1):
                for x in position_vectors(k, m):
                    yield "5", "q-deformed", partial(verify_q_deformed, n, m, k, x, points=5), n

    rel = partial(partial, verify_commutation)
    yield "6", "commutation:2.2", rel("2.2", points=25), 1
    for L in range(1, MAX_CHAIN + 1):
        for r in PAIR_RELATIONS:
            yield "6", f"commutation:{r}", rel(r, L=L), L
        for n in range(1, 4):
            for k in range(0, n + 1):
                yield "6", "commutation:3.8", rel("3.8", L=L, n=n, k=k), max(n, L)
                yield "6", "commutation:4.10", rel("4.10", L=L, m=n, k=k), max(n, L)
                if k < n:
                    yield "6", "commutation:5.15", rel("5.15", L=L, n=n, k=k), max(n, L)
        for ell in range(0, 4):
            yield "6", "commutation:5.14", rel("5.14", L=L, ell=ell), max(ell + 1, L)

    for n in range(1, 5):
        for k in range(max(0, n - 3), n):
            yield "7", "prop51", partial(verify_prop51, n, k), n


def run_suite(seed: int = 0, max_n: int = 4, criteria=None):
    """Run the sweep and return ``[(criterion, report), ...]`` in canonical order.

    Criterion 6 also gets an ``ice-rule`` row covering every R-matrix built
    while the sweep ran.
    """
    lattice.reset_ice_audit()
    results = []
    for crit, _identity, run, size in cells():
        if size > max_n or (criteria and crit not in criteria):
            continue
        results.append((crit, run(seed=seed)))
    if not criteria or "6" in criteria:
        audit = dict(lattice.ICE_AUDIT)
        ice = IdentityReport("ice-rule", {"scope": "sweep"}, points=audit["checked"])
        if audit["violations"]:
            ice.fail({"scope": "sweep"}, audit["violations"], 0, "R-matrices violating the ice rule")
        results.append(("6", ice))
    results.sort(key=lambda cr: (int(cr[0]), cr[1].identity, dumps(cr[1].to_json()["params"])))
    return results


def suite_json(results, seed) -> dict:
    by = {}
    for crit, rep in results:
        by.setdefault(crit, []).append(rep.to_json())
    ok = all(rep.ok for _, rep in results)
    return {"seed": seed, "criteria": by, "verdict": "pass" if ok else "fail"}
