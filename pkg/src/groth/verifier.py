"""Exact multi-point verification of the Grothendieck identities and lattice relations.

Each ``verify_*`` function evaluates the two sides of one identity by
independent code paths at seeded rational points and returns an
:class:`~groth.report.IdentityReport`. A single nonzero residual fails the
report and is recorded with its full assignment.
"""

from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

from . import lattice
from .combinatorics import (
    Partition, PositionVector, build_mu, k_subsets, partition_from_positions,
    partitions_in_box, position_vectors, positions_from_partition, u_to_z, w_to_alpha)
from .errors import ProfileViolation
from .exact import (
    avoid, distinct, names, prod, sample_points, scalar)
from .grothendieck import (
    FactorialAlphabet, factorial_power, grothendieck_det, grothendieck_symbolic, oplus,
    variable_names)
from .lattice import (
    SpinState, apply_string, barred_monodromy_element, barred_wavefunction,
    left_block_element, monodromy_element, operator_product, wavefunction)
from .poly import MultiPoly
from .report import IdentityReport
from .symfuncs import F_bar, F_of

MINUS_ONE = Fraction(-1)


def _rect(n: int, m: int, k: int) -> Partition:
    return Partition((m - k,) * (n - k) + (0,) * k)


# -- Guo-Sun ------------------------------------------------------------------------


def guo_sun_rhs(lam: Partition, z: Sequence, alphabet: FactorialAlphabet, m: int) -> Fraction:
    """Subset expansion of ``G_mu`` in terms of ``G_lam`` on k-subsets of the z's."""
    n, k = len(z), len(lam)
    beta = alphabet.beta
    total = Fraction(0)
    for split in k_subsets(n, k):
        S, Sbar = split.chosen, split.complement
        g = grothendieck_det(lam, [z[i - 1] for i in S], alphabet)
        num = prod((1 + beta * z[i - 1]) ** (n - k) for i in S)
        num *= prod(factorial_power(z[j - 1], alphabet, m) for j in Sbar)
        den = prod(z[j - 1] - z[i - 1] for i in S for j in Sbar)
        total += g * num / den
    return total


def verify_guo_sun(lam: Partition, n: int, m: int, beta=MINUS_ONE, points: int = 25,
                   seed: int = 0) -> IdentityReport:
    beta = scalar(beta)
    k = len(lam)
    mu = build_mu(lam, m, n)
    M = m + n - k
    zs, als = names("z", n), names("alpha", M)
    report = IdentityReport("guo-sun", {"lambda": lam, "n": n, "m": m, "k": k, "beta": str(beta)})
    for pt in sample_points(seed, zs + als, [distinct(*zs)], points):
        z = pt.family("z", n)
        alphabet = FactorialAlphabet(pt.family("alpha", M), beta)
        report.compare(pt, grothendieck_det(mu, z, alphabet), guo_sun_rhs(lam, z, alphabet, m))
        report.points += 1
    return report


# -- rectangular identity and duality --------------------------------------------------


def rectangular_rhs(z: Sequence, alphas: Sequence, m: int, k: int, beta=MINUS_ONE) -> Fraction:
    n = len(z)
    total = Fraction(0)
    for split in k_subsets(m, k):
        S, Sbar = split.chosen, split.complement
        num = prod((1 - alphas[i - 1]) ** (m - k) for i in S)
        num *= prod(oplus(zi, alphas[j - 1], beta) for j in Sbar for zi in z)
        den = prod(alphas[j - 1] - alphas[i - 1] for i in S for j in Sbar)
        total += num / den
    return total


def duality_lhs(z: Sequence, alphas: Sequence, m: int, k: int, beta=MINUS_ONE) -> Fraction:
    n = len(z)
    total = Fraction(0)
    for split in k_subsets(n, k):
        S, Sbar = split.chosen, split.complement
        num = prod((1 - z[i - 1]) ** (n - k) for i in S)
        num *= prod(oplus(z[j - 1], alphas[i], beta) for j in Sbar for i in range(m))
        den = prod(z[j - 1] - z[i - 1] for i in S for j in Sbar)
        total += num / den
    return total


def _rect_alphabet_size(n, m, k):
    return max(m, m - k + n - 1 if n > k else 0)


def rectangular_rhs_symbolic(n: int, m: int, k: int, M: int = None) -> MultiPoly:
    """The rectangular subset sum expanded as a polynomial (beta = -1).

    Each term is put over the Vandermonde of ``alpha_1..alpha_m`` and the
    total is divided back exactly.
    """
    M = _rect_alphabet_size(n, m, k) if M is None else M
    vars_ = variable_names(n, M)
    g = MultiPoly.gens(vars_)
    one = MultiPoly.constant(1, vars_)
    z = [g[f"z{i}"] for i in range(1, n + 1)]
    a = [g[f"alpha{i}"] for i in range(1, m + 1)]
    vander = one
    for i in range(m):
        for j in range(i + 1, m):
            vander = vander * (a[j] - a[i])
    total = MultiPoly.constant(0, vars_)
    for split in k_subsets(m, k):
        S, Sbar = split.chosen, split.complement
        num = one
        for i in S:
            num = num * (one - a[i - 1]) ** (m - k)
        for j in Sbar:
            for zi in z:
                num = num * (zi + a[j - 1] - zi * a[j - 1])
        den = one
        for i in S:
            for j in Sbar:
                den = den * (a[j - 1] - a[i - 1])
        total = total + num * vander.divexact(den)
    return total.divexact(vander)


def verify_rectangular(n: int, m: int, k: int, points: int = 25, seed: int = 0,
                       symbolic: bool = False) -> IdentityReport:
    if not 0 <= k <= min(n, m):
        raise ProfileViolation(f"need 0 <= k <= min(n, m), got n={n}, m={m}, k={k}")
    mu = _rect(n, m, k)
    M = _rect_alphabet_size(n, m, k)
    params = {"n": n, "m": m, "k": k}
    if symbolic:
        report = IdentityReport("rectangular", dict(params, mode="symbolic"))
        lhs = grothendieck_symbolic(mu, n, M, beta=-1)
        rhs = rectangular_rhs_symbolic(n, m, k, M)
        report.points = 1
        if lhs != rhs:
            report.fail({"mode": "symbolic"}, lhs, rhs, "coefficient-wise")
        report.details = {"comparison": "coefficient-wise", "terms": len(lhs.terms),
                          "polynomial": str(lhs)}
        return report
    zs, als = names("z", n), names("alpha", M)
    report = IdentityReport("rectangular", params)
    for pt in sample_points(seed, zs + als, [distinct(*zs), distinct(*als[:m])], points):
        z, alphas = pt.family("z", n), pt.family("alpha", M)
        lhs = grothendieck_det(mu, z, FactorialAlphabet(alphas, MINUS_ONE))
        report.compare(pt, lhs, rectangular_rhs(z, alphas, m, k))
        report.points += 1
    return report


def verify_duality(n: int, m: int, k: int, points: int = 25, seed: int = 0) -> IdentityReport:
    if not 0 <= k <= min(n, m):
        raise ProfileViolation(f"need 0 <= k <= min(n, m), got n={n}, m={m}, k={k}")
    zs, als = names("z", n), names("alpha", m)
    report = IdentityReport("duality", {"n": n, "m": m, "k": k})
    for pt in sample_points(seed, zs + als, [distinct(*zs), distinct(*als)], points):
        z, alphas = pt.family("z", n), pt.family("alpha", m)
        report.compare(pt, duality_lhs(z, alphas, m, k), rectangular_rhs(z, alphas, m, k))
        report.points += 1
    return report


def verify_consistency_triangle(n: int, m: int, k: int, points: int = 10,
                                seed: int = 0) -> IdentityReport:
    """Guo-Sun at lambda = 0^k, the rectangular identity and duality agree pointwise.

    At each point the four quantities G_rect (determinant), the Guo-Sun
    subset sum, the duality z-side sum and the rectangular alpha-side sum
    must coincide.
    """
    lam = Partition((0,) * k)
    M = m + n - k
    zs, als = names("z", n), names("alpha", M)
    report = IdentityReport("consistency-triangle", {"n": n, "m": m, "k": k})
    for pt in sample_points(seed, zs + als, [distinct(*zs), distinct(*als[:m])], points):
        z, alphas = pt.family("z", n), pt.family("alpha", M)
        alphabet = FactorialAlphabet(alphas, MINUS_ONE)
        g_rect = grothendieck_det(_rect(n, m, k), z, alphabet)
        gs = guo_sun_rhs(lam, z, alphabet, m)
        dz = duality_lhs(z, alphas, m, k)
        da = rectangular_rhs(z, alphas, m, k)
        report.compare(pt, g_rect, gs, "guo-sun")
        report.compare(pt, gs, dz, "guo-sun vs duality z-side")
        report.compare(pt, dz, da, "duality")
        report.compare(pt, g_rect, da, "rectangular")
        report.points += 1
    return report


# -- q-deformed identity ---------------------------------------------------------------


def _a_sequences(y: Sequence[int]):
    """Tuples (a_1..a_r) with a_j in 1..y_j and a_j distinct from earlier entries."""
    def rec(j, chosen):
        if j == len(y):
            yield tuple(chosen)
            return
        for a in range(1, y[j] + 1):
            if a not in chosen:
                yield from rec(j + 1, chosen + [a])
    yield from rec(0, [])


def string_coefficient(u: Sequence, w_left: Sequence, y: Sequence[int], a: Sequence[int], q) -> Fraction:
    """Coefficient of ``prod_{j not in a} B(u_j)|Omega>`` produced by the D insertions at rows y."""
    coeff = Fraction(1)
    for j, (yj, aj) in enumerate(zip(y, a)):
        ua = u[aj - 1]
        earlier = set(a[:j])
        upto = set(a[:j + 1])
        coeff *= prod(ua - wi for wi in w_left)
        coeff *= prod(ua - q * u[b - 1] for b in range(1, yj) if b not in earlier)
        coeff /= prod(ua - u[b - 1] for b in range(1, yj + 1) if b not in upto)
    return coeff


def q_deformed_rhs(u: Sequence, w: Sequence, x: PositionVector, m: int, q) -> Fraction:
    n = len(u)
    k = len(x)
    r = n - k
    w_left, w_right = list(w[:m]), list(w[m:])
    total = Fraction(0)
    for y in combinations(range(1, n + 1), r):
        fbar = F_bar(w_right, u, y, q)
        if not fbar:
            continue
        for a in _a_sequences(y):
            coeff = string_coefficient(u, w_left, y, a, q)
            rest = [u[b - 1] for b in range(1, n + 1) if b not in a]
            total += coeff * fbar * F_of(rest, w_left, x, q)
    return total


def _full_positions(x: PositionVector, m: int, n: int) -> PositionVector:
    k = len(x)
    return PositionVector(tuple(x.positions) + tuple(range(m + 1, m + n - k + 1)), m + n - k)


def verify_q_deformed(n: int, m: int, k: int, x: PositionVector, points: int = 10, seed: int = 0,
                      lattice_check: bool = True) -> IdentityReport:
    if len(x) != k or x.length != m:
        raise ProfileViolation(f"x must be {k} positions on [1, {m}], got {x}")
    L = m + n - k
    us, ws = names("u", n), names("w", L)
    cons = [distinct(*us), distinct(*ws), avoid(["q"], [0, 1])]
    full = _full_positions(x, m, n)
    report = IdentityReport("q-deformed", {"n": n, "m": m, "k": k, "x": x})
    for pt in sample_points(seed, us + ws + ["q"], cons, points):
        u, w, q = pt.family("u", n), pt.family("w", L), pt["q"]
        lhs = F_of(u, w, full, q)
        report.compare(pt, lhs, q_deformed_rhs(u, w, x, m, q), "nested sum")
        if lattice_check:
            report.compare(pt, wavefunction(u, w, full, q), lhs, "lattice wavefunction")
        report.points += 1
    return report


# -- operator relations -------------------------------------------------------------------


def _spectral_point(seed, count, prefix="u", with_w=0, q_general=False, points=1):
    vs = names(prefix, count)
    ws = names("w", with_w)
    cons = [distinct(*vs)]
    if ws:
        cons.append(distinct(*ws))
    var = vs + ws
    if q_general:
        var = var + ["q"]
        cons.append(avoid(["q"], [0, 1]))
    return sample_points(seed, var, cons, points)


RELATIONS = ("2.2", "3.4", "3.5", "3.6", "3.7", "3.8", "3.11", "4.6", "4.7", "4.8", "4.9",
             "4.10", "4.11", "4.13", "5.11", "5.12", "5.13", "5.14", "5.15")

Q_ZERO_RELATIONS = {"3.4", "3.5", "3.6", "3.7", "3.8", "3.11", "4.6", "4.7", "4.8", "4.9",
                    "4.10", "4.11", "4.13"}


def _op_compare(report, pt, lhs, rhs, check=""):
    witness = lhs.difference_witness(rhs)
    if witness is not None:
        report.fail(pt, lhs.column(witness), rhs.column(witness),
                    (check + " " if check else "") + "column " + "".join(map(str, witness)))


def _state_compare(report, pt, lhs: SpinState, rhs: SpinState, check=""):
    if lhs != rhs:
        report.fail(pt, lhs.amplitudes, rhs.amplitudes, check)


def verify_commutation(relation: str, L: int = 3, n: int = 3, k: int = 1, m: int = 3,
                       ell: int = 2, points: int = 1, seed: int = 0) -> IdentityReport:
    """Check one operator or state relation entry-exactly on a chain of length ``L``.

    ``n, k`` size the multi-operator relations (3.8, 5.15); ``m, k`` size 4.10
    and 4.13 (which act on ``L`` auxiliary spaces); ``ell`` sizes 5.14.
    """
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}; choose from {', '.join(RELATIONS)}")
    params = {"relation": relation, "L": L}
    if relation in ("3.8", "5.15"):
        params.update(n=n, k=k)
    elif relation in ("4.10", "4.13"):
        params.update(m=m, k=k)
    elif relation == "5.14":
        params.update(ell=ell)
    report = IdentityReport(f"commutation:{relation}", params)
    fn = _RELATION_CHECKS[relation]
    for i in range(points):
        fn(report, L=L, n=n, k=k, m=m, ell=ell, seed=f"{seed}:{i}")
        report.points += 1
    return report


def _rel_yang_baxter(report, seed, **_):
    (pt,) = _spectral_point(seed, 3, q_general=True)
    u1, u2, u3 = pt.family("u", 3)
    lhs, rhs = lattice.yang_baxter_sides(u1, u2, u3, pt["q"])
    if lhs != rhs:
        report.fail(pt, lhs, rhs, "8x8")
    for a, b in ((u1, u2), (u1, u3), (u2, u3)):
        if not lattice.r_matrix(a, b, pt["q"]).ice_rule_holds():
            report.fail(pt, "ice rule", "violated", "ice")


def _pair_ops(pt, L, q, kinds=("B", "D")):
    u1, u2 = pt["u1"], pt["u2"]
    w = pt.family("w", L)
    return {f"{kd}{i}": monodromy_element(kd, uv, w, q)
            for kd in kinds for i, uv in ((1, u1), (2, u2))}


def _rel_3_4(report, L, seed, **_):
    (pt,) = _spectral_point(seed, 2, with_w=L)
    o = _pair_ops(pt, L, 0)
    u1, u2 = pt["u1"], pt["u2"]
    rhs = (u1 / (u1 - u2)) * (o["B2"] @ o["D1"]) - (u2 / (u1 - u2)) * (o["B1"] @ o["D2"])
    _op_compare(report, pt, o["D1"] @ o["B2"], rhs)


def _rel_3_5(report, L, seed, **_):
    (pt,) = _spectral_point(seed, 2, with_w=L)
    o = _pair_ops(pt, L, 0)
    _op_compare(report, pt, o["D1"] @ o["B2"], o["D2"] @ o["B1"])


def _commute(kind, general_q):
    def check(report, L, seed, **_):
        (pt,) = _spectral_point(seed, 2, with_w=L, q_general=general_q)
        q = pt["q"] if general_q else 0
        o = _pair_ops(pt, L, q, kinds=(kind,))
        _op_compare(report, pt, o[f"{kind}1"] @ o[f"{kind}2"], o[f"{kind}2"] @ o[f"{kind}1"])
    return check


def _rel_3_8(report, L, n, k, seed, **_):
    (pt,) = _spectral_point(seed, n, with_w=L)
    u, w = pt.family("u", n), pt.family("w", L)
    B = {j: monodromy_element("B", u[j - 1], w, 0) for j in range(1, n + 1)}
    D = {j: monodromy_element("D", u[j - 1], w, 0) for j in range(1, n + 1)}
    lhs = operator_product([D[j] for j in range(k + 1, n + 1)] + [B[j] for j in range(1, k + 1)])
    rhs = None
    for split in k_subsets(n, k):
        S, Sbar = split.chosen, split.complement
        coeff = prod(u[j - 1] / (u[j - 1] - u[i - 1]) for i in S for j in Sbar)
        term = coeff * operator_product([B[i] for i in S] + [D[j] for j in Sbar])
        rhs = term if rhs is None else rhs + term
    _op_compare(report, pt, lhs, rhs)


def _rel_d_vacuum(general_q):
    def check(report, L, seed, **_):
        (pt,) = _spectral_point(seed, 1, with_w=L, q_general=general_q)
        q = pt["q"] if general_q else 0
        w = pt.family("w", L)
        u = pt["u1"]
        got = monodromy_element("D", u, w, q).apply(SpinState.vacuum(L))
        want = prod(u - wi for wi in w) * SpinState.vacuum(L)
        _state_compare(report, pt, got, want)
    return check


def _barred_pair(pt, L, kinds):
    u = pt.family("u", L)
    return {f"{kd}{i}": barred_monodromy_element(kd, pt[f"w{i}"], u, 0)
            for kd in kinds for i in (1, 2)}


def _barred_point(seed, L, count=2):
    (pt,) = sample_points(seed, names("u", L) + names("w", count),
                          [distinct(*names("u", L)), distinct(*names("w", count))], 1)
    return pt


def _rel_4_6(report, L, seed, **_):
    pt = _barred_point(seed, L)
    o = _barred_pair(pt, L, ("A", "C"))
    w1, w2 = pt["w1"], pt["w2"]
    rhs = (w2 / (w2 - w1)) * (o["C2"] @ o["A1"]) - (w1 / (w2 - w1)) * (o["C1"] @ o["A2"])
    _op_compare(report, pt, o["A1"] @ o["C2"], rhs)


def _rel_4_7(report, L, seed, **_):
    pt = _barred_point(seed, L)
    o = _barred_pair(pt, L, ("A", "C"))
    _op_compare(report, pt, o["A1"] @ o["C2"], o["A2"] @ o["C1"])


def _barred_commute(kind):
    def check(report, L, seed, **_):
        pt = _barred_point(seed, L)
        o = _barred_pair(pt, L, (kind,))
        _op_compare(report, pt, o[f"{kind}1"] @ o[f"{kind}2"], o[f"{kind}2"] @ o[f"{kind}1"])
    return check


def _rel_4_10(report, L, m, k, seed, **_):
    pt = _barred_point(seed, L, m)
    u, w = pt.family("u", L), pt.family("w", m)
    A = {j: barred_monodromy_element("A", w[j - 1], u, 0) for j in range(1, m + 1)}
    C = {j: barred_monodromy_element("C", w[j - 1], u, 0) for j in range(1, m + 1)}
    lhs = operator_product([A[j] for j in range(k + 1, m + 1)] + [C[j] for j in range(1, k + 1)])
    rhs = None
    for split in k_subsets(m, k):
        S, Sbar = split.chosen, split.complement
        coeff = prod(w[i - 1] / (w[i - 1] - w[j - 1]) for i in S for j in Sbar)
        term = coeff * operator_product([C[j] for j in S] + [A[j] for j in Sbar])
        rhs = term if rhs is None else rhs + term
    _op_compare(report, pt, lhs, rhs)


def _rel_4_11(report, L, seed, **_):
    pt = _barred_point(seed, L, 1)
    u, w = pt.family("u", L), pt["w1"]
    full = SpinState.basis((1,) * L)
    got = barred_monodromy_element("A", w, u, 0).apply(full)
    _state_compare(report, pt, got, prod(ui - w for ui in u) * full)


def _rel_4_13(report, L, m, k, seed, **_):
    pt = _barred_point(seed, L, m)
    u, w = pt.family("u", L), pt.family("w", m)
    target = (0,) * k + (1,) * (L - k)
    for split in k_subsets(m, k):
        ops = [barred_monodromy_element("C", w[j - 1], u, 0) for j in split.chosen]
        got = apply_string(ops, SpinState.basis((1,) * L)).amplitude(target)
        want = prod(ui ** k for ui in u)
        if got != want:
            report.fail(pt, got, want, f"S={split.chosen}")


def _rel_5_11(report, L, seed, **_):
    (pt,) = _spectral_point(seed, 2, with_w=L, q_general=True)
    q = pt["q"]
    o = _pair_ops(pt, L, q)
    u1, u2 = pt["u1"], pt["u2"]
    rhs = ((u1 - q * u2) / (u1 - u2)) * (o["B2"] @ o["D1"]) \
        + (((q - 1) * u2) / (u1 - u2)) * (o["B1"] @ o["D2"])
    _op_compare(report, pt, o["D1"] @ o["B2"], rhs)


def _rel_5_14(report, L, ell, seed, **_):
    (pt,) = _spectral_point(seed, ell + 1, with_w=L, q_general=True)
    q = pt["q"]
    u, w = pt.family("u", ell + 1), pt.family("w", L)
    B = [monodromy_element("B", uj, w, q) for uj in u]
    vac = SpinState.vacuum(L)
    lhs = apply_string(B[:ell] + [monodromy_element("D", u[ell], w, q)], vac)
    rhs = SpinState(L)
    for kk in range(ell + 1):
        uk = u[kk]
        coeff = prod(uk - wi for wi in w) * prod(uk - q * u[j] for j in range(ell))
        coeff /= prod(uk - u[j] for j in range(ell + 1) if j != kk)
        rhs = rhs + coeff * apply_string([B[j] for j in range(ell + 1) if j != kk], vac)
    _state_compare(report, pt, lhs, rhs)


def _rel_5_15(report, L, n, k, seed, **_):
    (pt,) = _spectral_point(seed, n, with_w=L, q_general=True)
    q = pt["q"]
    u, w = pt.family("u", n), pt.family("w", L)
    B = [monodromy_element("B", uj, w, q) for uj in u]
    D = [monodromy_element("D", uj, w, q) for uj in u]
    vac = SpinState.vacuum(L)
    for y in combinations(range(1, n + 1), n - k):
        ys = set(y)
        lhs = apply_string([D[j - 1] if j in ys else B[j - 1] for j in range(1, n + 1)], vac)
        rhs = SpinState(L)
        for a in _a_sequences(y):
            coeff = string_coefficient(u, w, y, a, q)
            rhs = rhs + coeff * apply_string([B[j - 1] for j in range(1, n + 1) if j not in a], vac)
        _state_compare(report, pt, lhs, rhs, f"y={y}")


_RELATION_CHECKS = {
    "2.2": _rel_yang_baxter,
    "3.4": _rel_3_4,
    "3.5": _rel_3_5,
    "3.6": _commute("B", False),
    "3.7": _commute("D", False),
    "3.8": _rel_3_8,
    "3.11": _rel_d_vacuum(False),
    "4.6": _rel_4_6,
    "4.7": _rel_4_7,
    "4.8": _barred_commute("A"),
    "4.9": _barred_commute("C"),
    "4.10": _rel_4_10,
    "4.11": _rel_4_11,
    "4.13": _rel_4_13,
    "5.11": _rel_5_11,
    "5.12": _commute("B", True),
    "5.13": _rel_d_vacuum(True),
    "5.14": _rel_5_14,
    "5.15": _rel_5_15,
}


# -- correspondences -------------------------------------------------------------------------


CORRESPONDENCES = ("2.10", "2.12", "3.1", "3.2", "3.13", "4.3", "4.4", "5.1", "5.2", "5.4", "5.16")


def _lattice_point_set(seed, n, L, points, general_q):
    us, ws = names("u", n), names("w", L)
    var = us + ws
    # u = 1 maps to z = 0, which is harmless; the u's only need to be distinct
    cons = [distinct(*us)]
    if general_q:
        var = var + ["q"]
        cons += [distinct(*ws), avoid(["q"], [0, 1])]
    return sample_points(seed, var, cons, points)


def _grothendieck_side(lam, u, w, L):
    """``prod_j u_j^L G_lam(z|alpha)`` with ``z = 1 - 1/u`` and ``alpha = 1 - w``."""
    z = u_to_z(u)
    g = grothendieck_det(lam, z, FactorialAlphabet(w_to_alpha(w), MINUS_ONE))
    return prod(uj ** L for uj in u) * g


def verify_correspondences(which: str, n: int = 2, m: int = 2, k: int = 1, L: int = None,
                           lam: Partition = None, x: PositionVector = None, points: int = 10,
                           seed: int = 0) -> IdentityReport:
    """Compare lattice wavefunctions against the symmetric-function or determinant side.

    ``2.10`` and ``2.12`` sweep every configuration with ``n`` particles on
    ``L`` sites; ``3.x`` and ``4.x`` use the ``(n, m, k, lam)`` profile;
    ``5.x`` use ``(n, m, k)`` and the left-block positions ``x`` (all of
    them when omitted).
    """
    if which not in CORRESPONDENCES:
        raise ValueError(f"unknown correspondence {which!r}; choose from {', '.join(CORRESPONDENCES)}")
    return _CORRESPONDENCE_CHECKS[which](n=n, m=m, k=k, L=L, lam=lam, x=x, points=points, seed=seed)


def _corr_2_10(n, L, points, seed, **_):
    L = L if L is not None else n + 2
    rep = IdentityReport("correspondence:2.10", {"n": n, "L": L})
    for pt in _lattice_point_set(seed, n, L, points, True):
        u, w, q = pt.family("u", n), pt.family("w", L), pt["q"]
        for x in position_vectors(n, L):
            rep.compare(pt, wavefunction(u, w, x, q), F_of(u, w, x, q), f"x={x.positions}")
        rep.points += 1
    return rep


def _corr_2_12(n, L, lam, points, seed, **_):
    L = L if L is not None else n + 2
    shapes = [lam] if lam is not None else list(partitions_in_box(n, L - n))
    rep = IdentityReport("correspondence:2.12", {"n": n, "L": L} | ({"lambda": lam} if lam else {}))
    for pt in _lattice_point_set(seed, n, L, points, False):
        u, w = pt.family("u", n), pt.family("w", L)
        for shape in shapes:
            x = positions_from_partition(shape, L)
            wf = wavefunction(u, w, x, 0)
            det_side = _grothendieck_side(shape, u, w, L)
            rep.compare(pt, wf, det_side, f"lattice vs determinant lambda={shape.parts}")
            rep.compare(pt, F_of(u, w, x, 0), det_side, f"symfunc vs determinant lambda={shape.parts}")
        rep.points += 1
    return rep


def _profile(n, m, k, lam):
    lam = lam if lam is not None else Partition((0,) * k)
    if len(lam) != k:
        raise ProfileViolation(f"lambda {lam} must have k={k} parts")
    return lam, build_mu(lam, m, n)


def _corr_3_1(n, m, k, lam, points, seed, **_):
    lam, mu = _profile(n, m, k, lam)
    L = m + n - k
    x = positions_from_partition(mu, L)
    rep = IdentityReport("correspondence:3.1", {"n": n, "m": m, "k": k, "lambda": lam})
    for pt in _lattice_point_set(seed, n, L, points, False):
        u, w = pt.family("u", n), pt.family("w", L)
        rep.compare(pt, wavefunction(u, w, x, 0), _grothendieck_side(mu, u, w, L))
        rep.points += 1
    return rep


def _corr_3_2(n, m, k, lam, points, seed, **_):
    """Frozen right columns: W = prod u^{n-k} <x_lam| prod D prod B |Omega>_m."""
    lam, mu = _profile(n, m, k, lam)
    L = m + n - k
    x = positions_from_partition(mu, L)
    x_left = positions_from_partition(lam, m)
    rep = IdentityReport("correspondence:3.2", {"n": n, "m": m, "k": k, "lambda": lam})
    for pt in _lattice_point_set(seed, n, L, points, False):
        u, w = pt.family("u", n), pt.family("w", L)
        right = prod(uj ** (n - k) for uj in u)
        left = left_block_element(x_left, u, w[:m], range(k + 1, n + 1), 0)
        rep.compare(pt, wavefunction(u, w, x, 0), right * left)
        rep.points += 1
    return rep


def _corr_3_13(n, m, k, lam, points, seed, **_):
    lam, _mu = _profile(n, m, k, lam)
    x_left = positions_from_partition(lam, m)
    rep = IdentityReport("correspondence:3.13", {"n": n, "m": m, "k": k, "lambda": lam})
    for pt in _lattice_point_set(seed, n, m, points, False):
        u, w = pt.family("u", n), pt.family("w", m)
        for split in k_subsets(n, k):
            uS = [u[i - 1] for i in split.chosen]
            lhs = wavefunction(uS, w, x_left, 0)
            rep.compare(pt, lhs, _grothendieck_side(lam, uS, w, m), f"S={split.chosen}")
        rep.points += 1
    return rep


def _corr_4_3(n, m, k, points, seed, **_):
    L = m + n - k
    rect = _rect(n, m, k)
    x = PositionVector(tuple(range(1, k + 1)) + tuple(range(m + 1, L + 1)), L)
    rep = IdentityReport("correspondence:4.3", {"n": n, "m": m, "k": k})
    for pt in _lattice_point_set(seed, n, L, points, False):
        u, w = pt.family("u", n), pt.family("w", L)
        rep.compare(pt, wavefunction(u, w, x, 0), _grothendieck_side(rect, u, w, L))
        rep.points += 1
    return rep


def _corr_4_4(n, m, k, points, seed, **_):
    """Column transfer form: W = prod u^{n-k} <0^k 1^{n-k}| prod Abar prod Cbar |1^n>."""
    L = m + n - k
    x = PositionVector(tuple(range(1, k + 1)) + tuple(range(m + 1, L + 1)), L)
    rep = IdentityReport("correspondence:4.4", {"n": n, "m": m, "k": k})
    for pt in _lattice_point_set(seed, n, L, points, False):
        u, w = pt.family("u", n), pt.family("w", L)
        ops = [barred_monodromy_element("C", w[j - 1], u, 0) for j in range(1, k + 1)]
        ops += [barred_monodromy_element("A", w[j - 1], u, 0) for j in range(k + 1, m + 1)]
        elem = apply_string(ops, SpinState.basis((1,) * n)).amplitude((0,) * k + (1,) * (n - k))
        rep.compare(pt, wavefunction(u, w, x, 0), prod(uj ** (n - k) for uj in u) * elem)
        rep.points += 1
    return rep


def _left_positions(m, k, x):
    return [x] if x is not None else list(position_vectors(k, m))


def _corr_5_1(n, m, k, x, points, seed, **_):
    L = m + n - k
    xs = _left_positions(m, k, x)
    rep = IdentityReport("correspondence:5.1", {"n": n, "m": m, "k": k} | ({"x": x} if x else {}))
    for pt in _lattice_point_set(seed, n, L, points, True):
        u, w, q = pt.family("u", n), pt.family("w", L), pt["q"]
        for xl in xs:
            full = _full_positions(xl, m, n)
            rep.compare(pt, wavefunction(u, w, full, q), F_of(u, w, full, q), f"x={xl.positions}")
        rep.points += 1
    return rep


def _corr_5_2(n, m, k, x, points, seed, **_):
    """Split at the column boundary m: W = sum_y Wbar(y) * left block with D at rows y."""
    L = m + n - k
    xs = _left_positions(m, k, x)
    rep = IdentityReport("correspondence:5.2", {"n": n, "m": m, "k": k} | ({"x": x} if x else {}))
    for pt in _lattice_point_set(seed, n, L, points, True):
        u, w, q = pt.family("u", n), pt.family("w", L), pt["q"]
        for xl in xs:
            full = _full_positions(xl, m, n)
            rhs = sum((barred_wavefunction(w[m:], u, y, q) * left_block_element(xl, u, w[:m], y, q)
                       for y in combinations(range(1, n + 1), n - k)), Fraction(0))
            rep.compare(pt, wavefunction(u, w, full, q), rhs, f"x={xl.positions}")
        rep.points += 1
    return rep


def _corr_5_4(n, m, k, points, seed, **_):
    r = n - k
    rep = IdentityReport("correspondence:5.4", {"n": n, "m": m, "k": k})
    for pt in _lattice_point_set(seed, n, m + r, points, True):
        u, w, q = pt.family("u", n), pt.family("w", m + r), pt["q"]
        for y in combinations(range(1, n + 1), r):
            rep.compare(pt, barred_wavefunction(w[m:], u, y, q), F_bar(w[m:], u, y, q), f"y={y}")
        rep.points += 1
    return rep


def _corr_5_16(n, m, k, x, points, seed, **_):
    xs = _left_positions(m, k, x)
    rep = IdentityReport("correspondence:5.16", {"n": n, "m": m, "k": k} | ({"x": x} if x else {}))
    for pt in _lattice_point_set(seed, n, m, points, True):
        u, w, q = pt.family("u", n), pt.family("w", m), pt["q"]
        for kept in combinations(range(n), k):
            uk = [u[i] for i in kept]
            ops = [monodromy_element("B", uj, w, q) for uj in uk]
            state = apply_string(ops, SpinState.vacuum(m))
            for xl in xs:
                rep.compare(pt, state.amplitude(xl), F_of(uk, w, xl, q),
                            f"kept={tuple(i + 1 for i in kept)} x={xl.positions}")
        rep.points += 1
    return rep


_CORRESPONDENCE_CHECKS = {
    "2.10": _corr_2_10,
    "2.12": _corr_2_12,
    "3.1": _corr_3_1,
    "3.2": _corr_3_2,
    "3.13": _corr_3_13,
    "4.3": _corr_4_3,
    "4.4": _corr_4_4,
    "5.1": _corr_5_1,
    "5.2": _corr_5_2,
    "5.4": _corr_5_4,
    "5.16": _corr_5_16,
}


# -- Izergin-Korepin properties of the right-block wavefunction ------------------------------------


def interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> list:
    """Monomial coefficients (lowest first) of the interpolating polynomial, via Newton form."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    poly[0] = coef[-1]
    deg = 0
    for i in range(n - 2, -1, -1):
        # poly = poly * (t - xs[i]) + coef[i]
        new = [Fraction(0)] * n
        for d in range(deg + 1):
            new[d + 1] += poly[d]
            new[d] -= poly[d] * xs[i]
        new[0] += coef[i]
        poly = new
        deg += 1
    return poly


def degree_certificate(f, r: int, base: Fraction, extra: int = 3):
    """Certify that the univariate function ``f`` is a polynomial of degree exactly ``r``.

    Interpolates through ``r + 2`` nodes, requires a vanishing top coefficient
    and a nonzero degree-``r`` coefficient, and confirms the interpolant at
    ``extra`` further nodes. Returns (ok, coefficients).
    """
    nodes = [base + i for i in range(r + 2 + extra)]
    vals = [f(t) for t in nodes]
    coeffs = interpolate(nodes[:r + 2], vals[:r + 2])
    ok = coeffs[r + 1] == 0 and coeffs[r] != 0
    for t, v in zip(nodes[r + 2:], vals[r + 2:]):
        ok &= sum(c * t ** d for d, c in enumerate(coeffs)) == v
    return ok, coeffs


PROP51_ROUTES = {"lattice": barred_wavefunction, "symfunc": F_bar}


def verify_prop51(n: int, k: int, m: int = 0, points: int = 3, seed: int = 0) -> IdentityReport:
    """Degree, w-symmetry, recursion/factorization and base case for both routes."""
    r = n - k
    if r < 1:
        raise ProfileViolation("need n - k >= 1")
    us, ws = names("u", n), names("w", r)
    cons = [distinct(*us), distinct(*ws), avoid(["q"], [0, 1])]
    rep = IdentityReport("prop51", {"n": n, "k": k, "m": m})
    clauses = {route: {c: "verified" for c in ("1", "2", "3", "4")} for route in PROP51_ROUTES}
    applicable = {"1": False, "2": True, "3": True, "4": False}
    for pt in sample_points(seed, us + ws + ["q"], cons, points):
        u, w, q = pt.family("u", n), pt.family("w", r), pt["q"]
        for route, fn in PROP51_ROUTES.items():
            def bad(clause, lhs, rhs, y):
                clauses[route][clause] = "failed"
                rep.fail(pt, lhs, rhs, f"{route} clause {clause} y={y}")

            for y in combinations(range(1, n + 1), r):
                value = fn(w, u, y, q)
                for perm in permutations(w):
                    other = fn(list(perm), u, y, q)
                    if other != value:
                        bad("2", other, value, y)
                        break
                if y[-1] == n:
                    applicable["1"] = True
                    ok, coeffs = degree_certificate(
                        lambda t: fn(w, u[:-1] + [t], y, q), r, u[-1])
                    if not ok:
                        bad("1", coeffs, f"degree {r}", y)
                    at_zero = fn(w, u[:-1] + [Fraction(0)], y, q)
                    if at_zero != 0:
                        bad("3", at_zero, 0, y)
                    wl = w[-1]
                    at_w = fn(w, u[:-1] + [wl], y, q)
                    factor = (1 - q) * wl * prod(wl - q * wj for wj in w[:-1]) \
                        * prod(uj - q * wl for uj in u[:-1])
                    expect = factor * fn(w[:-1], u[:-1], y[:-1], q)
                    if at_w != expect:
                        bad("3", at_w, expect, y)
                    if r == 1:
                        applicable["4"] = True
                        base = (1 - q) * u[-1] * prod(uj - q * w[0] for uj in u[:-1])
                        if value != base:
                            bad("4", value, base, y)
                else:
                    expect = prod(q * (u[-1] - wj) for wj in w) * fn(w, u[:-1], y, q)
                    if value != expect:
                        bad("3", value, expect, y)
        rep.points += 1
    for route in clauses:
        for c, used in applicable.items():
            if not used:
                clauses[route][c] = "not-applicable"
    rep.details = {"clauses": clauses}
    return rep
