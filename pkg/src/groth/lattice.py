"""Six-vertex (general q) and five-vertex (q = 0) lattice operators on spin chains.

Conventions
-----------
* An R-matrix acts on ``W_a (x) W_b`` with the basis ordered
  ``|00>, |01>, |10>, |11>`` and the *first* factor listed first.
  Entry ``R[out][in]`` is the weight of the vertex taking ``in`` to ``out``.
* A chain state is a tuple of 0/1 bits, site 1 first; 1 marks a particle.
* ``T_a(u|w_1..w_L) = R_{a,L}(u, w_L) ... R_{a,1}(u, w_1)``: the auxiliary
  index enters at site 1 and leaves after site L.
  ``A = <0|T|0>, B = <0|T|1>, C = <1|T|0>, D = <1|T|1>`` (bra = outgoing).
* ``Tbar_j(w|u_1..u_n) = R_{a_n j}(u_n, w) ... R_{a_1 j}(u_1, w)`` threads the
  *second* tensor factor ``j`` through the spaces ``a_1 .. a_n``.
"""

import unicodedata
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Dict, Sequence

from .combinatorics import PositionVector
from .exact import scalar

Basis = tuple

PAIRS = ((0, 0), (0, 1), (1, 0), (1, 1))
_KIND_INDICES = {"A": (0, 0), "B": (1, 0), "C": (0, 1), "D": (1, 1)}  # (in, out)

# every RMatrix checks the ice rule when built; the tally lets a sweep report coverage
ICE_AUDIT = {"checked": 0, "violations": 0}


def reset_ice_audit():
    ICE_AUDIT["checked"] = ICE_AUDIT["violations"] = 0


@dataclass(frozen=True)
class RMatrix:
    entries: tuple
    u: Fraction
    w: Fraction
    q: Fraction

    def __post_init__(self):
        # transitions[in_pair] = ((out_pair, weight), ...) with zero weights dropped
        trans = {}
        for ci, pin in enumerate(PAIRS):
            trans[pin] = tuple((pout, self.entries[ri][ci])
                               for ri, pout in enumerate(PAIRS) if self.entries[ri][ci])
        object.__setattr__(self, "transitions", trans)
        ICE_AUDIT["checked"] += 1
        if not self.ice_rule_holds():
            ICE_AUDIT["violations"] += 1

    def weight(self, out_pair, in_pair) -> Fraction:
        return self.entries[PAIRS.index(tuple(out_pair))][PAIRS.index(tuple(in_pair))]

    def ice_rule_holds(self) -> bool:
        return all(self.entries[r][c] == 0
                   for r, out in enumerate(PAIRS) for c, inp in enumerate(PAIRS)
                   if sum(out) != sum(inp))

    def as_rows(self):
        return [list(r) for r in self.entries]


def r_matrix(u, w, q) -> RMatrix:
    u, w, q = scalar(u), scalar(w), scalar(q)
    z = Fraction(0)
    entries = (
        (u - q * w, z, z, z),
        (z, q * (u - w), (1 - q) * u, z),
        (z, (1 - q) * w, u - w, z),
        (z, z, z, u - q * w),
    )
    return RMatrix(entries, u, w, q)


def five_vertex_r_matrix(u, w) -> RMatrix:
    """The q = 0 weights written out directly, independent of :func:`r_matrix`."""
    u, w = scalar(u), scalar(w)
    z = Fraction(0)
    entries = (
        (u, z, z, z),
        (z, z, u, z),
        (z, w, u - w, z),
        (z, z, z, u),
    )
    return RMatrix(entries, u, w, Fraction(0))


# -- states -----------------------------------------------------------------------


class SpinState:
    """A finite superposition of basis strings with exact amplitudes."""

    __slots__ = ("length", "amplitudes")

    def __init__(self, length: int, amplitudes: Dict[Basis, Fraction] = None):
        self.length = length
        self.amplitudes = {tuple(b): scalar(c) for b, c in (amplitudes or {}).items() if c}

    @classmethod
    def vacuum(cls, length: int) -> "SpinState":
        return cls(length, {(0,) * length: 1})

    @classmethod
    def basis(cls, occ: Sequence[int]) -> "SpinState":
        return cls(len(occ), {tuple(occ): 1})

    def amplitude(self, occ) -> Fraction:
        if isinstance(occ, PositionVector):
            occ = occ.occupation()
        return self.amplitudes.get(tuple(occ), Fraction(0))

    def __add__(self, other):
        out = dict(self.amplitudes)
        for b, c in other.amplitudes.items():
            out[b] = out.get(b, 0) + c
        return SpinState(self.length, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, c):
        c = scalar(c)
        return SpinState(self.length, {b: c * v for b, v in self.amplitudes.items()})

    def __eq__(self, other):
        return (isinstance(other, SpinState) and self.length == other.length
                and self.amplitudes == other.amplitudes)

    def __repr__(self):
        return f"SpinState({self.length}, {self.amplitudes})"


# -- operators --------------------------------------------------------------------


class SpinOperator:
    """Sparse exact linear operator on ``(C^2)^{(x) length}``.

    Columns (images of basis strings) are produced on demand by ``column_fn``
    and cached, so applying an operator to a state only touches the basis
    strings that actually occur.
    """

    def __init__(self, length: int, column_fn: Callable[[Basis], Dict[Basis, Fraction]]):
        self.length = length
        self._column_fn = column_fn
        self._cache = {}

    @classmethod
    def from_columns(cls, length: int, columns: Dict[Basis, Dict[Basis, Fraction]]):
        columns = {tuple(k): dict(v) for k, v in columns.items()}
        return cls(length, lambda occ: columns.get(occ, {}))

    @classmethod
    def identity(cls, length: int):
        return cls(length, lambda occ: {occ: Fraction(1)})

    def column(self, occ: Basis) -> Dict[Basis, Fraction]:
        occ = tuple(occ)
        col = self._cache.get(occ)
        if col is None:
            col = {b: c for b, c in self._column_fn(occ).items() if c}
            self._cache[occ] = col
        return col

    def apply(self, state: SpinState) -> SpinState:
        out = {}
        for occ, amp in state.amplitudes.items():
            for b, c in self.column(occ).items():
                out[b] = out.get(b, 0) + amp * c
        return SpinState(self.length, out)

    def __call__(self, state):
        return self.apply(state)

    def _check(self, other):
        if other.length != self.length:
            raise ValueError("operators act on chains of different length")

    def __matmul__(self, other: "SpinOperator") -> "SpinOperator":
        """Composition; ``(X @ Y)`` applies ``Y`` first."""
        self._check(other)
        return SpinOperator(self.length,
                            lambda occ: self.apply(SpinState(self.length, other.column(occ))).amplitudes)

    def __add__(self, other):
        self._check(other)

        def col(occ):
            out = dict(self.column(occ))
            for b, c in other.column(occ).items():
                out[b] = out.get(b, 0) + c
            return out
        return SpinOperator(self.length, col)

    def __rmul__(self, c):
        c = scalar(c)
        return SpinOperator(self.length, lambda occ: {b: c * v for b, v in self.column(occ).items()})

    def __sub__(self, other):
        return self + (-1) * other

    def basis_strings(self):
        return cartesian((0, 1), repeat=self.length)

    def matrix(self) -> Dict[Basis, Dict[Basis, Fraction]]:
        return {occ: self.column(occ) for occ in self.basis_strings()}

    def __eq__(self, other):
        if not isinstance(other, SpinOperator) or other.length != self.length:
            return NotImplemented
        return all(self.column(o) == other.column(o) for o in self.basis_strings())

    __hash__ = None

    def difference_witness(self, other):
        """First basis string whose images differ, or None."""
        for occ in self.basis_strings():
            if self.column(occ) != other.column(occ):
                return occ
        return None


def operator_product(ops: Sequence[SpinOperator]) -> SpinOperator:
    """``ops[0] @ ops[1] @ ...``: the last operator is applied first."""
    if not ops:
        raise ValueError("empty operator product")
    result = ops[-1]
    for op in reversed(ops[:-1]):
        result = op @ result
    return result


def _thread(rmats: Sequence[RMatrix], occ: Basis, thread_in: int, thread_out: int,
            thread_first: bool) -> Dict[Basis, Fraction]:
    """Contract a row of vertices with fixed boundary values of the threaded line."""
    frontier = {(thread_in, ()): Fraction(1)}
    for r, bit in zip(rmats, occ):
        trans = r.transitions
        nxt = {}
        for (t, prefix), c in frontier.items():
            pin = (t, bit) if thread_first else (bit, t)
            for pout, wt in trans[pin]:
                if thread_first:
                    t2, b2 = pout
                else:
                    b2, t2 = pout
                key = (t2, prefix + (b2,))
                nxt[key] = nxt.get(key, 0) + c * wt
        frontier = nxt
    return {prefix: c for (t, prefix), c in frontier.items() if t == thread_out and c}


def monodromy_element(kind: str, u, w: Sequence, q) -> SpinOperator:
    """One of A, B, C, D of ``T_a(u|w_1..w_L)``, acting on the L-site chain."""
    t_in, t_out = _KIND_INDICES[kind]
    rmats = [r_matrix(u, wi, q) for wi in w]
    return SpinOperator(len(rmats), lambda occ: _thread(rmats, occ, t_in, t_out, True))


def barred_monodromy_element(kind: str, w, u: Sequence, q) -> SpinOperator:
    """One of Abar, Bbar, Cbar, Dbar of ``Tbar_j(w|u_1..u_n)`` on the n spaces a_1..a_n."""
    kind = unicodedata.normalize("NFD", kind)[0].upper()
    t_in, t_out = _KIND_INDICES[kind]
    rmats = [r_matrix(ui, w, q) for ui in u]
    return SpinOperator(len(rmats), lambda occ: _thread(rmats, occ, t_in, t_out, False))


def apply_string(ops: Sequence[SpinOperator], state: SpinState) -> SpinState:
    """Apply ``ops`` to ``state`` in the order given (first element acts first)."""
    for op in ops:
        state = op.apply(state)
    return state


def wavefunction(u: Sequence, w: Sequence, x: PositionVector, q) -> Fraction:
    """``<x| B(u_n) ... B(u_1) |Omega>`` on the chain with inhomogeneities ``w``."""
    if x.length != len(w):
        raise ValueError(f"position vector lives on {x.length} sites but {len(w)} w's given")
    if len(x) != len(u):
        raise ValueError(f"{len(x)} particles but {len(u)} spectral parameters")
    ops = [monodromy_element("B", uj, w, q) for uj in u]
    return apply_string(ops, SpinState.vacuum(len(w))).amplitude(x)


def barred_wavefunction(w: Sequence, u: Sequence, y: Sequence[int], q) -> Fraction:
    """Right-block wavefunction on ``len(w)`` sites.

    Row ``j`` (``j = 1..n``, applied in that order from the vacuum) carries
    ``B(u_j|w)`` if ``j`` is in ``y`` and ``A(u_j|w)`` otherwise; the result
    is the amplitude of the fully occupied string.
    """
    y = tuple(y)
    r = len(w)
    if len(y) != r:
        raise ValueError(f"need {r} marked rows, got {y}")
    if any(a >= b for a, b in zip(y, y[1:])) or (y and (y[0] < 1 or y[-1] > len(u))):
        raise ValueError(f"rows {y} must increase within [1, {len(u)}]")
    marked = set(y)
    ops = [monodromy_element("B" if j in marked else "A", uj, w, q)
           for j, uj in enumerate(u, start=1)]
    return apply_string(ops, SpinState.vacuum(r)).amplitude((1,) * r)


def left_block_element(x: PositionVector, u: Sequence, w: Sequence, y: Sequence[int], q) -> Fraction:
    """``<x| ... D(u_{y_1}) prod_{j<y_1} B(u_j) |Omega>`` on ``len(w)`` sites.

    Row ``j`` carries ``D(u_j)`` if ``j`` is in ``y`` and ``B(u_j)`` otherwise.
    """
    marked = set(y)
    ops = [monodromy_element("D" if j in marked else "B", uj, w, q)
           for j, uj in enumerate(u, start=1)]
    return apply_string(ops, SpinState.vacuum(len(w))).amplitude(x)


# -- Yang-Baxter --------------------------------------------------------------------


def embed(rm: RMatrix, first: int, second: int, nspaces: int = 3):
    """Dense ``2^nspaces`` matrix of ``rm`` acting on spaces ``first`` and ``second``."""
    dim = 2 ** nspaces
    out = [[Fraction(0)] * dim for _ in range(dim)]
    for col in range(dim):
        bits = [(col >> (nspaces - 1 - s)) & 1 for s in range(nspaces)]
        pin = (bits[first], bits[second])
        for pout, wt in rm.transitions[pin]:
            nb = list(bits)
            nb[first], nb[second] = pout
            row = sum(b << (nspaces - 1 - s) for s, b in enumerate(nb))
            out[row][col] += wt
    return out


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum((a[i][t] * b[t][j] for t in range(k) if a[i][t] and b[t][j]), Fraction(0))
             for j in range(m)] for i in range(n)]


def yang_baxter_sides(u, v, w, q):
    """Both sides of ``R_ab(u,v) R_ac(u,w) R_bc(v,w) = R_bc(v,w) R_ac(u,w) R_ab(u,v)``."""
    r_ab = embed(r_matrix(u, v, q), 0, 1)
    r_ac = embed(r_matrix(u, w, q), 0, 2)
    r_bc = embed(r_matrix(v, w, q), 1, 2)
    lhs = matmul(matmul(r_ab, r_ac), r_bc)
    rhs = matmul(matmul(r_bc, r_ac), r_ab)
    return lhs, rhs
