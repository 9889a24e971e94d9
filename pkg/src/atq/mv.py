"""Mayer-Vietoris and Kunneth bookkeeping for the local focus-focus models.

Modules are free over one of two coefficient objects, C or
S = C^oo(R; C), and maps between them are constant integer matrices.
That is all the focus-focus computation needs: near a Bohr-Sommerfeld
focus-focus fibre every relevant H^1 is a sum of copies of S, the H^1 of
the complement arcs restricts to the two sides of each node, and the
quantization of the saturated neighbourhood is read off the kernel and
cokernel of that restriction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import CoefficientMismatch, CompletionRequired, InvalidParameter
from .graded import GradedQuant


class Coeff(enum.Enum):
    FIN_C = "C"
    SMOOTH_S = "S"

    def tensor(self, other: "Coeff") -> "Coeff":
        if self is Coeff.SMOOTH_S and other is Coeff.SMOOTH_S:
            raise CompletionRequired(
                "C^oo(R;C) (x) C^oo(R;C) needs a completion; the product is not computed"
            )
        return Coeff.SMOOTH_S if Coeff.SMOOTH_S in (self, other) else Coeff.FIN_C


@dataclass(frozen=True)
class FreeModule:
    coeff: Coeff
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise InvalidParameter("rank must be nonnegative")

    def __str__(self):
        return f"{self.coeff.value}^{self.rank}"


@dataclass(frozen=True)
class FreeModuleMap:
    domain: FreeModule
    codomain: FreeModule
    matrix: tuple[tuple[int, ...], ...]
    note: str = ""

    def __post_init__(self):
        if self.domain.coeff is not self.codomain.coeff:
            raise CoefficientMismatch(f"{self.domain} -> {self.codomain}: coefficient objects differ")
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if len(m) != self.codomain.rank or any(len(row) != self.domain.rank for row in m):
            raise InvalidParameter(
                f"matrix must be {self.codomain.rank}x{self.domain.rank} for {self.domain} -> {self.codomain}"
            )
        object.__setattr__(self, "matrix", m)


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination; every division is exact."""
    m = [list(map(int, row)) for row in matrix]
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    rank, prev = 0, 1
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][c]
        top = m[rank]
        for r in range(rank + 1, rows):
            row, e = m[r], m[r][c]
            if e == 0:
                if p != prev:
                    m[r] = [x * p // prev for x in row]
                continue
            m[r] = [0] * (c + 1) + [(p * row[k] - e * top[k]) // prev for k in range(c + 1, cols)]
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def kernel_cokernel(f: FreeModuleMap) -> tuple[int, int]:
    r = bareiss_rank(f.matrix)
    return f.domain.rank - r, f.codomain.rank - r


@dataclass(frozen=True)
class FFCovering:
    """Covering of a saturated neighbourhood of a focus-focus fibre with ``n_nodes`` nodes."""

    n_nodes: int
    compact: bool = True
    bs: bool = True

    def __post_init__(self):
        if not isinstance(self.n_nodes, int) or self.n_nodes < 1:
            raise InvalidParameter("a focus-focus fibre has at least one node")


def build_ff_covering_map(c: FFCovering) -> FreeModuleMap:
    """Restriction H^1(V_0) -> H^1(V_0 cap V_n) for the node-avoiding cover.

    V_0 is the union of the arcs of the fibre between consecutive nodes
    (``n`` arcs around a compact fibre, ``n + 1`` along a non-compact
    chain); V_0 cap V_n is the disjoint union of the two sides W_j^-, W_j^+
    of each node. Row ``2j`` is W_j^-, row ``2j + 1`` is W_j^+. The H^1 of
    the neighbourhoods of the nodes vanishes, so only V_0 contributes to
    the domain.
    """
    n = c.n_nodes
    if not c.bs:
        zero = FreeModule(Coeff.SMOOTH_S, 0)
        return FreeModuleMap(zero, zero, (), note="fibre not Bohr-Sommerfeld: all modules vanish")
    arcs = n if c.compact else n + 1
    rows = []
    for j in range(n):
        before = (j - 1) % n if c.compact else j
        after = j if c.compact else j + 1
        rows.append(tuple(1 if a == before else 0 for a in range(arcs)))
        rows.append(tuple(1 if a == after else 0 for a in range(arcs)))
    shape = "compact" if c.compact else "non-compact"
    return FreeModuleMap(FreeModule(Coeff.SMOOTH_S, arcs), FreeModule(Coeff.SMOOTH_S, 2 * n),
                         tuple(rows), note=f"{shape} fibre, {n} node(s)")


def local_ff_quantization(c: FFCovering) -> GradedQuant:
    f = build_ff_covering_map(c)
    ker, coker = kernel_cokernel(f)
    # H^0 vanishes on the saturated neighbourhood; H^1 = ker, H^2 = coker of the restriction
    return GradedQuant(((0, 0), (0, ker), (0, coker)))


def kunneth(a: GradedQuant, b: GradedQuant) -> GradedQuant:
    out: dict[int, list[int]] = {}
    for p, (fa, sa) in enumerate(a.parts):
        for q, (fb, sb) in enumerate(b.parts):
            if sa and sb:
                raise CompletionRequired(
                    f"degree {p} and degree {q} both carry C^oo(R;C) summands; "
                    "a completion might be needed"
                )
            cell = out.setdefault(p + q, [0, 0])
            cell[0] += fa * fb
            cell[1] += fa * sb + sa * fb
    return GradedQuant.of({d: tuple(v) for d, v in out.items()})


def integers_inside(lo, hi) -> int:
    """Number of integers in the open interval (lo, hi)."""
    lo, hi = Fraction(lo), Fraction(hi)
    if hi <= lo:
        return 0
    first = lo.numerator // lo.denominator + 1
    last = -((-hi.numerator) // hi.denominator) - 1
    return max(0, last - first + 1)


def prop_kunn_model(n_integer_points: int) -> GradedQuant:
    """Quantization of T*I x (I_s x S^1) with ``n`` integers inside I_s.

    H^0(T*I) is one copy of C^oo(R;C) and H^1(I_s x S^1) is C^n; the
    product lands in degree 1.
    """
    if n_integer_points < 0:
        raise InvalidParameter("the number of integer points is nonnegative")
    cotangent = GradedQuant(((0, 1),))
    cylinder = GradedQuant(((0, 0), (n_integer_points, 0)))
    return kunneth(cotangent, cylinder)
