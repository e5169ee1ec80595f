"""C/2Z spin structures on surgery presentations, encoded as colorings.

A spin structure is recorded by one value ``c_i`` per surgery component
(its meridian evaluates to ``c_i + 1``) and one value ``w_j`` per physical
component.  The colorings that extend over the surgered manifold are the
solutions of the characteristic equation

    B c + c'  =  diag(B)   in (C/2Z)^m,     c'_i = sum_j lk(L_i, K_j) w_j,

which is exactly the statement that every surgery parallel evaluates to 1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NoSpinSolution
from .scalar import Mod2C, ScalarContext, in_ddot

CONVENTIONS = ("Bc+c'", "B(c+c')")
CHAR_CONVENTION = "Bc+c'"


@dataclass(frozen=True)
class SpinColoring:
    c: tuple  # complex representatives, one per surgery component
    w: tuple  # one per physical component

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(complex(Mod2C(x).value) for x in self.c))
        object.__setattr__(self, "w", tuple(complex(Mod2C(x).value) for x in self.w))


def c_prime(lk, w) -> list[Mod2C]:
    lk = np.asarray(lk, dtype=int)
    m = lk.shape[0]
    out = []
    for i in range(m):
        total = Mod2C(0)
        for j, wj in enumerate(w):
            total = total + Mod2C(wj) * int(lk[i, j])
        out.append(total)
    return out


def char_residual(B, lk, c, w, convention: str = CHAR_CONVENTION) -> list[Mod2C]:
    """Left minus right side of the characteristic equation, row by row."""
    B = np.asarray(B, dtype=int).reshape(len(c), len(c))
    lk = np.asarray(lk, dtype=int).reshape(len(c), len(w))
    cp = c_prime(lk, w)
    m = len(c)
    res = []
    for i in range(m):
        if convention == "Bc+c'":
            lhs = cp[i]
            for j in range(m):
                lhs = lhs + Mod2C(c[j]) * int(B[i, j])
        elif convention == "B(c+c')":
            lhs = Mod2C(0)
            for j in range(m):
                lhs = lhs + (Mod2C(c[j]) + cp[j]) * int(B[i, j])
        else:
            raise ValueError(f"unknown convention {convention!r}")
        res.append(lhs - int(B[i, i]))
    return res


def residual_is_zero(res) -> bool:
    return all(x == 0 for x in res)


def eval_curve(framing: int, lk_L: Sequence[int], lk_K: Sequence[int],
               coloring: SpinColoring) -> Mod2C:
    """Spin value of a framed oriented curve in the complement."""
    total = Mod2C(1 + int(framing))
    for n, ci in zip(lk_L, coloring.c, strict=True):
        total = total + Mod2C(ci) * int(n)
    for n, wj in zip(lk_K, coloring.w, strict=True):
        total = total + Mod2C(wj) * int(n)
    return total


def parallel_values(B, lk, coloring: SpinColoring) -> list[Mod2C]:
    """eval_curve on the blackboard parallel of every surgery component.

    The parallel of L_i has framing B_ii and links L_j B_ij times.
    """
    B = np.asarray(B, dtype=int).reshape(len(coloring.c), len(coloring.c))
    lk = np.asarray(lk, dtype=int).reshape(len(coloring.c), len(coloring.w))
    return [eval_curve(B[i, i], B[i], lk[i], coloring) for i in range(len(coloring.c))]


# -- Smith normal form ---------------------------------------------------------


def smith_normal_form(A):
    """Return integer matrices (U, D, V) with U A V = D diagonal, U, V unimodular.

    Plain Python integers throughout.  The diagonal entries are
    non-negative and each divides the next.
    """
    A = [list(map(int, row)) for row in A]
    m = len(A)
    n = len(A[0]) if m else 0
    D = [row[:] for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row_dst += k row_src
        D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, k):
        for row in D:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    k = D[i][t] // D[t][t]
                    add_row(t, i, -k)
                    if D[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    k = D[t][j] // D[t][t]
                    add_col(t, j, -k)
                    if D[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility of the remaining block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, D, V


# -- solving -------------------------------------------------------------------


@dataclass(frozen=True)
class SpinSolutions:
    """Solution set ``particular + sum k_i torsion_i + sum t_j free_j``.

    ``torsion`` holds pairs (generator, order) with integer ``k_i`` in
    ``range(order)``; ``free`` holds integer direction vectors scaled by an
    arbitrary ``t_j`` in C/2Z.
    """

    particular: tuple
    torsion: tuple
    free: tuple

    @property
    def free_rank(self) -> int:
        return len(self.free)

    @property
    def count(self) -> int | None:
        if self.free:
            return None
        total = 1
        for _, order in self.torsion:
            total *= order
        return total

    def representatives(self, limit: int = 10**5) -> list[tuple]:
        if self.free:
            raise ValueError("infinite solution set; use particular/torsion/free")
        if self.count > limit:
            raise ValueError(f"{self.count} solutions exceed limit {limit}")
        out = []
        for ks in itertools.product(*(range(o) for _, o in self.torsion)):
            vec = [Mod2C(x) for x in self.particular]
            for k, (gen, _) in zip(ks, self.torsion):
                vec = [a + Mod2C(g) * k for a, g in zip(vec, gen)]
            out.append(tuple(x.value for x in vec))
        return out


def solve_spin(B, lk, w) -> SpinSolutions:
    """Solve B c + c' = diag(B) over C/2Z via the Smith normal form of B."""
    B = np.asarray(B, dtype=int)
    m = B.shape[0] if B.size else 0
    B = B.reshape(m, m)
    if not np.array_equal(B, B.T):
        raise ValueError("linking matrix must be symmetric")
    lk = np.asarray(lk, dtype=int).reshape(m, len(w))
    cp = c_prime(lk, w)
    rhs = [Mod2C(int(B[i, i])) - cp[i] for i in range(m)]
    U, D, V = smith_normal_form(B.tolist())
    # D y = U rhs with c = V y
    urhs = []
    for i in range(m):
        acc = Mod2C(0)
        for j in range(m):
            acc = acc + rhs[j] * U[i][j]
        urhs.append(acc)
    y = [0j] * m
    torsion, free = [], []
    for i in range(m):
        d = D[i][i]
        if d == 0:
            if urhs[i] != 0:
                raise NoSpinSolution(
                    f"characteristic equation is obstructed: combination {U[i]} of rows "
                    f"must vanish but equals {urhs[i]!r}", row=i)
            free.append(tuple(V[k][i] for k in range(m)))
        else:
            y[i] = urhs[i].value / d
            if d > 1:
                torsion.append((tuple(complex(2 * V[k][i]) / d for k in range(m)), d))
    particular = tuple(Mod2C(sum(V[k][i] * y[i] for i in range(m))).value for k in range(m))
    return SpinSolutions(particular, tuple(torsion), tuple(free))


# -- predicates ----------------------------------------------------------------


def _simple_in_ddot(ctx, color) -> bool:
    from .repcat import Simple

    return isinstance(color, Simple) and in_ddot(ctx, color.alpha)


def is_computable(p, ctx: ScalarContext) -> bool:
    """Every surgery value non-integral, or no surgery part and some V_alpha
    colored physical component."""
    c = p.spin.c
    if not c:
        return any(_simple_in_ddot(ctx, col) for col in p.physical_colors)
    return all(not Mod2C(x).is_integral(ctx.tol) for x in c)


def is_admissible(p, ctx: ScalarContext) -> bool:
    """A V_alpha colored physical component or a non-integral spin value.

    The values checked are all c_i and w_j; these determine the structure
    on a homology basis (meridians), so nothing else can be non-integral.
    """
    if any(_simple_in_ddot(ctx, col) for col in p.physical_colors):
        return True
    return any(not Mod2C(x).is_integral(ctx.tol) for x in (*p.spin.c, *p.spin.w))
