"""Weight modules of unrolled quantum sl(2) and their ribbon structure.

Conventions (fixed once for the whole package):

* basis ``v_0 .. v_{r-1}`` of ``V_alpha`` with ``v_0`` of highest weight
  ``alpha + r - 1``; ``F v_i = v_{i+1}``, ``E v_i = [i][i-alpha] v_{i-1}``;
* coproduct ``E -> 1(x)E + E(x)K``, ``F -> K^-1(x)F + F(x)1``;
* braiding ``c = flip o q^{H(x)H/2} sum_n q^{n(n-1)/2} (q-q^-1)^n/[n]! E^n(x)F^n``;
* pivotal element ``K^{1-r}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import InvalidColor, NotScalar
from .scalar import Mod2C, ScalarContext, in_ddot, qint


# -- colors -----------------------------------------------------------------


@dataclass(frozen=True)
class Simple:
    alpha: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))


@dataclass(frozen=True)
class Eps:
    k: int = 1


@dataclass(frozen=True)
class Dual:
    inner: "Color"


@dataclass(frozen=True)
class Tensor:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))


@dataclass(frozen=True)
class Formal:
    """A complex linear combination of concrete colors."""

    terms: tuple  # of (complex, Color)

    def __post_init__(self):
        flat = []
        for coef, color in self.terms:
            for c2, inner in expand(color):
                flat.append((complex(coef) * c2, inner))
        object.__setattr__(self, "terms", tuple(flat))

    def scaled(self, s: complex) -> "Formal":
        return Formal(tuple((s * c, col) for c, col in self.terms))


Color = Simple | Eps | Dual | Tensor | Formal


def expand(color) -> list:
    """Multilinear expansion of a color into ``[(coef, concrete color)]``."""
    if isinstance(color, Formal):
        return list(color.terms)
    return [(1 + 0j, color)]


def degree(color) -> Mod2C:
    """Degree in C/2Z.  Note the shift: V_alpha has degree alpha + 1."""
    if isinstance(color, Simple):
        return Mod2C(color.alpha + 1)
    if isinstance(color, Eps):
        return Mod2C(0)
    if isinstance(color, Dual):
        return -degree(color.inner)
    if isinstance(color, Tensor):
        total = Mod2C(0)
        for part in color.parts:
            total = total + degree(part)
        return total
    if isinstance(color, Formal):
        degs = [degree(c) for _, c in color.terms]
        if not degs:
            raise InvalidColor("empty formal color")
        if any(d != degs[0] for d in degs[1:]):
            raise InvalidColor("formal color is not degree-homogeneous")
        return degs[0]
    raise TypeError(f"not a color: {color!r}")


def check_color(ctx: ScalarContext, color) -> None:
    if isinstance(color, Simple):
        if not in_ddot(ctx, color.alpha):
            raise InvalidColor(f"V_alpha needs alpha in (C\\Z) u rZ, got {color.alpha}")
    elif isinstance(color, Dual):
        check_color(ctx, color.inner)
    elif isinstance(color, Tensor):
        for part in color.parts:
            check_color(ctx, part)
    elif isinstance(color, Formal):
        for _, c in color.terms:
            check_color(ctx, c)
        degree(color)


# -- modules ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ModuleData:
    dim: int
    weights: np.ndarray
    E: np.ndarray
    F: np.ndarray
    K: np.ndarray
    H: np.ndarray
    simple: bool = False


def _freeze(*arrays):
    for a in arrays:
        a.setflags(write=False)


def _from_weights(ctx, weights, E, F, simple=False):
    weights = np.asarray(weights, dtype=complex)
    H = np.diag(weights)
    K = np.diag(np.exp(1j * np.pi * weights / ctx.r))
    _freeze(weights, E, F, H, K)
    return ModuleData(len(weights), weights, E, F, K, H, simple)


@lru_cache(maxsize=4096)
def build_simple(ctx: ScalarContext, alpha: complex) -> ModuleData:
    """The r-dimensional simple module V_alpha."""
    alpha = complex(alpha)
    if not in_ddot(ctx, alpha):
        raise InvalidColor(f"alpha={alpha} is an integer outside rZ")
    r = ctx.r
    weights = [alpha + r - 1 - 2 * i for i in range(r)]
    E = np.zeros((r, r), dtype=complex)
    F = np.zeros((r, r), dtype=complex)
    for i in range(r - 1):
        F[i + 1, i] = 1
    for i in range(1, r):
        E[i - 1, i] = qint(ctx, i) * qint(ctx, i - alpha)
    return _from_weights(ctx, weights, E, F, simple=True)


@lru_cache(maxsize=64)
def build_eps(ctx: ScalarContext, k: int) -> ModuleData:
    """The invertible one-dimensional module eps^k (weight kr)."""
    zero = np.zeros((1, 1), dtype=complex)
    return _from_weights(ctx, [k * ctx.r], zero, zero.copy(), simple=True)


def dual_module(ctx: ScalarContext, V: ModuleData) -> ModuleData:
    """V* in the dual basis: x acts by the transpose of S(x)."""
    Kinv = np.diag(1 / np.diag(V.K))
    E = np.ascontiguousarray((-V.E @ Kinv).T)
    F = np.ascontiguousarray((-V.K @ V.F).T)
    return _from_weights(ctx, -V.weights, E, F, simple=V.simple)


def tensor_module(ctx: ScalarContext, V: ModuleData, W: ModuleData) -> ModuleData:
    I1, I2 = np.eye(V.dim), np.eye(W.dim)
    Kinv = np.diag(1 / np.diag(V.K))
    E = np.kron(I1, W.E) + np.kron(V.E, W.K)
    F = np.kron(Kinv, W.F) + np.kron(V.F, I2)
    weights = np.add.outer(V.weights, W.weights).ravel()
    return _from_weights(ctx, weights, E, F)


@lru_cache(maxsize=4096)
def build_module(ctx: ScalarContext, color) -> ModuleData:
    if isinstance(color, Simple):
        return build_simple(ctx, color.alpha)
    if isinstance(color, Eps):
        return build_eps(ctx, color.k)
    if isinstance(color, Dual):
        return dual_module(ctx, build_module(ctx, color.inner))
    if isinstance(color, Tensor):
        if not color.parts:
            return build_eps(ctx, 0)
        M = build_module(ctx, color.parts[0])
        for part in color.parts[1:]:
            M = tensor_module(ctx, M, build_module(ctx, part))
        return M
    if isinstance(color, Formal):
        raise InvalidColor("formal colors must be expanded before building modules")
    raise TypeError(f"not a color: {color!r}")


@lru_cache(maxsize=8192)
def strand_module(ctx: ScalarContext, color, upward: bool) -> ModuleData:
    """Module seen by a boundary point: V for an upward strand, V* otherwise."""
    M = build_module(ctx, color)
    return M if upward else dual_module(ctx, M)


def relation_residuals(ctx: ScalarContext, V: ModuleData) -> dict:
    """Frobenius norms of the defining relations evaluated on V."""
    q = ctx.q
    E, F, K, H = V.E, V.F, V.K, V.H
    Kinv = np.diag(1 / np.diag(K))
    nrm = np.linalg.norm
    return {
        "KEK^-1=q^2E": nrm(K @ E @ Kinv - q**2 * E),
        "KFK^-1=q^-2F": nrm(K @ F @ Kinv - q**-2 * F),
        "[E,F]": nrm(E @ F - F @ E - (K - Kinv) / (q - 1 / q)),
        "[H,E]=2E": nrm(H @ E - E @ H - 2 * E),
        "[H,F]=-2F": nrm(H @ F - F @ H + 2 * F),
        "HK=KH": nrm(H @ K - K @ H),
        "K=q^H": nrm(K - np.diag(np.exp(1j * np.pi * np.diag(H) / ctx.r))),
    }


def pivot(ctx: ScalarContext, V: ModuleData) -> np.ndarray:
    """Diagonal of the pivotal element K^(1-r) acting on V."""
    return np.exp(1j * np.pi * (1 - ctx.r) * V.weights / ctx.r)


# -- braiding and duality --------------------------------------------------


def r_matrix(ctx: ScalarContext, V: ModuleData, W: ModuleData) -> np.ndarray:
    """The universal R-matrix acting on V (x) W."""
    q = ctx.q
    total = np.zeros((V.dim * W.dim, V.dim * W.dim), dtype=complex)
    En = np.eye(V.dim, dtype=complex)
    Fn = np.eye(W.dim, dtype=complex)
    fact = 1 + 0j
    for n in range(ctx.r):
        if n:
            fact *= qint(ctx, n)
            En = En @ V.E
            Fn = Fn @ W.F
            if not En.any() or not Fn.any():
                break
        coef = ctx.qpow(n * (n - 1) / 2) * (q - 1 / q) ** n / fact
        total += coef * np.kron(En, Fn)
    diag = np.exp(1j * np.pi * np.outer(V.weights, W.weights).ravel() / (2 * ctx.r))
    return diag[:, None] * total


def flip(m: int, n: int) -> np.ndarray:
    """Permutation matrix C^m (x) C^n -> C^n (x) C^m."""
    P = np.zeros((m * n, m * n))
    i, j = np.meshgrid(np.arange(m), np.arange(n), indexing="ij")
    P[(j * m + i).ravel(), (i * n + j).ravel()] = 1
    return P


def braiding(ctx: ScalarContext, V: ModuleData, W: ModuleData) -> np.ndarray:
    """c_{V,W}: V (x) W -> W (x) V."""
    return flip(V.dim, W.dim) @ r_matrix(ctx, V, W)


def twist_matrix(ctx: ScalarContext, V: ModuleData) -> complex:
    """Right partial trace of c_{V,V} against the pivot; a scalar on simples."""
    n = V.dim
    c = braiding(ctx, V, V).reshape(n, n, n, n)
    # (id (x) pev) o (c (x) id) o (id (x) coev); pev(v_b (x) v^k) = g_kb
    T = np.einsum("abjk,kb->aj", c, np.diag(pivot(ctx, V)))
    theta = T[0, 0]
    if np.linalg.norm(T - theta * np.eye(n)) > 1e-8 * max(1.0, abs(theta)) * n:
        raise NotScalar("twist is not a scalar on this module")
    return complex(theta)


class DualityData(NamedTuple):
    coev: np.ndarray   # 1 -> V (x) V*
    ev: np.ndarray     # V* (x) V -> 1
    pcoev: np.ndarray  # 1 -> V* (x) V
    pev: np.ndarray    # V (x) V* -> 1


def duality(ctx: ScalarContext, V: ModuleData) -> DualityData:
    n = V.dim
    g = pivot(ctx, V)
    eye = np.eye(n, dtype=complex).ravel()
    return DualityData(
        coev=eye,
        ev=eye.copy(),
        pcoev=np.diag(1 / g).ravel(),
        pev=np.diag(g).ravel(),
    )


def dual_iso_check(ctx: ScalarContext, alpha: complex) -> bool:
    """Check V_alpha* ~ V_{-alpha} by solving for a nonzero intertwiner."""
    Vd = dual_module(ctx, build_simple(ctx, alpha))
    W = build_simple(ctx, -complex(alpha))
    if not np.allclose(np.sort_complex(Vd.weights), np.sort_complex(W.weights)):
        return False
    n = W.dim
    I = np.eye(n)
    # row-major vec: vec(A X) = (A (x) I) vec X, vec(X B) = (I (x) B^T) vec X
    blocks = [np.kron(getattr(W, x), I) - np.kron(I, getattr(Vd, x).T) for x in "EFH"]
    A = np.vstack(blocks)
    _, s, vh = np.linalg.svd(A)
    if s[-1] > 1e-8 * max(1.0, s[0]):
        return False
    phi = vh[-1].conj().reshape(n, n)
    return bool(abs(np.linalg.det(phi / np.abs(phi).max())) > 1e-10)
