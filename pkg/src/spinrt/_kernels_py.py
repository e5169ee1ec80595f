"""Pure numpy fallback for the contraction kernel."""
import numpy as np


def apply_gate(state, L, M, R, rows, cols, vals, Mo, out=None):
    """out[l, o, x] = sum over nonzeros (o, i, v) of v * state[l, i, x]."""
    if state.shape[0] != L * M * R:
        raise ValueError("state size does not match L*M*R")
    G = np.zeros((Mo, M), dtype=complex)
    np.add.at(G, (rows, cols), vals)
    if out is None:
        return np.matmul(G, state.reshape(L, M, R)).ravel()
    if out.shape[0] != L * Mo * R:
        raise ValueError("output size does not match L*Mo*R")
    np.matmul(G, state.reshape(L, M, R), out=out.reshape(L, Mo, R))
    return out
