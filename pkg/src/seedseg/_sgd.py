"""Compiled inner loops for per-sample SGD training.

Kept separate so the heavy numba import/compile happens only when training
or an MLP-backed decider actually runs. All math is float64; weight arrays
are updated in place, sample order is dictated by the caller.
"""
from __future__ import annotations

import numba
import numpy as np


@numba.njit(cache=True)
def sgd_epoch(w1, b1, w2, b2, inputs, targets, lr):
    # One pass of per-sample SGD over the rows of `inputs` in storage order
    # (the caller materializes each epoch's shuffle as a contiguous copy;
    # streaming the rows sequentially is markedly faster than indirecting
    # through a permutation array). Returns the mean per-sample loss
    # measured on the pre-update forward pass of each step.
    hidden = w1.shape[0]
    h = np.empty(hidden)
    d_hid = np.empty(hidden)
    o = np.empty(2)
    d_out = np.empty(2)
    total = 0.0
    for idx in range(inputs.shape[0]):
        x = inputs[idx]
        t0 = 1.0 if targets[idx] == 1 else 0.0
        t1 = 1.0 - t0
        for i in range(hidden):
            z = b1[i]
            for j in range(6):
                z += w1[i, j] * x[j]
            h[i] = 1.0 / (1.0 + np.exp(-z))
        for k in range(2):
            z = b2[k]
            for i in range(hidden):
                z += w2[k, i] * h[i]
            o[k] = 1.0 / (1.0 + np.exp(-z))
        e0 = o[0] - t0
        e1 = o[1] - t1
        total += 0.5 * (e0 * e0 + e1 * e1)
        d_out[0] = e0 * o[0] * (1.0 - o[0])
        d_out[1] = e1 * o[1] * (1.0 - o[1])
        # Hidden deltas use the pre-update output weights.
        for i in range(hidden):
            s = w2[0, i] * d_out[0] + w2[1, i] * d_out[1]
            d_hid[i] = s * h[i] * (1.0 - h[i])
        for k in range(2):
            for i in range(hidden):
                w2[k, i] -= lr * d_out[k] * h[i]
            b2[k] -= lr * d_out[k]
        for i in range(hidden):
            for j in range(6):
                w1[i, j] -= lr * d_hid[i] * x[j]
            b1[i] -= lr * d_hid[i]
    return total / inputs.shape[0]


@numba.njit(cache=True)
def forward_pair(w1, b1, w2, b2, x):
    # Scalar forward pass; returns (out_join, out_reject).
    hidden = w1.shape[0]
    h = np.empty(hidden)
    for i in range(hidden):
        z = b1[i]
        for j in range(6):
            z += w1[i, j] * x[j]
        h[i] = 1.0 / (1.0 + np.exp(-z))
    o0 = b2[0]
    o1 = b2[1]
    for i in range(hidden):
        o0 += w2[0, i] * h[i]
        o1 += w2[1, i] * h[i]
    return 1.0 / (1.0 + np.exp(-o0)), 1.0 / (1.0 + np.exp(-o1))
