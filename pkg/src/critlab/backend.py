"""Kernel backend selection and canonical-code helpers.

The active backend is chosen once, at import of critlab._kernels, from the
CRIT_LAB_BACKEND environment variable ("numba" by default, "numpy" for the
uncompiled fallback).  `load_kernels` builds an independent module instance
for a named backend so tests and benchmarks can compare the two in one
process without disturbing the package-wide choice.
"""

from __future__ import annotations

import importlib.util
import os

import numpy as np

from . import _kernels as kernels

BACKEND = kernels.BACKEND


def load_kernels(backend: str):
    """Fresh, private instance of the kernel module for `backend`."""
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    spec = importlib.util.find_spec("critlab._kernels")
    module = importlib.util.module_from_spec(spec)
    saved = os.environ.get("CRIT_LAB_BACKEND")
    os.environ["CRIT_LAB_BACKEND"] = backend
    try:
        spec.loader.exec_module(module)
    finally:
        if saved is None:
            os.environ.pop("CRIT_LAB_BACKEND", None)
        else:
            os.environ["CRIT_LAB_BACKEND"] = saved
    return module


def _pair_positions(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Row/column indices and bit shifts for the packed upper triangle."""
    nbits = n * (n - 1) // 2
    iu, ju, shifts = [], [], []
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            iu.append(i)
            ju.append(j)
            shifts.append(pos)
            pos -= 1
    return (np.array(iu, dtype=np.int64), np.array(ju, dtype=np.int64),
            np.array(shifts, dtype=np.int64))


def decode_code(code: int, n: int) -> np.ndarray:
    """Inverse of pack_code: rebuild the adjacency matrix from a code."""
    return decode_codes_batch(np.array([code], dtype=np.int64), n)[0]


def decode_codes_batch(codes: np.ndarray, n: int) -> np.ndarray:
    """Vectorized decode of many packed codes into a (m, n, n) matrix stack."""
    m = codes.shape[0]
    mats = np.zeros((m, n, n), dtype=np.uint8)
    if n >= 2 and m > 0:
        iu, ju, shifts = _pair_positions(n)
        bits = ((codes[:, None] >> shifts[None, :]) & 1).astype(np.uint8)
        mats[:, iu, ju] = bits
        mats[:, ju, iu] = bits
    return mats


def matrices_to_masks(mats: np.ndarray) -> np.ndarray:
    """Adjacency matrices to per-vertex neighbour bitmasks, vectorized."""
    n = mats.shape[1]
    weights = (np.int64(1) << np.arange(n, dtype=np.int64))
    return (mats.astype(np.int64) * weights[None, None, :]).sum(axis=2)
