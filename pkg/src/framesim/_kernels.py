"""Fused amplitude-update loops for the multi-qubit rotation kernels.

The numpy implementations in ``statevector`` stage the update through a
dozen whole-array temporaries, which blurs the size- and weight-flatness of
the rotation cost once the working set leaves the cache.  When numba is
available the loops below run as single fused passes (one read and one
write per amplitude) and become the default; setting FRAMESIM_PURE_NUMPY=1
or running on >62 qubits falls back to the numpy path with identical
semantics.

The parity of popcount(k & z) is computed with a shift-XOR fold, so the
per-pair cost does not depend on how many qubits the operator touches.
"""
import os

import numpy as np

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is an optional accelerator
    HAVE_NUMBA = False

JIT_ENABLED = HAVE_NUMBA and not os.environ.get("FRAMESIM_PURE_NUMPY")

if HAVE_NUMBA:

    @njit(cache=True)
    def rotation_pairs(amp, x, z, pivot, c, u0, u1):
        """amp[k0] <- c*a0 + u0*sg*a1; amp[k1] <- c*a1 + u1*sg*a0.

        k0 runs over indices with the pivot bit clear (one per pair),
        k1 = k0 ^ x is its partner and sg = (-1)**parity(k0 & z).
        """
        half = amp.shape[0] >> 1
        mask = (np.int64(1) << pivot) - 1
        for i in range(half):
            k0 = ((i >> pivot) << (pivot + 1)) | (i & mask)
            k1 = k0 ^ x
            v = k0 & z
            v ^= v >> 32
            v ^= v >> 16
            v ^= v >> 8
            v ^= v >> 4
            v ^= v >> 2
            v ^= v >> 1
            sg = 1.0 - 2.0 * (v & 1)
            a0 = amp[k0]
            a1 = amp[k1]
            amp[k0] = c * a0 + u0 * (sg * a1)
            amp[k1] = c * a1 + u1 * (sg * a0)

    @njit(cache=True)
    def rotation_diag(amp, z, f_even, f_odd):
        """amp[k] *= f_even or f_odd depending on parity(k & z)."""
        for k in range(amp.shape[0]):
            v = k & z
            v ^= v >> 32
            v ^= v >> 16
            v ^= v >> 8
            v ^= v >> 4
            v ^= v >> 2
            v ^= v >> 1
            if v & 1:
                amp[k] *= f_odd
            else:
                amp[k] *= f_even
