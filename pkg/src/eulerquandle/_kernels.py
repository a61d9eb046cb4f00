"""Compiled inner loops for cycle walking.

Everything here works on plain int64 arrays; the public wrappers live in
``cycles`` and ``quandle``.
"""
import numba
import numpy as np


@numba.njit(cache=True)
def cycle_length_histogram(images):
    """Return ``hist`` where ``hist[L]`` is the number of cycles of length L."""
    size = images.shape[0]
    seen = np.zeros(size, np.uint8)
    hist = np.zeros(size + 1, np.int64)
    for start in range(size):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            x = images[x]
            length += 1
        hist[length] += 1
    return hist


@numba.njit(cache=True)
def element_cycle_lengths(images):
    """Length of the cycle through each element."""
    size = images.shape[0]
    out = np.zeros(size, np.int64)
    for start in range(size):
        if out[start]:
            continue
        length = 1
        x = images[start]
        while x != start:
            x = images[x]
            length += 1
        out[start] = length
        x = images[start]
        while x != start:
            out[x] = length
            x = images[x]
    return out


@numba.njit(cache=True)
def _affine_images(size, mult, shift, img):
    # img[x] = mult*x + shift mod size, built by repeated addition
    v = shift
    step = mult % size
    for x in range(size):
        img[x] = v
        v += step
        if v >= size:
            v -= size


@numba.njit(cache=True)
def affine_translation_scan(size, mult):
    """Cycle-length histograms of every right translation of Z/size, a*b = mult*a + (1-mult)*b.

    Each ``R_b`` is materialised and walked from scratch; no b is skipped.
    Returns the histogram of ``R_0`` and an array of the b whose histogram
    differs from it.
    """
    img = np.empty(size, np.int64)
    seen = np.zeros(size, np.uint8)
    hist = np.zeros(size + 1, np.int64)
    ref = np.zeros(size + 1, np.int64)
    other = np.empty(size, np.int64)
    n_other = 0
    coeff = (1 - mult) % size
    for b in range(size):
        _affine_images(size, mult, (coeff * b) % size, img)
        seen[:] = 0
        hist[:] = 0
        for start in range(size):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = 1
                x = img[x]
                length += 1
            hist[length] += 1
        if b == 0:
            ref[:] = hist
        else:
            same = True
            for i in range(size + 1):
                if hist[i] != ref[i]:
                    same = False
                    break
            if not same:
                other[n_other] = b
                n_other += 1
    return ref, other[:n_other]
