"""Pure-Python bitset kernels.

Reference implementation of the routines in ``_kernels.pyx``. Both modules
expose the same functions with identical results; :mod:`qmsets.kernels`
picks one at import time.

Vectors and blocks are ints used as bitsets: bit ``i`` set means element
``i`` is present.
"""

from __future__ import annotations

BACKEND = "python"


def rref(rows, nbits):
    """Reduced row-echelon form over GF(2), canonical.

    The pivot of a row is its highest set bit. Zero rows are dropped and the
    result is sorted by strictly decreasing pivot, with every pivot bit cleared
    from all other rows. Equal row spaces give identical output.
    """
    mask = (1 << nbits) - 1
    basis = []  # kept in decreasing-pivot order
    for row in rows:
        r = row & mask
        for b in basis:
            if r >> (b.bit_length() - 1) & 1:
                r ^= b
        if not r:
            continue
        p = r.bit_length() - 1
        for i, b in enumerate(basis):
            if b >> p & 1:
                basis[i] = b ^ r
        basis.append(r)
        basis.sort(reverse=True)
    return basis


def rank(rows, nbits):
    return len(rref(rows, nbits))


def dependencies(rows, nlow):
    """Eliminate on the low ``nlow`` bits and collect what is left above them.

    Each input row is ``vector | tag << nlow``. After elimination restricted to
    the low bits, rows whose low part vanished carry in their high part a
    combination of tags summing to zero. Those high parts are returned; they
    span the full space of such relations.
    """
    low = (1 << nlow) - 1
    pivots = {}
    out = []
    for row in rows:
        r = row
        while r & low:
            p = (r & low).bit_length() - 1
            if p in pivots:
                r ^= pivots[p]
            else:
                pivots[p] = r
                break
        else:
            if r:
                out.append(r >> nlow)
    return out


def set_partitions(n):
    """All partitions of ``range(n)`` as tuples of block masks.

    Generated from restricted growth strings in lexicographic order, so the
    first result is the single block and the last is all singletons. Blocks
    come ordered by their least element.
    """
    if n == 0:
        return [()]
    out = []
    blocks = [1] + [0] * (n - 1)

    def rec(i, m):
        # m: number of blocks used by elements 0..i-1
        if i == n:
            out.append(tuple(blocks[:m]))
            return
        bit = 1 << i
        for k in range(m + 1):
            blocks[k] |= bit
            rec(i + 1, m + 1 if k == m else m)
            blocks[k] ^= bit

    rec(1, 1)
    return out


def _canonical(blocks):
    return tuple(sorted(blocks, key=lambda b: b & -b))


def join_blocks(a, b):
    return _canonical([x & y for x in a for y in b if x & y])


def meet_blocks(a, b, n):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for blk in list(a) + list(b):
        first = (blk & -blk).bit_length() - 1
        rest = blk & (blk - 1)
        root = find(first)
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            r = find(i)
            if r != root:
                parent[r] = root
    merged = {}
    for i in range(n):
        r = find(i)
        merged[r] = merged.get(r, 0) | (1 << i)
    return _canonical(merged.values())


def refines_blocks(coarse, fine):
    """True if every block of ``fine`` lies inside some block of ``coarse``."""
    for f in fine:
        if not any(f & c == f for c in coarse):
            return False
    return True
