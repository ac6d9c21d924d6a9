# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels; same contract as ``_kernels_py``."""

from libc.stdint cimport uint64_t
from libc.string cimport memset

BACKEND = "cython"

cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _hibit(uint64_t x) noexcept nogil:
    return 63 - __builtin_clzll(x)


cdef inline int _lobit(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t _word(object row) except? 0:
    if row < 0 or row.bit_length() > 64:
        raise ValueError("bitset row wider than 64 bits")
    return <uint64_t>row


def rref(rows, int nbits):
    if nbits < 0 or nbits > 64:
        raise ValueError("nbits must be in [0, 64]")
    cdef uint64_t basis[64]
    pymask = (1 << nbits) - 1
    cdef uint64_t r
    cdef int p, i
    memset(basis, 0, sizeof(basis))
    for row in rows:
        r = _word(row & pymask)
        while r:
            p = _hibit(r)
            if basis[p]:
                r ^= basis[p]
            else:
                break
        if not r:
            continue
        for i in range(p - 1, -1, -1):
            if (r >> i) & 1 and basis[i]:
                r ^= basis[i]
        for i in range(p + 1, nbits):
            if basis[i] and (basis[i] >> p) & 1:
                basis[i] ^= r
        basis[p] = r
    return [basis[i] for i in range(nbits - 1, -1, -1) if basis[i]]


def rank(rows, int nbits):
    return len(rref(rows, nbits))


def dependencies(rows, int nlow):
    if nlow < 0 or nlow > 63:
        raise ValueError("nlow must be in [0, 63]")
    cdef uint64_t piv[64]
    cdef uint64_t low = (<uint64_t>1 << nlow) - 1
    cdef uint64_t r
    cdef int p
    cdef bint placed
    memset(piv, 0, sizeof(piv))
    out = []
    for row in rows:
        r = _word(row)
        placed = False
        while r & low:
            p = _hibit(r & low)
            if piv[p]:
                r ^= piv[p]
            else:
                piv[p] = r
                placed = True
                break
        if not placed and r:
            out.append(r >> nlow)
    return out


cdef void _rgs(int i, int m, int n, uint64_t *blocks, list out):
    cdef int k
    cdef uint64_t bit
    if i == n:
        out.append(tuple([blocks[k] for k in range(m)]))
        return
    bit = <uint64_t>1 << i
    for k in range(m + 1):
        blocks[k] |= bit
        _rgs(i + 1, m + 1 if k == m else m, n, blocks, out)
        blocks[k] ^= bit


def set_partitions(int n):
    if n < 0 or n > 64:
        raise ValueError("n must be in [0, 64]")
    if n == 0:
        return [()]
    cdef uint64_t blocks[64]
    memset(blocks, 0, sizeof(blocks))
    blocks[0] = 1
    out = []
    _rgs(1, 1, n, blocks, out)
    return out


cdef tuple _sorted_blocks(uint64_t *buf, int m):
    cdef int i, j
    cdef uint64_t t
    for i in range(1, m):
        t = buf[i]
        j = i - 1
        while j >= 0 and _lobit(buf[j]) > _lobit(t):
            buf[j + 1] = buf[j]
            j -= 1
        buf[j + 1] = t
    return tuple([buf[i] for i in range(m)])


def join_blocks(a, b):
    cdef uint64_t xa[64]
    cdef uint64_t xb[64]
    cdef uint64_t buf[64]
    cdef int na = len(a), nb = len(b), i, j, m = 0
    cdef uint64_t x
    if na > 64 or nb > 64:
        raise ValueError("too many blocks")
    for i in range(na):
        xa[i] = _word(a[i])
    for j in range(nb):
        xb[j] = _word(b[j])
    for i in range(na):
        for j in range(nb):
            x = xa[i] & xb[j]
            if x:
                buf[m] = x
                m += 1
    return _sorted_blocks(buf, m)


cdef int _find(int *parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def meet_blocks(a, b, int n):
    if n < 0 or n > 64:
        raise ValueError("n must be in [0, 64]")
    cdef int parent[64]
    cdef uint64_t merged[64]
    cdef uint64_t buf[64]
    cdef uint64_t blk, rest
    cdef int i, root, r, m = 0
    for i in range(n):
        parent[i] = i
        merged[i] = 0
    for obj in list(a) + list(b):
        blk = _word(obj)
        if not blk:
            continue
        root = _find(parent, _lobit(blk))
        rest = blk & (blk - 1)
        while rest:
            r = _find(parent, _lobit(rest))
            rest &= rest - 1
            if r != root:
                parent[r] = root
    for i in range(n):
        merged[_find(parent, i)] |= <uint64_t>1 << i
    for i in range(n):
        if merged[i]:
            buf[m] = merged[i]
            m += 1
    return _sorted_blocks(buf, m)


def refines_blocks(coarse, fine):
    cdef uint64_t xc[64]
    cdef int nc = len(coarse), i
    cdef uint64_t f
    cdef bint hit
    if nc > 64:
        raise ValueError("too many blocks")
    for i in range(nc):
        xc[i] = _word(coarse[i])
    for obj in fine:
        f = _word(obj)
        hit = False
        for i in range(nc):
            if f & xc[i] == f:
                hit = True
                break
        if not hit:
            return False
    return True
