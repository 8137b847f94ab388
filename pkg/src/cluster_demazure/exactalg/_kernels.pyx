# cython: language_level=3, boundscheck=False
"""Compiled kernels for packed sparse Laurent polynomials.

Mirrors ``_kernels_py`` function for function; see that module for the
monomial encoding.
"""

import heapq

from cluster_demazure.exactalg._kernels_py import DivisionFailed

DEF WIDTH = 20

cdef object BASE = 1 << WIDTH
cdef object HALF = BASE >> 1
cdef object MASK = BASE - 1


cpdef list decode(object key):
    cdef list out = []
    cdef Py_ssize_t i = 0
    cdef long d
    while key:
        d = <long>(key & MASK)
        if d >= (1 << (WIDTH - 1)):
            d -= (1 << WIDTH)
        if d:
            out.append((i, d))
        key = (key - d) >> WIDTH
        i += 1
    return out


cpdef dict add(dict p, dict q, int sign=1):
    cdef dict r = dict(p)
    cdef object m, c, v
    for m, c in q.items():
        v = r.get(m, 0) + sign * c
        if v:
            r[m] = v
        else:
            del r[m]
    return r


cpdef dict scale(dict p, object c, object shift=0):
    if not c:
        return {}
    cdef object m, v
    return {m + shift: v * c for m, v in p.items()}


cpdef dict mul(dict p, dict q):
    cdef dict r
    cdef list pk, pc, qk, qc
    cdef Py_ssize_t i, j, n, nq
    cdef object m1, c1, k, old
    if len(p) < len(q):
        p, q = q, p
    if len(q) == 1:
        (m2, c2), = q.items()
        return {m + m2: c * c2 for m, c in p.items()}
    qk = list(q.keys())
    qc = list(q.values())
    nq = len(qk)
    r = {}
    for m1, c1 in p.items():
        for j in range(nq):
            k = m1 + qk[j]
            old = r.get(k)
            if old is None:
                r[k] = c1 * qc[j]
            else:
                r[k] = old + c1 * qc[j]
    return {m: c for m, c in r.items() if c}


cdef tuple _bounds(dict p):
    cdef list rows = [dict(decode(m)) for m in p]
    cdef set slots = set()
    cdef dict d
    for d in rows:
        slots.update(d)
    lo = {i: min([d.get(i, 0) for d in rows]) for i in slots}
    hi = {i: max([d.get(i, 0) for d in rows]) for i in slots}
    return lo, hi


cdef object _pack(dict expmap):
    cdef object key = 0
    for i, e in expmap.items():
        key += e << (WIDTH * i)
    return key


cpdef dict divexact(dict p, dict q):
    cdef dict rem, quo, cap, plo, phi, qlo, qhi
    cdef list q0k, q0c, heap
    cdef Py_ssize_t j, nq
    cdef object m, c, t, a, b, k, old, nv, lq, cq
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return {}
    if len(q) == 1:
        (mq, cq), = q.items()
        out = {}
        for m, c in p.items():
            a, b = divmod(c, cq)
            if b:
                raise DivisionFailed("coefficient %d not divisible by %d" % (c, cq))
            out[m - mq] = a
        return out

    plo, phi = _bounds(p)
    qlo, qhi = _bounds(q)
    shift_p = _pack(plo)
    shift_q = _pack(qlo)
    cap = {}
    for i in set(phi) | set(qhi) | set(plo) | set(qlo):
        cap[i] = (phi.get(i, 0) - plo.get(i, 0)) - (qhi.get(i, 0) - qlo.get(i, 0))
        if cap[i] < 0:
            raise DivisionFailed("degree bound violated in slot %d" % i)

    rem = {m - shift_p: c for m, c in p.items()}
    q0 = sorted([(m - shift_q, c) for m, c in q.items()])
    q0k = [x[0] for x in q0]
    q0c = [x[1] for x in q0]
    nq = len(q0k)
    lq = q0k[nq - 1]
    cq = q0c[nq - 1]
    heap = [-m for m in rem]
    heapq.heapify(heap)
    quo = {}
    while rem:
        m = -heapq.heappop(heap)
        c = rem.get(m)
        if c is None:
            continue
        t = m - lq
        for i, e in decode(t):
            if e < 0 or e > cap.get(i, 0):
                raise DivisionFailed("non-polynomial quotient term")
        a, b = divmod(c, cq)
        if b:
            raise DivisionFailed("coefficient %d not divisible by %d" % (c, cq))
        quo[t] = a
        for j in range(nq):
            k = q0k[j] + t
            old = rem.get(k)
            if old is None:
                rem[k] = -a * q0c[j]
                heapq.heappush(heap, -k)
            else:
                nv = old - a * q0c[j]
                if nv:
                    rem[k] = nv
                else:
                    del rem[k]
    shift = shift_p - shift_q
    return {m + shift: c for m, c in quo.items()}
