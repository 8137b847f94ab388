"""Pure-Python kernels for packed sparse Laurent polynomials.

A monomial is a single Python int: the exponent of the variable with
registry slot ``i`` is the balanced base-``2**WIDTH`` digit at position
``i``.  Multiplying monomials is integer addition, inverting is negation,
and integer comparison is a lexicographic order compatible with
multiplication (highest slot most significant).

A polynomial is a dict ``{monomial: nonzero int coefficient}``.

The compiled module ``_kernels`` exposes the same functions; keep the two in
sync.
"""

import heapq

WIDTH = 20
BASE = 1 << WIDTH
HALF = BASE >> 1
MASK = BASE - 1


class DivisionFailed(ArithmeticError):
    pass


def decode(key):
    """Return the nonzero digits of ``key`` as ``[(slot, exponent), ...]``."""
    out = []
    i = 0
    while key:
        d = key & MASK
        if d >= HALF:
            d -= BASE
        if d:
            out.append((i, d))
        key = (key - d) >> WIDTH
        i += 1
    return out


def add(p, q, sign=1):
    r = dict(p)
    get = r.get
    for m, c in q.items():
        v = get(m, 0) + sign * c
        if v:
            r[m] = v
        else:
            del r[m]
    return r


def scale(p, c, shift=0):
    if not c:
        return {}
    return {m + shift: v * c for m, v in p.items()}


def mul(p, q):
    if len(p) < len(q):
        p, q = q, p
    if len(q) == 1:
        (m2, c2), = q.items()
        return {m + m2: c * c2 for m, c in p.items()}
    r = {}
    get = r.get
    qi = list(q.items())
    for m1, c1 in p.items():
        for m2, c2 in qi:
            k = m1 + m2
            r[k] = get(k, 0) + c1 * c2
    return {m: c for m, c in r.items() if c}


def _bounds(p):
    rows = [dict(decode(m)) for m in p]
    slots = set().union(*rows)
    lo = {i: min(d.get(i, 0) for d in rows) for i in slots}
    hi = {i: max(d.get(i, 0) for d in rows) for i in slots}
    return lo, hi


def _pack(expmap):
    key = 0
    for i, e in expmap.items():
        key += e << (WIDTH * i)
    return key


def divexact(p, q):
    """Exact quotient ``p / q`` or raise :class:`DivisionFailed`.

    Both operands are shifted to polynomial support (minimum exponent 0 in
    every variable), then leading terms are eliminated greedily.  The
    quotient's exponents must lie in ``[0, hi(p) - hi(q)]`` coordinatewise,
    which bounds the loop when the division is not exact.
    """
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
    q0 = [(m - shift_q, c) for m, c in q.items()]
    lq, cq = max(q0)
    heap = [-m for m in rem]
    heapq.heapify(heap)
    quo = {}
    get = rem.get
    while rem:
        m = -heapq.heappop(heap)
        c = get(m)
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
        for mq, v in q0:
            k = mq + t
            old = get(k)
            if old is None:
                rem[k] = -a * v
                heapq.heappush(heap, -k)
            else:
                nv = old - a * v
                if nv:
                    rem[k] = nv
                else:
                    del rem[k]
    shift = shift_p - shift_q
    return {m + shift: c for m, c in quo.items()}
