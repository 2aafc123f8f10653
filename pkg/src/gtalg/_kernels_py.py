"""Pure-Python word kernels.

Every kernel acts on a single word (a tuple of small non-negative ints, see
``gtalg.tensor`` for the letter encoding) and returns a dict with *integer*
coefficients. Rational scaling is applied by the callers. The compiled module
``gtalg._kernels`` mirrors this file function by function.
"""

from __future__ import annotations


def pairing(x: int, y: int) -> int:
    # (A_i . B_i) = 1, (B_i . A_i) = -1, zero otherwise
    if (x ^ y) == 1:
        return y - x
    return 0


def cyclic_sum(w: tuple) -> dict:
    out: dict = {}
    m = len(w)
    for p in range(m):
        r = w[p:] + w[:p]
        out[r] = out.get(r, 0) + 1
    return out


def dynkin(w: tuple) -> dict:
    m = len(w)
    if m == 0:
        raise ValueError("Dynkin map is undefined on the empty word")
    acc = {(w[-1],): 1}
    for p in range(m - 2, -1, -1):
        x = (w[p],)
        new: dict = {}
        for u, c in acc.items():
            left = x + u
            right = u + x
            new[left] = new.get(left, 0) + c
            new[right] = new.get(right, 0) - c
        acc = {u: c for u, c in new.items() if c}
    return acc


def coproduct(w: tuple) -> dict:
    """Sum over the 2^m ways of splitting w into two complementary subsequences."""
    m = len(w)
    out: dict = {}
    for mask in range(1 << m):
        left = tuple(w[p] for p in range(m) if mask >> p & 1)
        right = tuple(w[p] for p in range(m) if not mask >> p & 1)
        key = (left, right)
        out[key] = out.get(key, 0) + 1
    return out


def schedler(w: tuple) -> dict:
    m = len(w)
    out: dict = {}
    for i in range(m):
        for j in range(i + 1, m):
            c = pairing(w[i], w[j])
            if not c:
                continue
            inner = w[i + 1:j]
            outer = w[j + 1:] + w[:i]
            if not inner or not outer:
                continue
            n_in = cyclic_sum(inner)
            n_out = cyclic_sum(outer)
            for a, ca in n_in.items():
                for b, cb in n_out.items():
                    k = c * ca * cb
                    out[(a, b)] = out.get((a, b), 0) - k
                    out[(b, a)] = out.get((b, a), 0) + k
    return {k: v for k, v in out.items() if v}


def mu_alg(w: tuple) -> dict:
    m = len(w)
    out: dict = {}
    for i in range(m):
        for j in range(i + 1, m):
            c = pairing(w[i], w[j])
            if not c or j == i + 1:
                continue
            first = w[:i] + w[j + 1:]
            for b, cb in cyclic_sum(w[i + 1:j]).items():
                key = (first, b)
                out[key] = out.get(key, 0) + c * cb
    return {k: v for k, v in out.items() if v}


def mu_zero_scaled(w: tuple) -> dict:
    """Integer part K of the constant Laurent term, which equals -1/2 * K.

    Evaluates the recursive formula term by term: the (1 x iota)Delta(X_i X_j)
    products for every pair i < j, then the single-letter terms.
    """
    m = len(w)
    out: dict = {}
    for i in range(m):
        for j in range(i + 1, m):
            prefix = w[:i]
            suffix = w[j + 1:]
            inner = w[i + 1:j]
            for (a, b), c in coproduct((w[i], w[j])).items():
                # antipode on the right slot
                sign = -1 if len(b) % 2 else 1
                rb = b[::-1]
                first = prefix + a + suffix
                second = rb + inner
                if not second:
                    continue
                for n, cn in cyclic_sum(second).items():
                    key = (first, n)
                    out[key] = out.get(key, 0) + sign * c * cn
    for i in range(m):
        key = (w[:i] + w[i + 1:], (w[i],))
        out[key] = out.get(key, 0) + 1
    return {k: v for k, v in out.items() if v}


def derive_word(d: tuple, w: tuple) -> dict:
    """Leibniz action of the derivation attached to the word d on the word w."""
    head = d[0]
    tail = d[1:]
    out: dict = {}
    for p in range(len(w)):
        c = pairing(w[p], head)
        if c:
            key = w[:p] + tail + w[p + 1:]
            out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def contract_first(w: tuple):
    return pairing(w[0], w[1]), w[2:]


def bullet(u: tuple, v: tuple):
    return pairing(u[-1], v[0]), u[:-1] + v[1:]
