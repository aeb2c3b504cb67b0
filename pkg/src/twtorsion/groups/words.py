"""Words in a free group and Fox free differential calculus.

A word is a tuple of nonzero ints: generator ``i`` (0-based) is ``i + 1`` and
its inverse is ``-(i + 1)``.  Elements of the integral group ring Z[F] are
dicts ``{reduced word: nonzero int}``.
"""
from __future__ import annotations

Word = tuple


def free_reduce(w) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(w) -> Word:
    return tuple(-x for x in reversed(w))


def multiply(*words) -> Word:
    out: tuple = ()
    for w in words:
        out = free_reduce(out + tuple(w))
    return out


def letter(gen: int, exp: int = 1) -> Word:
    return (gen + 1,) * exp if exp >= 0 else (-(gen + 1),) * (-exp)


def generator_index(x: int) -> int:
    return abs(x) - 1


# -- group ring Z[F] ------------------------------------------------------

def ring_add(*elements) -> dict:
    out: dict = {}
    for el in elements:
        for w, c in el.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return out


def ring_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for u, c in a.items():
        for v, d in b.items():
            w = free_reduce(u + v)
            s = out.get(w, 0) + c * d
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return out


def ring_scale(a: dict, k: int) -> dict:
    return {w: k * c for w, c in a.items()} if k else {}


def ring_element(w, coeff: int = 1) -> dict:
    return {free_reduce(w): coeff} if coeff else {}


def fox_derivative(r, x: int) -> dict:
    """Fox derivative of the word ``r`` with respect to generator ``x`` (0-based).

    d(x)/dx = 1, d(x^-1)/dx = -x^-1, d(uv)/dx = du/dx + u dv/dx.
    """
    g = x + 1
    out: dict = {}
    prefix: tuple = ()
    for ell in r:
        if ell == g:
            out = ring_add(out, {free_reduce(prefix): 1})
        elif ell == -g:
            out = ring_add(out, {free_reduce(prefix + (ell,)): -1})
        prefix = prefix + (ell,)
    return out


def exponent_sum(w, gen: int) -> int:
    return sum(1 if x > 0 else -1 for x in w if abs(x) == gen + 1)
