"""Permutations of {0..n-1} stored as tuples of images.

Composition is applied left to right: ``mul(p, q)`` is "p then q", so the
image of a point under the product is ``q[p[i]]``.  This convention keeps
orbit transversal words readable and matches the induced action on tuples,
``apply(xy, o) == apply(y, apply(x, o))``.
"""

from __future__ import annotations

import math
import re

from .errors import ParseError


def identity(n: int) -> tuple:
    return tuple(range(n))


def is_identity(p) -> bool:
    return all(i == j for i, j in enumerate(p))


def check_perm(p, degree=None):
    """Raise ValueError unless p is a permutation (of the given degree)."""
    if degree is not None and len(p) != degree:
        raise ValueError(f"expected degree {degree}, got {len(p)}")
    if set(p) != set(range(len(p))):
        raise ValueError(f"not a permutation: {p!r}")


def mul(p, q) -> tuple:
    """Apply p, then q."""
    return tuple(q[i] for i in p)


def mul_many(perms, n: int) -> tuple:
    out = identity(n)
    for p in perms:
        out = mul(out, p)
    return out


def inverse(p) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def power(p, k: int) -> tuple:
    if k < 0:
        return power(inverse(p), -k)
    out = identity(len(p))
    base = tuple(p)
    while k:
        if k & 1:
            out = mul(out, base)
        base = mul(base, base)
        k >>= 1
    return out


def conjugate(p, x) -> tuple:
    """p^x = x^-1 p x (apply x^-1, then p, then x)."""
    return mul(mul(inverse(x), p), x)


def cycles(p) -> list:
    """Nontrivial cycles, each rotated to start at its least point, sorted."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return sorted(out)


def perm_order(p) -> int:
    return math.lcm(*(len(c) for c in cycles(p)), 1)


def moved_points(p) -> list:
    return [i for i, j in enumerate(p) if i != j]


def format_cycles(p) -> str:
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> tuple:
    """Parse disjoint-cycle notation over 0-based points, e.g. ``(0 1 2)(3 4)``.

    The identity is written ``()``.  Points may be separated by spaces or
    commas.  Cycles need not be disjoint; they compose left to right.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty permutation")
    consumed = _CYCLE_RE.sub("", stripped).strip()
    if consumed:
        raise ParseError(f"unparsed text in permutation: {consumed!r}")
    out = identity(degree)
    for m in _CYCLE_RE.finditer(stripped):
        body = m.group(1).replace(",", " ").split()
        if not body:
            continue
        try:
            pts = [int(tok) for tok in body]
        except ValueError as exc:
            raise ParseError(f"bad point in cycle: {m.group(0)!r}") from exc
        if len(set(pts)) != len(pts):
            raise ParseError(f"repeated point in cycle: {m.group(0)!r}")
        for pt in pts:
            if not 0 <= pt < degree:
                raise ParseError(f"point {pt} out of range for degree {degree}")
        c = list(identity(degree))
        for a, b in zip(pts, pts[1:]):
            c[a] = b
        c[pts[-1]] = pts[0]
        out = mul(out, tuple(c))
    return out
