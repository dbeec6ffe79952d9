"""Brute-force equivariant deformation theory of punctual monomial ideals.

R = C[x, y] with mu_r acting diagonally: x^a y^b spans the irreducible
rho_{a w1 + b w2}. For a monomial ideal I of finite colength, the tangent
space to the invariant Hilbert scheme at I is Hom_R(I, R/I)^{mu_r}. It is
computed from the minimal generators and their consecutive syzygies.
"""

from __future__ import annotations

from .characters import RepClass, char_table_cyclic, regular_rep
from .errors import OrbisurfError
from .linalg import rank


def minimal_generators(gens) -> list[tuple[int, int]]:
    """Minimal monomial generators sorted by increasing x-exponent."""
    gens = {(int(a), int(b)) for a, b in gens}
    if any(a < 0 or b < 0 for a, b in gens):
        raise OrbisurfError("orbclass", "monomial exponents must be nonnegative")
    keep = [g for g in gens if not any(h != g and h[0] <= g[0] and h[1] <= g[1] for h in gens)]
    return sorted(keep)


def staircase(gens) -> list[tuple[int, int]]:
    """Monomials outside I; raises when the colength is infinite."""
    mins = minimal_generators(gens)
    xs = [a for a, b in mins if b == 0]
    ys = [b for a, b in mins if a == 0]
    if not xs or not ys:
        raise OrbisurfError("orbclass", "ideal does not have finite colength")
    out = []
    for a in range(xs[0]):
        for b in range(ys[0]):
            if not any(a >= g[0] and b >= g[1] for g in mins):
                out.append((a, b))
    return out


def colength(gens) -> int:
    return len(staircase(gens))


def partitions(n: int):
    """Partitions of n as non-increasing tuples."""

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, cap), 0, -1):
            for tail in rec(rest - part, part):
                yield (part,) + tail

    yield from rec(n, n)


def ideal_from_partition(lam) -> list[tuple[int, int]]:
    """Monomial ideal whose staircase has column heights lam (column a = x^a)."""
    lam = tuple(lam)
    if not lam:
        return [(0, 0)]
    gens = [(len(lam), 0)]
    for a, h in enumerate(lam):
        gens.append((a, h))
    return minimal_generators(gens)


def monomial_ideals(n: int):
    for lam in partitions(n):
        yield ideal_from_partition(lam)


def quotient_rep(r: int, weights, gens) -> RepClass:
    G = char_table_cyclic(r)
    w1, w2 = weights
    mults = [0] * r
    for a, b in staircase(gens):
        mults[(a * w1 + b * w2) % r] += 1
    return RepClass(G, tuple(mults))


def _tangent_dim(r: int, weights, gens, N: int) -> int:
    w1, w2 = weights
    basis = [m for m in staircase(gens) if m[0] + m[1] < N]
    index = {m: i for i, m in enumerate(basis)}
    mins = minimal_generators(gens)

    def wt(m):
        return (m[0] * w1 + m[1] * w2) % r

    # unknowns: coefficient of basis monomial m in phi(g_k), weights matching
    unknowns = []
    for k, g in enumerate(mins):
        for m in basis:
            if wt(m) == wt(g):
                unknowns.append((k, m))
    if not unknowns:
        return 0
    col = {u: j for j, u in enumerate(unknowns)}

    rows = []
    for k in range(len(mins) - 1):
        (a0, b0), (a1, b1) = mins[k], mins[k + 1]
        dx, dy = a1 - a0, b0 - b1
        # x^dx * phi(g_k) - y^dy * phi(g_{k+1}) = 0 in R/I
        eqs = {}
        for (kk, m), j in col.items():
            if kk == k:
                t, sign = (m[0] + dx, m[1]), 1
            elif kk == k + 1:
                t, sign = (m[0], m[1] + dy), -1
            else:
                continue
            if t in index:
                eqs.setdefault(t, {})[j] = sign
        for t in sorted(eqs):
            row = [0] * len(unknowns)
            for j, s in eqs[t].items():
                row[j] += s
            rows.append(row)
    return len(unknowns) - rank(rows)


def equivariant_tangent_oracle(r: int, weights, gens, N: int | None = None) -> int:
    """dim Hom_R(I, R/I)^{mu_r} by exact linear algebra over R/m^N."""
    if r < 1:
        raise OrbisurfError("orbclass", f"group order must be positive, got {r}")
    weights = (weights[0] % r, weights[1] % r)
    n = colength(gens)
    if n == 0:
        return 0
    if N is None:
        N = n + 2
    d0 = _tangent_dim(r, weights, gens, N)
    d1 = _tangent_dim(r, weights, gens, N + 1)
    if d0 != d1:
        raise OrbisurfError("orbclass", f"truncation order {N} is too small: answer moved from {d0} to {d1}")
    return d0


def _graded_quotient_dims(a: int, b: int, r: int) -> list[int]:
    """dim (R/I)_d for I = (a x + b y) + m^r, d = 0..r."""
    dims = []
    for d in range(r + 1):
        if d >= r:
            dims.append(0)
            continue
        if d == 0:
            dims.append(1)
            continue
        # (a x + b y) * x^i y^(d-1-i) in the monomial basis x^j y^(d-j) of R_d
        mat = []
        for i in range(d):
            row = [0] * (d + 1)
            row[i + 1] += a
            row[i] += b
            mat.append(row)
        dims.append(d + 1 - rank(mat))
    return dims


DEFAULT_SAMPLES = ((1, 0), (0, 1), (1, 1), (1, -1), (2, 3), (3, -5))


def verify_cluster_family(r: int, samples=DEFAULT_SAMPLES) -> dict:
    """Check that R/((a x + b y) + m^r) carries the regular representation.

    The action is diagonal with weights (1, 1), so degree d spans rho_{d mod r}.
    """
    if r < 1:
        raise OrbisurfError("orbclass", f"group order must be positive, got {r}")
    G = char_table_cyclic(r)
    reg = regular_rep(G)
    results = []
    for a, b in samples:
        if a == 0 and b == 0:
            raise OrbisurfError("orbclass", "[0:0] is not a point of P^1")
        mults = [0] * r
        for d, dim in enumerate(_graded_quotient_dims(a, b, r)):
            mults[d % r] += dim
        rep = RepClass(G, tuple(mults))
        results.append({"a": a, "b": b, "quotient": list(rep.mults), "regular": rep == reg})
    return {"r": r, "samples": results, "all_regular": all(s["regular"] for s in results)}
