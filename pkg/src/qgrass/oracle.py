"""Brute-force point counts of quiver Grassmannians over prime fields.

Nothing here touches the shuffle algebra: subrepresentations are enumerated
directly, one reduced-row-echelon subspace per vertex.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from pathlib import Path
from typing import Iterator, Sequence

from .errors import DimensionExceeds, MalformedSpec, ShapeMismatch
from .quiver import DimVector, Quiver, add
from .repmod import QuiverRep, generic_decomposition, rep_of_partition

Basis = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ModularRep:
    p: int
    quiver: Quiver
    dims: DimVector
    maps: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def from_rep(cls, rep: QuiverRep, p: int) -> "ModularRep":
        maps = tuple(tuple(tuple(x % p for x in row) for row in m) for m in rep.maps)
        return cls(p, rep.quiver, rep.dims, maps)

    @classmethod
    def from_json(cls, data) -> "ModularRep":
        if isinstance(data, (str, Path)):
            try:
                data = json.loads(Path(data).read_text())
            except (OSError, json.JSONDecodeError) as exc:
                raise MalformedSpec(f"cannot read representation file {data}: {exc}") from exc
        if "prime" not in data:
            raise MalformedSpec('representation file needs a "prime" field')
        return cls.from_rep(QuiverRep.from_json(data), int(data["prime"]))


def enumerate_subspaces(p: int, d: int, e: int) -> Iterator[Basis]:
    """Every ``e``-dimensional subspace of ``F_p^d`` once, as its RREF basis."""
    if not 0 <= e <= d:
        raise DimensionExceeds(f"no {e}-dimensional subspaces of F_{p}^{d}")
    for pivots in combinations(range(d), e):
        pivot_set = set(pivots)
        free = [(r, c) for r, pc in enumerate(pivots)
                for c in range(pc + 1, d) if c not in pivot_set]
        for values in product(range(p), repeat=len(free)):
            rows = [[0] * d for _ in range(e)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), v in zip(free, values):
                rows[r][c] = v
            yield tuple(tuple(r) for r in rows)


def _in_span(vec: Sequence[int], basis: Basis, p: int) -> bool:
    v = list(vec)
    for row in basis:
        pc = next(i for i, x in enumerate(row) if x)
        c = v[pc]
        if c:
            v = [(a - c * b) % p for a, b in zip(v, row)]
    return not any(v)


def _apply(matrix, vec, p: int) -> tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(row, vec)) % p for row in matrix)


def count_subreps(rep: ModularRep, mu: Sequence[int]) -> int:
    """Number of subrepresentations ``W`` with dimension vector ``mu``.

    Vertices are filled in increasing order; every arrow ascends, so when
    vertex ``t`` is chosen all its incoming arrows can be checked.
    """
    mu = tuple(mu)
    if len(mu) != len(rep.dims):
        raise ShapeMismatch("sub-dimension vector has the wrong length")
    if any(m > d or m < 0 for m, d in zip(mu, rep.dims)):
        raise DimensionExceeds(f"{mu} does not fit inside {rep.dims}")
    p = rep.p
    quiver = rep.quiver
    incoming = {t: [] for t in quiver.vertices}
    for h, (s, t) in enumerate(quiver.arrows):
        incoming[t].append((s, rep.maps[h]))
    spaces = {v: list(enumerate_subspaces(p, rep.dims[v - 1], mu[v - 1])) for v in quiver.vertices}

    def rec(v: int, chosen: dict[int, Basis]) -> int:
        if v > quiver.n:
            return 1
        images = [_apply(m, b, p) for s, m in incoming[v] for b in chosen[s]]
        images = [x for x in images if any(x)]
        total = 0
        for w in spaces[v]:
            if all(_in_span(x, w, p) for x in images):
                chosen[v] = w
                total += rec(v + 1, chosen)
        chosen.pop(v, None)
        return total

    return rec(1, {})


@dataclass(frozen=True)
class PrimeCheck:
    p: int
    oracle: int
    formula: int

    @property
    def ok(self) -> bool:
        return self.oracle == self.formula


@dataclass(frozen=True)
class VerificationReport:
    nu: DimVector
    mu: DimVector
    checks: tuple[PrimeCheck, ...]
    polynomial: str

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_against_formula(quiver: Quiver, nu: Sequence[int], mu: Sequence[int],
                           primes: Sequence[int]) -> VerificationReport:
    """Compare brute-force counts on the generic module with the formula's point counts."""
    from .grass import poincare, point_count

    nu, mu = tuple(nu), tuple(mu)
    result = poincare(quiver, nu, mu)
    module = rep_of_partition(quiver, generic_decomposition(quiver, add(nu, mu)))
    checks = tuple(PrimeCheck(p, count_subreps(ModularRep.from_rep(module, p), mu),
                              point_count(result, p)) for p in primes)
    return VerificationReport(nu, mu, checks, str(result.normalized))


def compare_degeneration(degenerate: QuiverRep, rigid: QuiverRep, mu: Sequence[int],
                         primes: Sequence[int]) -> bool:
    """True iff ``degenerate`` has at least as many ``mu``-subrepresentations at every prime."""
    if degenerate.quiver != rigid.quiver or degenerate.dims != rigid.dims:
        raise ShapeMismatch("both representations must share quiver and dimension vector")
    return all(count_subreps(ModularRep.from_rep(degenerate, p), mu)
               >= count_subreps(ModularRep.from_rep(rigid, p), mu) for p in primes)
