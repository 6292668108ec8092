"""Explicit quiver representations with integer matrices.

Only type A quivers get automatic indecomposables (interval modules); Hom
dimensions are exact ranks over the rationals.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Sequence

from .errors import (DisconnectedSupport, MalformedSpec, MultipleRigidPartitions, NegativeExt,
                     NoRigidPartition, NotTypeA, ShapeMismatch)
from .quiver import DimVector, Quiver, load_quiver, permute_dim
from .roots import KostantPartition, root_system

Matrix = tuple[tuple[int, ...], ...]


def zero_matrix(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


@dataclass(frozen=True)
class QuiverRep:
    quiver: Quiver
    dims: DimVector
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "maps", tuple(tuple(tuple(int(x) for x in row) for row in m)
                                               for m in self.maps))
        if len(self.dims) != self.quiver.n:
            raise ShapeMismatch(f"{len(self.dims)} dimensions for {self.quiver.n} vertices")
        if len(self.maps) != len(self.quiver.arrows):
            raise ShapeMismatch(f"{len(self.maps)} matrices for {len(self.quiver.arrows)} arrows")
        for (s, t), m in zip(self.quiver.arrows, self.maps):
            rows, cols = self.dims[t - 1], self.dims[s - 1]
            if len(m) != rows or any(len(r) != cols for r in m):
                raise ShapeMismatch(f"arrow ({s},{t}) needs a {rows}x{cols} matrix")

    @classmethod
    def zero(cls, quiver: Quiver) -> "QuiverRep":
        return cls(quiver, quiver.zero(), tuple(() for _ in quiver.arrows))

    def to_json(self) -> dict:
        return {"quiver": self.quiver.to_json(), "dims": list(self.dims),
                "matrices": [[list(r) for r in m] for m in self.maps]}

    @classmethod
    def from_json(cls, data) -> "QuiverRep":
        if isinstance(data, (str, Path)):
            try:
                data = json.loads(Path(data).read_text())
            except (OSError, json.JSONDecodeError) as exc:
                raise MalformedSpec(f"cannot read representation file {data}: {exc}") from exc
        try:
            quiver, relabel = load_quiver(data["quiver"])
            dims = permute_dim(data["dims"], relabel)
            return cls(quiver, dims, tuple(data["matrices"]))
        except (KeyError, TypeError) as exc:
            raise MalformedSpec(f"malformed representation: {exc}") from exc


def direct_sum(reps: Sequence[QuiverRep], quiver: Quiver) -> QuiverRep:
    """Block-diagonal sum, blocks in the given order."""
    if not reps:
        return QuiverRep.zero(quiver)
    dims = tuple(sum(r.dims[k] for r in reps) for k in range(quiver.n))
    maps = []
    for h, (s, t) in enumerate(quiver.arrows):
        big = [[0] * dims[s - 1] for _ in range(dims[t - 1])]
        r0 = c0 = 0
        for rep in reps:
            for i, row in enumerate(rep.maps[h]):
                for j, x in enumerate(row):
                    big[r0 + i][c0 + j] = x
            r0 += rep.dims[t - 1]
            c0 += rep.dims[s - 1]
        maps.append(big)
    return QuiverRep(quiver, dims, tuple(maps))


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals."""
    m = [[Fraction(x) for x in r] for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rk = 0
    for col in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        p = m[rk][col]
        for i in range(rk + 1, len(m)):
            if m[i][col]:
                f = m[i][col] / p
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
        if rk == len(m):
            break
    return rk


def _require_type_a(quiver: Quiver) -> None:
    if not quiver.is_type_a:
        raise NotTypeA("explicit indecomposables are only built for type A quivers")


def interval_module(quiver: Quiver, support) -> QuiverRep:
    _require_type_a(quiver)
    support = set(support)
    if not support:
        return QuiverRep.zero(quiver)
    start = min(support)
    reached, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for w in quiver.neighbours(v) & support:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if reached != support:
        raise DisconnectedSupport(f"support {sorted(support)} is not connected")
    dims = tuple(int(k in support) for k in quiver.vertices)
    maps = tuple(((1,),) if s in support and t in support
                 else zero_matrix(dims[t - 1], dims[s - 1])
                 for s, t in quiver.arrows)
    return QuiverRep(quiver, dims, maps)


def root_module(quiver: Quiver, beta: Sequence[int]) -> QuiverRep:
    if any(x > 1 for x in beta):
        raise NotTypeA(f"{tuple(beta)} is not a type A root")
    return interval_module(quiver, {k for k, x in enumerate(beta, start=1) if x})


def rep_of_partition(quiver: Quiver, lam: KostantPartition) -> QuiverRep:
    _require_type_a(quiver)
    return direct_sum([root_module(quiver, b) for b in lam], quiver)


def hom_dim(m: QuiverRep, n: QuiverRep) -> int:
    """Dimension of the space of families ``phi_v`` with ``phi_t M_h = N_h phi_s``."""
    if m.quiver != n.quiver:
        raise ShapeMismatch("representations of different quivers")
    quiver = m.quiver
    offset = {}
    nvars = 0
    for v in quiver.vertices:
        offset[v] = nvars
        nvars += n.dims[v - 1] * m.dims[v - 1]

    def var(v, r, c):
        return offset[v] + r * m.dims[v - 1] + c

    eqs = []
    for h, (s, t) in enumerate(quiver.arrows):
        mh, nh = m.maps[h], n.maps[h]
        for r in range(n.dims[t - 1]):
            for c in range(m.dims[s - 1]):
                row = [0] * nvars
                for k in range(m.dims[t - 1]):
                    if mh[k][c]:
                        row[var(t, r, k)] += mh[k][c]
                for k in range(n.dims[s - 1]):
                    if nh[r][k]:
                        row[var(s, k, c)] -= nh[r][k]
                eqs.append(row)
    return nvars - rank(eqs)


def ext_dim(m: QuiverRep, n: QuiverRep) -> int:
    e = hom_dim(m, n) - m.quiver.euler_form(m.dims, n.dims)
    if e < 0:
        raise NegativeExt(f"negative Ext dimension {e}")
    return e


@lru_cache(maxsize=4096)
def _root_ext(quiver: Quiver, a, b) -> int:
    return ext_dim(root_module(quiver, a), root_module(quiver, b))


def is_rigid_partition(quiver: Quiver, lam: KostantPartition) -> bool:
    _require_type_a(quiver)
    parts = sorted(set(map(tuple, lam)))
    return all(_root_ext(quiver, a, b) == 0 for a in parts for b in parts)


@lru_cache(maxsize=4096)
def generic_decomposition(quiver: Quiver, nu: DimVector) -> KostantPartition:
    """The unique Kostant partition of ``nu`` whose module has no self-extensions."""
    _require_type_a(quiver)
    rigid = [lam for lam in root_system(quiver).kostant_partitions(tuple(nu))
             if is_rigid_partition(quiver, lam)]
    if not rigid:
        raise NoRigidPartition(f"no rigid Kostant partition of {tuple(nu)}")
    if len(rigid) > 1:
        raise MultipleRigidPartitions(f"{len(rigid)} rigid Kostant partitions of {tuple(nu)}")
    return rigid[0]


def directedness_violations(quiver: Quiver) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Root pairs ``a < b`` (Lyndon order) with ``Hom(M(a), M(b)) != 0`` or ``Ext(M(b), M(a)) != 0``.

    An empty list means the lexicographic order on roots is adapted to the
    orientation.
    """
    _require_type_a(quiver)
    rs = root_system(quiver)
    bad = []
    for a in rs.roots:
        for b in rs.roots:
            if rs.compare_roots(a, b) < 0:
                ma, mb = root_module(quiver, a), root_module(quiver, b)
                if hom_dim(ma, mb) or ext_dim(mb, ma):
                    bad.append((a, b))
    return bad


@lru_cache(maxsize=64)
def order_assumption_holds(quiver: Quiver) -> bool:
    return not directedness_violations(quiver)
