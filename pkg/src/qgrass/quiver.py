"""Acyclic quivers, dimension vectors and the Euler form.

Vertices are labelled ``1..n`` and are always stored in an order where every
arrow ascends (``s < t``).  :func:`load_quiver` performs that relabelling and
returns the old-to-new map so that user data can be permuted consistently.
Dimension vectors are plain tuples of ints; entry ``k - 1`` is the dimension
at vertex ``k``.
"""
from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Sequence

from .errors import CyclicQuiver, MalformedSpec
from .laurent import LaurentPoly, ONE, quantum_factorial

DimVector = tuple[int, ...]
Word = tuple[int, ...]


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple((int(s), int(t)) for s, t in self.arrows))
        if self.n < 0:
            raise MalformedSpec("vertex count must be nonnegative")
        for s, t in self.arrows:
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise MalformedSpec(f"arrow ({s},{t}) has a label outside 1..{self.n}")
            if s == t:
                raise CyclicQuiver(f"loop at vertex {s}")
            if s > t:
                raise MalformedSpec(
                    f"arrow ({s},{t}) descends; use load_quiver to relabel vertices first")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def dim(self, entries: Sequence[int]) -> DimVector:
        v = tuple(int(x) for x in entries)
        if len(v) != self.n:
            raise MalformedSpec(f"dimension vector {v} has length {len(v)}, expected {self.n}")
        if any(x < 0 for x in v):
            raise MalformedSpec(f"dimension vector {v} has a negative entry")
        return v

    def zero(self) -> DimVector:
        return (0,) * self.n

    def simple(self, k: int) -> DimVector:
        return tuple(int(i == k - 1) for i in range(self.n))

    # -- bilinear forms ------------------------------------------------

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        a = [[0] * self.n for _ in range(self.n)]
        for i in range(self.n):
            a[i][i] = 2
        for s, t in self.arrows:
            a[s - 1][t - 1] -= 1
            a[t - 1][s - 1] -= 1
        return tuple(tuple(row) for row in a)

    def cartan(self, i: int, j: int) -> int:
        """Pairing of simple roots ``alpha_i . alpha_j`` (1-based labels)."""
        return self.cartan_matrix[i - 1][j - 1]

    def euler_form(self, a: Sequence[int], b: Sequence[int]) -> int:
        if len(a) != self.n or len(b) != self.n:
            raise MalformedSpec("dimension vectors must have one entry per vertex")
        return (sum(x * y for x, y in zip(a, b))
                - sum(a[s - 1] * b[t - 1] for s, t in self.arrows))

    def dim_rep_space(self, nu: Sequence[int]) -> int:
        return sum(nu[s - 1] * nu[t - 1] for s, t in self.arrows)

    def dim_incidence_space(self, nu: Sequence[int], mu: Sequence[int]) -> int:
        total = tuple(x + y for x, y in zip(nu, mu))
        return self.dim_rep_space(total) + self.euler_form(mu, nu)

    def t_factor(self, nu: Sequence[int], mu: Sequence[int]) -> int:
        return self.dim_rep_space(nu) + self.dim_rep_space(mu)

    # -- graph shape ---------------------------------------------------

    def neighbours(self, k: int) -> set[int]:
        out = set()
        for s, t in self.arrows:
            if s == k:
                out.add(t)
            elif t == k:
                out.add(s)
        return out

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.neighbours(x):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    @cached_property
    def is_dynkin(self) -> bool:
        """True iff the Cartan matrix is positive definite (every component is ADE)."""
        a = [[Fraction(x) for x in row] for row in self.cartan_matrix]
        n = self.n
        for k in range(n):
            pivot = a[k][k]
            if pivot <= 0:
                return False
            for i in range(k + 1, n):
                f = a[i][k] / pivot
                if f:
                    for j in range(k, n):
                        a[i][j] -= f * a[k][j]
        return True

    @cached_property
    def is_type_a(self) -> bool:
        """True iff every connected component of the underlying graph is a simple path."""
        if len(set(self.arrows)) != len(self.arrows):
            return False
        pairs = {frozenset(h) for h in self.arrows}
        if len(pairs) != len(self.arrows):
            return False
        if any(len(self.neighbours(v)) > 2 for v in self.vertices):
            return False
        # a forest with max degree 2 is a union of paths
        return len(self.arrows) == self.n - len(self.components())

    def to_json(self) -> dict:
        return {"vertices": self.n, "arrows": [list(h) for h in self.arrows]}


def topological_relabeling(n: int, arrows: Sequence[tuple[int, int]]) -> dict[int, int]:
    """Old-to-new label map making every arrow ascend.

    Ties are broken by the smallest old label, so an already ascending quiver
    gets the identity map.
    """
    indeg = {v: 0 for v in range(1, n + 1)}
    succ: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for s, t in arrows:
        indeg[t] += 1
        succ[s].append(t)
    heap = [v for v, d in indeg.items() if d == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for t in succ[v]:
            indeg[t] -= 1
            if indeg[t] == 0:
                heapq.heappush(heap, t)
    if len(order) != n:
        raise CyclicQuiver("quiver has a directed cycle")
    return {old: new for new, old in enumerate(order, start=1)}


def load_quiver(spec) -> tuple[Quiver, dict[int, int]]:
    """Build a :class:`Quiver` from ``{"vertices": n, "arrows": [[s, t], ...]}``.

    ``spec`` may be a dict, a JSON string or a path to a JSON file.  Returns
    the relabelled quiver and the old-to-new vertex map.
    """
    if isinstance(spec, Path) or (isinstance(spec, str) and not spec.lstrip().startswith("{")):
        try:
            spec = json.loads(Path(spec).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise MalformedSpec(f"cannot read quiver file {spec}: {exc}") from exc
    elif isinstance(spec, str):
        try:
            spec = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise MalformedSpec(f"invalid quiver JSON: {exc}") from exc
    if not isinstance(spec, dict) or "vertices" not in spec:
        raise MalformedSpec('quiver spec needs a "vertices" field')
    n = spec["vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise MalformedSpec('"vertices" must be a nonnegative integer')
    raw = spec.get("arrows", [])
    arrows = []
    for h in raw:
        if (not isinstance(h, (list, tuple)) or len(h) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in h)):
            raise MalformedSpec(f"arrow {h!r} is not a pair of integers")
        s, t = h
        if not (1 <= s <= n and 1 <= t <= n):
            raise MalformedSpec(f"arrow {h!r} has a label outside 1..{n}")
        if s == t:
            raise CyclicQuiver(f"loop at vertex {s}")
        arrows.append((s, t))
    relabel = topological_relabeling(n, arrows)
    return Quiver(n, tuple((relabel[s], relabel[t]) for s, t in arrows)), relabel


def permute_dim(vec: Sequence[int], relabel: dict[int, int]) -> DimVector:
    """Move a dimension vector given in old labels into new labels."""
    out = [0] * len(vec)
    for old, new in relabel.items():
        out[new - 1] = vec[old - 1]
    return tuple(out)


def s_vec(nu: Sequence[int]) -> int:
    return sum(k * (k - 1) // 2 for k in nu)


def nu_factorial(nu: Sequence[int]) -> LaurentPoly:
    out = ONE
    for k in nu:
        out = out * quantum_factorial(k)
    return out


def word_i_nu(nu: Sequence[int]) -> Word:
    """``[1..1 2..2 ... n..n]`` with vertex ``k`` repeated ``nu[k-1]`` times."""
    return tuple(k for k, m in enumerate(nu, start=1) for _ in range(m))


def add(a: Sequence[int], b: Sequence[int]) -> DimVector:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> DimVector:
    return tuple(x - y for x, y in zip(a, b))


def height(nu: Sequence[int]) -> int:
    return sum(nu)


def dim_vectors_up_to(n: int, max_height: int, min_height: int = 0):
    """All dimension vectors of length ``n`` with height in ``[min_height, max_height]``."""
    def rec(prefix, remaining, slots):
        if slots == 0:
            yield tuple(prefix)
            return
        for x in range(remaining + 1):
            yield from rec(prefix + [x], remaining - x, slots - 1)

    for v in rec([], max_height, n):
        if sum(v) >= min_height:
            yield v


def sub_dim_vectors(total: Sequence[int]):
    """All ``mu`` with ``0 <= mu <= total`` entrywise."""
    def rec(i):
        if i == len(total):
            yield ()
            return
        for rest in rec(i + 1):
            for x in range(total[i] + 1):
                yield (x,) + rest

    return sorted(rec(0))
