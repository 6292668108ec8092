"""Positive roots, good Lyndon words and Kostant partitions of a Dynkin quiver.

The lexicographic order of good Lyndon words is the only order used on
roots; Kostant partitions list their parts from the largest Lyndon word to
the smallest.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NoFactorization, NotDynkin, WeightMismatch
from .quiver import DimVector, Quiver, Word, add, sub
from .words import concat, parse_word

Root = DimVector
KostantPartition = tuple[Root, ...]


def positive_roots(quiver: Quiver) -> list[Root]:
    """Reflection closure of the simple roots, sorted by height then coordinates."""
    if not quiver.is_dynkin:
        raise NotDynkin("underlying graph is not a disjoint union of ADE diagrams")
    a = quiver.cartan_matrix
    n = quiver.n
    simples = [quiver.simple(k) for k in quiver.vertices]
    found = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(beta[j] * a[j][i] for j in range(n))
                if pairing == 0:
                    continue
                gamma = tuple(beta[j] - (pairing if j == i else 0) for j in range(n))
                if all(x >= 0 for x in gamma) and any(gamma) and gamma not in found:
                    found.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return sorted(found, key=lambda r: (sum(r), r))


class RootSystem:
    """Roots of ``quiver`` together with their good Lyndon words."""

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.roots = positive_roots(quiver)
        self._root_set = set(self.roots)
        self._lyndon: dict[Root, Word] = {}
        for beta in self.roots:  # increasing height, so every split is already known
            self._lyndon[beta] = self._build_lyndon(beta)
        self._by_word = {w: beta for beta, w in self._lyndon.items()}
        # largest Lyndon word first
        self.roots_desc = sorted(self.roots, key=self._lyndon.__getitem__, reverse=True)

    def _build_lyndon(self, beta: Root) -> Word:
        if sum(beta) == 1:
            return (beta.index(1) + 1,)
        best = None
        for gamma in self.roots:
            if sum(gamma) >= sum(beta):
                break
            delta = sub(beta, gamma)
            if delta not in self._root_set:
                continue
            wg, wd = self._lyndon[gamma], self._lyndon[delta]
            if wg < wd:
                cand = wg + wd
                if best is None or cand > best:
                    best = cand
        if best is None:
            raise NoFactorization(f"{beta} has no split into two positive roots")
        return best

    def lyndon_word(self, beta: Sequence[int]) -> Word:
        beta = tuple(beta)
        if beta not in self._lyndon:
            raise NoFactorization(f"{beta} is not a positive root")
        return self._lyndon[beta]

    def root_of_word(self, word: Sequence[int]) -> Root:
        word = tuple(word)
        if word not in self._by_word:
            raise NoFactorization(f"{list(word)} is not a good Lyndon word")
        return self._by_word[word]

    def is_root(self, beta: Sequence[int]) -> bool:
        return tuple(beta) in self._root_set

    # -- Kostant partitions ---------------------------------------------

    def sort_partition(self, parts: Iterable[Sequence[int]]) -> KostantPartition:
        parts = [tuple(p) for p in parts]
        for p in parts:
            if p not in self._root_set:
                raise NoFactorization(f"{p} is not a positive root")
        return tuple(sorted(parts, key=self._lyndon.__getitem__, reverse=True))

    def kostant_partitions(self, nu: Sequence[int]) -> list[KostantPartition]:
        """All Kostant partitions of ``nu``, in decreasing order of their good words."""
        nu = tuple(nu)
        roots = self.roots_desc
        out: list[KostantPartition] = []

        def rec(remaining: Root, start: int, acc: list[Root]):
            if not any(remaining):
                out.append(tuple(acc))
                return
            for idx in range(start, len(roots)):
                beta = roots[idx]
                if all(b <= r for b, r in zip(beta, remaining)):
                    acc.append(beta)
                    rec(sub(remaining, beta), idx, acc)
                    acc.pop()

        rec(nu, 0, [])
        return sorted(out, key=self.good_word, reverse=True)

    def compare_roots(self, a: Root, b: Root) -> int:
        wa, wb = self._lyndon[a], self._lyndon[b]
        return (wa > wb) - (wa < wb)

    def partition_order(self, lam: Sequence[Root], kappa: Sequence[Root]) -> int | None:
        """-1 if ``lam`` precedes ``kappa``, 1 if it follows, 0 if equal, None if incomparable."""
        lam, kappa = tuple(map(tuple, lam)), tuple(map(tuple, kappa))
        if partition_weight(lam, self.quiver.n) != partition_weight(kappa, self.quiver.n):
            raise WeightMismatch("partitions of different weights are not comparable")
        if lam == kappa:
            return 0
        head = _first_difference(lam, kappa, self.compare_roots)
        tail = _first_difference(lam[::-1], kappa[::-1], self.compare_roots)
        if head == 1 and tail == -1:
            return 1
        if head == -1 and tail == 1:
            return -1
        return None

    def s_partition(self, lam: Sequence[Root]) -> int:
        return sum(m * (m - 1) // 2 for m in Counter(map(tuple, lam)).values())

    def good_word(self, lam: Sequence[Root]) -> Word:
        return concat(*(self._lyndon[tuple(b)] for b in lam))

    def parse_partition(self, text: str) -> KostantPartition:
        """``"1,2|1"`` -> parts given by their good Lyndon words."""
        text = text.strip()
        if not text:
            return ()
        return self.sort_partition(self.root_of_word(parse_word(w)) for w in text.split("|"))

    def format_partition(self, lam: Sequence[Root]) -> str:
        return " | ".join(",".join(map(str, self._lyndon[tuple(b)])) for b in lam)


def _first_difference(a, b, cmp) -> int:
    for x, y in zip(a, b):
        if x != y:
            return cmp(x, y)
    return 0


def partition_weight(lam: Sequence[Root], n: int) -> DimVector:
    out = (0,) * n
    for b in lam:
        out = add(out, b)
    return out


@lru_cache(maxsize=64)
def root_system(quiver: Quiver) -> RootSystem:
    return RootSystem(quiver)


def good_lyndon_word(quiver: Quiver, beta: Sequence[int]) -> Word:
    return root_system(quiver).lyndon_word(beta)


def enumerate_kostant_partitions(quiver: Quiver, nu: Sequence[int]) -> list[KostantPartition]:
    return root_system(quiver).kostant_partitions(nu)


def partition_order(quiver: Quiver, lam, kappa) -> int | None:
    return root_system(quiver).partition_order(lam, kappa)


def s_partition(lam: Sequence[Root]) -> int:
    return sum(m * (m - 1) // 2 for m in Counter(map(tuple, lam)).values())


def good_word_of_partition(quiver: Quiver, lam: Sequence[Root]) -> Word:
    return root_system(quiver).good_word(lam)
