"""Words on the vertex set and the statistics the shuffle product needs.

A word is a tuple of 1-based vertex labels.  Python's tuple ordering already
is the lexicographic order used throughout: a proper extension of a word is
larger than the word itself.
"""
from __future__ import annotations

from collections import deque
from typing import Sequence

from .errors import EmptyWord, LengthMismatch
from .quiver import DimVector, Quiver, Word


def parse_word(text: str) -> Word:
    text = text.strip().strip("[]")
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def format_word(w: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"


def lex_compare(i: Sequence[int], j: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``i`` is smaller than, equal to or larger than ``j``."""
    i, j = tuple(i), tuple(j)
    return (i > j) - (i < j)


def concat(*words: Sequence[int]) -> Word:
    out: tuple[int, ...] = ()
    for w in words:
        out += tuple(w)
    return out


def weight(word: Sequence[int], n: int) -> DimVector:
    counts = [0] * n
    for x in word:
        counts[x - 1] += 1
    return tuple(counts)


def _check_perm(w: Sequence[int], m: int) -> None:
    if len(w) != m:
        raise LengthMismatch(f"permutation of length {len(w)} applied to a word of length {m}")
    if sorted(w) != list(range(1, m + 1)):
        raise ValueError(f"{tuple(w)} is not a permutation of 1..{m}")


def apply_perm(w: Sequence[int], j: Sequence[int]) -> Word:
    """Move letter ``l`` of ``j`` to position ``w(l)`` (1-based position map)."""
    _check_perm(w, len(j))
    out = [0] * len(j)
    for pos, letter in zip(w, j):
        out[pos - 1] = letter
    return tuple(out)


def compose(v: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    """``v . w`` as position maps: first ``w``, then ``v``."""
    return tuple(v[x - 1] for x in w)


def shuffle_degree(w: Sequence[int], j: Sequence[int], quiver: Quiver) -> int:
    """Minus the sum of Cartan pairings over the pairs of letters that ``w`` inverts."""
    _check_perm(w, len(j))
    deg = 0
    for l in range(len(j)):
        for k in range(l + 1, len(j)):
            if w[l] > w[k]:
                deg -= quiver.cartan(j[l], j[k])
    return deg


def parity(word: Sequence[int], quiver: Quiver) -> int:
    total = 0
    for a in range(len(word)):
        for b in range(a + 1, len(word)):
            if word[a] < word[b]:
                total += quiver.cartan(word[a], word[b])
    return total % 2


def is_lyndon(word: Sequence[int]) -> bool:
    """Strictly smaller than each of its proper suffixes."""
    word = tuple(word)
    if not word:
        raise EmptyWord("the empty word is not Lyndon")
    return all(word < word[k:] for k in range(1, len(word)))


def lyndon_factorize(word: Sequence[int]) -> list[Word]:
    """Duval's algorithm: nonincreasing Lyndon factors whose concatenation is ``word``."""
    s = tuple(word)
    if not s:
        raise EmptyWord("cannot factor the empty word")
    factors = []
    i, n = 0, len(s)
    while i < n:
        j, k = i + 1, i
        while j < n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        while i <= k:
            factors.append(s[i:i + j - k])
            i += j - k
    return factors


def commutation_class(word: Sequence[int], quiver: Quiver) -> list[Word]:
    """Closure of ``word`` under swapping adjacent letters ``i != j`` with ``a_ij = 0``.

    Returned sorted in decreasing lexicographic order.
    """
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for p in range(len(w) - 1):
            x, y = w[p], w[p + 1]
            if x != y and quiver.cartan(x, y) == 0:
                swapped = w[:p] + (y, x) + w[p + 2:]
                if swapped not in seen:
                    seen.add(swapped)
                    queue.append(swapped)
    return sorted(seen, reverse=True)
