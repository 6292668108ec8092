"""The quantum shuffle algebra: Laurent-linear combinations of words."""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import ZeroElement
from .laurent import LaurentPoly, ONE, ZERO
from .quiver import Quiver, Word
from .words import format_word, parse_word


class ShuffleElement:
    """Immutable finite sum ``sum_k c_k [k]`` with ``c_k`` nonzero Laurent polynomials.

    Terms are kept in decreasing lexicographic order of words, so the
    maximal word is the first key.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Sequence[int], LaurentPoly | int]
                 | Iterable[tuple[Sequence[int], LaurentPoly | int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, LaurentPoly] = {}
        for w, c in items:
            w = tuple(w)
            c = c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)
            acc[w] = acc[w] + c if w in acc else c
        self._terms = {w: acc[w] for w in sorted(acc, reverse=True) if acc[w]}

    @classmethod
    def word(cls, w: Sequence[int], coeff: LaurentPoly | int = ONE) -> "ShuffleElement":
        return cls({tuple(w): coeff})

    @property
    def terms(self) -> dict[Word, LaurentPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> list[Word]:
        return list(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ShuffleElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def coefficient(self, k: Sequence[int]) -> LaurentPoly:
        return self._terms.get(tuple(k), ZERO)

    def max_word(self) -> Word:
        if not self._terms:
            raise ZeroElement("the zero element has no maximal word")
        return next(iter(self._terms))

    def is_bar_symmetric(self) -> bool:
        return all(c.is_bar_symmetric() for c in self._terms.values())

    def weights(self, n: int) -> set[tuple[int, ...]]:
        from .words import weight
        return {weight(w, n) for w in self._terms}

    def __add__(self, other: "ShuffleElement") -> "ShuffleElement":
        if not isinstance(other, ShuffleElement):
            return NotImplemented
        return ShuffleElement(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "ShuffleElement":
        return ShuffleElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "ShuffleElement") -> "ShuffleElement":
        if not isinstance(other, ShuffleElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "ShuffleElement":
        c = c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)
        if not c:
            return ShuffleElement()
        return ShuffleElement({w: c * v for w, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (LaurentPoly, int)):
            return self.scale(c)
        return NotImplemented

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self._terms.items():
            neg = len(c.terms) == 1 and c.leading_coefficient() < 0
            body = _render_coeff(-c if neg else c) + format_word(w)
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"{'-' if neg else '+'} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"ShuffleElement('{self}')"

    def to_json(self, weight_vec: Sequence[int] | None = None) -> dict:
        out: dict = {"terms": [{"word": ",".join(map(str, w)), "coeff": str(c)}
                               for w, c in self._terms.items()]}
        if weight_vec is not None:
            out = {"weight": list(weight_vec), **out}
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "ShuffleElement":
        return cls((parse_word(t["word"]), LaurentPoly.parse(str(t["coeff"])))
                   for t in data["terms"])


def _render_coeff(c: LaurentPoly) -> str:
    if c == ONE:
        return ""
    if len(c.terms) == 1:
        return f"{c}·"
    return f"({c})·"


def shuffle_words(i: Sequence[int], j: Sequence[int], quiver: Quiver) -> ShuffleElement:
    """Quantum shuffle product of two words.

    Each choice of slots for the letters of ``i`` gives one riffle shuffle;
    its degree is minus the Cartan pairing summed over every letter of ``i``
    that lands after a letter of ``j``.
    """
    i, j = tuple(i), tuple(j)
    m, l = len(i), len(j)
    cartan = quiver.cartan_matrix
    acc: dict[Word, dict[int, int]] = {}
    for slots in combinations(range(m + l), m):
        slot_set = set(slots)
        out = []
        seen_j = [0] * quiver.n
        deg = 0
        pi = pj = 0
        for pos in range(m + l):
            if pos in slot_set:
                a = i[pi]
                row = cartan[a - 1]
                deg -= sum(row[v] * seen_j[v] for v in range(quiver.n) if seen_j[v])
                out.append(a)
                pi += 1
            else:
                b = j[pj]
                seen_j[b - 1] += 1
                out.append(b)
                pj += 1
        bucket = acc.setdefault(tuple(out), {})
        bucket[deg] = bucket.get(deg, 0) + 1
    return ShuffleElement((w, LaurentPoly(c)) for w, c in acc.items())


def shuffle_elements(x: ShuffleElement, y: ShuffleElement, quiver: Quiver) -> ShuffleElement:
    acc: dict[Word, LaurentPoly] = {}
    cache: dict[tuple[Word, Word], ShuffleElement] = {}
    for u, cu in x.items():
        for v, cv in y.items():
            key = (u, v)
            if key not in cache:
                cache[key] = shuffle_words(u, v, quiver)
            coeff = cu * cv
            for w, c in cache[key].items():
                acc[w] = acc[w] + coeff * c if w in acc else coeff * c
    return ShuffleElement(acc)


def shuffle_many(elements: Sequence[ShuffleElement], quiver: Quiver) -> ShuffleElement:
    out = ShuffleElement.word(())
    for e in elements:
        out = shuffle_elements(out, e, quiver)
    return out


def coefficient(x: ShuffleElement, k: Sequence[int]) -> LaurentPoly:
    return x.coefficient(k)


def max_word(x: ShuffleElement) -> Word:
    return x.max_word()


def is_bar_symmetric(x: ShuffleElement) -> bool:
    return x.is_bar_symmetric()


def parse_shuffle_element(text: str) -> ShuffleElement:
    """Inverse of ``str(ShuffleElement)`` for the common cases produced by this package."""
    text = text.strip()
    if text == "0":
        return ShuffleElement()
    terms = []
    depth = 0
    start = 0
    chunks = []
    for idx, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and ch in "+-" and idx > 0 and text[idx - 1] == " ":
            chunks.append(text[start:idx])
            start = idx
    chunks.append(text[start:])
    for chunk in chunks:
        chunk = chunk.strip()
        sign = 1
        if chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:].strip()
        if "·" in chunk:
            coeff_txt, word_txt = chunk.rsplit("·", 1)
            coeff = LaurentPoly.parse(coeff_txt)
        else:
            coeff, word_txt = ONE, chunk
        terms.append((parse_word(word_txt), coeff * sign))
    return ShuffleElement(terms)
