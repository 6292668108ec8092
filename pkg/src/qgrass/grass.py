"""Poincaré polynomials of rigid quiver Grassmannians from shuffle-algebra coefficients.

Pipeline for a Dynkin quiver and ``M`` rigid of dimension ``nu + mu``::

    generic partition of nu + mu  ->  dual PBW element  ->  coefficient of i_nu i_mu
        ->  q^(s_nu + s_mu - t - <mu,nu>) * coefficient / ([nu]! [mu]!)  ->  normalize

When the lexicographic root order is adapted to the orientation, the generic
partition has the smallest good word, so its dual PBW element already is
dual canonical.  When it is not (e.g. the A3 orientation 1 -> 2 <- 3), the
dual canonical basis of weight nu + mu is computed by bar correction and the
element carrying the word i_(nu+mu) is used instead.  For other acyclic
quivers the dual canonical element must be supplied.
"""
from __future__ import annotations

import os
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import (ConventionMismatch, NonTerminating, NotDynkin, NotTypeA, OrderAssumptionFails,
                     WeightMismatch)
from .laurent import LaurentPoly, ONE, ZERO
from .quiver import DimVector, Quiver, add, height, nu_factorial, s_vec, word_i_nu
from .repmod import generic_decomposition
from .roots import KostantPartition, partition_weight, root_system, s_partition
from .shuffle import ShuffleElement, shuffle_elements
from .words import commutation_class, weight

DEFAULT_HEIGHT_CAP = 6


def height_cap() -> int:
    raw = os.environ.get("QGRASS_HEIGHT_CAP")
    return int(raw) if raw else DEFAULT_HEIGHT_CAP


@dataclass(frozen=True)
class PoincareResult:
    raw: LaurentPoly
    normalized: LaurentPoly
    shift: int
    nu: DimVector = ()
    mu: DimVector = ()
    partition: KostantPartition | None = None
    # label of the dual canonical element the coefficient was read from
    label: KostantPartition | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def is_empty(self) -> bool:
        return self.normalized.is_zero()


# -- dual root vectors and dual PBW elements -------------------------------

@lru_cache(maxsize=None)
def dual_root_vector(quiver: Quiver, beta: tuple[int, ...]) -> ShuffleElement:
    """Sum of the commutation class of the good Lyndon word of ``beta``."""
    word = root_system(quiver).lyndon_word(beta)
    return ShuffleElement((w, ONE) for w in commutation_class(word, quiver))


@lru_cache(maxsize=None)
def dual_pbw(quiver: Quiver, lam: KostantPartition) -> ShuffleElement:
    lam = tuple(map(tuple, lam))
    out = ShuffleElement.word(())
    for beta in lam:
        out = shuffle_elements(out, dual_root_vector(quiver, beta), quiver)
    return out.scale(LaurentPoly.monomial(s_partition(lam)))


def _positive_part(d: LaurentPoly) -> LaurentPoly:
    return LaurentPoly({e: c for e, c in d.items() if e > 0})


@dataclass
class DualCanonicalData:
    elements: dict[KostantPartition, ShuffleElement]
    # corrections[lam][kappa] = f with b*_lam = r*_lam + sum f r*_kappa
    corrections: dict[KostantPartition, dict[KostantPartition, LaurentPoly]]
    partitions: list[KostantPartition]


def dual_canonical_data(quiver: Quiver, nu: Sequence[int], cap: int | None = None
                        ) -> DualCanonicalData:
    """Dual canonical elements of weight ``nu`` via bar-triangular correction of dual PBW ones."""
    nu = tuple(nu)
    cap = height_cap() if cap is None else cap
    if height(nu) > cap:
        raise ValueError(f"height {height(nu)} exceeds the cap {cap} (set QGRASS_HEIGHT_CAP)")
    return _dual_canonical_data(quiver, nu)


@lru_cache(maxsize=256)
def _dual_canonical_data(quiver: Quiver, nu: DimVector) -> DualCanonicalData:
    rs = root_system(quiver)
    parts = rs.kostant_partitions(nu)  # decreasing good words
    words = {lam: rs.good_word(lam) for lam in parts}
    pbw = {lam: dual_pbw(quiver, lam) for lam in parts}
    elements, corrections = {}, {}
    for idx, lam in enumerate(parts):
        x = pbw[lam]
        fs: dict[KostantPartition, LaurentPoly] = {}
        lower = parts[idx + 1:]
        for _ in range(len(parts) + 2):
            changed = False
            for kappa in lower:
                c = x.coefficient(words[kappa])
                if c.is_bar_symmetric():
                    continue
                lead = pbw[kappa].coefficient(words[kappa])
                f = _positive_part((c - c.bar()).exact_div(lead))
                x = x - pbw[kappa].scale(f)
                fs[kappa] = fs.get(kappa, ZERO) - f
                changed = True
            if not changed:
                break
        else:
            raise NonTerminating(f"bar correction for {lam} did not settle")
        elements[lam] = x
        corrections[lam] = {k: f for k, f in fs.items() if f}
    return DualCanonicalData(elements, corrections, parts)


def dual_canonical_all(quiver: Quiver, nu: Sequence[int], cap: int | None = None
                       ) -> dict[KostantPartition, ShuffleElement]:
    return dict(dual_canonical_data(quiver, nu, cap).elements)


# -- the Poincaré formula --------------------------------------------------

def prefactor_exponent(quiver: Quiver, nu: Sequence[int], mu: Sequence[int]) -> int:
    return s_vec(nu) + s_vec(mu) - quiver.t_factor(nu, mu) - quiver.euler_form(mu, nu)


def _source_element(quiver: Quiver, total: DimVector, source) -> ShuffleElement:
    if isinstance(source, ShuffleElement):
        bad = {weight(w, quiver.n) for w in source.support()} - {total}
        if bad:
            raise WeightMismatch(f"supplied element has words of weight {sorted(bad)}, "
                                 f"expected {total}")
        return source
    lam = tuple(map(tuple, source))
    if partition_weight(lam, quiver.n) != total:
        raise WeightMismatch(f"partition weight {partition_weight(lam, quiver.n)} != {total}")
    return dual_pbw(quiver, lam)


def poincare_raw(quiver: Quiver, nu: Sequence[int], mu: Sequence[int], source) -> LaurentPoly:
    """The formula's value before normalization.

    ``source`` is either a Kostant partition (its dual PBW element is used)
    or an explicit dual canonical :class:`ShuffleElement`.
    """
    nu, mu = tuple(nu), tuple(mu)
    elem = _source_element(quiver, add(nu, mu), source)
    chi = elem.coefficient(word_i_nu(nu) + word_i_nu(mu))
    scaled = chi.shift(prefactor_exponent(quiver, nu, mu))
    return scaled.exact_div(nu_factorial(nu) * nu_factorial(mu))


def normalize_poincare(raw: LaurentPoly, **meta) -> PoincareResult:
    """Shift ``raw`` so its lowest exponent is 0 and require the result in N[q^2]."""
    if raw.is_zero():
        return PoincareResult(raw, raw, 0, **meta)
    shift = -raw.min_exponent()
    normalized = raw.shift(shift)
    if not (normalized.has_even_exponents() and normalized.is_nonnegative()):
        raise ConventionMismatch(f"{raw} does not normalize into N[q^2] (got {normalized})")
    return PoincareResult(raw, normalized, shift, **meta)


def select_dual_canonical(quiver: Quiver, total: Sequence[int], generic: KostantPartition,
                          strict: bool = False, cap: int | None = None
                          ) -> tuple[ShuffleElement, KostantPartition, bool]:
    """The dual canonical element dual to the constant sheaf on ``E_total``.

    Returns ``(element, label, fell_back)``.  The dual PBW element of the
    generic partition is used when it is certified: the generic partition has
    the smallest good word (so no bar correction applies) and the element
    carries the word ``i_total``.  Otherwise the whole dual canonical basis of
    weight ``total`` is computed and the unique element carrying ``i_total``
    is taken, unless ``strict`` is set.
    """
    total = tuple(total)
    rs = root_system(quiver)
    anchor = word_i_nu(total)
    parts = rs.kostant_partitions(total)
    pbw = dual_pbw(quiver, generic)
    if parts and generic == parts[-1] and pbw.coefficient(anchor):
        return pbw, generic, False
    if strict:
        raise OrderAssumptionFails(
            f"the dual PBW element of {rs.format_partition(generic)} is not the dual "
            f"canonical element of weight {total}; the root order is not adapted to the orientation")
    data = dual_canonical_data(quiver, total, cap)
    hits = [lam for lam, e in data.elements.items() if e.coefficient(anchor)]
    if len(hits) != 1:
        raise OrderAssumptionFails(f"{len(hits)} dual canonical elements carry {list(anchor)}")
    return data.elements[hits[0]], hits[0], True


def poincare(quiver: Quiver, nu: Sequence[int], mu: Sequence[int],
             partition: KostantPartition | None = None,
             dual_canonical: ShuffleElement | None = None,
             strict: bool = False) -> PoincareResult:
    """Poincaré polynomial of ``Gr_mu(M)`` for ``M`` rigid of dimension ``nu + mu``.

    ``partition`` overrides the generic decomposition (mandatory outside type
    A); ``dual_canonical`` bypasses the root machinery entirely.
    """
    nu, mu = tuple(nu), tuple(mu)
    total = add(nu, mu)
    notes: list[str] = []
    label = None
    if dual_canonical is not None:
        source = dual_canonical
        notes.append("coefficient read from a supplied dual canonical element")
    else:
        if not quiver.is_dynkin:
            raise NotDynkin("non-Dynkin quivers need an explicit dual canonical element")
        if partition is None:
            if not quiver.is_type_a:
                raise NotTypeA("automatic generic decomposition is only available in type A; "
                               "supply the generic Kostant partition")
            partition = generic_decomposition(quiver, total)
        else:
            partition = root_system(quiver).sort_partition(partition)
            if partition_weight(partition, quiver.n) != total:
                raise WeightMismatch(f"partition weight differs from {total}")
            if not quiver.is_type_a:
                msg = "rigidity of the supplied partition is unverified"
                warnings.warn(msg, stacklevel=2)
                notes.append(msg)
        source, label, fell_back = select_dual_canonical(quiver, total, partition, strict)
        if fell_back:
            notes.append("root order not adapted to the orientation: coefficient read from the "
                         "dual canonical element " + root_system(quiver).format_partition(label)
                         + " instead of the dual PBW element of the generic partition")
    raw = poincare_raw(quiver, nu, mu, source)
    return normalize_poincare(raw, nu=nu, mu=mu, partition=partition, label=label,
                              notes=tuple(notes))


def poincare_for(quiver: Quiver, total: Sequence[int], sub: Sequence[int], **kw) -> PoincareResult:
    nu = tuple(t - s for t, s in zip(total, sub))
    if any(x < 0 for x in nu):
        raise ValueError(f"sub-dimension {tuple(sub)} exceeds total {tuple(total)}")
    return poincare(quiver, nu, tuple(sub), **kw)


def poincare_typeA_fast(quiver: Quiver, lam: KostantPartition, nu: Sequence[int],
                        mu: Sequence[int]) -> LaurentPoly:
    """Same value as :func:`poincare_raw`, summing shuffle degrees over multi-shuffles directly.

    Each part contributes the words of its commutation class (a single word
    unless the good Lyndon word contains adjacent commuting letters); only
    inversions between different parts carry a degree.
    """
    if not quiver.is_type_a:
        raise NotTypeA("the multi-shuffle shortcut needs a type A quiver")
    nu, mu = tuple(nu), tuple(mu)
    rs = root_system(quiver)
    blocks = [commutation_class(rs.lyndon_word(b), quiver) for b in lam]
    target = word_i_nu(nu) + word_i_nu(mu)
    length = len(target)
    cartan = quiver.cartan_matrix
    acc: dict[int, int] = {}

    def rec(b: int, free: tuple[int, ...], placed: list[tuple[int, int, int]]):
        # placed: (position, block, letter)
        if b == len(blocks):
            deg = 0
            for x in range(len(placed)):
                px, bx, lx = placed[x]
                for y in range(x + 1, len(placed)):
                    py, by, ly = placed[y]
                    if bx < by and py < px:
                        deg -= cartan[lx - 1][ly - 1]
            acc[deg] = acc.get(deg, 0) + 1
            return
        for word in blocks[b]:
            for slots in combinations(free, len(word)):
                if all(target[p] == a for p, a in zip(slots, word)):
                    rest = tuple(p for p in free if p not in slots)
                    rec(b + 1, rest, placed + [(p, b, a) for p, a in zip(slots, word)])

    if sum(len(c[0]) for c in blocks) == length:
        rec(0, tuple(range(length)), [])
    h = LaurentPoly(acc).shift(s_partition(lam))
    return h.shift(prefactor_exponent(quiver, nu, mu)).exact_div(nu_factorial(nu) * nu_factorial(mu))


def multiplicity_polynomial(quiver: Quiver, nu: Sequence[int], mu: Sequence[int],
                            lam: KostantPartition, cap: int | None = None) -> LaurentPoly:
    nu, mu = tuple(nu), tuple(mu)
    elems = dual_canonical_all(quiver, add(nu, mu), cap)
    lam = root_system(quiver).sort_partition(lam)
    chi = elems[lam].coefficient(word_i_nu(nu) + word_i_nu(mu))
    exp = s_vec(nu) + s_vec(mu) - quiver.t_factor(nu, mu)
    return chi.shift(exp).exact_div(nu_factorial(nu) * nu_factorial(mu))


def is_grassmannian_nonempty(quiver: Quiver, lam: KostantPartition, nu: Sequence[int],
                             mu: Sequence[int], cap: int | None = None) -> bool:
    """Whether ``i_nu i_mu`` lies in the support of the dual canonical element labelled ``lam``."""
    nu, mu = tuple(nu), tuple(mu)
    lam = root_system(quiver).sort_partition(lam)
    elem = dual_canonical_data(quiver, add(nu, mu), cap).elements[lam]
    return bool(elem.coefficient(word_i_nu(nu) + word_i_nu(mu)))


def euler_characteristic(result: PoincareResult) -> int:
    return result.normalized.at_one()


def point_count(result: PoincareResult, p: int) -> int:
    return result.normalized.eval_even_at(p)
