"""Solvers for the three coevent schemes over a preclusion set.

Every scheme asks for the coevents that map each precluded event to 0
while satisfying structural axioms; the answers are collected in a
:class:`SchemeResult` whose coevents are the admitted "possible realities".

multiplicative
    Monomial coevents F* with F contained in no precluded event, F minimal.
    Equivalently, F must intersect the complement of every precluded event,
    so the answers are the inclusion-minimal transversals of those
    complements.  If the whole space is precluded nothing qualifies and the
    result is reported empty rather than raising.

linear
    Sums of classical coevents.  Preclusivity means every precluded event
    shares an even number of members with the support, a GF(2) linear
    system.  The nonzero solutions of inclusion-minimal support are
    computed first and the unital ones (odd support) are kept, matching
    the convention that minimality is judged before unitality; pass
    ``minimal_among_unital=True`` for the nonstandard alternative that
    restricts the minimality comparison to unital solutions.

ideal
    A set of preclusive coevents generating, as a ring ideal, all
    preclusive coevents, with minimal total complexity (sum of monomial
    degrees over all members).  A set generates the whole preclusive ideal
    exactly when the true sets of its members jointly cover every
    non-precluded event, so the search is an exact weighted set cover over
    all preclusive coevents, ordered by complexity and pruned with an
    admissible bound.  All minimum-weight generating sets are found; the
    unital members form the result and the full sets are reported
    alongside, with a flag listing any non-precluded events the unital
    members fail to cover.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .coevent import Coevent, _anf_masks, monomial
from .events import Event, GuardError
from .measure import PreclusionSet

__all__ = [
    'ALWAYS_FALSE',
    'ALWAYS_TRUE',
    'CONTINGENT',
    'IDEAL_SEARCH_GUARD',
    'NULLSPACE_GUARD',
    'SchemeResult',
    'VACUOUS',
    'ideal_generator',
    'ideal_scheme',
    'infer',
    'linear_scheme',
    'multiplicative_scheme',
]

IDEAL_SEARCH_GUARD = 4   # the cover search ranges over up to 2^(2^n - 1) candidates
NULLSPACE_GUARD = 20     # the linear scheme enumerates 2^nullity solutions

ALWAYS_TRUE = 'always-true'
ALWAYS_FALSE = 'always-false'
CONTINGENT = 'contingent'
VACUOUS = 'vacuous'


@dataclass(frozen=True)
class SchemeResult:
    """Outcome of one scheme solve.

    `coevents` holds the admitted coevents in canonical text order; empty
    means no viable coevent.  For the ideal scheme `generating_sets` lists
    every minimum-complexity generating set (usually one), `total_complexity`
    is that minimum (None when everything is precluded), and
    `uncovered_by_unital` lists the non-precluded events not covered by any
    unital member.  `diagnostics` carries deterministic search counters;
    wall time is kept out of it so rendered output is reproducible.
    """

    scheme: str
    coevents: tuple[Coevent, ...]
    total_complexity: int | None = None
    unique: bool = True
    generating_sets: tuple[tuple[Coevent, ...], ...] | None = None
    uncovered_by_unital: tuple[Event, ...] = ()
    diagnostics: Mapping[str, int] = field(default_factory=dict, compare=False)
    wall_time_s: float = field(default=0.0, compare=False)

    @property
    def is_viable(self) -> bool:
        return bool(self.coevents)


def _canonical(coevents: Iterable[Coevent]) -> tuple[Coevent, ...]:
    return tuple(sorted(set(coevents), key=str))


def _bit_indices(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _inclusion_minimal(masks: Iterable[int]) -> list[int]:
    """Antichain of inclusion-minimal bitmasks."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _is_antichain(masks: Sequence[int]) -> bool:
    return not any(a != b and a & b == a for a in masks for b in masks)


def multiplicative_scheme(preclusions: PreclusionSet) -> SchemeResult:
    """Minimal monomial coevents contained in no precluded event."""
    start = time.perf_counter()
    space = preclusions.space
    full = (1 << space.size) - 1
    edges = sorted({full & ~z for z in preclusions.masks},
                   key=lambda e: (e.bit_count(), e))
    transversals = [0]
    examined = 0
    for edge in edges:
        extended: list[int] = []
        for t in transversals:
            if t & edge:
                extended.append(t)
            else:
                extended.extend(t | (1 << v) for v in _bit_indices(edge))
        examined += len(extended)
        transversals = _inclusion_minimal(extended)
    assert _is_antichain(transversals)
    coevents = _canonical(monomial(Event(space, t)) for t in transversals)
    assert all(phi.is_preclusive(preclusions) for phi in coevents)
    return SchemeResult(
        scheme='multiplicative',
        coevents=coevents,
        total_complexity=sum(phi.complexity for phi in coevents),
        diagnostics={'edges': len(edges), 'candidates_examined': examined,
                     'transversals': len(transversals)},
        wall_time_s=time.perf_counter() - start)


def linear_scheme(preclusions: PreclusionSet, *,
                  minimal_among_unital: bool = False) -> SchemeResult:
    """Unital sums of classical coevents with minimal support."""
    start = time.perf_counter()
    space = preclusions.space
    n = space.size

    # row reduce the even-overlap constraints over GF(2)
    pivots: dict[int, int] = {}
    for z in sorted(preclusions.masks):
        row = z
        while row:
            col = row.bit_length() - 1
            if col in pivots:
                row ^= pivots[col]
            else:
                pivots[col] = row
                break
    for col in sorted(pivots, reverse=True):
        row = pivots[col]
        for other_col, other_row in list(pivots.items()):
            if other_col != col and other_row >> col & 1:
                pivots[other_col] = other_row ^ row

    free_cols = [c for c in range(n) if c not in pivots]
    if len(free_cols) > NULLSPACE_GUARD:
        raise GuardError(
            f'nullspace dimension {len(free_cols)} exceeds the guard of {NULLSPACE_GUARD}')
    basis = []
    for f in free_cols:
        vector = 1 << f
        for col, row in pivots.items():
            if row >> f & 1:
                vector |= 1 << col
        basis.append(vector)

    solutions = [0]
    for b in basis:
        solutions += [s ^ b for s in solutions]
    nonzero = [s for s in solutions if s]
    assert all(all((s & z).bit_count() % 2 == 0 for z in preclusions.masks)
               for s in nonzero)

    if minimal_among_unital:
        minimal = _inclusion_minimal(s for s in nonzero if s.bit_count() & 1)
        chosen = minimal
    else:
        minimal = _inclusion_minimal(nonzero)
        chosen = [s for s in minimal if s.bit_count() & 1]

    coevents = _canonical(
        Coevent._raw(space, frozenset(1 << i for i in _bit_indices(s)))
        for s in chosen)
    assert all(phi.is_preclusive(preclusions) for phi in coevents)
    return SchemeResult(
        scheme='linear',
        coevents=coevents,
        total_complexity=sum(phi.complexity for phi in coevents),
        diagnostics={'nullspace_dimension': len(free_cols),
                     'solutions_examined': len(nonzero),
                     'minimal_supports': len(minimal)},
        wall_time_s=time.perf_counter() - start)


def ideal_generator(preclusions: PreclusionSet) -> Coevent:
    """Indicator of the non-precluded events, as a coevent.

    Principal generator of the preclusive ideal: ψ is preclusive iff
    ψ·g = ψ pointwise.  Zero exactly when everything is precluded.
    """
    masks = preclusions.masks
    return Coevent.from_truth_table(
        preclusions.space, lambda ev: 0 if ev.bits in masks else 1)


def ideal_scheme(preclusions: PreclusionSet) -> SchemeResult:
    """Minimum-total-complexity generating sets of the preclusive ideal."""
    start = time.perf_counter()
    space = preclusions.space
    n = space.size
    if n > IDEAL_SEARCH_GUARD:
        raise GuardError(
            f'ideal search over {n} histories exceeds the guard of {IDEAL_SEARCH_GUARD}')
    n_events = 1 << n
    universe = 0  # truth-table mask of the non-precluded events
    for a in range(n_events):
        if a not in preclusions.masks:
            universe |= 1 << a

    if universe == 0:
        return SchemeResult(
            scheme='ideal', coevents=(), total_complexity=None, unique=True,
            generating_sets=(),
            diagnostics={'candidates': 0, 'nodes': 0, 'optimal_sets': 0},
            wall_time_s=time.perf_counter() - start)

    # candidates: every nonzero preclusive coevent, i.e. every nonzero
    # truth table supported inside the universe
    tables: list[int] = []
    sub = universe
    while sub:
        tables.append(sub)
        sub = (sub - 1) & universe
    candidates = []
    for tt in tables:
        anf = _anf_masks([tt >> a & 1 for a in range(n_events)], n)
        weight = sum(m.bit_count() for m in anf)
        candidates.append((weight, tt, anf))
    candidates.sort(key=lambda c: (c[0], tuple(sorted(c[2]))))
    weights = [c[0] for c in candidates]
    covers = [c[1] for c in candidates]

    by_element: dict[int, list[int]] = {e: [] for e in _bit_indices(universe)}
    for idx, tt in enumerate(covers):
        for e in _bit_indices(tt):
            by_element[e].append(idx)
    min_weight_for = {e: weights[lst[0]] for e, lst in by_element.items()}

    best_weight: int | None = None
    best_sets: set[frozenset[int]] = set()
    nodes = 0

    def lower_bound(uncovered: int) -> int:
        return max(min_weight_for[e] for e in _bit_indices(uncovered))

    def search(covered: int, weight: int, chosen: tuple[int, ...]) -> None:
        nonlocal best_weight, nodes
        nodes += 1
        if covered == universe:
            if best_weight is None or weight < best_weight:
                best_weight = weight
                best_sets.clear()
            if weight == best_weight:
                best_sets.add(frozenset(chosen))
            return
        uncovered = universe & ~covered
        if best_weight is not None and weight + lower_bound(uncovered) > best_weight:
            return
        element = min(_bit_indices(uncovered), key=lambda e: len(by_element[e]))
        for idx in by_element[element]:
            if best_weight is not None and weight + weights[idx] > best_weight:
                break  # candidate lists are sorted by weight
            search(covered | covers[idx], weight + weights[idx], chosen + (idx,))

    search(0, 0, ())
    assert best_weight is not None and best_sets

    anf_of = {idx: candidates[idx][2] for s in best_sets for idx in s}
    sets_out = sorted(
        (tuple(sorted((Coevent._raw(space, anf_of[idx]) for idx in s), key=str))
         for s in best_sets),
        key=lambda members: tuple(map(str, members)))
    for indices in best_sets:
        joined = 0
        for idx in indices:
            joined |= covers[idx]
        assert joined == universe  # each set generates the whole preclusive ideal
    unital = _canonical(phi for members in sets_out for phi in members
                        if phi.is_unital())
    assert all(phi.is_preclusive(preclusions)
               for members in sets_out for phi in members)

    covered_by_unital = 0
    for phi in unital:
        for a in range(n_events):
            if phi(Event(space, a)):
                covered_by_unital |= 1 << a
    uncovered = universe & ~covered_by_unital
    uncovered_events = tuple(
        Event(space, a) for a in sorted(_bit_indices(uncovered),
                                        key=lambda m: (m.bit_count(), m)))

    return SchemeResult(
        scheme='ideal',
        coevents=unital,
        total_complexity=best_weight,
        unique=len(sets_out) == 1,
        generating_sets=tuple(sets_out),
        uncovered_by_unital=uncovered_events,
        diagnostics={'candidates': len(candidates), 'nodes': nodes,
                     'optimal_sets': len(sets_out)},
        wall_time_s=time.perf_counter() - start)


def infer(result: SchemeResult, given: Iterable[tuple[Event, int]],
          query: Event) -> str:
    """Restrict the admitted coevents by observed truth values, then ask `query`.

    Returns 'always-true', 'always-false', 'contingent', or 'vacuous' (no
    admitted coevent matches the given values).
    """
    constraints = []
    for event, bit in given:
        if bit not in (0, 1):
            raise ValueError(f'given value must be 0 or 1, got {bit!r}')
        constraints.append((event, int(bit)))
    survivors = [phi for phi in result.coevents
                 if all(phi(event) == bit for event, bit in constraints)]
    if not survivors:
        return VACUOUS
    values = {phi(query) for phi in survivors}
    if values == {1}:
        return ALWAYS_TRUE
    if values == {0}:
        return ALWAYS_FALSE
    return CONTINGENT
