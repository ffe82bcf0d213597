"""Coevents: Z2-valued truth assignments on an event algebra.

A coevent maps every event of a sample space to 0 or 1.  Each such map has
a unique multilinear polynomial form over the classical coevents: for a
history ``γ``, the classical coevent ``γ*`` answers whether ``γ`` lies in
the asked event, and a general coevent is a Z2 sum of monomials, each
monomial the product of ``γ*`` over a subset F of histories.  A monomial
answers whether F is contained in the asked event, so

    φ(A) = parity of the number of monomials F with F ⊆ A.

:class:`Coevent` stores the canonical monomial set, one bitmask per
monomial; the empty monomial (mask 0) is the constant 1, and the empty set
of monomials is the zero map.  ``+`` and ``*`` act pointwise on truth
values; monomials cancel in pairs under ``+`` and combine by union under
``*``, keeping the representation canonical.

:meth:`Coevent.from_truth_table` recovers the polynomial from an arbitrary
assignment via the subset-parity transform, which is its own inverse.

Text grammar::

    poly := "0" | term ("+" term)*
    term := "1" | (label "*")+

Rendering sorts monomials by (degree, member indices) and emits no spaces,
e.g. ``a*+b*+c*`` or ``a*b*``.
"""

from __future__ import annotations

from typing import Callable, Iterable

from .events import Event, GuardError, ParseError, SampleSpace, SpaceMismatchError

__all__ = [
    'TRUTH_TABLE_GUARD',
    'Coevent',
    'classical',
    'monomial',
    'parse_coevent',
    'render_coevent',
]

TRUTH_TABLE_GUARD = 16  # truth tables hold 2^n entries


def _mono_key(mask: int) -> tuple[int, tuple[int, ...]]:
    # canonical monomial order: degree, then member indices lexicographically
    return (mask.bit_count(),
            tuple(i for i in range(mask.bit_length()) if mask >> i & 1))


def _anf_masks(table: list[int], n: int) -> frozenset[int]:
    """Monomial masks of the truth table (in place subset-parity transform)."""
    size = 1 << n
    for i in range(n):
        step = 1 << i
        for a in range(size):
            if a & step:
                table[a] ^= table[a ^ step]
    return frozenset(a for a in range(size) if table[a])


class Coevent:
    """Canonical multilinear polynomial over a space's classical coevents.

    `masks` is the frozen set of monomial bitmasks.  Instances are immutable
    and hashable; equality is structural.  Calling the instance on an event
    evaluates it.
    """

    __slots__ = ('space', 'masks')

    def __init__(self, space: SampleSpace, monomials: Iterable[Event] = ()):
        """Build from monomial events; duplicates cancel in pairs (Z2)."""
        masks: set[int] = set()
        for ev in monomials:
            if not isinstance(ev, Event):
                raise TypeError(f'monomials must be Events, got {type(ev).__name__}')
            if ev.space != space:
                raise SpaceMismatchError('monomial belongs to a different sample space')
            masks ^= {ev.bits}
        self.space = space
        self.masks = frozenset(masks)

    @classmethod
    def _raw(cls, space: SampleSpace, masks: frozenset[int]) -> Coevent:
        co = object.__new__(cls)
        co.space = space
        co.masks = masks
        return co

    @classmethod
    def zero(cls, space: SampleSpace) -> Coevent:
        """The map sending every event to 0."""
        return cls._raw(space, frozenset())

    @classmethod
    def one(cls, space: SampleSpace) -> Coevent:
        """The map sending every event to 1 (the empty monomial)."""
        return cls._raw(space, frozenset((0,)))

    @classmethod
    def from_truth_table(cls, space: SampleSpace,
                         truth: Callable[[Event], int]) -> Coevent:
        """The unique coevent agreeing with `truth` on every event.

        `truth` is queried on all 2^n events.  Round trip holds both ways:
        evaluating the result reproduces `truth`, and a coevent fed back
        through its own evaluations is returned unchanged.
        """
        n = space.size
        if n > TRUTH_TABLE_GUARD:
            raise GuardError(
                f'truth table over {n} histories exceeds the guard of {TRUTH_TABLE_GUARD}')
        table = []
        for bits in range(1 << n):
            value = truth(Event(space, bits))
            if value not in (0, 1):
                raise ValueError(f'truth table value must be 0 or 1, got {value!r}')
            table.append(int(value))
        return cls._raw(space, _anf_masks(table, n))

    @property
    def monomials(self) -> tuple[Event, ...]:
        """Monomial events in canonical (degree, lexicographic) order."""
        return tuple(Event(self.space, m) for m in sorted(self.masks, key=_mono_key))

    def __call__(self, event: Event) -> int:
        """φ(A): parity of the number of monomials contained in A."""
        if not isinstance(event, Event):
            raise TypeError(f'coevents evaluate on Events, got {type(event).__name__}')
        if event.space != self.space:
            raise SpaceMismatchError('event belongs to a different sample space')
        bits = event.bits
        return sum(1 for m in self.masks if (m & bits) == m) & 1

    def __add__(self, other: Coevent) -> Coevent:
        """Pointwise Z2 sum: monomials cancel in pairs."""
        if not isinstance(other, Coevent):
            return NotImplemented
        if other.space != self.space:
            raise SpaceMismatchError('operands belong to different sample spaces')
        return Coevent._raw(self.space, self.masks ^ other.masks)

    def __mul__(self, other: Coevent) -> Coevent:
        """Pointwise product: monomials combine by union, then cancel mod 2."""
        if not isinstance(other, Coevent):
            return NotImplemented
        if other.space != self.space:
            raise SpaceMismatchError('operands belong to different sample spaces')
        acc: set[int] = set()
        for f in self.masks:
            for g in other.masks:
                acc ^= {f | g}
        return Coevent._raw(self.space, frozenset(acc))

    @property
    def support(self) -> Event:
        """Union of all monomials; empty for the zero coevent."""
        bits = 0
        for m in self.masks:
            bits |= m
        return Event(self.space, bits)

    @property
    def complexity(self) -> int:
        """Sum of monomial degrees; 0 for the constants."""
        return sum(m.bit_count() for m in self.masks)

    def is_zero(self) -> bool:
        return not self.masks

    def is_one(self) -> bool:
        return self.masks == frozenset((0,))

    def is_unital(self) -> bool:
        """True iff φ(Ω) = 1."""
        return self(self.space.full) == 1

    def is_linear(self) -> bool:
        """True iff φ(A+B) = φ(A)+φ(B) always: every monomial is an atom."""
        return all(m.bit_count() == 1 for m in self.masks)

    def is_multiplicative(self) -> bool:
        """True iff φ(AB) = φ(A)φ(B) always: zero, or a single monomial."""
        return len(self.masks) <= 1

    def is_homomorphism(self) -> bool:
        """True iff unital, linear and multiplicative: a classical coevent."""
        return len(self.masks) == 1 and next(iter(self.masks)).bit_count() == 1

    def is_preclusive(self, precluded: Iterable[Event]) -> bool:
        """True iff φ maps every precluded event to 0."""
        return all(self(z) == 0 for z in precluded)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Coevent)
                and self.space == other.space and self.masks == other.masks)

    def __hash__(self) -> int:
        return hash((self.space, self.masks))

    def __str__(self) -> str:
        return render_coevent(self)

    def __repr__(self) -> str:
        return f'Coevent({render_coevent(self)!r})'


def classical(atom: Event) -> Coevent:
    """γ*: true exactly on the events containing the history γ."""
    if not atom.is_atom():
        raise ValueError('classical coevents are indexed by atoms (singleton events)')
    return Coevent._raw(atom.space, frozenset((atom.bits,)))


def monomial(event: Event) -> Coevent:
    """F*: the product of γ* over γ in F, true exactly on supersets of F."""
    return Coevent._raw(event.space, frozenset((event.bits,)))


def render_coevent(phi: Coevent) -> str:
    """Canonical text: monomials by (degree, lexicographic), no spaces."""
    if not phi.masks:
        return '0'
    names = phi.space.names
    parts = []
    for m in sorted(phi.masks, key=_mono_key):
        if m == 0:
            parts.append('1')
        else:
            parts.append(''.join(names[i] + '*'
                                 for i in range(m.bit_length()) if m >> i & 1))
    return '+'.join(parts)


def parse_coevent(text: str, space: SampleSpace) -> Coevent:
    """Parse the ``poly`` grammar; terms cancel in pairs, labels idempotent."""
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    if not stripped:
        raise ParseError('empty coevent text', 0)
    if stripped == '0':
        return Coevent.zero(space)
    masks: set[int] = set()
    start = 0
    for i in range(len(stripped) + 1):
        if i < len(stripped) and stripped[i] != '+':
            continue
        segment = stripped[start:i]
        term = segment.strip()
        pos = lead + start + (len(segment) - len(segment.lstrip()))
        start = i + 1
        if not term:
            raise ParseError('empty term in coevent sum', pos)
        if term == '0':
            raise ParseError("'0' cannot appear as a term", pos)
        if term == '1':
            masks ^= {0}
            continue
        if any(c.isspace() for c in term):
            raise ParseError('whitespace inside a term', pos)
        if not term.endswith('*'):
            raise ParseError("term must be '1' or labels each followed by '*'",
                             pos + len(term) - 1)
        bits = 0
        cursor = pos
        for piece in term[:-1].split('*'):
            if not piece:
                raise ParseError("missing label before '*'", cursor)
            try:
                bits |= 1 << space.index(piece)
            except ValueError:
                raise ParseError(f'unknown history label {piece!r}', cursor) from None
            cursor += len(piece) + 1
        masks ^= {bits}
    return Coevent._raw(space, frozenset(masks))
