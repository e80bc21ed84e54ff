"""Finite vertex sets stored as strictly increasing tuples.

Because the representation is canonical, structural equality of two
``OrdSet`` values is the same thing as extensional set equality.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import POWERSET_LIMIT, check_size, subset_guard

Label = int


class OrdSet:
    """Immutable sorted, duplicate-free sequence of labels."""

    __slots__ = ("_elems",)

    def __init__(self, elems: Iterable[Label] = ()) -> None:
        object.__setattr__(self, "_elems", tuple(sorted(set(elems))))

    @classmethod
    def _trusted(cls, elems: tuple[Label, ...]) -> OrdSet:
        # caller guarantees strict increase
        s = object.__new__(cls)
        object.__setattr__(s, "_elems", elems)
        return s

    def __setattr__(self, name, value):
        raise AttributeError("OrdSet is immutable")

    @property
    def elems(self) -> tuple[Label, ...]:
        return self._elems

    def __iter__(self) -> Iterator[Label]:
        return iter(self._elems)

    def __len__(self) -> int:
        return len(self._elems)

    def __getitem__(self, i: int) -> Label:
        return self._elems[i]

    def __contains__(self, x: object) -> bool:
        return member(x, self)  # type: ignore[arg-type]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrdSet):
            return NotImplemented
        return self._elems == other._elems

    def __hash__(self) -> int:
        return hash(self._elems)

    def __lt__(self, other: OrdSet) -> bool:
        return self._elems < other._elems

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self._elems)) + "}"

    def issubset(self, other: OrdSet) -> bool:
        return len(diff(self, other)) == 0


def from_unsorted(xs: Iterable[Label]) -> OrdSet:
    return OrdSet(xs)


def is_ord(xs: tuple[Label, ...]) -> bool:
    """True iff ``xs`` is strictly increasing."""
    return all(a < b for a, b in zip(xs, xs[1:]))


def member(x: Label, s: OrdSet) -> bool:
    # binary search on the sorted representation
    xs = s.elems
    lo, hi = 0, len(xs)
    while lo < hi:
        mid = (lo + hi) // 2
        if xs[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo < len(xs) and xs[lo] == x


def union(s: OrdSet, t: OrdSet) -> OrdSet:
    a, b = s.elems, t.elems
    out: list[Label] = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        elif b[j] < a[i]:
            out.append(b[j])
            j += 1
        else:
            out.append(a[i])
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return OrdSet._trusted(tuple(out))


def inter(s: OrdSet, t: OrdSet) -> OrdSet:
    a, b = s.elems, t.elems
    out: list[Label] = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] < b[j]:
            i += 1
        elif b[j] < a[i]:
            j += 1
        else:
            out.append(a[i])
            i += 1
            j += 1
    return OrdSet._trusted(tuple(out))


def diff(s: OrdSet, t: OrdSet) -> OrdSet:
    a, b = s.elems, t.elems
    out: list[Label] = []
    i = j = 0
    while i < len(a):
        if j >= len(b) or a[i] < b[j]:
            out.append(a[i])
            i += 1
        elif b[j] < a[i]:
            j += 1
        else:
            i += 1
            j += 1
    return OrdSet._trusted(tuple(out))


def insert(x: Label, s: OrdSet) -> OrdSet:
    return union(OrdSet._trusted((x,)), s)


def set_equal(s: OrdSet, t: OrdSet) -> bool:
    return s.elems == t.elems


def subset_from_mask(s: OrdSet, mask: int) -> OrdSet:
    """Subset of ``s`` selecting position ``i`` when bit ``i`` of ``mask`` is set."""
    xs = s.elems
    return OrdSet._trusted(tuple(xs[i] for i in range(len(xs)) if mask >> i & 1))


def mask_of(s: OrdSet, sub: OrdSet) -> int:
    """Inverse of :func:`subset_from_mask`; ``sub`` must be contained in ``s``."""
    pos = {x: i for i, x in enumerate(s.elems)}
    m = 0
    for x in sub:
        m |= 1 << pos[x]
    return m


def powerset(s: OrdSet) -> list[OrdSet]:
    """All ``2**len(s)`` subsets in binary-counting order (lowest element = bit 0).

    Raises SizeLimitError beyond the subset-enumeration guard.
    """
    check_size("powerset", len(s), subset_guard(POWERSET_LIMIT))
    return [subset_from_mask(s, m) for m in range(1 << len(s))]
