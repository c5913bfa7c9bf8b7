"""Integer interval systems: interlacing, cleaning, and the
interlaced-subsystem-or-separator dichotomy.

An ``(A, B, r)``-system is a sequence of integer intervals ``[a, b]`` inside
``[A, B]`` whose left ends are either ``A`` or at least ``A + r`` and whose
right ends are either ``B`` or at most ``B - r``.  Only the integer points of
an interval matter.
"""
from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence


@dataclass(frozen=True)
class IntervalSystem:
    A: int
    B: int
    r: int
    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple((int(a), int(b)) for a, b in self.intervals))

    @property
    def t(self) -> int:
        return len(self.intervals)

    def subsequence(self, indices: Sequence[int]) -> "IntervalSystem":
        return IntervalSystem(self.A, self.B, self.r, tuple(self.intervals[i] for i in indices))


@dataclass(frozen=True)
class SystemViolation:
    index: int
    rule: str


@dataclass(frozen=True)
class SeparatorWitness:
    """An integer ``z`` whose window ``[z - 2l, z + 2l] ∩ (A, B)`` splits every
    interval of the source system away from one side of ``[A, B]``."""

    z: int
    ell: int
    A: int
    B: int

    @property
    def window(self) -> tuple[int, int]:
        """Inclusive integer bounds of the window (may be empty if lo > hi)."""
        return max(self.z - 2 * self.ell, self.A + 1), min(self.z + 2 * self.ell, self.B - 1)

    @property
    def left_segment(self) -> tuple[int, int]:
        return self.A, max(self.A, self.z - 2 * self.ell - 1)

    @property
    def right_segment(self) -> tuple[int, int]:
        return min(self.B, self.z + 2 * self.ell + 1), self.B

    def splits(self, interval: tuple[int, int]) -> bool:
        """True iff ``interval`` misses at least one of the two outer segments."""
        a, b = interval
        return a > self.left_segment[1] or b < self.right_segment[0]


def validate_system(s: IntervalSystem) -> list[SystemViolation]:
    out = []
    if s.r < 0:
        out.append(SystemViolation(-1, "r must be nonnegative"))
    for i, (a, b) in enumerate(s.intervals):
        if a > b:
            out.append(SystemViolation(i, "a > b"))
        if a < s.A or b > s.B:
            out.append(SystemViolation(i, "interval not inside [A, B]"))
        if a != s.A and a < s.A + s.r:
            out.append(SystemViolation(i, "a != A and a < A + r"))
        if b != s.B and b > s.B - s.r:
            out.append(SystemViolation(i, "b != B and b > B - r"))
    return out


def _steps(prev: tuple[int, int], nxt: tuple[int, int], ell: int) -> bool:
    a, b = prev
    a2, b2 = nxt
    return a + ell <= a2 <= b and b + ell <= b2


def is_interlaced(s: IntervalSystem, ell: int) -> bool:
    if ell < 1:
        raise ValueError("buffer must be positive")
    iv = s.intervals
    if not iv or iv[0][0] != s.A or iv[-1][1] != s.B:
        return False
    return all(_steps(p, q, ell) for p, q in zip(iv, iv[1:]))


def is_clean(s: IntervalSystem) -> bool:
    iv = s.intervals
    return all(iv[j][0] > iv[i][1] for i in range(len(iv)) for j in range(i + 2, len(iv)))


def clean_subsequence_indices(s: IntervalSystem, ell: int) -> list[int]:
    if not is_interlaced(s, ell):
        raise ValueError("clean_subsequence needs an interlaced system")
    iv = s.intervals
    # Left ends increase, so the intervals meeting iv[i] further right form a
    # contiguous run; jumping to the last of them deletes everything between.
    keep = [0]
    i = 0
    while i < len(iv) - 1:
        j = i + 1
        while j + 1 < len(iv) and iv[j + 1][0] <= iv[i][1]:
            j += 1
        keep.append(j)
        i = j
    return keep


def clean_subsequence(s: IntervalSystem, ell: int) -> IntervalSystem:
    """Subsequence keeping the first and last interval that is still
    interlaced with buffer ``ell`` and in which only neighbours overlap."""
    return s.subsequence(clean_subsequence_indices(s, ell))


def _reachability(s: IntervalSystem, ell: int):
    """Intervals that end some interlaced prefix, with one predecessor each."""
    order = sorted(range(s.t), key=lambda i: (s.intervals[i][0], i))
    pred: dict[int, int | None] = {}
    for j in order:
        if s.intervals[j][0] == s.A:
            pred[j] = None
            continue
        for i in sorted(pred):
            if _steps(s.intervals[i], s.intervals[j], ell):
                pred[j] = i
                break
    return pred


def interlaced_indices(s: IntervalSystem, ell: int) -> list[int] | None:
    """Indices of an interlaced subsystem (ordered by left end), or None."""
    pred = _reachability(s, ell)
    ends = sorted(i for i in pred if s.intervals[i][1] == s.B)
    if not ends:
        return None
    chain = [ends[0]]
    while pred[chain[-1]] is not None:
        chain.append(pred[chain[-1]])
    chain.reverse()
    return chain


def _smallest_not_good(s: IntervalSystem, ell: int, pred) -> int | None:
    lo, hi = s.A + s.r, s.B - s.r
    ranges = sorted((s.intervals[i][0] + ell, s.intervals[i][1] - ell) for i in pred)
    z = lo
    for a, b in ranges:
        if a > z:
            break
        z = max(z, b + 1)
    return z if z <= hi else None


def interlaced_or_separator(s: IntervalSystem, ell: int) -> IntervalSystem | SeparatorWitness:
    """Either an interlaced subsystem with buffer ``ell`` or a separator.

    Requires ``1 <= ell <= r`` and a valid system.  The subsystem is returned
    in left-end order, which is input order whenever the input is sorted by
    left end.  The separator is the smallest integer of ``[A + r, B - r]``
    that no interlaced prefix covers with margin ``ell``.
    """
    if ell < 1 or ell > s.r:
        raise ValueError(f"need 1 <= ell <= r, got ell={ell}, r={s.r}")
    bad = validate_system(s)
    if bad:
        raise ValueError(f"not an (A,B,r)-system: {bad[0]}")
    pred = _reachability(s, ell)
    chain = interlaced_indices(s, ell)
    if chain is not None:
        return s.subsequence(chain)
    z = _smallest_not_good(s, ell, pred)
    if z is None:
        raise ValueError("no interlaced subsystem and [A + r, B - r] is empty")
    return SeparatorWitness(z, ell, s.A, s.B)


def is_separator_for(s: IntervalSystem, w: SeparatorWitness) -> bool:
    """Direct check of the separator property against every interval."""
    if not (s.A + s.r <= w.z <= s.B - s.r):
        return False
    return all(w.splits(iv) for iv in s.intervals)
