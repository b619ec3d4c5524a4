"""Exact character evaluation and zero classification for symmetric groups.

The character value on a given cycle type is expanded by repeatedly removing
rim hooks whose sizes are the cycle lengths, largest first.  The expansion
front is a dictionary mapping canonical boundary words to exact integer
coefficients, so shapes reached along many removal paths are merged.  Once
only fixed points (cycle length 1) remain, each surviving shape is finished
with the hook-length formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import WeightMismatch
from .partitions import (
    Partition,
    dimension_from_word,
    encode,
    is_t_core,
    removable_mask,
)


@dataclass(frozen=True)
class ZeroClass:
    """Classification of one character-table entry.

    is_type1: the row shape has no hook divisible by the largest cycle length.
    is_type2: ... by some cycle length (type 1 implies type 2).
    is_zero:  the value is exactly 0.  When evaluated is False the engine did
    not compute the value and is_zero merely repeats is_type2 (a lower bound).
    """

    is_zero: bool
    is_type1: bool
    is_type2: bool
    evaluated: bool


def character(lam: Partition, mu: Partition) -> int:
    """Exact character value of the irreducible indexed by lam at cycle type mu."""
    if lam.n != mu.n:
        raise WeightMismatch(f"lambda has weight {lam.n} but mu has weight {mu.n}")
    bag = {encode(lam).word: 1}
    for t in mu.parts:
        if t == 1:
            break  # remaining parts are all 1: finish with dimensions
        inner = (1 << (t - 1)) - 1
        new: dict[int, int] = {}
        get = new.get
        for w, c in bag.items():
            mask = (w >> t) & ~w
            while mask:
                low = mask & -mask
                mask ^= low
                q = low.bit_length() - 1
                nw = w ^ (low << t) ^ low
                while nw & 1:
                    nw >>= 1
                if (t - 1 - ((w >> (q + 1)) & inner).bit_count()) & 1:
                    new[nw] = get(nw, 0) - c
                else:
                    new[nw] = get(nw, 0) + c
        bag = {w: c for w, c in new.items() if c}
        if not bag:
            return 0
    return sum(c * dimension_from_word(w) for w, c in bag.items())


def classify(lam: Partition, mu: Partition, evaluate: bool = True) -> ZeroClass:
    """Type-1/type-2 core tests for (lam, mu), optionally with full evaluation.

    The core tests are cheap bit scans and run first; only full evaluation
    can certify a zero that neither test witnesses.
    """
    if lam.n != mu.n:
        raise WeightMismatch(f"lambda has weight {lam.n} but mu has weight {mu.n}")
    code = encode(lam)
    is_type1 = bool(mu.parts) and is_t_core(code, mu.parts[0])
    if is_type1:
        is_type2 = True
    else:
        is_type2 = any(is_t_core(code, t) for t in set(mu.parts[1:]))
    if evaluate:
        is_zero = character(lam, mu) == 0
    else:
        is_zero = is_type2
    return ZeroClass(is_zero, is_type1, is_type2, evaluate)
