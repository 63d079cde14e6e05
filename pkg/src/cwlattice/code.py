"""Constant weight codes as sets of k-subsets of an n-element ground set.

The metric is the symmetric distance |A Δ B|, which is even between
equal-size sets.  Decoding is exhaustive minimum distance decoding;
ties are surfaced as an ambiguous result rather than broken silently,
since a tie is a detected error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


def symmetric_distance(a: Iterable[int], b: Iterable[int]) -> int:
    """Cardinality of the symmetric difference of two finite sets."""
    return len(set(a) ^ set(b))


def _validated_codeword(cw: Iterable[int], n: int) -> tuple[int, ...]:
    indices = tuple(cw)
    if not indices:
        raise ValueError("codeword must be nonempty")
    for x, y in zip(indices, indices[1:]):
        if x >= y:
            raise ValueError(f"codeword must be strictly increasing, got {indices}")
    if indices[0] < 0 or indices[-1] >= n:
        raise ValueError(f"codeword indices must lie in 0..{n - 1}, got {indices}")
    return indices


class ConstantWeightCode:
    """An (n, k, N, d) catalog of k-subset codewords with cached minimum distance."""

    def __init__(self, n: int, codewords: Sequence[Iterable[int]]):
        if n < 1:
            raise ValueError("ground set size must be positive")
        cws = [_validated_codeword(cw, n) for cw in codewords]
        if not cws:
            raise ValueError("code must contain at least one codeword")
        k = len(cws[0])
        if any(len(cw) != k for cw in cws):
            raise ValueError("all codewords must have the same weight")
        if len(set(cws)) != len(cws):
            raise ValueError("codewords must be distinct")
        self.n = n
        self.k = k
        self.codewords = tuple(cws)
        self._d_min = None
        if len(cws) >= 2:
            sets = [set(cw) for cw in cws]
            d = 2 * k
            for i in range(len(sets)):
                for j in range(i + 1, len(sets)):
                    d = min(d, len(sets[i] ^ sets[j]))
            self._d_min = d

    def __len__(self) -> int:
        return len(self.codewords)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ConstantWeightCode)
            and other.n == self.n
            and set(other.codewords) == set(self.codewords)
        )

    def __repr__(self) -> str:
        d = self._d_min if self._d_min is not None else "?"
        return f"ConstantWeightCode(n={self.n}, k={self.k}, N={len(self)}, d={d})"

    @property
    def min_distance(self) -> int:
        if self._d_min is None:
            raise ValueError("minimum distance needs at least two codewords")
        return self._d_min

    def to_json(self) -> dict:
        obj = {
            "n": self.n,
            "k": self.k,
            "codewords": sorted(list(cw) for cw in self.codewords),
        }
        if self._d_min is not None:
            obj["d"] = self._d_min
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "ConstantWeightCode":
        code = cls(obj["n"], obj["codewords"])
        if "d" in obj and obj["d"] is not None and code.min_distance != obj["d"]:
            raise ValueError(
                f"catalog claims d={obj['d']} but the codewords have "
                f"d={code.min_distance}"
            )
        return code


@dataclass(frozen=True)
class DecodeResult:
    """Outcome of minimum distance decoding.

    ``candidates`` holds every codeword at the minimum distance, in code
    order.  A single candidate is a confident decode; several candidates
    mean the tie is reported as a detected error.
    """

    distance: int
    candidates: tuple[tuple[int, ...], ...]

    @property
    def ambiguous(self) -> bool:
        return len(self.candidates) > 1

    @property
    def codeword(self) -> tuple[int, ...] | None:
        return self.candidates[0] if len(self.candidates) == 1 else None


def decode(received: Iterable[int], code: ConstantWeightCode) -> DecodeResult:
    """Exhaustive arg-min of the symmetric distance over the code."""
    rec = set(received)
    if rec and (min(rec) < 0 or max(rec) >= code.n):
        raise ValueError(f"received indices must lie in 0..{code.n - 1}")
    best = None
    winners: list[tuple[int, ...]] = []
    for cw in code.codewords:
        d = len(rec ^ set(cw))
        if best is None or d < best:
            best = d
            winners = [cw]
        elif d == best:
            winners.append(cw)
    return DecodeResult(distance=best, candidates=tuple(winners))


def guaranteed_correctable(code: ConstantWeightCode, t_errors: int, e_erasures: int) -> bool:
    """Whether t substitutions plus e erasures always decode correctly.

    A substitution moves the received set 2 away from the codeword, an
    erasure 1 away; the triangle inequality then guarantees a unique
    nearest codeword exactly when 2*(2t + e) < d_min.
    """
    if t_errors < 0 or e_erasures < 0:
        raise ValueError("error and erasure counts must be nonnegative")
    if t_errors == 0 and e_erasures == 0:
        return True
    return 2 * (2 * t_errors + e_erasures) < code.min_distance


def puncture(code: ConstantWeightCode, removed_index: int | None = None) -> ConstantWeightCode:
    """Delete one ground-set element and shrink every codeword to weight k-1.

    Codewords containing the removed element drop it; the others drop
    their largest index (a deterministic choice).  Requires d_min > 2 so
    that no two codewords merge; the result keeps N and loses at most 2
    of minimum distance.
    """
    if code.k < 2:
        raise ValueError("puncturing needs weight k >= 2")
    if len(code) >= 2 and code.min_distance <= 2:
        raise ValueError("puncturing requires minimum distance > 2")
    removed = code.n - 1 if removed_index is None else removed_index
    if not 0 <= removed < code.n:
        raise ValueError(f"removed index must lie in 0..{code.n - 1}")
    new_cws = []
    for cw in code.codewords:
        if removed in cw:
            kept = [i for i in cw if i != removed]
        else:
            kept = list(cw[:-1])
        # close the index gap left by the removed element
        new_cws.append(tuple(i - 1 if i > removed else i for i in kept))
    return ConstantWeightCode(code.n - 1, new_cws)


def rate(code: ConstantWeightCode, q: int) -> float:
    """Normalized rate log_q(N) / k of a code transmitted as k q-ary symbols."""
    if q <= code.n:
        raise ValueError(f"field size q={q} must exceed the pool size n={code.n}")
    return math.log(len(code), q) / code.k
