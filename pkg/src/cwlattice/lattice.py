"""Finite lattices given by Hasse diagrams.

A lattice is entered as its element labels plus a list of cover pairs
(lower, upper).  Construction takes the reflexive-transitive closure,
verifies the result is a partial order with unique top and bottom, and
checks that every pair of elements has a unique greatest lower bound
and least upper bound.  Meets and joins are precomputed.

On top of that the module computes meet-irreducible elements,
irredundant irreducible decompositions, the upper semimodular
("Birkhoff") covering condition, and freedom from diamond (M3)
sublattices; together the latter two are equivalent to every element
having a unique irredundant irreducible decomposition, which
``decomposition_theorem_report`` checks from both sides.

An optional commutative multiplication table compatible with the order
(xy <= x meet y) supports the prime and primary element tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

DEFAULT_SCAN_LIMIT = 12


class SizeLimitError(ValueError):
    """The lattice exceeds the configured scan bound."""


class FiniteLattice:
    def __init__(self, elements: Sequence[str], covers: Iterable[tuple[str, str]]):
        labels = [str(e) for e in elements]
        if not labels:
            raise ValueError("lattice needs at least one element")
        if len(set(labels)) != len(labels):
            raise ValueError("element labels must be distinct")
        self.elements = tuple(labels)
        self._index = {e: i for i, e in enumerate(labels)}
        m = len(labels)

        leq = [[i == j for j in range(m)] for i in range(m)]
        for lo, hi in covers:
            i, j = self._idx(lo), self._idx(hi)
            if i == j:
                raise ValueError(f"cover ({lo}, {hi}) relates an element to itself")
            leq[i][j] = True
        # Warshall closure
        for via in range(m):
            row_via = leq[via]
            for i in range(m):
                if leq[i][via]:
                    row_i = leq[i]
                    for j in range(m):
                        if row_via[j]:
                            row_i[j] = True
        for i in range(m):
            for j in range(i + 1, m):
                if leq[i][j] and leq[j][i]:
                    raise ValueError("cover relation contains a cycle")
        self._leq = leq

        bottoms = [i for i in range(m) if all(leq[i][j] for j in range(m))]
        tops = [i for i in range(m) if all(leq[j][i] for j in range(m))]
        if len(bottoms) != 1 or len(tops) != 1:
            raise ValueError("order must have a unique bottom and a unique top")
        self._bottom, self._top = bottoms[0], tops[0]

        # canonical cover relation (transitive reduction of the order)
        self._upper_covers: list[list[int]] = [[] for _ in range(m)]
        self._lower_covers: list[list[int]] = [[] for _ in range(m)]
        for i in range(m):
            for j in range(m):
                if i == j or not leq[i][j]:
                    continue
                if any(leq[i][z] and leq[z][j] and z not in (i, j) for z in range(m)):
                    continue
                self._upper_covers[i].append(j)
                self._lower_covers[j].append(i)

        self._meet = [[self._bound(i, j, lower=True) for j in range(m)] for i in range(m)]
        self._join = [[self._bound(i, j, lower=False) for j in range(m)] for i in range(m)]

    def _idx(self, label: str) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise ValueError(f"unknown lattice element {label!r}") from None

    def _bound(self, i: int, j: int, lower: bool) -> int:
        m = len(self.elements)
        leq = self._leq
        if lower:
            common = [z for z in range(m) if leq[z][i] and leq[z][j]]
            # maximal elements of the common lower set
            extreme = [z for z in common if all(not (leq[z][w] and z != w) for w in common)]
        else:
            common = [z for z in range(m) if leq[i][z] and leq[j][z]]
            extreme = [z for z in common if all(not (leq[w][z] and z != w) for w in common)]
        if len(extreme) != 1:
            kind = "greatest lower" if lower else "least upper"
            raise ValueError(
                f"elements {self.elements[i]!r}, {self.elements[j]!r} lack a unique "
                f"{kind} bound; the order is not a lattice"
            )
        return extreme[0]

    @classmethod
    def from_order(cls, elements: Sequence[str], leq_pairs: Iterable[tuple[str, str]]) -> "FiniteLattice":
        """Build from an arbitrary set of order pairs (redundant pairs allowed)."""
        return cls(elements, [(a, b) for a, b in leq_pairs if a != b])

    # order primitives -------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def top(self) -> str:
        return self.elements[self._top]

    @property
    def bottom(self) -> str:
        return self.elements[self._bottom]

    def leq(self, a: str, b: str) -> bool:
        return self._leq[self._idx(a)][self._idx(b)]

    def meet(self, a: str, b: str) -> str:
        return self.elements[self._meet[self._idx(a)][self._idx(b)]]

    def join(self, a: str, b: str) -> str:
        return self.elements[self._join[self._idx(a)][self._idx(b)]]

    def upper_covers(self, a: str) -> tuple[str, ...]:
        return tuple(self.elements[j] for j in self._upper_covers[self._idx(a)])

    def lower_covers(self, a: str) -> tuple[str, ...]:
        return tuple(self.elements[j] for j in self._lower_covers[self._idx(a)])

    def covers(self, lower: str, upper: str) -> bool:
        return self._idx(upper) in self._upper_covers[self._idx(lower)]

    def cover_pairs(self) -> list[tuple[str, str]]:
        return [
            (self.elements[i], self.elements[j])
            for i in range(len(self.elements))
            for j in self._upper_covers[i]
        ]

    # structure --------------------------------------------------------

    def meet_irreducibles(self) -> list[str]:
        """Elements c except top with: c = d meet e implies c is d or e."""
        m = len(self.elements)
        out = []
        for c in range(m):
            if c == self._top:
                continue
            reducible = any(
                self._meet[d][e] == c and d != c and e != c
                for d in range(m)
                for e in range(m)
            )
            if not reducible:
                out.append(self.elements[c])
        return out

    def irreducible_decompositions(self, x: str) -> list[frozenset[str]]:
        """All irredundant subsets of meet-irreducibles whose meet is x.

        The empty subset stands for the empty meet, i.e. the top element.
        """
        xi = self._idx(x)
        cands = [self._idx(q) for q in self.meet_irreducibles() if self._leq[xi][self._idx(q)]]
        if len(cands) > 20:
            raise SizeLimitError("too many meet-irreducibles for a subset scan")
        hits: list[tuple[int, ...]] = []
        for r in range(len(cands) + 1):
            for combo in itertools.combinations(cands, r):
                acc = self._top
                for q in combo:
                    acc = self._meet[acc][q]
                if acc == xi:
                    hits.append(combo)
        irredundant = []
        hit_set = {frozenset(h) for h in hits}
        for h in hits:
            s = frozenset(h)
            if not any(other < s for other in hit_set):
                irredundant.append(frozenset(self.elements[q] for q in s))
        return irredundant

    def is_birkhoff(self) -> bool:
        """Upper semimodularity: if a covers a meet b, then a join b covers b."""
        m = len(self.elements)
        for a in range(m):
            for b in range(m):
                mt = self._meet[a][b]
                if mt != a and a in self._upper_covers[mt]:
                    if self._join[a][b] not in self._upper_covers[b]:
                        return False
        return True

    def has_m3_sublattice(self, scan_limit: int = DEFAULT_SCAN_LIMIT) -> bool:
        """Whether some triple generates a diamond sublattice.

        An M3 sublattice is exactly three pairwise incomparable elements
        with one common pairwise meet and one common pairwise join.
        """
        m = len(self.elements)
        if m > scan_limit:
            raise SizeLimitError(
                f"lattice has {m} elements, over the scan limit {scan_limit}"
            )
        for p, q, r in itertools.combinations(range(m), 3):
            if self._leq[p][q] or self._leq[q][p]:
                continue
            if self._leq[p][r] or self._leq[r][p]:
                continue
            if self._leq[q][r] or self._leq[r][q]:
                continue
            if self._meet[p][q] == self._meet[p][r] == self._meet[q][r] and \
               self._join[p][q] == self._join[p][r] == self._join[q][r]:
                return True
        return False

    def modular_sublattices_distributive(self, scan_limit: int = DEFAULT_SCAN_LIMIT) -> bool:
        """True iff no M3 embeds: then every modular sublattice is distributive."""
        return not self.has_m3_sublattice(scan_limit)

    def decomposition_theorem_report(self, scan_limit: int = DEFAULT_SCAN_LIMIT) -> "TheoremReport":
        """Evaluate both sides of the unique-decomposition equivalence."""
        unique = all(
            len(self.irreducible_decompositions(x)) == 1 for x in self.elements
        )
        birkhoff = self.is_birkhoff()
        m3_free = self.modular_sublattices_distributive(scan_limit)
        return TheoremReport(
            unique_decomposition=unique,
            birkhoff=birkhoff,
            m3_free=m3_free,
        )

    # serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "covers": [list(c) for c in self.cover_pairs()]}

    @classmethod
    def from_json(cls, obj: dict) -> "FiniteLattice":
        return cls(obj["elements"], [tuple(c) for c in obj["covers"]])

    def __repr__(self) -> str:
        return f"FiniteLattice({len(self.elements)} elements)"


@dataclass(frozen=True)
class TheoremReport:
    unique_decomposition: bool
    birkhoff: bool
    m3_free: bool

    @property
    def structural(self) -> bool:
        return self.birkhoff and self.m3_free

    @property
    def agree(self) -> bool:
        return self.unique_decomposition == self.structural

    def to_json(self) -> dict:
        return {
            "unique_decomposition": self.unique_decomposition,
            "birkhoff": self.birkhoff,
            "m3_free": self.m3_free,
            "structural": self.structural,
            "agree": self.agree,
        }


class MultiplicationTable:
    """Commutative multiplication on lattice elements with xy <= x meet y."""

    def __init__(self, lattice: FiniteLattice, rows: Sequence[Sequence[str]]):
        m = len(lattice)
        if len(rows) != m or any(len(r) != m for r in rows):
            raise ValueError(f"table must be {m}x{m} in element order")
        table = [[lattice._idx(v) for v in row] for row in rows]
        for i in range(m):
            for j in range(m):
                if table[i][j] != table[j][i]:
                    raise ValueError("multiplication must be commutative")
                prod = table[i][j]
                if not lattice._leq[prod][lattice._meet[i][j]]:
                    raise ValueError(
                        f"product of {lattice.elements[i]!r} and "
                        f"{lattice.elements[j]!r} is not below their meet"
                    )
        self.lattice = lattice
        self._table = table

    def mul(self, a: str, b: str) -> str:
        lat = self.lattice
        return lat.elements[self._table[lat._idx(a)][lat._idx(b)]]

    def powers(self, b: str) -> list[str]:
        """b, b^2, ... until the power sequence repeats."""
        lat = self.lattice
        x = lat._idx(b)
        seen: list[int] = []
        while x not in seen:
            seen.append(x)
            x = self._table[x][lat._idx(b)]
        return [lat.elements[i] for i in seen]

    def to_json(self) -> list[list[str]]:
        els = self.lattice.elements
        return [[els[v] for v in row] for row in self._table]


def check_prime(lattice: FiniteLattice, table: MultiplicationTable, p: str) -> bool:
    """p >= ab implies p >= a or p >= b, for all a, b."""
    for a in lattice.elements:
        for b in lattice.elements:
            if lattice.leq(table.mul(a, b), p):
                if not (lattice.leq(a, p) or lattice.leq(b, p)):
                    return False
    return True


def check_primary(lattice: FiniteLattice, table: MultiplicationTable, q: str) -> bool:
    """q >= ab and q not >= a imply q >= b^s for some s."""
    for a in lattice.elements:
        for b in lattice.elements:
            if lattice.leq(table.mul(a, b), q) and not lattice.leq(a, q):
                if not any(lattice.leq(pw, q) for pw in table.powers(b)):
                    return False
    return True


# ---------------------------------------------------------------------------
# bundled lattices

def chain(m: int) -> FiniteLattice:
    """The chain 0 < 1 < ... < m-1."""
    if m < 1:
        raise ValueError("chain needs at least one element")
    labels = [str(i) for i in range(m)]
    return FiniteLattice(labels, [(labels[i], labels[i + 1]) for i in range(m - 1)])


def boolean_lattice(k: int) -> FiniteLattice:
    """Subsets of a k-set ordered by inclusion, labeled as bit strings."""
    labels = [format(v, f"0{k}b") if k else "0" for v in range(1 << k)]
    covers = []
    for v in range(1 << k):
        for bit in range(k):
            if not v >> bit & 1:
                covers.append((labels[v], labels[v | (1 << bit)]))
    return FiniteLattice(labels, covers)


def diamond_m3() -> FiniteLattice:
    """M3: three pairwise incomparable atoms between bottom and top."""
    covers = [("0", "x"), ("0", "y"), ("0", "z"), ("x", "1"), ("y", "1"), ("z", "1")]
    return FiniteLattice(["0", "x", "y", "z", "1"], covers)


def pentagon_n5() -> FiniteLattice:
    """N5: the five-element non-modular lattice."""
    covers = [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")]
    return FiniteLattice(["0", "a", "c", "b", "1"], covers)


def irreducible_not_primary_example() -> tuple[FiniteLattice, MultiplicationTable]:
    """A six-element lattice with an N5 and a multiplication under which
    the meet-irreducible element d is not primary.

    The multiplication: xy = b for x, y in {a, b}; any product touching
    {c, d, e} is e; the top is the identity.  Then d >= e = bc while
    d is above neither c nor any power of b (b is idempotent).
    """
    elements = ["e", "b", "a", "c", "d", "1"]
    covers = [("e", "b"), ("b", "a"), ("a", "1"),
              ("e", "c"), ("c", "1"), ("e", "d"), ("d", "1")]
    lat = FiniteLattice(elements, covers)

    def prod(x: str, y: str) -> str:
        if x == "1":
            return y
        if y == "1":
            return x
        if x in ("a", "b") and y in ("a", "b"):
            return "b"
        return "e"

    rows = [[prod(x, y) for y in elements] for x in elements]
    return lat, MultiplicationTable(lat, rows)
