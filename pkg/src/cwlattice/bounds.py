"""Size bounds for (n, k, N, d) constant weight codes.

All bounds use exact integer arithmetic; floors and ceilings must be
bit-exact.  Johnson bound 1 applies only when k^2 - kn + (d/2)n > 0,
so inapplicability is an ordinary return value (None), not an error:
parameter tables routinely mix applicable and inapplicable rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb


def validate_params(n: int, k: int, d: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if d % 2 or not 2 <= d <= 2 * min(k, n - k):
        raise ValueError(
            f"need even d with 2 <= d <= 2*min(k, n-k), got d={d} for (n={n}, k={k})"
        )


def sphere_size(n: int, k: int, r: int) -> int:
    """Number of k-subsets within symmetric distance 2r of a fixed k-subset.

    Equals sum_{i=0..r} C(k, i) * C(n-k, i), independent of the center.
    """
    if not 0 <= r <= min(k, n - k):
        raise ValueError(f"radius must lie in 0..min(k, n-k), got r={r}")
    return sum(comb(k, i) * comb(n - k, i) for i in range(r + 1))


def sphere_packing_bound(n: int, k: int, d: int) -> int:
    """Upper bound C(n,k) / |sphere(t)| with t = floor((d/2 - 1) / 2)."""
    validate_params(n, k, d)
    t = (d // 2 - 1) // 2
    return comb(n, k) // sphere_size(n, k, t)


def sphere_covering_lower(n: int, k: int, d: int) -> int:
    """A code of minimum distance >= d with at least this many codewords exists."""
    validate_params(n, k, d)
    t = (d // 2 - 1) // 2
    size = sphere_size(n, k, t + 1)
    return -(-comb(n, k) // size)


def singleton_bound(n: int, k: int, d: int) -> int:
    """Singleton-type bound C(n - (d-2)/2, max(k, n-k)), for d > 2."""
    validate_params(n, k, d)
    if d <= 2:
        raise ValueError("singleton bound is stated for d > 2")
    drop = (d - 2) // 2
    if k < drop or n - k < drop:
        raise ValueError("need k and n-k >= (d-2)/2")
    return comb(n - drop, max(k, n - k))


def johnson1(n: int, k: int, delta: int) -> int | None:
    """Restricted Johnson bound floor(delta*n / (k^2 - kn + delta*n)).

    Returns None when the denominator is not positive.
    """
    if delta < 1:
        raise ValueError("delta must be at least 1")
    denom = k * k - k * n + delta * n
    if denom <= 0:
        return None
    return (delta * n) // denom


def johnson1_refined_feasible(n: int, k: int, delta: int, size: int) -> bool:
    """Integer-rounding feasibility test for a code of the given size.

    With kN = na + b, 0 <= b < n, a size-N code requires
    n*a*(a-1) + 2ab <= (k - delta) * N * (N-1).
    """
    if size < 1:
        raise ValueError("code size must be at least 1")
    a, b = divmod(k * size, n)
    return n * a * (a - 1) + 2 * a * b <= (k - delta) * size * (size - 1)


def johnson1_refined(n: int, k: int, delta: int) -> int:
    """Largest size passing the refined feasibility test.

    Scans upward until the first failure.  When no size up to C(n,k)
    fails (which happens whenever Johnson bound 1 is inapplicable), the
    trivial cap C(n,k) is returned.
    """
    cap = comb(n, k)
    size = 1
    while size <= cap:
        if not johnson1_refined_feasible(n, k, delta, size):
            return size - 1
        size += 1
    return cap


def johnson2(n: int, k: int, delta: int) -> int:
    """Unrestricted Johnson bound, the nested floors evaluated innermost-out:

        floor(n/k * floor((n-1)/(k-1) * ... * floor((n-(k-delta))/delta)))
    """
    if not 1 <= delta <= k <= n:
        raise ValueError(f"need 1 <= delta <= k <= n, got ({n}, {k}, {delta})")
    value = (n - (k - delta)) // delta
    for i in range(k - delta - 1, -1, -1):
        value = (n - i) * value // (k - i)
    return value


@dataclass
class BoundEntry:
    name: str
    value: int | None
    applicable: bool
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "applicable": self.applicable,
            "reason": self.reason,
        }


@dataclass
class BoundReport:
    """Every bound evaluated for one parameter set, plus the combined caps."""

    n: int
    k: int
    d: int
    entries: list[BoundEntry] = field(default_factory=list)

    @property
    def upper_bound(self) -> int:
        return min(e.value for e in self.entries if e.applicable and e.name != "sphere_covering_lower")

    @property
    def lower_bound(self) -> int:
        for e in self.entries:
            if e.name == "sphere_covering_lower":
                return e.value
        raise KeyError("sphere_covering_lower")

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "bounds": [e.to_json() for e in self.entries],
            "upper_bound": self.upper_bound,
            "lower_bound": self.lower_bound,
        }


def bound_report(n: int, k: int, d: int) -> BoundReport:
    """Evaluate every applicable bound; the overall upper bound is their minimum."""
    validate_params(n, k, d)
    delta = d // 2
    report = BoundReport(n=n, k=k, d=d)
    add = report.entries.append

    add(BoundEntry("subset_cap", comb(n, k), True, "number of k-subsets"))
    add(BoundEntry("sphere_packing", sphere_packing_bound(n, k, d), True))
    add(BoundEntry("sphere_covering_lower", sphere_covering_lower(n, k, d), True,
                   "existence lower bound, not a cap"))
    if d > 2:
        add(BoundEntry("singleton", singleton_bound(n, k, d), True))
    else:
        add(BoundEntry("singleton", None, False, "stated for d > 2 only"))
    j1 = johnson1(n, k, delta)
    if j1 is None:
        denom = k * k - k * n + delta * n
        add(BoundEntry("johnson1", None, False,
                       f"denominator k^2 - kn + delta*n = {denom} is not positive"))
    else:
        add(BoundEntry("johnson1", j1, True))
    refined = johnson1_refined(n, k, delta)
    if refined >= comb(n, k):
        add(BoundEntry("johnson1_refined", refined, True,
                       "feasibility never fails; value is the trivial cap"))
    else:
        add(BoundEntry("johnson1_refined", refined, True))
    add(BoundEntry("johnson2", johnson2(n, k, delta), True))
    return report
