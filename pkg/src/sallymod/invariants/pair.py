"""Memoized powers, products and lengths for a pair (I, J), and the reduction test."""

from __future__ import annotations

import threading


class ReductionError(ValueError):
    """J is not contained in I, or is not a reduction within the search bound."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def colength(a) -> int:
    return 0 if a.is_unit else a.colength()


def intersection_length(a, b) -> int:
    """λ(R/(a ∩ b)) from the exact sequence R/(a∩b) -> R/a ⊕ R/b -> R/(a+b)."""
    return colength(a) + colength(b) - colength(a + b)


class BudgetExceeded(RuntimeError):
    """A computation would need a power of I beyond the configured budget."""

    def __init__(self, message: str, needed: int | None = None):
        super().__init__(message)
        self.needed = needed


class PairData:
    """Cache of I^n, J I^n, J^(n-1) I and their colengths for one pair.

    ``J`` may be None when only powers of I are needed.
    """

    def __init__(self, I, J=None):
        self.I = I
        self.J = J
        self._lock = threading.RLock()
        self._ideals: dict[tuple, object] = {}
        self._lengths: dict[tuple, int] = {}

    def _memo(self, key, build):
        with self._lock:
            hit = self._ideals.get(key)
        if hit is not None:
            return hit
        val = build()
        with self._lock:
            return self._ideals.setdefault(key, val)

    def _len(self, key, ideal_fn):
        with self._lock:
            hit = self._lengths.get(key)
        if hit is not None:
            return hit
        v = colength(ideal_fn())
        with self._lock:
            self._lengths[key] = v
        return v

    def _need_j(self):
        if self.J is None:
            raise ValueError("this quantity needs a reduction J")

    # ideals
    def power(self, n: int):
        if n == 0:
            return self._memo(("pow", 0), lambda: self.I ** 0)
        if n == 1:
            return self.I
        # ** prunes generators at every step on the polynomial engine
        return self._memo(("pow", n), lambda: self.I ** n)

    def j_power(self, n: int):
        self._need_j()
        if n == 1:
            return self.J
        return self._memo(("jpow", n), lambda: self.J ** n)

    def j_times_power(self, n: int):
        """J I^n."""
        self._need_j()
        if n == 0:
            return self.J
        return self._memo(("jip", n), lambda: self.J * self.power(n))

    def jpow_times_i(self, n: int):
        """J^(n-1) I for n >= 1."""
        self._need_j()
        if n == 1:
            return self.I
        return self._memo(("jpi", n), lambda: self.j_power(n - 1) * self.I)

    # lengths
    def len_power(self, n: int) -> int:
        return self._len(("pow", n), lambda: self.power(n))

    def len_j(self) -> int:
        return self._len(("j",), lambda: self.J)

    def len_j_times_power(self, n: int) -> int:
        return self._len(("jip", n), lambda: self.j_times_power(n))

    def len_jpow_times_i(self, n: int) -> int:
        return self._len(("jpi", n), lambda: self.jpow_times_i(n))

    def step_length(self, n: int) -> int:
        """λ(I^n / J I^(n-1)), n >= 1."""
        return self.len_j_times_power(n - 1) - self.len_power(n)

    def sally_length(self, n: int) -> int:
        """λ(I^n / J^(n-1) I), n >= 2."""
        return self.len_jpow_times_i(n) - self.len_power(n)

    def len_j_plus_power(self, n: int) -> int:
        """λ(R/(I^n + J))."""
        return self._len(("jplus", n), lambda: self.J + self.power(n))

    def len_j_cap_power(self, n: int) -> int:
        """λ(R/(J ∩ I^n)) by inclusion-exclusion."""
        return self.len_j() + self.len_power(n) - self.len_j_plus_power(n)

    def vv(self, k: int, route: str = "length") -> bool:
        """Whether J ∩ I^k = J I^(k-1)."""
        self._need_j()
        if k <= 1:
            return True
        if route == "length":
            # J I^(k-1) ⊆ J ∩ I^k, so equal lengths mean equal ideals
            return self.len_j_cap_power(k) == self.len_j_times_power(k - 1)
        if route == "eliminate":
            return self.J.intersect(self.power(k)).equals(self.j_times_power(k - 1))
        raise ValueError(f"unknown route {route!r}")

    def in_j(self, n: int) -> bool:
        """Whether I^n ⊆ J."""
        return self.J.contains(self.power(n))


_REGISTRY_ATTR = "_sallymod_pairs"


def pair_data(I, J=None) -> PairData:
    """The shared cache for (I, J), stored on I and keyed by the identity of J."""
    reg = I.__dict__.setdefault(_REGISTRY_ATTR, {})
    key = id(J)
    hit = reg.get(key)
    if hit is not None and hit.J is J:
        return hit
    pd = PairData(I, J)
    reg[key] = pd
    return pd


def is_reduction(J, I, bound: int = 25, pair: PairData | None = None,
                 power_budget: int | None = None) -> int | None:
    """Least r <= bound with J I^r = I^(r+1), or None if there is none below bound.

    With ``power_budget`` set, the search raises :class:`BudgetExceeded`
    instead of forming I^(r+1) beyond that power.
    """
    w = I.non_member(J)
    if w is not None:
        raise ReductionError("J is not contained in I", witness=w)
    pd = pair if pair is not None else pair_data(I, J)
    for r in range(bound + 1):
        if power_budget is not None and r + 1 > power_budget:
            raise BudgetExceeded(
                f"no reduction number below {r}; continuing needs I^{r + 1}, "
                f"beyond the power budget {power_budget}", needed=r + 1)
        if pd.len_j_times_power(r) == pd.len_power(r + 1):
            return r
    return None


def reduction_number(J, I, bound: int = 25, pair: PairData | None = None,
                     power_budget: int | None = None) -> int:
    r = is_reduction(J, I, bound, pair, power_budget)
    if r is None:
        raise ReductionError(f"J is not a reduction of I with reduction number <= {bound}")
    return r


def default_power_budget(I) -> int:
    """Largest power of I an analysis may form: cheap on the semigroup engine."""
    if I.engine == "semigroup":
        return I.semigroup.n_max
    return 12
