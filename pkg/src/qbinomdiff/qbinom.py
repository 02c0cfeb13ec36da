"""q-binomial (Gaussian) coefficients, computed exactly.

qbinomial() uses the Pascal-type recurrence

    [m choose k]_q = [m-1 choose k-1]_q + q^k [m-1 choose k]_q

with a bounded memo cache.  Out-of-range arguments (k < 0 or k > m, hence any
negative m) give the zero polynomial, so decomposition formulas may leave the
nominal range freely.  coeff_by_partition_count() recounts single coefficients
from the partitions-in-a-box model, independently of any polynomial
arithmetic, and serves as the cross-validation oracle.
"""

from __future__ import annotations

import json
import threading
import warnings
from functools import lru_cache
from pathlib import Path
from typing import Optional

from .poly import ONE, ZERO, IntPoly

DEFAULT_CACHE_LIMIT = 1 << 20


class QBinomCache:
    """Memo cache for qbinomial, keyed by (m, min(k, m - k)).

    The key reduction exploits [m choose k]_q = [m choose m-k]_q.  The entry
    count is bounded: once full, new results are still returned to the caller
    but no longer stored, so long scans cannot exhaust memory.  Reads are
    lock-free; insertion takes a mutex so the bound holds under concurrent
    writers (stored values are immutable, racing readers are safe).
    """

    def __init__(self, limit: int = DEFAULT_CACHE_LIMIT) -> None:
        if limit < 0:
            raise ValueError("cache limit must be nonnegative")
        self._limit = limit
        self._entries: dict = {}
        self._write_lock = threading.Lock()

    @staticmethod
    def _key(m: int, k: int) -> tuple:
        return (m, min(k, m - k))

    def get(self, m: int, k: int) -> Optional[IntPoly]:
        return self._entries.get(self._key(m, k))

    def put(self, m: int, k: int, value: IntPoly) -> None:
        key = self._key(m, k)
        with self._write_lock:
            if key in self._entries or len(self._entries) < self._limit:
                self._entries[key] = value

    def __len__(self) -> int:
        return len(self._entries)

    def clear(self) -> None:
        with self._write_lock:
            self._entries.clear()

    def load(self, path) -> int:
        """Merge entries from a JSON cache file; returns the number loaded.

        A missing file is fine (first run).  A corrupt or inconsistent file is
        discarded entirely with a warning -- cached data is never trusted over
        its own consistency checks.
        """
        path = Path(path)
        if not path.exists():
            return 0
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
            if not isinstance(raw, dict):
                raise ValueError("top level is not an object")
            parsed = {}
            for key, coeffs in raw.items():
                m_text, k_text = key.split(",")
                m, k = int(m_text), int(k_text)
                if not 0 <= k <= m:
                    raise ValueError(f"key {key!r} is out of range")
                poly = IntPoly.from_decimal_strings(coeffs)
                if len(poly.coeffs) != len(list(coeffs)):
                    raise ValueError(f"entry {key!r} has trailing zeros")
                if poly.degree() != k * (m - k):
                    raise ValueError(f"entry {key!r} has the wrong degree")
                parsed[(m, k)] = poly
        except (OSError, ValueError, TypeError, AttributeError) as exc:
            warnings.warn(f"discarding corrupt qbinomial cache {path}: {exc}")
            return 0
        for (m, k), poly in parsed.items():
            self.put(m, k, poly)
        return len(parsed)

    def save(self, path) -> None:
        """Write the cache as a JSON map from "m,k" to decimal coefficient strings."""
        data = {
            f"{m},{k}": poly.to_decimal_strings()
            for (m, k), poly in sorted(self._entries.items())
        }
        Path(path).write_text(json.dumps(data), encoding="utf-8")


_default_cache = QBinomCache()
_USE_DEFAULT = object()


def default_cache() -> QBinomCache:
    """The process-wide cache used when qbinomial() is not handed one."""
    return _default_cache


def qbinomial(m: int, k: int, cache=_USE_DEFAULT) -> IntPoly:
    """[m choose k]_q as an IntPoly.

    Zero whenever k < 0 or k > m (hence for any negative m); 1 when k == 0 or
    k == m.  The result has degree k*(m-k), is symmetric, nonnegative and
    unimodal, and evaluates at q = 1 to the ordinary binomial coefficient.

    Pass cache=None to compute without memoization, or a QBinomCache to use
    one other than the shared default; results are identical either way.
    """
    if cache is _USE_DEFAULT:
        cache = _default_cache
    return _qbinomial(m, k, cache)


def _qbinomial(m: int, k: int, cache: Optional[QBinomCache]) -> IntPoly:
    if k < 0 or k > m:
        return ZERO
    if k > m - k:
        k = m - k
    if k == 0:
        return ONE
    if cache is not None:
        hit = cache.get(m, k)
        if hit is not None:
            return hit
    value = _qbinomial(m - 1, k - 1, cache) + _qbinomial(m - 1, k, cache).shift(k)
    if cache is not None:
        cache.put(m, k, value)
    return value


@lru_cache(maxsize=None)
def _box_partition_count(parts: int, largest: int, total: int) -> int:
    # partitions of `total` into at most `parts` parts, each at most `largest`,
    # by recursion on whether the largest allowed part is used
    if total == 0:
        return 1
    if total < 0 or parts == 0 or largest == 0 or total > parts * largest:
        return 0
    return (
        _box_partition_count(parts, largest - 1, total)
        + _box_partition_count(parts - 1, largest, total - largest)
    )


def coeff_by_partition_count(m: int, k: int, i: int) -> int:
    """Coefficient of q**i in [m choose k]_q, counted combinatorially.

    Counts the partitions of i with at most k parts, each part at most m - k.
    This never touches the polynomial recurrence, which is what makes it an
    independent oracle for qbinomial().
    """
    if not 0 <= k <= m:
        raise ValueError("requires 0 <= k <= m")
    if i < 0 or i > k * (m - k):
        return 0
    return _box_partition_count(k, m - k, i)
