"""Sector-snake orderings of the Boolean hypercube and their controls.

The strict ordering walks all n-bit states one bit flip at a time while
following a fixed Hamming-weight skeleton: stage k alternates between weight
levels k and k+1, and the walk starts with the fixed prefix
{}, {1}, {1,2}, {2}, {2,3}, ..., {n-1,n}, {n}.  The fast v2 variant keeps the
skeleton and prefix but relaxes the one-bit constraint, and a family of
standard control orderings (binary, Gray, weight-block, random) shares the
same interface.
"""

from __future__ import annotations

import hashlib
import json
import math
import time
from dataclasses import dataclass, field, asdict
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .bits import weight, hamming, span, to_string, from_string

ORDERING_KINDS = (
    "strict",
    "v2",
    "binary",
    "gray",
    "weight_block",
    "random_perm",
    "sector_preserving_random",
)

SKELETON_KINDS = ("strict", "v2", "sector_preserving_random")

MAX_N = 16


class CertificateError(ValueError):
    """A certificate file failed parsing, checksum, or revalidation."""


def _check_n(n: int, upper: int = MAX_N) -> None:
    if not isinstance(n, int) or not 1 <= n <= upper:
        raise ValueError(f"n must be an integer in [1, {upper}], got {n!r}")


def active_counts(n: int) -> tuple[int, ...]:
    """Per-stage active counts: a_0 = 1, a_k = C(n,k) - a_{k-1} + 1."""
    _check_n(n)
    counts = [1]
    for k in range(1, n + 1):
        counts.append(math.comb(n, k) - counts[-1] + 1)
    return tuple(counts)


@dataclass(frozen=True)
class Skeleton:
    """Weight sequence j_t prescribed for every path position."""

    n: int
    weights: tuple[int, ...]
    active_counts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.weights)


def skeleton(n: int) -> Skeleton:
    """Build the sector-snake weight skeleton for n elements."""
    counts = active_counts(n)
    weights: list[int] = []
    for k in range(n):
        a = counts[k]
        if a <= 0:
            raise AssertionError(f"degenerate active count a_{k}={a} for n={n}")
        # a copies of k interleaved with a-1 copies of k+1
        for i in range(2 * a - 1):
            weights.append(k if i % 2 == 0 else k + 1)
    if counts[n] == 1:
        weights.append(n)
    elif counts[n] != 0:
        raise AssertionError(f"active count a_n={counts[n]} out of range for n={n}")
    if len(weights) != 1 << n:
        raise AssertionError(f"skeleton length {len(weights)} != 2^{n}")
    return Skeleton(n=n, weights=tuple(weights), active_counts=counts)


def fixed_prefix(n: int) -> tuple[int, ...]:
    """First 2n states: {}, {1}, {1,2}, {2}, {2,3}, ..., {n-1,n}, {n}."""
    _check_n(n)
    states = [0]
    for k in range(1, n):
        states.append(1 << (k - 1))       # {k}
        states.append(3 << (k - 1))       # {k, k+1}
    states.append(1 << (n - 1))           # {n}
    return tuple(states)


@dataclass(frozen=True)
class Ordering:
    """A bijection between path positions 0..2^n-1 and n-bit states."""

    n: int
    states: tuple[int, ...]
    kind: str
    seed: Optional[int] = None
    search_nodes: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in ORDERING_KINDS:
            raise ValueError(f"unknown ordering kind {self.kind!r}")
        if len(self.states) != 1 << self.n:
            raise ValueError(
                f"ordering over n={self.n} needs {1 << self.n} states, "
                f"got {len(self.states)}"
            )

    def __len__(self) -> int:
        return len(self.states)

    def position_of(self) -> np.ndarray:
        """Inverse map: position_of()[x] is the path coordinate of state x."""
        pos = np.empty(len(self.states), dtype=np.int64)
        pos[np.asarray(self.states, dtype=np.int64)] = np.arange(len(self.states))
        return pos

    def bit_strings(self) -> list[str]:
        return [to_string(x, self.n) for x in self.states]


@dataclass(frozen=True)
class GeneratorBudget:
    """Search bounds for attempt-mode strict generation."""

    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None

    def bounded(self) -> bool:
        return self.max_nodes is not None or self.max_seconds is not None


@dataclass(frozen=True)
class AttemptLog:
    """Record of a strict-generation run that exhausted its budget."""

    n: int
    elapsed_seconds: float
    nodes: int
    deepest_index: int
    max_nodes: Optional[int]
    max_seconds: Optional[float]


def strict_generate(
    n: int, budget: Optional[GeneratorBudget] = None
) -> Union[Ordering, AttemptLog]:
    """Depth-first completion of the canonical strict ordering.

    Candidates for each position are the unused one-bit neighbours of the
    previous state at the skeleton weight, explored in increasing order of
    (onward count, tie-break key, value).  The tie-break prefers the larger
    added element on upward moves and the smaller removed element on downward
    moves.  The first complete path is returned; with an exhausted budget an
    AttemptLog is returned instead, never a partial ordering.
    """
    _check_n(n)
    if budget is None:
        budget = GeneratorBudget()
    skel = skeleton(n)
    weights = skel.weights
    size = 1 << n
    prefix = fixed_prefix(n)

    max_nodes = budget.max_nodes
    max_seconds = budget.max_seconds
    t_start = time.perf_counter()

    path = list(prefix)
    unused = (1 << size) - 1
    for x in prefix:
        unused ^= 1 << x

    # onward-count masks: bit y of up_mask[x] marks a one-bit superset of x
    up_mask = [0] * size
    down_mask = [0] * size
    for x in range(size):
        for b in range(n):
            y = x ^ (1 << b)
            if y > x:
                up_mask[x] |= 1 << y
            else:
                down_mask[x] |= 1 << y

    def candidates(t: int, prev: int, unused: int) -> list[int]:
        going_up = weights[t] == weights[t - 1] + 1
        cands: list[int] = []
        if going_up:
            # tau = -(added element): larger added bit first
            for b in range(n - 1, -1, -1):
                if not (prev >> b) & 1:
                    y = prev | (1 << b)
                    if (unused >> y) & 1:
                        cands.append(y)
        else:
            # tau = +(removed element): smaller removed bit first
            for b in range(n):
                if (prev >> b) & 1:
                    y = prev ^ (1 << b)
                    if (unused >> y) & 1:
                        cands.append(y)
        if t < size - 1 and len(cands) > 1:
            onward = up_mask if weights[t + 1] == weights[t] + 1 else down_mask
            # stable sort keeps the tau order inside equal onward counts
            cands.sort(key=lambda y: (unused & onward[y]).bit_count())
        return cands

    # node count = search-tree nodes visited: the root (completed prefix)
    # plus one per candidate extension attempted, dead ends included
    nodes = 1
    deepest = len(path) - 1
    if len(path) == size:  # n = 1: the prefix is already complete
        return Ordering(n=n, states=tuple(path), kind="strict", search_nodes=nodes)

    frames: list[list] = [[candidates(len(path), path[-1], unused), 0]]
    while frames:
        cands, i = frames[-1]
        if i == len(cands):
            frames.pop()
            if frames:
                y = path.pop()
                unused |= 1 << y
            continue
        frames[-1][1] = i + 1
        y = cands[i]
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            return _attempt_log(n, t_start, nodes - 1, deepest, budget)
        if max_seconds is not None and nodes % 1024 == 0:
            if time.perf_counter() - t_start > max_seconds:
                return _attempt_log(n, t_start, nodes, deepest, budget)
        path.append(y)
        unused ^= 1 << y
        if len(path) - 1 > deepest:
            deepest = len(path) - 1
        if len(path) == size:
            return Ordering(n=n, states=tuple(path), kind="strict", search_nodes=nodes)
        frames.append([candidates(len(path), y, unused), 0])

    raise RuntimeError(f"strict completion search exhausted for n={n}")


def _attempt_log(
    n: int, t_start: float, nodes: int, deepest: int, budget: GeneratorBudget
) -> AttemptLog:
    return AttemptLog(
        n=n,
        elapsed_seconds=time.perf_counter() - t_start,
        nodes=nodes,
        deepest_index=deepest,
        max_nodes=budget.max_nodes,
        max_seconds=budget.max_seconds,
    )


def v2_generate(n: int) -> Ordering:
    """Greedy skeleton completion: min (Hamming distance, span, value)."""
    _check_n(n)
    skel = skeleton(n)
    weights = skel.weights
    size = 1 << n
    prefix = fixed_prefix(n)

    path = list(prefix)
    used = bytearray(size)
    for x in prefix:
        used[x] = 1
    # per-weight pools of unused states, ascending
    pools: list[list[int]] = [[] for _ in range(n + 1)]
    for x in range(size):
        if not used[x]:
            pools[weight(x)].append(x)

    for t in range(len(prefix), size):
        prev = path[-1]
        j = weights[t]
        # one-bit neighbours first: they realise the minimum possible distance
        best = None
        going_up = j == weights[t - 1] + 1
        flips = range(n)
        for b in flips:
            bit = 1 << b
            if going_up == bool(prev & bit):
                continue
            y = prev ^ bit
            if used[y]:
                continue
            key = (span(y), y)
            if best is None or key < best[0]:
                best = (key, y)
        if best is not None:
            y = best[1]
        else:
            pool = pools[j]
            y = min(pool, key=lambda s: (hamming(s, prev), span(s), s))
        path.append(y)
        used[y] = 1
        pools[j].remove(y)

    return Ordering(n=n, states=tuple(path), kind="v2")


def standard_ordering(kind: str, n: int, seed: Optional[int] = None) -> Ordering:
    """Control orderings: binary, gray, weight_block, and the random pair."""
    _check_n(n)
    size = 1 << n
    if kind == "binary":
        states = tuple(range(size))
    elif kind == "gray":
        states = tuple(t ^ (t >> 1) for t in range(size))
    elif kind == "weight_block":
        states = tuple(sorted(range(size), key=lambda x: (weight(x), x)))
    elif kind == "random_perm":
        if seed is None:
            raise ValueError("random_perm requires a seed")
        rng = np.random.default_rng(seed)
        states = tuple(int(x) for x in rng.permutation(size))
    elif kind == "sector_preserving_random":
        if seed is None:
            raise ValueError("sector_preserving_random requires a seed")
        states = _sector_preserving_states(n, seed)
    else:
        raise ValueError(f"unknown standard ordering kind {kind!r}")
    return Ordering(n=n, states=states, kind=kind, seed=seed)


def _sector_preserving_states(n: int, seed: int) -> tuple[int, ...]:
    skel = skeleton(n)
    prefix = fixed_prefix(n)
    size = 1 << n
    in_prefix = set(prefix)
    rng = np.random.default_rng(seed)
    pools: list[list[int]] = [[] for _ in range(n + 1)]
    for x in range(size):
        if x not in in_prefix:
            pools[weight(x)].append(x)
    for pool in pools:
        rng.shuffle(pool)
    states = list(prefix)
    for t in range(len(prefix), size):
        states.append(pools[skel.weights[t]].pop())
    return tuple(states)


@dataclass(frozen=True)
class OrderingDiagnostics:
    """Adjacent-pair Hamming statistics over a full ordering."""

    mean_adjacent_dh: float
    max_adjacent_dh: int
    fraction_dh1: float


def diagnostics(ordering: Ordering) -> OrderingDiagnostics:
    states = ordering.states
    dists = [hamming(states[t], states[t + 1]) for t in range(len(states) - 1)]
    return OrderingDiagnostics(
        mean_adjacent_dh=sum(dists) / len(dists),
        max_adjacent_dh=max(dists),
        fraction_dh1=sum(1 for d in dists if d == 1) / len(dists),
    )


VALIDATION_MODES = ("strict", "skeleton_only", "bijection_only")

_CHECKS_FOR_MODE = {
    "bijection_only": ("bijectivity",),
    "skeleton_only": ("bijectivity", "fixed_prefix", "skeleton"),
    "strict": ("bijectivity", "fixed_prefix", "skeleton", "adjacency"),
}

_MODE_FOR_KIND = {
    "strict": "strict",
    "v2": "skeleton_only",
    "sector_preserving_random": "skeleton_only",
    "binary": "bijection_only",
    "gray": "bijection_only",
    "weight_block": "bijection_only",
    "random_perm": "bijection_only",
}


@dataclass(frozen=True)
class ValidationReport:
    """Machine-readable pass/fail listing for an ordering."""

    mode: str
    n: int
    kind: str
    checks: dict[str, bool]
    failures: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "n": self.n,
            "kind": self.kind,
            "checks": dict(self.checks),
            "failures": dict(self.failures),
            "passed": self.passed,
        }


def validation_mode_for_kind(kind: str) -> str:
    return _MODE_FOR_KIND[kind]


def validate(ordering: Ordering, mode: str = "strict") -> ValidationReport:
    """Run the requested checks; failures become report entries, not errors."""
    if mode not in VALIDATION_MODES:
        raise ValueError(f"unknown validation mode {mode!r}")
    n = ordering.n
    states = ordering.states
    size = 1 << n
    checks: dict[str, bool] = {}
    failures: dict[str, str] = {}

    def record(name: str, ok: bool, detail: str = "") -> None:
        checks[name] = ok
        if not ok:
            failures[name] = detail

    wanted = _CHECKS_FOR_MODE[mode]

    if "bijectivity" in wanted:
        ok = sorted(states) == list(range(size))
        record("bijectivity", ok, "" if ok else "states are not a bijection onto all n-bit strings")

    if "fixed_prefix" in wanted:
        expected = fixed_prefix(n)
        got = states[: len(expected)]
        ok = got == expected
        detail = ""
        if not ok:
            bad = next(t for t, (a, b) in enumerate(zip(got, expected)) if a != b)
            detail = f"prefix mismatch at position {bad}"
        record("fixed_prefix", ok, detail)

    if "skeleton" in wanted:
        expected_w = skeleton(n).weights
        bad_t = next(
            (t for t, x in enumerate(states) if weight(x) != expected_w[t]), None
        )
        record(
            "skeleton",
            bad_t is None,
            "" if bad_t is None else f"weight mismatch at position {bad_t}",
        )

    if "adjacency" in wanted:
        bad_t = next(
            (t for t in range(size - 1) if hamming(states[t], states[t + 1]) != 1),
            None,
        )
        record(
            "adjacency",
            bad_t is None,
            "" if bad_t is None else f"adjacent Hamming distance != 1 at positions {bad_t},{bad_t + 1}",
        )

    return ValidationReport(
        mode=mode, n=n, kind=ordering.kind, checks=checks, failures=failures
    )


CERTIFICATE_FORMAT = "sector-snake-ordering-certificate"
CERTIFICATE_VERSION = 1


def _certificate_payload(ordering: Ordering, report: ValidationReport) -> dict:
    return {
        "format": CERTIFICATE_FORMAT,
        "version": CERTIFICATE_VERSION,
        "n": ordering.n,
        "kind": ordering.kind,
        "seed": ordering.seed,
        "search_nodes": ordering.search_nodes,
        "states": ordering.bit_strings(),
        "validation": report.to_dict(),
    }


def _payload_hash(payload: dict) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def save_certificate(ordering: Ordering, path: Union[str, Path]) -> ValidationReport:
    """Validate, then write a self-describing JSON certificate."""
    report = validate(ordering, validation_mode_for_kind(ordering.kind))
    payload = _certificate_payload(ordering, report)
    payload["sha256"] = _payload_hash(
        {k: v for k, v in payload.items() if k != "sha256"}
    )
    Path(path).write_text(json.dumps(payload, indent=1) + "\n")
    return report


def load_certificate(path: Union[str, Path]) -> Ordering:
    """Load, checksum, and revalidate a certificate; raise naming any failure."""
    try:
        payload = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CertificateError(f"unreadable certificate {path}: {exc}") from exc

    for key in ("format", "version", "n", "kind", "states", "sha256"):
        if key not in payload:
            raise CertificateError(f"certificate missing field {key!r}")
    if payload["format"] != CERTIFICATE_FORMAT:
        raise CertificateError(f"unknown certificate format {payload['format']!r}")

    stored_hash = payload["sha256"]
    actual = _payload_hash({k: v for k, v in payload.items() if k != "sha256"})
    if stored_hash != actual:
        raise CertificateError("checksum mismatch")

    n = payload["n"]
    try:
        states = tuple(from_string(s) for s in payload["states"])
        ordering = Ordering(
            n=n,
            states=states,
            kind=payload["kind"],
            seed=payload.get("seed"),
            search_nodes=payload.get("search_nodes"),
        )
    except ValueError as exc:
        raise CertificateError(f"malformed certificate: {exc}") from exc

    report = validate(ordering, validation_mode_for_kind(ordering.kind))
    if not report.passed:
        failed = ", ".join(sorted(k for k, ok in report.checks.items() if not ok))
        raise CertificateError(f"revalidation failed: {failed}")
    return ordering
