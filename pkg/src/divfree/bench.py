"""Reproducible Pfaffian benchmarks.

Inputs are seeded with an explicitly documented generator so runs can be
reproduced on any machine (or reimplemented in another language):
splitmix64 over the raw seed, one 64-bit draw per entry, mapped to an
integer in [-9, 9] via (word >> 33) mod 19 - 9; the matrix is then
A - A^T.  Per size n the stream is seeded with (seed + n) mod 2^64.

Every selected algorithm runs once on the same input and the digests of
their canonical result texts must agree before any timing is reported;
timings are then medians (with means alongside) over the requested
repetitions on a monotonic clock.
"""

from __future__ import annotations

import hashlib
import statistics
import time
from dataclasses import dataclass

from .errors import ValidationError
from .matrices import SkewMatrix, ring_from_tag
from .pfaffian import (
    LAPLACE_SIZE_CAP,
    MATCHINGS_SIZE_CAP,
    pfaffian_fl,
    pfaffian_laplace,
    pfaffian_matchings,
)

GENERATOR_ID = "splitmix64-mod19"
ENTRY_LOW, ENTRY_HIGH = -9, 9

_MASK64 = (1 << 64) - 1


def splitmix64_stream(seed):
    """The splitmix64 sequence; tiny, portable, and well documented."""
    state = seed & _MASK64

    def next_word():
        nonlocal state
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    return next_word


def seeded_skew_rows(n, seed):
    """Integer rows of the seeded skew test matrix for size n."""
    draw = splitmix64_stream((seed + n) & _MASK64)
    span = ENTRY_HIGH - ENTRY_LOW + 1
    raw = [[(draw() >> 33) % span + ENTRY_LOW for _ in range(n)] for _ in range(n)]
    return [[raw[i][j] - raw[j][i] for j in range(n)] for i in range(n)]


def seeded_skew_matrix(ring_tag, n, seed):
    ring = ring_from_tag(ring_tag)
    rows = seeded_skew_rows(n, seed)
    return SkewMatrix._trusted(ring, [[ring.from_int(x) for x in row] for row in rows])


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    n: int
    ring: str
    seconds: float  # median over reps
    seconds_mean: float
    reps: int
    threads: int
    digest: str


CSV_HEADER = "algorithm,n,ring,seconds,reps,digest,seconds_mean,threads"

_ALGORITHMS = {
    "fl": lambda a, allow_large: pfaffian_fl(a).value,
    "matchings": lambda a, allow_large: pfaffian_matchings(a, allow_large=allow_large),
    "laplace": lambda a, allow_large: pfaffian_laplace(a, allow_large=allow_large),
}

_CAPS = {"matchings": MATCHINGS_SIZE_CAP, "laplace": LAPLACE_SIZE_CAP}


def check_caps(algorithms, sizes, override_caps=False):
    if override_caps:
        return
    for name in algorithms:
        cap = _CAPS.get(name)
        if cap is None:
            continue
        too_big = [n for n in sizes if n > cap]
        if too_big:
            raise ValidationError(
                "algorithm %r is capped at n <= %d (requested %s); "
                "use --override-caps to force" % (name, cap, too_big)
            )


def run_pfaffian_bench(sizes, ring_tag="rational", algorithms=("fl",),
                       reps=3, seed=0, threads=1, override_caps=False):
    """Time the selected algorithms on identical seeded inputs.

    Returns one BenchRecord per (algorithm, size).  For exact rings the
    result digests of all algorithms on one input must agree, otherwise
    an InternalConsistencyError-grade failure is raised immediately.
    """
    for name in algorithms:
        if name not in _ALGORITHMS:
            raise ValueError("unknown algorithm %r" % name)
    if reps < 1:
        raise ValueError("reps must be positive")
    check_caps(algorithms, sizes, override_caps)
    records = []
    for n in sizes:
        matrix = seeded_skew_matrix(ring_tag, n, seed)
        ring = matrix.ring
        values = {}
        for name in algorithms:
            values[name] = _ALGORITHMS[name](matrix, override_caps)
        digests = {
            name: hashlib.sha256(ring.format(v).encode()).hexdigest()
            for name, v in values.items()
        }
        if ring.exact and len(set(digests.values())) > 1:
            raise ValidationError(
                "algorithms disagree on n=%d: %s" % (n, sorted(digests.items()))
            )
        for name in algorithms:
            durations = []
            for _ in range(reps):
                start = time.perf_counter()
                _ALGORITHMS[name](matrix, override_caps)
                durations.append(time.perf_counter() - start)
            records.append(
                BenchRecord(
                    algorithm=name,
                    n=n,
                    ring=ring.tag,
                    seconds=statistics.median(durations),
                    seconds_mean=statistics.fmean(durations),
                    reps=reps,
                    threads=threads,
                    digest=digests[name],
                )
            )
    return records


def records_to_csv(records, seed=None):
    lines = []
    if seed is not None:
        lines.append("# generator=%s seed=%d entries=[%d,%d]"
                     % (GENERATOR_ID, seed, ENTRY_LOW, ENTRY_HIGH))
    lines.append(CSV_HEADER)
    for r in records:
        lines.append(
            "%s,%d,%s,%.9g,%d,%s,%.9g,%d"
            % (r.algorithm, r.n, r.ring, r.seconds, r.reps, r.digest,
               r.seconds_mean, r.threads)
        )
    return "\n".join(lines) + "\n"
