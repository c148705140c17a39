"""Interval scanners: sweep one entry (or a symmetric pair) of a base
h-vector over a value range, classify every candidate, and report gaps.

A gap is a maximal run of non-level values strictly between two certified
level values.  A gap containing a certified non-level value is the pattern
the scans are hunting for; a gap of unknowns is merely inconclusive.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from levellab.classify import Budget, Classification, Status, classify
from levellab.errors import HypothesisError
from levellab.forms import DEFAULT_PRIME
from levellab.macaulay import HVector
from levellab.seeds import derive_seed

_MAX_WORKERS = 8


@dataclass(frozen=True)
class Gap:
    """A run of values with no level certificate, bracketed by certified
    level values on both sides."""

    values: tuple[int, ...]
    kind: str  # "nonlevel" | "unknown"


@dataclass(frozen=True)
class ScanReport:
    base: HVector
    degrees: tuple[int, ...]
    values: tuple[int, ...]
    classifications: tuple[Classification, ...]
    gaps: tuple[Gap, ...]

    def by_value(self) -> dict[int, Classification]:
        return dict(zip(self.values, self.classifications))


def find_gaps(values, classifications) -> tuple[Gap, ...]:
    """Maximal non-level runs strictly between level values, in value order."""
    gaps: list[Gap] = []
    run: list[tuple[int, Status]] = []
    seen_level = False
    for value, result in zip(values, classifications):
        if result.status is Status.LEVEL:
            if run and seen_level:
                kind = ("nonlevel" if any(s is Status.NONLEVEL for _, s in run)
                        else "unknown")
                gaps.append(Gap(tuple(v for v, _ in run), kind))
            run = []
            seen_level = True
        elif seen_level:
            run.append((value, result.status))
    return tuple(gaps)


def _scan(base: HVector, degrees: tuple[int, ...], values, budget, master_seed,
          prime, exact_rational) -> ScanReport:
    values = tuple(values)
    if any(v < 1 for v in values):
        raise ValueError("scanned values must be positive")
    candidates = []
    for v in values:
        candidate = base
        for d in degrees:
            candidate = candidate.replace(d, v)
        candidates.append(candidate)

    def run(pair):
        v, candidate = pair
        return classify(candidate, budget,
                        master_seed=derive_seed(master_seed, "scan", degrees, v),
                        prime=prime, exact_rational=exact_rational)

    if len(candidates) > 1:
        with ThreadPoolExecutor(max_workers=min(_MAX_WORKERS, len(candidates))) as pool:
            results = tuple(pool.map(run, zip(values, candidates)))
    else:
        results = tuple(run(pair) for pair in zip(values, candidates))
    return ScanReport(base, degrees, values, results, find_gaps(values, results))


def scan_ic(base: HVector, i: int, values, budget: Budget | None = None, *,
            master_seed: int = 0, prime: int = DEFAULT_PRIME,
            exact_rational: bool = False) -> ScanReport:
    """Classify the base vector with entry i replaced by each value."""
    e = base.socle_degree
    if not 1 <= i <= e:
        raise ValueError(f"scan degree must lie in 1..{e}, got {i}")
    return _scan(base, (i,), values, budget, master_seed, prime, exact_rational)


def scan_gic(base: HVector, i: int, values, budget: Budget | None = None, *,
             master_seed: int = 0, prime: int = DEFAULT_PRIME,
             exact_rational: bool = False) -> ScanReport:
    """Classify the base vector with the symmetric pair (i, e-i) jointly
    replaced by each value.  The base must be symmetric of type 1."""
    e = base.socle_degree
    if base.type != 1:
        raise HypothesisError(f"symmetric-pair scans need type 1, got {base.type}")
    if not base.is_symmetric():
        raise HypothesisError("symmetric-pair scans need a symmetric base")
    if not 1 <= i <= e - 1:
        raise ValueError(f"scan degree must lie in 1..{e - 1}, got {i}")
    degrees = (i,) if i == e - i else (i, e - i)
    return _scan(base, degrees, values, budget, master_seed, prime, exact_rational)
