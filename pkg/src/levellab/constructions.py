"""Randomized constructions of level modules with predicted h-vectors.

Each builder draws coefficients from a caller-supplied ``random.Random``,
so a (seed, prime) pair replays the construction byte for byte.  The
``expected_h_*`` companions give the h-vector the construction achieves
generically; computing the actual tower and comparing against the
prediction is how certificates get verified.

The predictions rest on two classical facts about sums of powers of
general linear forms: a single sum of m e-th powers spans
min(m, dim R_j, dim R_{e-j}) in each degree j, and adjoining such a sum to
a level module adds the two towers degreewise, capped by the ring.
Iterating the second fact over a partition (m_1, ..., m_t) predicts the
whole family used by the socle degree 2 and 3 realizations.
"""

from __future__ import annotations

from random import Random

from levellab.errors import DependentGeneratorsError, HypothesisError
from levellab.forms import DEFAULT_PRIME, Form, random_form, random_linear_form
from levellab.macaulay import HVector, binomial
from levellab.modules import HProfile, InverseModule, h_vector, type_of
from levellab.seeds import derive_seed


def _ring_dim(nvars: int, degree: int) -> int:
    return binomial(nvars + degree - 1, degree)


def sum_of_powers(nvars: int, degree: int, count: int, rng: Random,
                  p: int = DEFAULT_PRIME) -> Form:
    """Sum of ``count`` e-th powers of independent random linear forms."""
    if count < 1:
        raise ValueError(f"need at least one power, got {count}")
    if degree < 1:
        raise ValueError(f"powers need degree >= 1, got {degree}")
    total = Form.zero(nvars, degree, p)
    for _ in range(count):
        total = total + random_linear_form(nvars, rng, p) ** degree
    return total


def expected_h_sum_of_powers(nvars: int, degree: int, count: int) -> HVector:
    """Generic h-vector of a sum of ``count`` e-th powers:
    h_j = min(count, dim R_j, dim R_{e-j})."""
    entries = [1]
    for j in range(1, degree + 1):
        entries.append(min(count, _ring_dim(nvars, j), _ring_dim(nvars, degree - j)))
    return HVector(entries)


def powers_partition_module(nvars: int, degree: int, parts: tuple[int, ...], rng: Random,
                            p: int = DEFAULT_PRIME) -> InverseModule:
    """One generator per part, the i-th a sum of parts[i] e-th powers of
    random linear forms."""
    if not parts:
        raise ValueError("partition must have at least one part")
    if any(m < 1 for m in parts):
        raise ValueError(f"parts must be positive, got {parts}")
    gens = tuple(sum_of_powers(nvars, degree, m, rng, p) for m in parts)
    return InverseModule(nvars, degree, p, gens)


def expected_h_powers_partition(nvars: int, degree: int, parts: tuple[int, ...]) -> HVector:
    """Generic h-vector of a partition module: degreewise sums of the
    single-generator profiles, capped by the ring dimension."""
    entries = [1]
    for j in range(1, degree + 1):
        contribution = sum(
            min(m, _ring_dim(nvars, j), _ring_dim(nvars, degree - j)) for m in parts
        )
        entries.append(min(contribution, _ring_dim(nvars, j)))
    return HVector(entries)


def greedy_partition(total: int, count: int, cap: int) -> tuple[int, ...]:
    """Lexicographically greatest partition of ``total`` into exactly
    ``count`` parts, each between 1 and ``cap``."""
    if not count <= total <= count * cap:
        raise ValueError(
            f"no partition of {total} into {count} parts within 1..{cap}"
        )
    parts = []
    remaining = total
    for k in range(count, 0, -1):
        take = min(cap, remaining - (k - 1))
        parts.append(take)
        remaining -= take
    return tuple(parts)


def realize_socle2(nvars: int, count: int, rng: Random,
                   p: int = DEFAULT_PRIME) -> InverseModule:
    """Level module with h-vector (1, r, count): ``count`` quadric
    generators, each a sum of r general squares."""
    cap = binomial(nvars + 1, 2)
    if not 1 <= count <= cap:
        raise HypothesisError(f"socle degree 2 type must be in 1..{cap}, got {count}")
    return powers_partition_module(nvars, 2, (nvars,) * count, rng, p)


def realize_socle3_partition(nvars: int, parts: tuple[int, ...], rng: Random,
                             p: int = DEFAULT_PRIME) -> InverseModule:
    """Level module with h-vector (1, min(b, r), min(b, dim R_2), t) for
    b = sum(parts): cubic generators, the i-th a sum of parts[i] cubes."""
    if not parts or any(not 1 <= m <= nvars for m in parts):
        raise HypothesisError(
            f"socle degree 3 parts must be nonempty with entries in 1..{nvars}, got {parts}"
        )
    return powers_partition_module(nvars, 3, tuple(parts), rng, p)


def augment_with_powers(module: InverseModule, count: int, rng: Random) -> InverseModule:
    """Adjoin one generator, a sum of ``count`` general e-th powers."""
    room = _ring_dim(module.nvars, module.degree) - type_of(module)
    if not 1 <= count <= room:
        raise HypothesisError(
            f"augmentation size must be in 1..{room} "
            f"(ring dimension minus current type), got {count}"
        )
    extra = sum_of_powers(module.nvars, module.degree, count, rng, module.p)
    return InverseModule(
        module.nvars, module.degree, module.p,
        module.generators + (extra,), seed=module.seed,
    )


def expected_h_augment(h: HVector, nvars: int, count: int) -> HVector:
    """Generic h-vector after adjoining a sum of ``count`` powers to a
    level module with h-vector h: degreewise sum capped by the ring."""
    e = h.socle_degree
    addend = expected_h_sum_of_powers(nvars, e, count)
    entries = [1]
    for j in range(1, e + 1):
        entries.append(min(h[j] + addend[j], _ring_dim(nvars, j)))
    return HVector(entries)


def add_new_variable_power(module: InverseModule) -> InverseModule:
    """Juxtapose a fresh variable: embed the generators in r+1 variables
    and adjoin the pure power of the new variable.  Every entry of the
    h-vector from degree 1 through e grows by exactly one, because the new
    tower meets the old one only in the constants."""
    wide = module.nvars + 1
    gens = [g.embedded(wide) for g in module.generators]
    power_mono = (0,) * module.nvars + (module.degree,)
    gens.append(Form.from_terms(wide, module.degree, [(power_mono, 1)], module.p))
    return InverseModule(wide, module.degree, module.p, tuple(gens), seed=module.seed)


def compressed_generic_module(nvars: int, degree: int, count: int, rng: Random,
                              p: int = DEFAULT_PRIME) -> InverseModule:
    """``count`` dense random generators of the given degree; generically
    the module is compressed, meeting both caps in every degree."""
    cap = _ring_dim(nvars, degree)
    if not 1 <= count <= cap:
        raise ValueError(f"type must be in 1..{cap}, got {count}")
    gens = tuple(random_form(nvars, degree, rng, p) for _ in range(count))
    return InverseModule(nvars, degree, p, gens)


def expected_h_compressed(nvars: int, degree: int, count: int) -> HVector:
    """Maximal profile h_j = min(dim R_j, count * dim R_{e-j}), observed
    generically for dense random generators."""
    entries = [1]
    for j in range(1, degree + 1):
        entries.append(min(_ring_dim(nvars, j), count * _ring_dim(nvars, degree - j)))
    return HVector(entries)


def maximal_profile(builder, master_seed: int, trials: int = 5) -> tuple[InverseModule, HProfile]:
    """Run a randomized builder on several derived seeds and keep the best
    witness.

    Span dimensions only drop on special coefficient choices, so the
    entrywise-largest h-vector over independent trials is the generic one;
    ties between incomparable profiles break deterministically by entry
    sum and then lexicographic order.  ``builder`` takes a Random and
    returns an InverseModule.
    """
    best: tuple[InverseModule, HProfile] | None = None
    for k in range(trials):
        seed = derive_seed(master_seed, "trial", k)
        module = builder(Random(seed)).with_seed(seed)
        try:
            profile = h_vector(module)
        except DependentGeneratorsError:
            continue
        if best is None or _profile_rank(profile) > _profile_rank(best[1]):
            best = (module, profile)
    if best is None:
        raise DependentGeneratorsError(
            f"all {trials} trials drew dependent generators", presented=0, rank=0
        )
    return best


def _profile_rank(profile: HProfile) -> tuple[int, tuple[int, ...]]:
    return (sum(profile.dims), profile.dims)
