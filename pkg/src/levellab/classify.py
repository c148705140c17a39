"""Level / non-level classification with replayable certificates.

The pipeline is deliberately one-sided: non-level verdicts come only from
necessary conditions that can be re-evaluated from scratch, and level
verdicts come only from an exact criterion or a reproducible construction
whose computed Hilbert function matches the candidate on the nose.  A
failed construction search never claims non-leveledness; it returns
Unknown with diagnostics.
"""

import json
import time
from dataclasses import dataclass
from enum import Enum
from random import Random

from levellab.constructions import (
    expected_h_augment,
    expected_h_compressed,
    expected_h_powers_partition,
    expected_h_sum_of_powers,
    add_new_variable_power,
    augment_with_powers,
    compressed_generic_module,
    greedy_partition,
    maximal_profile,
    powers_partition_module,
    sum_of_powers,
)
from levellab.errors import DependentGeneratorsError, HypothesisError
from levellab.forms import DEFAULT_PRIME
from levellab.macaulay import HVector, is_si_sequence, o_sequence_violation
from levellab.modules import (
    HProfile,
    InverseModule,
    module_to_text,
    truncate_level,
)
from levellab.seeds import derive_seed
from levellab.spans import derivative_dims_rational


class Status(Enum):
    LEVEL = "level"
    NONLEVEL = "nonlevel"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Budget:
    """Search budget: random trials per recipe, wall-clock cap per vector."""

    trials: int = 5
    time_limit: float = 10.0


@dataclass(frozen=True)
class Certificate:
    """Replayable witness for a level verdict.

    Construction certificates carry everything needed to reproduce the
    witness byte for byte: the recipe, the winning seed, the prime, the
    computed per-degree ranks and the generator text.  Criterion
    certificates name an exact decision rule instead.
    """

    kind: str  # "construction" | "criterion"
    recipe: dict | None = None
    seed: int | None = None
    prime: int | None = None
    ranks: tuple[int, ...] | None = None
    generators: str | None = None
    characteristic: str | None = None  # "char-p" | "char-0-verified"
    criterion: str | None = None
    detail: str | None = None


@dataclass(frozen=True)
class Classification:
    h: HVector
    status: Status
    certificate: Certificate | None = None
    condition: str | None = None
    detail: str | None = None
    trials_used: int = 0
    elapsed: float = 0.0
    diagnostics: tuple[str, ...] = ()


# ------------------------------------------------------ necessary conditions


def _o_sequence_detail(h: HVector) -> str | None:
    violation = o_sequence_violation(h)
    return None if violation is None else str(violation)


def _ci_range_detail(h: HVector) -> str | None:
    # a module generated in top degree has every component spanned by the
    # first derivatives of the next one, so h_{d-1} <= r * h_d throughout
    r = h.codimension
    for d in range(1, h.socle_degree + 1):
        if h[d - 1] > r * h[d]:
            return (
                f"degree {d - 1} entry {h[d - 1]} exceeds the derivative cap "
                f"{r}*{h[d]} = {r * h[d]}"
            )
    return None


def _gorenstein_symmetry_detail(h: HVector) -> str | None:
    if h.type == 1 and not h.is_symmetric():
        return "type 1 forces a symmetric h-vector"
    return None


def _si_classification_detail(h: HVector) -> str | None:
    if h.type == 1 and 1 <= h.codimension <= 3 and not is_si_sequence(h):
        return (
            "type 1 h-vectors in at most 3 variables are exactly the "
            "SI-sequences, and this one is not SI"
        )
    return None


NECESSARY_CONDITIONS: tuple[tuple[str, object], ...] = (
    ("o-sequence", _o_sequence_detail),
    ("ci-range", _ci_range_detail),
    ("gorenstein-symmetry", _gorenstein_symmetry_detail),
    ("si-classification", _si_classification_detail),
)


def necessary_condition_violation(h: HVector) -> tuple[str, str] | None:
    """First violated necessary condition as (name, detail), or None."""
    for name, check in NECESSARY_CONDITIONS:
        detail = check(h)
        if detail is not None:
            return name, detail
    return None


def condition_still_violated(name: str, h: HVector) -> bool:
    """Re-evaluate a named non-level condition from scratch."""
    for known, check in NECESSARY_CONDITIONS:
        if known == name:
            return check(h) is not None
    raise ValueError(f"unknown condition {name!r}")


# ------------------------------------------------------------ exact criteria


def _field_criterion(h: HVector) -> str | None:
    if h.socle_degree == 0:
        return "socle degree 0 is the base field"
    return None


def _si_criterion(h: HVector) -> str | None:
    if h.type == 1 and 1 <= h.codimension <= 3 and is_si_sequence(h):
        return (
            "type 1 h-vectors in at most 3 variables are exactly the "
            "SI-sequences, and this one is SI"
        )
    return None


LEVEL_CRITERIA: tuple[tuple[str, object], ...] = (
    ("field", _field_criterion),
    ("si-classification", _si_criterion),
)


def satisfied_criterion(h: HVector) -> tuple[str, str] | None:
    for name, check in LEVEL_CRITERIA:
        detail = check(h)
        if detail is not None:
            return name, detail
    return None


def criterion_still_holds(name: str, h: HVector) -> bool:
    """Re-evaluate a named level criterion from scratch."""
    for known, check in LEVEL_CRITERIA:
        if known == name:
            return check(h) is not None
    raise ValueError(f"unknown criterion {name!r}")


# ------------------------------------------------------------------- recipes


def recipe_tag(recipe: dict) -> str:
    """Canonical one-line form of a recipe, stable across runs."""
    return json.dumps(recipe, sort_keys=True, separators=(",", ":"))


def expected_h_for_recipe(recipe: dict) -> HVector:
    """Generic h-vector a recipe aims for, by pure arithmetic."""
    kind = recipe["kind"]
    if kind == "sum_of_powers":
        return expected_h_sum_of_powers(
            recipe["nvars"], recipe["degree"], recipe["count"]
        )
    if kind == "powers_partition":
        return expected_h_powers_partition(
            recipe["nvars"], recipe["degree"], tuple(recipe["parts"])
        )
    if kind == "compressed":
        return expected_h_compressed(recipe["nvars"], recipe["degree"], recipe["count"])
    if kind == "truncate":
        source = expected_h_for_recipe(recipe["source"])
        return HVector(source.entries[: recipe["to"] + 1])
    if kind == "add_variable":
        base = expected_h_for_recipe(recipe["base"])
        return HVector((1,) + tuple(x + 1 for x in base.entries[1:]))
    if kind == "augment":
        base = expected_h_for_recipe(recipe["base"])
        return expected_h_augment(base, recipe["nvars"], recipe["count"])
    raise ValueError(f"unknown recipe kind {kind!r}")


def build_recipe(recipe: dict, rng: Random, p: int = DEFAULT_PRIME) -> InverseModule:
    """Materialize a recipe; the rng is consumed in a fixed order, so a
    seeded Random reproduces the module exactly."""
    kind = recipe["kind"]
    if kind == "sum_of_powers":
        form = sum_of_powers(recipe["nvars"], recipe["degree"], recipe["count"], rng, p)
        return InverseModule(recipe["nvars"], recipe["degree"], p, (form,))
    if kind == "powers_partition":
        return powers_partition_module(
            recipe["nvars"], recipe["degree"], tuple(recipe["parts"]), rng, p
        )
    if kind == "compressed":
        return compressed_generic_module(
            recipe["nvars"], recipe["degree"], recipe["count"], rng, p
        )
    if kind == "truncate":
        return truncate_level(build_recipe(recipe["source"], rng, p), recipe["to"])
    if kind == "add_variable":
        return add_new_variable_power(build_recipe(recipe["base"], rng, p))
    if kind == "augment":
        base = build_recipe(recipe["base"], rng, p)
        return augment_with_powers(base, recipe["count"], rng)
    raise ValueError(f"unknown recipe kind {kind!r}")


def candidate_recipes(h: HVector, nested: bool = True) -> list[dict]:
    """Recipes whose expected h-vector equals h exactly, cheapest first.

    Everything here is arithmetic; no matrix ranks are computed until a
    candidate is realized.
    """
    r, e, t = h.codimension, h.socle_degree, h.type
    out: list[dict] = []
    seen: set[str] = set()

    def add(recipe: dict) -> None:
        try:
            expected = expected_h_for_recipe(recipe)
        except (ValueError, HypothesisError):
            return
        if expected == h:
            tag = recipe_tag(recipe)
            if tag not in seen:
                seen.add(tag)
                out.append(recipe)

    if e < 1 or r < 1:
        return out
    if t == 1:
        add({"kind": "sum_of_powers", "nvars": r, "degree": e,
             "count": max(h.entries)})
    add({"kind": "powers_partition", "nvars": r, "degree": e,
         "parts": [r] * t})
    if e >= 2:
        try:
            parts = greedy_partition(h[e - 1], t, r)
        except ValueError:
            parts = None
        if parts is not None:
            add({"kind": "powers_partition", "nvars": r, "degree": e,
                 "parts": list(parts)})
    add({"kind": "compressed", "nvars": r, "degree": e, "count": t})
    for degree_src in range(e + 1, 2 * e + 3):
        add({"kind": "truncate", "to": e,
             "source": {"kind": "sum_of_powers", "nvars": r,
                        "degree": degree_src, "count": max(h.entries)}})
    if nested and r >= 2 and all(h[j] >= 2 for j in range(1, e + 1)):
        smaller = HVector((1,) + tuple(h[j] - 1 for j in range(1, e + 1)))
        if smaller.codimension == r - 1:
            for base in candidate_recipes(smaller, nested=False):
                add({"kind": "add_variable", "base": base})
    return out


def realize_recipe(recipe: dict, master_seed: int, trials: int,
                   p: int = DEFAULT_PRIME) -> tuple[InverseModule, HProfile]:
    """Run a recipe on seeds derived from the master seed and the recipe
    tag, keeping the trial with the largest profile."""
    tag = recipe_tag(recipe)
    return maximal_profile(
        lambda rng: build_recipe(recipe, rng, p),
        derive_seed(master_seed, "recipe", tag),
        trials,
    )


# -------------------------------------------------------------- the pipeline


def classify(h, budget: Budget | None = None, *, master_seed: int = 0,
             prime: int = DEFAULT_PRIME, exact_rational: bool = False) -> Classification:
    """Decide level / non-level / unknown for a candidate h-vector.

    Non-level verdicts re-check necessary conditions; level verdicts carry
    either an exact criterion or a construction certificate whose replay
    reproduces the ranks.  The result is monotone in the budget: verdicts
    reached at a smaller budget are never revoked at a larger one.
    """
    budget = budget or Budget()
    start = time.monotonic()
    hv = h if isinstance(h, HVector) else HVector(h)

    violated = necessary_condition_violation(hv)
    if violated is not None:
        name, detail = violated
        return Classification(hv, Status.NONLEVEL, condition=name, detail=detail,
                              elapsed=time.monotonic() - start)

    criterion = satisfied_criterion(hv)
    if criterion is not None:
        name, detail = criterion
        cert = Certificate(kind="criterion", criterion=name, detail=detail)
        return Classification(hv, Status.LEVEL, certificate=cert,
                              elapsed=time.monotonic() - start)

    diagnostics: list[str] = []
    trials_used = 0
    recipes = candidate_recipes(hv)
    if not recipes:
        diagnostics.append("no construction recipe matches this h-vector")
    for recipe in recipes:
        if time.monotonic() - start > budget.time_limit:
            diagnostics.append("time budget exhausted before trying all recipes")
            break
        try:
            module, profile = realize_recipe(recipe, master_seed, budget.trials, prime)
        except DependentGeneratorsError:
            trials_used += budget.trials
            diagnostics.append(f"every trial of {recipe_tag(recipe)} degenerated")
            continue
        trials_used += budget.trials
        if profile.h != hv:
            diagnostics.append(
                f"{recipe_tag(recipe)} realized {profile.h}, wanted {hv}"
            )
            continue
        characteristic = "char-p"
        if exact_rational:
            rational = derivative_dims_rational(list(module.generators))
            if tuple(rational) != profile.dims:
                diagnostics.append(
                    f"{recipe_tag(recipe)} ranks differ in characteristic 0"
                )
                continue
            characteristic = "char-0-verified"
        cert = Certificate(kind="construction", recipe=recipe, seed=module.seed,
                           prime=prime, ranks=profile.dims,
                           generators=module_to_text(module),
                           characteristic=characteristic)
        return Classification(hv, Status.LEVEL, certificate=cert,
                              trials_used=trials_used,
                              elapsed=time.monotonic() - start,
                              diagnostics=tuple(diagnostics))
    return Classification(hv, Status.UNKNOWN, trials_used=trials_used,
                          elapsed=time.monotonic() - start,
                          diagnostics=tuple(diagnostics))
