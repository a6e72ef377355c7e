"""Exhaustive search for split-bundle K3 families of a given genus.

Candidates are evaluated in worker threads; the result is sorted canonically
afterwards, so the output does not depend on completion order.
"""

import itertools
from functools import partial
from typing import Iterator, Optional

import anyio

from src.char_classes import SplitBundle, det_bundle
from src.chow_ring import AmbientSpace, make_ambient
from src.common.log import get_logger
from src.common.settings import get_settings
from src.k3_families.certificate import franchetta_certificate
from src.k3_families.exceptions import SearchBoundsError
from src.k3_families.geometry import anticanonical, is_connected_k3, polarization_genus, twist
from src.k3_families.models import CaseLabel, FamilySpec
from src.k3_families.reference import reference_cases

logger = get_logger("k3_families.search")


def search_ambients(max_n: int, include_general_products: bool = False) -> list[AmbientSpace]:
    if not include_general_products:
        return [make_ambient([1, n]) for n in range(2, max_n + 1)]
    return [
        make_ambient([m, n])
        for n in range(1, max_n + 1)
        for m in range(1, n + 1)
        if m + n >= 3 and m + n <= max_n + 1
    ]


def candidate_bundles(ambient: AmbientSpace, max_deg: int) -> Iterator[SplitBundle]:
    rank = ambient.dimension - 2
    if rank < 1:
        return
    target = anticanonical(ambient)
    degrees = [d for d in itertools.product(range(max_deg + 1), repeat=ambient.factor_count) if any(d)]
    # combinations_with_replacement over a sorted list yields each multiset once
    for combo in itertools.combinations_with_replacement(degrees, rank):
        bundle = SplitBundle.of(*combo)
        if det_bundle(bundle) == target:
            yield bundle


def evaluate_candidate(
    genus: int, ambient: AmbientSpace, bundle: SplitBundle, max_deg: int
) -> list[FamilySpec]:
    if not is_connected_k3(ambient, bundle):
        return []
    if not franchetta_certificate(ambient, bundle).passed:
        return []
    case = reference_cases().matching(ambient, bundle)
    found = []
    for a in range(1, max_deg + 1):
        polarization = twist(ambient, a)
        if polarization_genus(ambient, bundle, polarization) != genus:
            continue
        found.append(
            FamilySpec(
                ambient=ambient,
                bundle=bundle,
                polarization=polarization,
                label=case.label if case else CaseLabel.OTHER,
                description=case.description if case else None,
            )
        )
    return found


async def search_families_async(
    genus: int,
    max_n: int,
    max_deg: int,
    workers: Optional[int] = None,
    include_general_products: bool = False,
) -> list[FamilySpec]:
    if genus < 2:
        raise SearchBoundsError(f"genus must be >= 2, got {genus}")
    if max_n < 1 or max_deg < 1:
        raise SearchBoundsError(f"search bounds must be >= 1, got max_n={max_n}, max_deg={max_deg}")

    limiter = anyio.CapacityLimiter(workers or get_settings().search_workers)
    results: list[FamilySpec] = []

    async def run(ambient: AmbientSpace, bundle: SplitBundle) -> None:
        found = await anyio.to_thread.run_sync(
            partial(evaluate_candidate, genus, ambient, bundle, max_deg), limiter=limiter
        )
        results.extend(found)

    candidates = 0
    async with anyio.create_task_group() as tg:
        for ambient in search_ambients(max_n, include_general_products):
            for bundle in candidate_bundles(ambient, max_deg):
                candidates += 1
                tg.start_soon(run, ambient, bundle)

    unique = {spec.sort_key(): spec for spec in results}
    ordered = [unique[key] for key in sorted(unique)]
    logger.info(f"search g={genus}: {candidates} candidates, {len(ordered)} families")
    return ordered


def search_families(
    genus: int,
    max_n: int,
    max_deg: int,
    workers: Optional[int] = None,
    include_general_products: bool = False,
) -> list[FamilySpec]:
    return anyio.run(
        partial(
            search_families_async,
            genus,
            max_n,
            max_deg,
            workers=workers,
            include_general_products=include_general_products,
        )
    )
