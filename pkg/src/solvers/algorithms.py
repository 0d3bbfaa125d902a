"""
Joint pairing, link selection and power allocation.

co_noma_solve alternates power allocation, Hungarian re-pairing and
S-matrix link selection. noma_solve runs the same loop with every weak
user on its direct link, baseline2_solve pairs by opposite channel rank,
and exhaustive_solve enumerates every (pairing, link vector).
"""

import itertools
from typing import Callable, Optional

from ..links.selection import LinkSelection, build_s_matrix, select_links
from ..pairing.hungarian import build_utility_matrix, hungarian_solve
from ..pairing.matrix import PairingMatrix
from ..power.allocator import PowerSolution, allocate, idle_allocation
from ..rates.instance import NomaInstance
from ..rates.objective import PairWeights, RateReport, weighted_objective
from ..utils.errors import SearchRefused
from ..utils.logger import get_logger
from .report import Method, SolveReport, SolverOptions
from .weights import WeightSet, update_weights


logger = get_logger("solvers")


def baseline2_pairing(pair_count: int) -> PairingMatrix:
    """Best strong user with the worst weak user: sigma(i) = K - 1 - i."""
    return PairingMatrix(tuple(pair_count - 1 - i for i in range(pair_count)))


def _evaluate(
    pairing: PairingMatrix,
    links: LinkSelection,
    weights: PairWeights,
    instance: NomaInstance,
) -> tuple[PowerSolution, RateReport]:
    power = allocate(pairing, links, weights, instance)
    return power, weighted_objective(pairing, links, power, weights, instance)


def _idle_report(method: Method, weights: PairWeights, instance: NomaInstance) -> SolveReport:
    pairing = baseline2_pairing(instance.pair_count)
    links = LinkSelection.direct(instance.pair_count)
    power = idle_allocation(pairing, instance)
    rates = weighted_objective(pairing, links, power, weights, instance)
    logger.warning(
        "NO_SERVICEABLE_USERS",
        f"{method.value}: no strong user has a VLC link, returning an idle allocation",
        method=method.value,
    )
    return SolveReport(
        method=method,
        pairing=pairing,
        links=links,
        power=power,
        rates=rates,
        trace=(rates.weighted,),
        iterations=0,
        converged=True,
        idle=True,
    )


def _link_step(
    pairing: PairingMatrix,
    links: LinkSelection,
    power: PowerSolution,
    weights: PairWeights,
    instance: NomaInstance,
) -> LinkSelection:
    """Re-allocated S-matrix candidates, plus the current links and the blocked-only vector."""
    s_matrix = build_s_matrix(pairing, power, weights, instance)
    blocked = tuple(int(v) for v in (instance.psi_w <= 0))
    return select_links(
        s_matrix,
        pairing,
        power,
        weights,
        instance,
        reallocate=True,
        extra=(links.x, blocked),
    )


def _alternate(
    method: Method,
    instance: NomaInstance,
    weights: PairWeights,
    options: SolverOptions,
    pairing: PairingMatrix,
    links: LinkSelection,
    select: bool,
) -> SolveReport:
    """Block-coordinate ascent; an iteration that lowers the objective is rejected."""
    power, rates = _evaluate(pairing, links, weights, instance)
    trace = [rates.weighted]
    converged = False

    if select:
        start_links = _link_step(pairing, links, power, weights, instance)
        if start_links != links:
            start_power, start_rates = _evaluate(pairing, start_links, weights, instance)
            if start_rates.weighted > rates.weighted:
                links, power, rates = start_links, start_power, start_rates
                trace.append(rates.weighted)

    for _ in range(options.max_iterations):
        utility = build_utility_matrix(power, links, weights, instance)
        new_pairing = hungarian_solve(utility)
        new_links = links
        if select:
            repaired = power.repaired(new_pairing.sigma)
            new_links = _link_step(new_pairing, links, repaired, weights, instance)

        new_power, new_rates = _evaluate(new_pairing, new_links, weights, instance)
        if new_rates.weighted < rates.weighted:
            converged = True
            break

        previous = rates.weighted
        pairing, links, power, rates = new_pairing, new_links, new_power, new_rates
        trace.append(rates.weighted)
        if new_rates.weighted - previous <= options.tolerance * max(abs(previous), 1e-300):
            converged = True
            break

    logger.log_solve(method.value, rates.weighted, len(trace) - 1, converged)
    return SolveReport(
        method=method,
        pairing=pairing,
        links=links,
        power=power,
        rates=rates,
        trace=tuple(trace),
        iterations=len(trace) - 1,
        converged=converged,
    )


def co_noma_solve(
    instance: NomaInstance,
    weights: PairWeights,
    options: Optional[SolverOptions] = None,
    initial: Optional[tuple[PairingMatrix, LinkSelection]] = None,
) -> SolveReport:
    """
    Cooperative NOMA: iterate power allocation, pairing and link selection.

    Args:
        instance: Classified users and channel quantities
        weights: Fairness weights
        options: Stopping rules
        initial: Warm start (pairing, links); defaults to the opposite-rank
            pairing with every weak user on its direct link

    Returns:
        SolveReport whose trace is non-decreasing
    """
    options = options or SolverOptions()
    if not instance.serviceable:
        return _idle_report(Method.CO_NOMA, weights, instance)
    k = instance.pair_count
    pairing, links = initial or (baseline2_pairing(k), LinkSelection.direct(k))
    return _alternate(Method.CO_NOMA, instance, weights, options, pairing, links, select=True)


def noma_solve(
    instance: NomaInstance,
    weights: PairWeights,
    options: Optional[SolverOptions] = None,
) -> SolveReport:
    """Plain NOMA: direct links only, Hungarian pairing and waterfilled power."""
    options = options or SolverOptions()
    if not instance.serviceable:
        return _idle_report(Method.NOMA, weights, instance)
    k = instance.pair_count
    return _alternate(
        Method.NOMA,
        instance,
        weights,
        options,
        baseline2_pairing(k),
        LinkSelection.direct(k),
        select=False,
    )


def baseline2_solve(
    instance: NomaInstance,
    weights: PairWeights,
    options: Optional[SolverOptions] = None,
) -> SolveReport:
    """Opposite-rank pairing; only weak users without a VLC link are relayed."""
    if not instance.serviceable:
        return _idle_report(Method.BASELINE2, weights, instance)
    pairing = baseline2_pairing(instance.pair_count)
    links = LinkSelection(tuple(int(v) for v in (instance.psi_w <= 0)))
    power, rates = _evaluate(pairing, links, weights, instance)
    return SolveReport(
        method=Method.BASELINE2,
        pairing=pairing,
        links=links,
        power=power,
        rates=rates,
        trace=(rates.weighted,),
        iterations=1,
        converged=True,
    )


def exhaustive_solve(
    instance: NomaInstance,
    weights: PairWeights,
    options: Optional[SolverOptions] = None,
) -> SolveReport:
    """
    Best (pairing, link vector) over all K! * 2^K configurations, each with
    the closed-form power allocation.

    Raises:
        SearchRefused: K exceeds options.exhaustive_max_pairs
    """
    options = options or SolverOptions()
    k = instance.pair_count
    if k > options.exhaustive_max_pairs:
        raise SearchRefused(
            "exhaustive search refused for this many pairs",
            pairs=k,
            limit=options.exhaustive_max_pairs,
        )
    if not instance.serviceable:
        return _idle_report(Method.EXHAUSTIVE, weights, instance)

    best = None
    for sigma in itertools.permutations(range(k)):
        pairing = PairingMatrix(sigma)
        for x in itertools.product((0, 1), repeat=k):
            links = LinkSelection(x)
            power, rates = _evaluate(pairing, links, weights, instance)
            if best is None or rates.weighted > best[3].weighted:
                best = (pairing, links, power, rates)

    pairing, links, power, rates = best
    return SolveReport(
        method=Method.EXHAUSTIVE,
        pairing=pairing,
        links=links,
        power=power,
        rates=rates,
        trace=(rates.weighted,),
        iterations=1,
        converged=True,
    )


SOLVERS: dict[Method, Callable[..., SolveReport]] = {
    Method.CO_NOMA: co_noma_solve,
    Method.NOMA: noma_solve,
    Method.BASELINE2: baseline2_solve,
    Method.EXHAUSTIVE: exhaustive_solve,
}


def solve(
    method: Method | str,
    instance: NomaInstance,
    weights: Optional[PairWeights] = None,
    options: Optional[SolverOptions] = None,
) -> SolveReport:
    """Run one method with fixed weights (unit weights by default)."""
    method = Method(method)
    weights = weights or PairWeights.uniform(instance.pair_count)
    return SOLVERS[method](instance, weights, options)


def solve_with_fairness(
    method: Method | str,
    instance: NomaInstance,
    options: Optional[SolverOptions] = None,
) -> tuple[SolveReport, WeightSet]:
    """
    Alternate solving and proportional-fairness weight updates.

    Starts from unit weights; stops when the largest relative weight change
    drops below options.weight_tolerance or after options.max_weight_updates.
    """
    options = options or SolverOptions()
    weight_set = WeightSet.initial(instance.pair_count, options)
    report = solve(method, instance, weight_set.weights, options)
    for update in range(options.max_weight_updates):
        new_set = update_weights(report, weight_set, instance)
        change = weight_set.max_relative_change(new_set)
        weight_set = new_set
        report = solve(method, instance, weight_set.weights, options)
        if change < options.weight_tolerance:
            logger.debug(
                "WEIGHTS_CONVERGED",
                f"{report.method.value}: weights settled after {update + 1} updates",
                updates=update + 1,
            )
            break
    return report, weight_set
