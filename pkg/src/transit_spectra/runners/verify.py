"""Certification runs over exhaustively generated graph populations.

Every run folds a population into a ``MinimumFold`` (population counts, the minimum, all
members within the tie tolerance of it, and the smallest value beyond that), then turns the
fold into a ``VerificationReport`` with named checks. A failed check never raises: it is
recorded with the offending graph6 strings and the report is marked as failed.
"""

import sys
from dataclasses import dataclass, field
from enum import Enum
from functools import reduce
from multiprocessing import Pool
from typing import Iterable, Iterator

from transit_spectra.core import constants as C
from transit_spectra.core.bounds import bound_values, eta, gamma
from transit_spectra.core.constants import MEASURE_SIGMA, MEASURE_TAU, GraphClass, Measure
from transit_spectra.core.families import cocktail_apex, extremal_even_family, star
from transit_spectra.core.graph import (
    DistanceMatrix,
    Graph,
    distance_matrix,
    is_connected,
    transmission_profile,
)
from transit_spectra.core.graph6 import parse_graph6, to_graph6
from transit_spectra.core.schemas import CheckResult, Tolerances, VerificationReport, Witness
from transit_spectra.core.validate import (
    ConvergenceError,
    DomainError,
    NotATreeError,
    NotConnectedError,
    PopulationError,
    UnsupportedOrderError,
    ValidationError,
    validate_distance_matrix,
    validate_profile,
)
from transit_spectra.enumeration.canonical import CanonicalForm, canonical_form
from transit_spectra.enumeration.graphs import connected_graphs
from transit_spectra.enumeration.trees import free_trees
from transit_spectra.spectral.irregularity import (
    distance_spectral_radius,
    dsl_spectral_radius,
    measure_value,
)

EVEN_CASE_NOTE = (
    "The even-order bound (gamma_n = 2, (n-4)-DVDR extremal graphs) is applied to every "
    "even n; its statement is sometimes printed with 'n odd' in both cases."
)


def _log(message: str, verbose: bool) -> None:
    if verbose:
        print(message, file=sys.stderr)


class StructureContext(str, Enum):
    """Which extremal statement a structure check refers to."""

    CONNECTED = "connected"
    TREE_SIGMA = "tree_sigma"
    TREE_TAU = "tree_tau"


@dataclass
class MinimumFold:
    """Commutative fold of (graph, measure value) pairs.

    ``near`` holds every member within ``tie`` of the running minimum; ``runner_up`` is the
    smallest value strictly beyond ``minimum + tie``. Folding in any order, or merging
    partial folds in any order, gives the same final state up to list order.
    """

    tie: float = C.TIE_TOLERANCE
    population: int = 0
    non_transmission_regular: int = 0
    minimum: float | None = None
    near: list[tuple[float, Graph]] = field(default_factory=list)
    runner_up: float | None = None
    failures: list[str] = field(default_factory=list)

    def _beyond(self, value: float) -> None:
        if self.runner_up is None or value < self.runner_up:
            self.runner_up = value

    def offer(self, value: float, g: Graph) -> None:
        """Fold in one non-transmission-regular member."""
        if self.minimum is None or value < self.minimum:
            self.minimum = value
            kept = []
            for entry in self.near:
                if entry[0] <= value + self.tie:
                    kept.append(entry)
                else:
                    self._beyond(entry[0])
            self.near = kept
            self.near.append((value, g))
        elif value <= self.minimum + self.tie:
            self.near.append((value, g))
        else:
            self._beyond(value)

    def add(self, g: Graph, measure: Measure, perron_tol: float = C.PERRON_TOLERANCE) -> None:
        """Evaluate ``measure`` on ``g`` and fold it in; solver failures are recorded."""
        self.population += 1
        try:
            _, value = measure_value(g, measure, perron_tol)
        except (ConvergenceError, DomainError) as exc:
            self.non_transmission_regular += 1
            self.failures.append(f"{to_graph6(g)}: {exc}")
            return
        if value is None:
            return
        self.non_transmission_regular += 1
        self.offer(value, g)

    def merge(self, other: "MinimumFold") -> "MinimumFold":
        """Absorb a partial fold of a disjoint sub-population."""
        self.population += other.population
        self.non_transmission_regular += other.non_transmission_regular
        self.failures.extend(other.failures)
        for value, g in other.near:
            self.offer(value, g)
        # other.runner_up > other.minimum + tie >= merged minimum + tie
        if other.runner_up is not None:
            self._beyond(other.runner_up)
        return self

    def witnesses(self) -> list[tuple[CanonicalForm, float, Graph]]:
        """Members attaining the minimum, one per isomorphism class, sorted by canonical form.

        Within a class the member with the smallest graph6 string is kept.
        """
        best: dict[CanonicalForm, tuple[str, float, Graph]] = {}
        for value, g in self.near:
            form = canonical_form(g)
            code = to_graph6(g)
            if form not in best or code < best[form][0]:
                best[form] = (code, value, g)
        return [(form, best[form][1], best[form][2]) for form in sorted(best)]


def _population(graph_class: GraphClass, n: int, branch: int, branches: int) -> Iterator[Graph]:
    if graph_class == "trees":
        for index, t in enumerate(free_trees(n)):
            if index % branches == branch:
                yield t
    else:
        yield from connected_graphs(n, branch=branch, branches=branches)


def _fold_branch(
    task: tuple[GraphClass, int, tuple[Measure, ...], float, float, int, int],
) -> dict[Measure, MinimumFold]:
    """Pool worker: fold one branch of a population for each requested measure."""
    graph_class, n, measures, tie, perron_tol, branch, branches = task
    folds = {m: MinimumFold(tie=tie) for m in measures}
    for g in _population(graph_class, n, branch, branches):
        for m in measures:
            folds[m].add(g, m, perron_tol)
    return folds


def fold_population(
    graph_class: GraphClass,
    n: int,
    measures: tuple[Measure, ...],
    tolerances: Tolerances,
    jobs: int = 1,
) -> dict[Measure, MinimumFold]:
    """Fold the whole population, in parallel when ``jobs > 1``."""
    branches = max(1, jobs)
    tasks = [
        (graph_class, n, measures, tolerances.tie, tolerances.perron, b, branches)
        for b in range(branches)
    ]
    if branches == 1:
        partials = [_fold_branch(tasks[0])]
    else:
        with Pool(processes=jobs) as pool:
            partials = pool.map(_fold_branch, tasks)

    def combine(a: dict[Measure, MinimumFold], b: dict[Measure, MinimumFold]):
        return {m: a[m].merge(b[m]) for m in measures}

    return reduce(combine, partials)


def _invariant_violation(d: DistanceMatrix) -> str | None:
    """First violated distance or transmission invariant, or None."""
    try:
        validate_distance_matrix(d)
        validate_profile(transmission_profile(d))
    except ValidationError as exc:
        return str(exc)
    return None


def check_extremal_structure(
    g: Graph,
    context: StructureContext,
    tolerances: Tolerances | None = None,
) -> dict[str, CheckResult]:
    """Transmission and Perron-vector structure of a claimed extremal graph.

    With e = gamma_n (connected) or eta_n (trees) and b the matching bound, checks that
    n-1 vertices have D_max = n-1+e, one has D_min = n-1, the gap n*D_max - 2W equals e,
    the Perron vector (of Q, or of D for the tree sigma case) has n-1 maximal coordinates
    with x_max/x_min = 1/(1-b), and non-apex vertices satisfy d(u) = 2(n-1) - D_u.
    The distance matrix and transmission profile invariants are recorded as well.

    Raises:
        UnsupportedOrderError: If n < 3
        NotConnectedError: If ``g`` is disconnected
    """
    tol = tolerances or Tolerances()
    n = g.order
    if n < C.BOUNDS_MIN_ORDER:
        raise UnsupportedOrderError(f"Structure checks need n >= {C.BOUNDS_MIN_ORDER}, got {n}")

    d = distance_matrix(g)
    profile = transmission_profile(d)
    bounds = bound_values(n)
    if context == StructureContext.CONNECTED:
        excess, bound = gamma(n), bounds.tau_n
        pair = dsl_spectral_radius(g, tol.perron)
    elif context == StructureContext.TREE_SIGMA:
        excess, bound = eta(n), bounds.sigma_tree
        pair = distance_spectral_radius(g, tol.perron)
    else:
        excess, bound = eta(n), bounds.tau_tree
        pair = dsl_spectral_radius(g, tol.perron)

    t = profile.transmissions
    expected_dmax = n - 1 + excess
    checks: dict[str, CheckResult] = {}

    violation = _invariant_violation(d)
    checks["distance_invariants"] = CheckResult(
        passed=violation is None, detail=violation or "hold"
    )

    count = len(profile.argmax)
    checks["dmax_count"] = CheckResult(
        passed=count == n - 1, detail=f"{count} vertices at D_max, expected {n - 1}"
    )
    checks["dmax_value"] = CheckResult(
        passed=profile.dmax == expected_dmax,
        detail=f"D_max = {profile.dmax}, expected {expected_dmax}",
    )
    minimal = [v for v in range(n) if t[v] == profile.dmin]
    checks["dmin_value"] = CheckResult(
        passed=profile.dmin == n - 1 and len(minimal) == 1,
        detail=f"D_min = {profile.dmin} at {minimal}, expected {n - 1} at one vertex",
    )
    checks["gap"] = CheckResult(
        passed=profile.gap == excess, detail=f"n*D_max - 2W = {profile.gap}, expected {excess}"
    )

    x = pair.vector
    at_max = int((x >= pair.x_max * (1.0 - tol.structure)).sum())
    checks["perron_max_count"] = CheckResult(
        passed=at_max == n - 1, detail=f"{at_max} maximal Perron coordinates, expected {n - 1}"
    )
    expected_ratio = 1.0 / (1.0 - bound)
    checks["perron_ratio"] = CheckResult(
        passed=abs(pair.ratio - expected_ratio) <= tol.structure * max(1.0, expected_ratio),
        detail=f"x_max/x_min = {pair.ratio:.12g}, expected {expected_ratio:.12g}",
    )

    offenders = [u for u in profile.argmax if g.degree(u) != 2 * (n - 1) - t[u]]
    checks["degree_identity"] = CheckResult(
        passed=not offenders,
        detail=f"d(u) != 2(n-1) - D_u at {offenders}" if offenders else "holds",
    )
    return checks


def _require_tree(t: Graph) -> None:
    if not is_connected(t) or t.edge_count != t.order - 1:
        raise NotATreeError(
            f"Graph with {t.order} vertices and {t.edge_count} edges is not a tree"
        )


def leaf_gap_check(t: Graph) -> bool:
    """True iff D_leaf - D_support = n - 2 on every leaf edge.

    Raises:
        NotATreeError: If ``t`` is not a tree
        UnsupportedOrderError: If n < 2
    """
    if t.order < 2:
        raise UnsupportedOrderError("Leaf edges need at least 2 vertices")
    _require_tree(t)
    transmissions = transmission_profile(distance_matrix(t)).transmissions
    n = t.order
    for v in range(n):
        if t.degree(v) == 1:
            (u,) = t.neighbors(v)
            if transmissions[v] - transmissions[u] != n - 2:
                return False
    return True


def _witness_entries(fold: MinimumFold) -> tuple[list[Witness], list[CanonicalForm]]:
    entries = fold.witnesses()
    witnesses = [
        Witness(graph6=to_graph6(g), canonical=form.to_graph6(), value=value)
        for form, value, g in entries
    ]
    return witnesses, [form for form, _, _ in entries]


def _base_report(
    n: int, graph_class: GraphClass, measure: Measure, fold: MinimumFold, bound: float | None
) -> tuple[VerificationReport, list[CanonicalForm]]:
    witnesses, forms = _witness_entries(fold)
    report = VerificationReport(
        order=n,
        graph_class=graph_class,
        measure=measure,
        population=fold.population,
        non_transmission_regular=fold.non_transmission_regular,
        minimum=fold.minimum,
        bound=bound,
        gap_to_bound=(
            fold.minimum - bound if fold.minimum is not None and bound is not None else None
        ),
        witnesses=witnesses,
        runner_up=fold.runner_up,
        margin=(
            fold.runner_up - fold.minimum
            if fold.runner_up is not None and fold.minimum is not None
            else None
        ),
    )
    report.checks["solver"] = CheckResult(
        passed=not fold.failures,
        detail=f"{len(fold.failures)} eigensolver failures" if fold.failures else "all converged",
    )
    report.failures.extend(fold.failures)
    return report, forms


def _bound_checks(report: VerificationReport, tolerances: Tolerances, asserted: bool) -> None:
    if report.minimum is None or report.bound is None:
        report.checks["bound_attained"] = CheckResult(
            passed=False, detail="no non-transmission-regular member", asserted=asserted
        )
        return
    report.checks["bound_respected"] = CheckResult(
        passed=report.minimum >= report.bound - tolerances.bound,
        detail=f"minimum {report.minimum!r} vs bound {report.bound!r}",
        asserted=asserted,
    )
    report.checks["bound_attained"] = CheckResult(
        passed=abs(report.minimum - report.bound) <= tolerances.bound,
        detail=f"|minimum - bound| = {abs(report.minimum - report.bound):.3e}",
        asserted=asserted,
    )


def _margin_check(report: VerificationReport, tolerances: Tolerances) -> None:
    if report.runner_up is None:
        report.checks["strict_margin"] = CheckResult(
            passed=True, detail="every member attains the minimum"
        )
        return
    report.checks["strict_margin"] = CheckResult(
        passed=report.margin > tolerances.tie,
        detail=f"runner-up exceeds the minimum by {report.margin:.6e}",
    )


def _witness_set_check(
    report: VerificationReport,
    forms: list[CanonicalForm],
    expected: list[Graph],
    asserted: bool = True,
    name: str = "witness_set",
) -> None:
    expected_forms = {canonical_form(g): g for g in expected}
    extra = [w.graph6 for w, f in zip(report.witnesses, forms) if f not in expected_forms]
    missing = [f.to_graph6() for f in sorted(expected_forms) if f not in set(forms)]
    passed = not extra and not missing
    detail = f"{len(forms)} witnesses, {len(expected_forms)} expected"
    if extra:
        detail += f"; unexpected {extra}"
    if missing:
        detail += f"; missing {missing}"
    report.checks[name] = CheckResult(passed=passed, detail=detail, asserted=asserted)


def _structure_checks(
    report: VerificationReport, context: StructureContext, tolerances: Tolerances
) -> None:
    for witness in report.witnesses:
        g = parse_graph6(witness.canonical)
        for name, check in check_extremal_structure(g, context, tolerances).items():
            key = f"structure:{witness.canonical}:{name}"
            report.checks[key] = check


def _population_check(report: VerificationReport, published: dict[int, int]) -> None:
    expected = published[report.order]
    report.checks["population_count"] = CheckResult(
        passed=report.population == expected,
        detail=f"{report.population} generated, {expected} published",
    )


def _finish(report: VerificationReport) -> VerificationReport:
    for name, check in report.checks.items():
        if check.asserted and not check.passed:
            report.failures.append(f"{name}: {check.detail}")
    report.passed = all(check.passed for check in report.checks.values() if check.asserted)
    return report


def verify_theorem1(
    n: int,
    measure: Measure = MEASURE_TAU,
    tolerances: Tolerances | None = None,
    jobs: int = 1,
    verbose: bool = False,
) -> VerificationReport:
    """Certify the minimum of tau over connected non-transmission-regular graphs.

    For tau the minimum must equal tau_n, and the witnesses must be exactly K_(1,2,...,2)
    (odd n) or the (n-4)-DVDR graphs (even n), compared by canonical form. With
    ``measure="sigma"`` the minimum and witnesses are reported and compared against the
    same family without asserting anything.

    Raises:
        UnsupportedOrderError: If n is outside 4..9
    """
    if not C.THEOREM1_MIN_ORDER <= n <= C.THEOREM1_MAX_ORDER:
        raise UnsupportedOrderError(
            f"Connected-graph verification supports n in "
            f"{C.THEOREM1_MIN_ORDER}..{C.THEOREM1_MAX_ORDER}, got {n}"
        )
    tol = tolerances or Tolerances()

    _log(f"Enumerating connected graphs on {n} vertices ({jobs} jobs)...", verbose)
    fold = fold_population("connected", n, (measure,), tol, jobs)[measure]
    _log(
        f"Population {fold.population}, {fold.non_transmission_regular} not transmission-regular",
        verbose,
    )

    asserted = measure == MEASURE_TAU
    bound = bound_values(n).tau_n
    report, forms = _base_report(n, "connected", measure, fold, bound if asserted else None)
    expected = [cocktail_apex(n)] if n % 2 else extremal_even_family(n)

    _population_check(report, C.CONNECTED_GRAPH_COUNTS)
    if asserted:
        _bound_checks(report, tol, asserted=True)
        _margin_check(report, tol)
        _witness_set_check(report, forms, expected)
        _structure_checks(report, StructureContext.CONNECTED, tol)
    else:
        _witness_set_check(
            report, forms, expected, asserted=False, name="matches_tau_extremal_family"
        )
        report.notes.append(
            "sigma over connected graphs is reported empirically; no closed form is asserted."
        )
    if n % 2 == 0:
        report.notes.append(EVEN_CASE_NOTE)

    _finish(report)
    _log(f"{'✓' if report.passed else '✗'} minimum {report.minimum!r}", verbose)
    return report


def verify_theorem2(
    n: int,
    tolerances: Tolerances | None = None,
    jobs: int = 1,
    verbose: bool = False,
) -> tuple[VerificationReport, VerificationReport]:
    """Certify the sigma and tau minima over trees; both are attained only by the star.

    Raises:
        UnsupportedOrderError: If n is outside 3..14
    """
    if not C.THEOREM2_MIN_ORDER <= n <= C.THEOREM2_MAX_ORDER:
        raise UnsupportedOrderError(
            f"Tree verification supports n in "
            f"{C.THEOREM2_MIN_ORDER}..{C.THEOREM2_MAX_ORDER}, got {n}"
        )
    tol = tolerances or Tolerances()

    _log(f"Enumerating free trees on {n} vertices...", verbose)
    folds = fold_population("trees", n, (MEASURE_SIGMA, MEASURE_TAU), tol, jobs)
    bounds = bound_values(n)

    reports = []
    for measure, bound, context in (
        (MEASURE_SIGMA, bounds.sigma_tree, StructureContext.TREE_SIGMA),
        (MEASURE_TAU, bounds.tau_tree, StructureContext.TREE_TAU),
    ):
        report, forms = _base_report(n, "trees", measure, folds[measure], bound)
        _population_check(report, C.FREE_TREE_COUNTS)
        _bound_checks(report, tol, asserted=True)
        _margin_check(report, tol)
        _witness_set_check(report, forms, [star(n)])
        _structure_checks(report, context, tol)
        reports.append(report)

    sigma_report, tau_report = reports
    if sigma_report.minimum is not None and tau_report.minimum is not None:
        tau_report.checks["sigma_below_tau"] = CheckResult(
            passed=sigma_report.minimum < tau_report.minimum,
            detail=f"min sigma {sigma_report.minimum!r} vs min tau {tau_report.minimum!r}",
        )

    for report in reports:
        _finish(report)
        mark = "✓" if report.passed else "✗"
        _log(f"{mark} {report.measure} minimum {report.minimum!r}", verbose)
    return sigma_report, tau_report


def scan_stream(
    graphs: Iterable[Graph],
    measure: Measure = MEASURE_TAU,
    tolerances: Tolerances | None = None,
    verbose: bool = False,
) -> VerificationReport:
    """Minimum and witnesses of ``measure`` over an externally supplied population.

    For tau the connected-graph bound is checked as a lower bound; no witness set is
    asserted.

    Raises:
        PopulationError: On an empty stream or mixed orders
        NotConnectedError: On a disconnected member
    """
    tol = tolerances or Tolerances()
    fold = MinimumFold(tie=tol.tie)
    order: int | None = None
    invalid: list[str] = []

    for g in graphs:
        if order is None:
            order = g.order
        elif g.order != order:
            raise PopulationError(f"Mixed orders in stream: {order} and {g.order}")
        if not is_connected(g):
            raise NotConnectedError(f"Stream member {to_graph6(g)} is not connected")
        violation = _invariant_violation(distance_matrix(g))
        if violation is not None:
            invalid.append(f"{to_graph6(g)}: {violation}")
        fold.add(g, measure, tol.perron)
        if verbose and fold.population % 10000 == 0:
            _log(f"  {fold.population} graphs scanned...", verbose)

    if order is None:
        raise PopulationError("Empty graph stream")

    bound = None
    if measure == MEASURE_TAU and order >= C.BOUNDS_MIN_ORDER:
        bound = bound_values(order).tau_n
    report, _ = _base_report(order, "stream", measure, fold, bound)
    report.checks["distance_invariants"] = CheckResult(
        passed=not invalid,
        detail=f"violated by {invalid}" if invalid else "hold for every member",
    )
    if bound is not None and report.minimum is not None:
        report.checks["bound_respected"] = CheckResult(
            passed=report.minimum >= bound - tol.bound,
            detail=f"minimum {report.minimum!r} vs bound {bound!r}",
        )
    return _finish(report)
