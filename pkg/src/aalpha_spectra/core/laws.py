"""Executable checks of the A_alpha spectral and energy laws."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from functools import partial
from itertools import combinations_with_replacement
from logging import getLogger

import numpy as np

from .constants import (
    DEFAULT_ALPHA_GRID,
    DEFAULT_TOL,
    DEFAULT_VERIFY_BUDGET,
    DIVISIBILITY_MAX_N,
    ENERGY_TRACE_RTOL,
    SPECTRUM_MAX_N,
    SPECTRUM_MOMENT_RTOL,
    TREE_ENUMERATION_MAX_N,
)
from .digraph import Digraph, closed_walks_2, is_simple_arcs_only, is_symmetric
from .errors import ConvergenceError, FamilySpecError, SizeLimitError
from .families import FamilyKind, FamilySpec, HungTree, generate, hang_trees
from .linalg import (
    PolynomialR,
    Scalar,
    build_a_alpha,
    char_poly,
    check_alpha,
    perron_radius,
    poly_divide,
)
from .models import LawFailure, RadiusCertificate, VerificationReport
from .scc import GnmStructure, NotMember, classify_gnm, require_gnm, tarjan_scc
from .search import gnm_instances, random_digraphs
from .serialization import format_digraph
from .spectra import (
    energy,
    energy_closed_form,
    exact_trace_of_square,
    second_moment,
    spectral_radius,
    spectral_radius_blocks,
    spectrum_small,
    sum_squared_outdegrees,
)
from .transforms import (
    alpha_threshold,
    energy_g_double_prime,
    energy_g_prime,
    energy_g_triple_prime,
    g_prime_radius_upper_bound,
    is_in_tree_hung,
    is_max_star_hung,
    to_g_double_prime,
    to_g_prime,
    to_g_triple_prime,
)
from .trees import check_tree_size, is_in_tree, is_out_star, oriented_tree_at, tree_count

logger = getLogger(__name__)

Instance = Digraph | GnmStructure


class LawId(StrEnum):
    """Identifiers of the executable laws."""

    ROW_SUM_BOUNDS = "L2.1"
    MATRIX_MONOTONICITY = "L2.3"
    SUBDIGRAPH_MONOTONICITY = "L2.4"
    TREE_EIGENVALUES = "T2.5"
    SINGLETON_EIGENVALUES = "C2.6"
    OUT_STAR_RADIUS = "T2.7"
    GLOBAL_STAR_RADIUS = "T2.8"
    MAXIMAL_RADIUS = "T2.9"
    ENERGY_IDENTITY = "L3.1"
    SIMPLE_SYMMETRIC_ENERGY = "T3.2"
    FAMILY_ENERGIES = "EX3.3"
    TREE_ENERGY_EXTREMES = "L3.4"
    OUT_STAR_ENERGY = "T3.5"
    GLOBAL_STAR_ENERGY = "T3.6"
    IN_TREE_ENERGY = "T3.7"
    EXTREMAL_ENERGY = "T3.8"
    ENERGY_BOUNDS = "C3.9"
    SPECIAL_FAMILY_BOUNDS = "C3.10"


RADIUS_LAWS = (LawId.OUT_STAR_RADIUS, LawId.GLOBAL_STAR_RADIUS, LawId.MAXIMAL_RADIUS)
_SINGLE_SIZE_KINDS = (FamilyKind.PATH, FamilyKind.OUT_STAR, FamilyKind.IN_STAR, FamilyKind.SYM_STAR)
ENERGY_LAWS = (
    LawId.ENERGY_IDENTITY,
    LawId.SIMPLE_SYMMETRIC_ENERGY,
    LawId.OUT_STAR_ENERGY,
    LawId.GLOBAL_STAR_ENERGY,
    LawId.IN_TREE_ENERGY,
    LawId.EXTREMAL_ENERGY,
    LawId.ENERGY_BOUNDS,
)


@dataclass
class _Tally:
    """Mutable accumulator behind a ``VerificationReport``."""

    law_id: LawId
    tolerances: dict[str, float] = field(default_factory=dict)
    cases: int = 0
    failures: list[LawFailure] = field(default_factory=list)
    skipped: int = 0
    unconverged: int = 0

    def expect(
        self,
        condition: bool,
        instance: Digraph | str,
        alpha: Fraction | None,
        expected: object,
        actual: object,
        detail: str = "",
    ) -> None:
        if condition:
            return
        text = instance if isinstance(instance, str) else format_digraph(instance)
        self.failures.append(LawFailure(text, alpha, str(expected), str(actual), detail))
        logger.debug("%s failed at alpha=%s: %s", self.law_id.value, alpha, detail)

    def report(self) -> VerificationReport:
        logger.info(
            "%s: %d cases, %d failures, %d skipped, %d unconverged",
            self.law_id.value,
            self.cases,
            len(self.failures),
            self.skipped,
            self.unconverged,
        )
        return VerificationReport(
            law_id=self.law_id.value,
            cases_checked=self.cases,
            failures=tuple(self.failures),
            tolerances=dict(self.tolerances),
            skipped=self.skipped,
            unconverged=self.unconverged,
        )


def merge_reports(reports: Sequence[VerificationReport]) -> VerificationReport:
    """Combine partial reports of one law, keeping failures in order.

    Args:
        reports: Reports sharing a law id, at least one.

    Returns:
        The combined report.
    """
    first = reports[0]
    return VerificationReport(
        law_id=first.law_id,
        cases_checked=sum(r.cases_checked for r in reports),
        failures=tuple(f for r in reports for f in r.failures),
        tolerances=dict(first.tolerances),
        skipped=sum(r.skipped for r in reports),
        unconverged=sum(r.unconverged for r in reports),
    )


def _grid(alpha_grid: Iterable[Scalar]) -> tuple[Fraction, ...]:
    return tuple(check_alpha(alpha) for alpha in alpha_grid)


def _graph(item: Instance) -> Digraph:
    return item.g if isinstance(item, GnmStructure) else item


def _structure(item: Instance) -> GnmStructure:
    return item if isinstance(item, GnmStructure) else require_gnm(item)


def _with_threshold(grid: tuple[Fraction, ...], s: GnmStructure) -> tuple[Fraction, ...]:
    threshold = alpha_threshold(s)
    if threshold.degenerate or threshold.value in grid:
        return grid
    return (*grid, threshold.value)


def _slack(tol: float, *certificates: RadiusCertificate) -> float:
    return 2.0 * tol * max(1.0, *(abs(c.upper) for c in certificates))


def _dominates(big: RadiusCertificate, small: RadiusCertificate, tol: float) -> bool:
    return big.lower >= small.upper - _slack(tol, big, small)


def _agree(a: RadiusCertificate, b: RadiusCertificate, tol: float) -> bool:
    slack = _slack(tol, a, b)
    return a.lower <= b.upper + slack and b.lower <= a.upper + slack


def _enclosure(c: RadiusCertificate) -> str:
    return f"[{c.lower!r}, {c.upper!r}]"


def _check_factor(
    tally: _Tally,
    g: Digraph,
    alpha: Fraction,
    vertices: Sequence[int],
) -> None:
    polynomial = char_poly(build_a_alpha(g, alpha))
    divisor = PolynomialR.from_roots(alpha * g.out_deg[v] for v in vertices)
    _, remainder = poly_divide(polynomial, divisor)
    tally.cases += 1
    tally.expect(
        remainder.is_zero,
        g,
        alpha,
        "remainder 0",
        remainder,
        f"prod(x - alpha*d+) over {len(vertices)} vertices does not divide {polynomial}",
    )


def verify_theorem_2_5(
    instances: Iterable[Instance],
    alpha_grid: Iterable[Scalar] = DEFAULT_ALPHA_GRID,
) -> VerificationReport:
    """Check that ``alpha * d+`` is an eigenvalue for every vertex off the strong component.

    The witness is exact: the product of ``(x - alpha * d_v+)`` over non-core vertices must
    divide the characteristic polynomial with zero remainder.

    Args:
        instances: G_n^m members with ``n <= 12``.
        alpha_grid: Parameters to check.

    Returns:
        Report with one case per instance and alpha.

    Raises:
        NotMemberError: If an instance is not in G_n^m.
        SizeLimitError: If an instance has more than 12 vertices.
    """
    grid = _grid(alpha_grid)
    tally = _Tally(LawId.TREE_EIGENVALUES)
    for item in instances:
        s = _structure(item)
        if s.n > DIVISIBILITY_MAX_N:
            raise SizeLimitError(f"divisibility checks support n <= {DIVISIBILITY_MAX_N}")
        for alpha in grid:
            _check_factor(tally, s.g, alpha, s.off_core_vertices)
    return tally.report()


def verify_singleton_eigenvalues(
    instances: Iterable[Instance],
    alpha_grid: Iterable[Scalar] = DEFAULT_ALPHA_GRID,
) -> VerificationReport:
    """Divisibility witness for vertices forming singleton components of any digraph.

    Args:
        instances: Digraphs with ``n <= 12``.
        alpha_grid: Parameters to check.

    Returns:
        Report with one case per instance and alpha.

    Raises:
        SizeLimitError: If an instance has more than 12 vertices.
    """
    grid = _grid(alpha_grid)
    tally = _Tally(LawId.SINGLETON_EIGENVALUES)
    for item in instances:
        g = _graph(item)
        if g.n > DIVISIBILITY_MAX_N:
            raise SizeLimitError(f"divisibility checks support n <= {DIVISIBILITY_MAX_N}")
        singletons = tarjan_scc(g).singleton_vertices
        for alpha in grid:
            _check_factor(tally, g, alpha, singletons)
    return tally.report()


def verify_radius_orderings(
    instances: Iterable[Instance],
    alpha_grid: Iterable[Scalar] = DEFAULT_ALPHA_GRID,
    tol: float = DEFAULT_TOL,
    laws: Sequence[LawId] = RADIUS_LAWS,
) -> list[VerificationReport]:
    """Check the certified radius orderings between a digraph and its star rewirings.

    For each instance and alpha (the grid plus the instance's threshold):

    * per-vertex out-stars never decrease the radius, and their radius respects the row-sum
      bound ``max_i (d_i* + alpha * (n_i - 1))``;
    * the global out-star dominates the per-vertex out-stars for alpha at or above the
      threshold, and matches them at alpha 0; below the threshold the case is skipped;
    * the global out-star dominates the digraph itself whenever the threshold admits alpha.

    Enclosures are compared with a slack of ``2 * tol * max(1, upper)``.

    Args:
        instances: G_n^m members.
        alpha_grid: Parameters to check.
        tol: Certificate tolerance.
        laws: Subset of the three radius laws to report.

    Returns:
        One report per requested law, in the order given.

    Raises:
        NotMemberError: If an instance is not in G_n^m.
    """
    grid = _grid(alpha_grid)
    tolerances = {"tol": tol, "slack": 2.0 * tol}
    tallies = {law: _Tally(law, dict(tolerances)) for law in laws if law in RADIUS_LAWS}
    for item in instances:
        s = _structure(item)
        prime = to_g_prime(s).result
        double = to_g_double_prime(s).result
        threshold = alpha_threshold(s)
        for alpha in _with_threshold(grid, s):
            rho = spectral_radius(s.g, alpha, tol)
            rho_prime = spectral_radius(prime, alpha, tol)
            rho_double = spectral_radius(double, alpha, tol)
            if not (rho.converged and rho_prime.converged and rho_double.converged):
                for pending in tallies.values():
                    pending.unconverged += 1
                continue
            if tally := tallies.get(LawId.OUT_STAR_RADIUS):
                tally.cases += 1
                tally.expect(
                    _dominates(rho_prime, rho, tol),
                    s.g,
                    alpha,
                    f"rho(G') >= {_enclosure(rho)}",
                    _enclosure(rho_prime),
                )
                bound = float(g_prime_radius_upper_bound(s, alpha))
                tally.expect(
                    rho_prime.lower <= bound + _slack(tol, rho_prime),
                    s.g,
                    alpha,
                    f"rho(G') <= {bound!r}",
                    _enclosure(rho_prime),
                    "row-sum bound",
                )
            if tally := tallies.get(LawId.GLOBAL_STAR_RADIUS):
                if alpha == 0:
                    tally.cases += 1
                    tally.expect(
                        _agree(rho_double, rho_prime, tol),
                        s.g,
                        alpha,
                        f"rho(G'') == {_enclosure(rho_prime)}",
                        _enclosure(rho_double),
                    )
                elif threshold.admits(alpha):
                    tally.cases += 1
                    tally.expect(
                        _dominates(rho_double, rho_prime, tol),
                        s.g,
                        alpha,
                        f"rho(G'') >= {_enclosure(rho_prime)}",
                        _enclosure(rho_double),
                        f"threshold {threshold.value}",
                    )
                else:
                    tally.skipped += 1
            if tally := tallies.get(LawId.MAXIMAL_RADIUS):
                if threshold.admits(alpha):
                    tally.cases += 1
                    tally.expect(
                        _dominates(rho_double, rho, tol),
                        s.g,
                        alpha,
                        f"rho(G'') >= {_enclosure(rho)}",
                        _enclosure(rho_double),
                    )
                else:
                    tally.skipped += 1
    return [tallies[law].report() for law in laws if law in tallies]


def energy_bounds(s: GnmStructure, alpha: Scalar) -> tuple[Fraction, Fraction]:
    """Two-sided energy bound for a G_n^m member in terms of its core.

    Args:
        s: Structure of a G_n^m member.
        alpha: Interpolation parameter.

    Returns:
        ``(lower, upper)`` with
        ``lower = alpha^2 * (sum d_i*^2 + n - m) + (1 - alpha)^2 * c2`` and
        ``upper = alpha^2 * ((d_1* + n - m)^2 + sum_{i>=2} d_i*^2) + (1 - alpha)^2 * c2``.
    """
    a = check_alpha(alpha)
    degrees = s.core_out_deg_sorted
    walks = (1 - a) ** 2 * closed_walks_2(Digraph(s.n, s.core_arcs))
    extra = s.n - s.m
    rest = sum(d * d for d in degrees[1:])
    lower = a * a * (degrees[0] ** 2 + rest + extra) + walks
    upper = a * a * ((degrees[0] + extra) ** 2 + rest) + walks
    return lower, upper


def _iff(left: bool, right: bool) -> bool:
    return left == right


def _check_spectral_moment(tally: _Tally, g: Digraph, alpha: Fraction, e: Fraction) -> None:
    try:
        moment = second_moment(spectrum_small(g, alpha).eigenvalues)
    except ConvergenceError as exc:
        tally.unconverged += 1
        logger.warning("Spectrum of %d-vertex digraph unconverged: %s", g.n, exc)
        return
    target = float(e)
    tally.expect(
        abs(moment - target) <= SPECTRUM_MOMENT_RTOL * max(1.0, abs(target)),
        g,
        alpha,
        e,
        repr(moment),
        "closed form vs sum of squared eigenvalues",
    )


def verify_energy_laws(
    instances: Iterable[Instance],
    alpha_grid: Iterable[Scalar] = DEFAULT_ALPHA_GRID,
    laws: Sequence[LawId] = ENERGY_LAWS,
) -> list[VerificationReport]:
    """Check the exact energy identities, orderings and extremal characterisations.

    The identity and the symmetric/simple closed forms apply to every digraph; the identity
    is also compared with the numeric spectrum up to 16 vertices. The chain
    ``E(G''') <= E(G) <= E(G') <= E(G'')``, the closed forms of the rewired energies and the
    two-sided bound apply to G_n^m members; other digraphs count as skipped there. Equality
    characterisations are checked for ``alpha > 0`` only, since every tree term vanishes at 0.

    Args:
        instances: Digraphs or structures.
        alpha_grid: Parameters to check.
        laws: Subset of the energy laws to report.

    Returns:
        One report per requested law, in the order given.
    """
    grid = _grid(alpha_grid)
    tallies = {law: _Tally(law) for law in laws if law in ENERGY_LAWS}
    if LawId.ENERGY_IDENTITY in tallies:
        tallies[LawId.ENERGY_IDENTITY].tolerances["trace_rtol"] = ENERGY_TRACE_RTOL
        tallies[LawId.ENERGY_IDENTITY].tolerances["spectrum_rtol"] = SPECTRUM_MOMENT_RTOL
    membership_laws = [law for law in tallies if law not in (ENERGY_LAWS[0], ENERGY_LAWS[1])]
    for item in instances:
        g = _graph(item)
        verdict = item if isinstance(item, GnmStructure) else classify_gnm(g)
        for alpha in grid:
            e = energy_closed_form(g, alpha)
            if tally := tallies.get(LawId.ENERGY_IDENTITY):
                tally.cases += 1
                exact = exact_trace_of_square(g, alpha)
                tally.expect(e == exact, g, alpha, exact, e, "closed form vs exact trace")
                report = energy(g, alpha)
                tally.expect(
                    report.trace_error <= ENERGY_TRACE_RTOL,
                    g,
                    alpha,
                    e,
                    repr(report.trace_check),
                    "closed form vs float trace",
                )
                if g.n <= SPECTRUM_MAX_N:
                    _check_spectral_moment(tally, g, alpha, e)
            if tally := tallies.get(LawId.SIMPLE_SYMMETRIC_ENERGY):
                degree_term = alpha * alpha * sum_squared_outdegrees(g)
                if is_symmetric(g):
                    tally.cases += 1
                    expected = degree_term + (1 - alpha) ** 2 * g.arc_count
                    tally.expect(e == expected, g, alpha, expected, e, "symmetric digraph")
                elif is_simple_arcs_only(g):
                    tally.cases += 1
                    tally.expect(e == degree_term, g, alpha, degree_term, e, "simple digraph")
                else:
                    tally.skipped += 1
        if not membership_laws:
            continue
        if isinstance(verdict, NotMember):
            for law in membership_laws:
                tallies[law].skipped += len(grid)
            continue
        _check_chain(tallies, verdict, grid)
    return [tallies[law].report() for law in laws if law in tallies]


def _check_chain(
    tallies: dict[LawId, _Tally],
    s: GnmStructure,
    grid: tuple[Fraction, ...],
) -> None:
    prime = to_g_prime(s)
    double = to_g_double_prime(s)
    triple = to_g_triple_prime(s)
    g = s.g
    out_star_fixed = prime.result == g
    max_star = is_max_star_hung(s)
    in_tree = is_in_tree_hung(s)
    prime_max_star = is_max_star_hung(prime.structure)
    for alpha in grid:
        e = energy_closed_form(g, alpha)
        e_prime = energy_closed_form(prime.result, alpha)
        e_double = energy_closed_form(double.result, alpha)
        e_triple = energy_closed_form(triple.result, alpha)
        strict = alpha > 0
        if tally := tallies.get(LawId.OUT_STAR_ENERGY):
            tally.cases += 1
            tally.expect(e_prime >= e, g, alpha, f">= {e}", e_prime, "E(G') >= E(G)")
            closed = energy_g_prime(s, alpha)
            tally.expect(e_prime == closed, g, alpha, closed, e_prime, "closed form of E(G')")
            if strict:
                tally.expect(
                    _iff(e_prime == e, out_star_fixed),
                    g,
                    alpha,
                    f"equality iff G == G' ({out_star_fixed})",
                    f"E(G)={e}, E(G')={e_prime}",
                )
        if tally := tallies.get(LawId.GLOBAL_STAR_ENERGY):
            tally.cases += 1
            tally.expect(
                e_double >= e_prime, g, alpha, f">= {e_prime}", e_double, "E(G'') >= E(G')"
            )
            closed = energy_g_double_prime(s, alpha)
            tally.expect(e_double == closed, g, alpha, closed, e_double, "closed form of E(G'')")
            if strict:
                tally.expect(
                    _iff(e_double == e_prime, prime_max_star),
                    g,
                    alpha,
                    f"equality iff G' is one maximal out-star ({prime_max_star})",
                    f"E(G')={e_prime}, E(G'')={e_double}",
                )
        if tally := tallies.get(LawId.IN_TREE_ENERGY):
            tally.cases += 1
            tally.expect(e >= e_triple, g, alpha, f"<= {e}", e_triple, "E(G) >= E(G''')")
            closed = energy_g_triple_prime(s, alpha)
            tally.expect(e_triple == closed, g, alpha, closed, e_triple, "closed form of E(G''')")
            if strict:
                tally.expect(
                    _iff(e == e_triple, in_tree),
                    g,
                    alpha,
                    f"equality iff all trees are in-trees ({in_tree})",
                    f"E(G)={e}, E(G''')={e_triple}",
                )
        if tally := tallies.get(LawId.EXTREMAL_ENERGY):
            tally.cases += 1
            tally.expect(
                e_triple <= e <= e_double,
                g,
                alpha,
                f"{e_triple} <= E(G) <= {e_double}",
                e,
            )
            if strict:
                tally.expect(_iff(e == e_double, max_star), g, alpha, max_star, e, "maximum")
                tally.expect(_iff(e == e_triple, in_tree), g, alpha, in_tree, e, "minimum")
        if tally := tallies.get(LawId.ENERGY_BOUNDS):
            tally.cases += 1
            lower, upper = energy_bounds(s, alpha)
            tally.expect(lower <= e <= upper, g, alpha, f"[{lower}, {upper}]", e)
            if strict:
                tally.expect(_iff(e == lower, in_tree), g, alpha, in_tree, e, "lower equality")
                tally.expect(_iff(e == upper, max_star), g, alpha, max_star, e, "upper equality")


def verify_energy_bounds(
    instances: Iterable[Instance],
    alpha_grid: Iterable[Scalar] = DEFAULT_ALPHA_GRID,
) -> VerificationReport:
    """Two-sided energy bound with both equality characterisations.

    Args:
        instances: Digraphs or structures; non-members are skipped.
        alpha_grid: Parameters to check.

    Returns:
        The report.
    """
    return verify_energy_laws(instances, alpha_grid, laws=(LawId.ENERGY_BOUNDS,))[0]


def family_energy(spec: FamilySpec, alpha: Scalar) -> Fraction:
    """Closed-form energy of a named family member.

    Args:
        spec: The family member.
        alpha: Interpolation parameter.

    Returns:
        The energy from the family's formula.
    """
    a = check_alpha(alpha)
    a2, b2 = a * a, (1 - a) ** 2
    n = spec.vertex_count
    match spec.kind:
        case FamilyKind.PATH | FamilyKind.IN_STAR:
            return a2 * (n - 1)
        case FamilyKind.CYCLE:
            return a2 * n if n > 2 else 2 * b2 + 2 * a2
        case FamilyKind.OUT_STAR:
            return a2 * (n - 1) ** 2
        case FamilyKind.SYM_STAR:
            return a2 * n * (n - 1) + 2 * b2 * (n - 1)
        case FamilyKind.INFINITY:
            t = len(spec.sizes)
            return a2 * (t * t + n - 1) + b2 * 2 * spec.sizes.count(2)
        case FamilyKind.BISPINDLE:
            p, q = len(spec.sizes), len(spec.reverse_sizes)
            symmetric = 1 in spec.sizes and 1 in spec.reverse_sizes
            return a2 * (p * p + q * q + n - 2) + (2 * b2 if symmetric else 0)
    raise FamilySpecError(f"no closed form for {spec}")


def family_specs(max_n: int) -> list[FamilySpec]:
    """Every family member with at most ``max_n`` vertices, within ``t <= 4`` and ``p, q <= 3``.

    Args:
        max_n: Largest vertex count.

    Returns:
        Specifications in a fixed order.
    """
    specs: list[FamilySpec] = []
    for n in range(1, max_n + 1):
        specs.extend(FamilySpec(kind, (n,)) for kind in _SINGLE_SIZE_KINDS)
        if n >= 2:
            specs.append(FamilySpec(FamilyKind.CYCLE, (n,)))
    for t in range(1, 5):
        for lengths in combinations_with_replacement(range(2, max_n + 1), t):
            if sum(lengths) - t + 1 <= max_n:
                specs.append(FamilySpec(FamilyKind.INFINITY, lengths))
    for p in range(1, 4):
        for forward in combinations_with_replacement(range(1, max_n), p):
            if forward.count(1) > 1:
                continue
            for q in range(1, 4):
                for backward in combinations_with_replacement(range(1, max_n), q):
                    if backward.count(1) > 1:
                        continue
                    if 2 + sum(forward) - p + sum(backward) - q <= max_n:
                        specs.append(FamilySpec(FamilyKind.BISPINDLE, forward, backward))
    return specs


def verify_family_energies(
    max_n: int,
    alpha_grid: Iterable[Scalar] = DEFAULT_ALPHA_GRID,
) -> VerificationReport:
    """Compare generated family members against their closed-form energies, exactly.

    Args:
        max_n: Largest vertex count.
        alpha_grid: Parameters to check.

    Returns:
        Report with one case per member and alpha.
    """
    grid = _grid(alpha_grid)
    tally = _Tally(LawId.FAMILY_ENERGIES)
    for spec in family_specs(max_n):
        g = generate(spec)
        for alpha in grid:
            tally.cases += 1
            expected = family_energy(spec, alpha)
            actual = energy_closed_form(g, alpha)
            tally.expect(actual == expected, str(spec), alpha, expected, actual)
    return tally.report()


def verify_tree_energy_extremes(
    max_n: int,
    alpha_grid: Iterable[Scalar] = DEFAULT_ALPHA_GRID,
) -> VerificationReport:
    """Exhaustive check of the tree energy range ``[alpha^2 (n-1), alpha^2 (n-1)^2]``.

    Every oriented labeled tree with at most ``max_n`` vertices is visited. For ``alpha > 0``
    the lower bound must be attained exactly by in-trees and the upper exactly by out-stars.

    Args:
        max_n: Largest tree size, at most 7.
        alpha_grid: Parameters to check.

    Returns:
        Report with one case per tree and alpha.

    Raises:
        SizeLimitError: If ``max_n`` exceeds 7.
    """
    check_tree_size(max_n, TREE_ENUMERATION_MAX_N)
    grid = _grid(alpha_grid)
    tally = _Tally(LawId.TREE_ENERGY_EXTREMES)
    for k in range(1, max_n + 1):
        for index in range(tree_count(k)):
            t = oriented_tree_at(k, index)
            squares = sum_squared_outdegrees(t)
            in_tree, out_star = is_in_tree(t), is_out_star(t)
            for alpha in grid:
                tally.cases += 1
                a2 = alpha * alpha
                e = a2 * squares
                lower, upper = a2 * (k - 1), a2 * (k - 1) ** 2
                tally.expect(lower <= e <= upper, t, alpha, f"[{lower}, {upper}]", e)
                if alpha > 0:
                    tally.expect(_iff(e == lower, in_tree), t, alpha, in_tree, e, "lower equality")
                    tally.expect(
                        _iff(e == upper, out_star), t, alpha, out_star, e, "upper equality"
                    )
    return tally.report()


@dataclass(frozen=True)
class SpecialBoundCase:
    """A special core (cycle, generalized infinity or bispindle) grown to ``n`` vertices.

    Attributes:
        core: The core family member; bispindles need ``p >= q``.
        n: Total vertex count, at least the core order.
    """

    core: FamilySpec
    n: int

    def __post_init__(self) -> None:
        """Check the core kind and sizes.

        Raises:
            FamilySpecError: For other kinds, ``n`` below the core order or ``p < q``.
        """
        if self.core.kind not in (FamilyKind.CYCLE, FamilyKind.INFINITY, FamilyKind.BISPINDLE):
            raise FamilySpecError(f"no special bound for {self.core.kind.value} cores")
        if self.n < self.core.vertex_count:
            raise FamilySpecError(f"n={self.n} is below the core order {self.core.vertex_count}")
        if self.core.kind is FamilyKind.BISPINDLE and len(self.core.sizes) < len(
            self.core.reverse_sizes
        ):
            raise FamilySpecError("bispindle bounds need p >= q")

    def __str__(self) -> str:
        """Render as ``<core> n=<n>``."""
        return f"{self.core} n={self.n}"


def special_bounds(case: SpecialBoundCase, alpha: Scalar) -> tuple[Fraction, Fraction]:
    """Energy range over the members hung on a special core.

    Args:
        case: Core and total order.
        alpha: Interpolation parameter.

    Returns:
        ``(lower, upper)``.
    """
    a = check_alpha(alpha)
    a2, b2 = a * a, (1 - a) ** 2
    m = case.core.vertex_count
    extra = case.n - m
    spec = case.core
    if spec.kind is FamilyKind.CYCLE:
        if m == 2:
            return 2 * a2 + a2 * extra + 2 * b2, a2 * (case.n - 1) ** 2 + a2 + 2 * b2
        return a2 * m + a2 * extra, a2 * (extra + 1) ** 2 + a2 * (m - 1)
    if spec.kind is FamilyKind.INFINITY:
        t = len(spec.sizes)
        walks = 2 * spec.sizes.count(2) * b2
        lower = a2 * (m - 1 + t * t) + a2 * extra + walks
        return lower, a2 * (extra + t) ** 2 + a2 * (m - 1) + walks
    p, q = len(spec.sizes), len(spec.reverse_sizes)
    walks = 2 * b2 if 1 in spec.sizes and 1 in spec.reverse_sizes else Fraction(0)
    lower = a2 * (m - 2 + p * p + q * q) + a2 * extra + walks
    upper = a2 * (extra + p) ** 2 + a2 * (m - 2 + q * q) + walks
    return lower, upper


def _hung_path(core: Digraph, vertex: int, extra: int, inward: bool) -> Digraph:
    if extra == 0:
        return core
    arcs = [(j + 1, j) if inward else (j, j + 1) for j in range(extra)]
    return hang_trees(core, [HungTree(vertex, Digraph(extra + 1, tuple(arcs)))])


def _hung_star(core: Digraph, vertex: int, extra: int) -> Digraph:
    if extra == 0:
        return core
    star = Digraph(extra + 1, tuple((0, j) for j in range(1, extra + 1)))
    return hang_trees(core, [HungTree(vertex, star)])


def special_members(case: SpecialBoundCase) -> dict[str, Digraph]:
    """Representative members: in-path hung, out-star hung on ``v1``, out-path hung on ``v1``.

    Args:
        case: Core and total order.

    Returns:
        Members keyed by ``"lower"``, ``"upper"`` and ``"interior"``.
    """
    core = generate(case.core)
    v1 = core.out_deg.index(max(core.out_deg))
    extra = case.n - core.n
    return {
        "lower": _hung_path(core, 0, extra, inward=True),
        "upper": _hung_star(core, v1, extra),
        "interior": _hung_path(core, v1, extra, inward=False),
    }


def default_special_bound_cases(max_n: int) -> list[SpecialBoundCase]:
    """Cycle, infinity and bispindle cores grown to every order up to ``max_n``.

    Args:
        max_n: Largest total vertex count.

    Returns:
        The cases.
    """
    cores = [FamilySpec(FamilyKind.CYCLE, (m,)) for m in (2, 3, 4)]
    cores += [FamilySpec.parse(f"infinity:{sizes}") for sizes in ("2,2", "2,3", "3,3", "2,2,2")]
    cores += [
        FamilySpec.parse(f"bispindle:{sizes}") for sizes in ("1;1", "1,2;1", "1,2;2", "2,2;1,3")
    ]
    return [
        SpecialBoundCase(core, n)
        for core in cores
        for n in range(core.vertex_count, max_n + 1)
    ]


def verify_special_bounds_3_10(
    params: Iterable[SpecialBoundCase],
    alpha_grid: Iterable[Scalar] = DEFAULT_ALPHA_GRID,
) -> VerificationReport:
    """Check the energy range of members hung on cycle, infinity and bispindle cores.

    The in-path member must attain the lower bound, the out-star on ``v1`` the upper bound,
    and the out-path on ``v1`` must lie strictly inside once it has at least two non-core
    vertices and ``alpha > 0``.

    Args:
        params: Cases to check.
        alpha_grid: Parameters to check.

    Returns:
        Report with one case per parameter set and alpha.
    """
    grid = _grid(alpha_grid)
    tally = _Tally(LawId.SPECIAL_FAMILY_BOUNDS)
    for case in params:
        members = special_members(case)
        extra = case.n - case.core.vertex_count
        for alpha in grid:
            tally.cases += 1
            lower, upper = special_bounds(case, alpha)
            label = str(case)
            energies = {name: energy_closed_form(g, alpha) for name, g in members.items()}
            for name, bound in (("lower", lower), ("upper", upper)):
                tally.expect(energies[name] == bound, label, alpha, bound, energies[name], name)
            inside = energies["interior"]
            tally.expect(lower <= inside <= upper, label, alpha, f"[{lower}, {upper}]", inside)
            if extra >= 2 and alpha > 0:
                tally.expect(
                    lower < inside < upper,
                    label,
                    alpha,
                    f"strictly inside ({lower}, {upper})",
                    inside,
                )
    return tally.report()


def verify_row_sum_bounds(
    instances: Iterable[Instance],
    alpha_grid: Iterable[Scalar] = DEFAULT_ALPHA_GRID,
    tol: float = DEFAULT_TOL,
) -> VerificationReport:
    """Each block's Perron root lies between its smallest and largest row sums.

    When all row sums of a block coincide the root must equal that common value.

    Args:
        instances: Digraphs.
        alpha_grid: Parameters to check.
        tol: Certificate tolerance.

    Returns:
        Report with one case per nontrivial block and alpha.
    """
    grid = _grid(alpha_grid)
    tally = _Tally(LawId.ROW_SUM_BOUNDS, {"tol": tol})
    for item in instances:
        g = _graph(item)
        for alpha in grid:
            for certificate in spectral_radius_blocks(g, alpha, tol):
                block = certificate.block_vertices
                if len(block) < 2:
                    continue
                if not certificate.converged:
                    tally.unconverged += 1
                    continue
                members = frozenset(block)
                sums = [
                    alpha * g.out_deg[v]
                    + (1 - alpha) * sum(w in members for w in g.out_neighbors[v])
                    for v in block
                ]
                low, high = float(min(sums)), float(max(sums))
                slack = _slack(tol, certificate)
                tally.cases += 1
                tally.expect(
                    low - slack <= certificate.upper and certificate.lower <= high + slack,
                    g,
                    alpha,
                    f"[{low!r}, {high!r}]",
                    _enclosure(certificate),
                    f"block {block}",
                )
                if min(sums) == max(sums):
                    tally.expect(
                        abs(certificate.estimate - high) <= slack,
                        g,
                        alpha,
                        repr(high),
                        repr(certificate.estimate),
                        "equal row sums",
                    )
    return tally.report()


def verify_matrix_monotonicity(
    count: int,
    max_order: int,
    seed: int | None,
    tol: float = DEFAULT_TOL,
) -> VerificationReport:
    """Perron roots are monotone on random irreducible pairs ``0 <= A <= B``.

    ``B`` carries a positive cyclic permutation pattern plus random entries; ``A`` scales each
    entry of ``B`` by a factor in ``(0, 1]``, so both share the irreducible pattern.

    Args:
        count: Number of pairs.
        max_order: Largest matrix order, at least 2.
        seed: Random seed.
        tol: Certificate tolerance.

    Returns:
        Report with one case per pair.
    """
    rng = np.random.default_rng(seed)
    tally = _Tally(LawId.MATRIX_MONOTONICITY, {"tol": tol, "slack": 2.0 * tol})
    for _ in range(count):
        order = int(rng.integers(2, max(2, max_order) + 1))
        big = rng.random((order, order)) * (rng.random((order, order)) < 0.5)
        for i in range(order):
            big[i, (i + 1) % order] += 0.5 + rng.random()
        small = big * (1.0 - rng.random((order, order)))
        rho_big, rho_small = perron_radius(big, tol), perron_radius(small, tol)
        if not (rho_big.converged and rho_small.converged):
            tally.unconverged += 1
            continue
        tally.cases += 1
        tally.expect(
            _dominates(rho_big, rho_small, tol),
            np.array2string(big, precision=17),
            None,
            f">= {_enclosure(rho_small)}",
            _enclosure(rho_big),
        )
    return tally.report()


def verify_subdigraph_monotonicity(
    instances: Iterable[Instance],
    alpha_grid: Iterable[Scalar] = DEFAULT_ALPHA_GRID,
    tol: float = DEFAULT_TOL,
) -> VerificationReport:
    """The radius is at least ``alpha * max d+`` and never grows when an arc is deleted.

    Args:
        instances: Digraphs.
        alpha_grid: Parameters to check.
        tol: Certificate tolerance.

    Returns:
        Report with one case per digraph and alpha.
    """
    grid = _grid(alpha_grid)
    tally = _Tally(LawId.SUBDIGRAPH_MONOTONICITY, {"tol": tol, "slack": 2.0 * tol})
    for item in instances:
        g = _graph(item)
        for alpha in grid:
            rho = spectral_radius(g, alpha, tol)
            subs = [spectral_radius(g.without_arcs([arc]), alpha, tol) for arc in g.arcs]
            if not rho.converged or not all(c.converged for c in subs):
                tally.unconverged += 1
                continue
            tally.cases += 1
            floor = float(alpha * g.max_out_degree)
            tally.expect(
                rho.upper >= floor - _slack(tol, rho),
                g,
                alpha,
                f">= {floor!r}",
                _enclosure(rho),
                "alpha * max outdegree",
            )
            for arc, sub in zip(g.arcs, subs):
                tally.expect(
                    _dominates(rho, sub, tol),
                    g,
                    alpha,
                    f">= {_enclosure(sub)}",
                    _enclosure(rho),
                    f"deleting arc {arc}",
                )
    return tally.report()


def _run_chunked(
    check: Callable[[list[Instance]], VerificationReport],
    instances: list[Instance],
    jobs: int,
) -> VerificationReport:
    if jobs <= 1 or len(instances) < 2:
        return check(instances)
    size = -(-len(instances) // jobs)
    chunks = [instances[i : i + size] for i in range(0, len(instances), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return merge_reports(list(pool.map(check, chunks)))


def verify_law(
    law_id: LawId,
    *,
    max_n: int = 5,
    alpha_grid: Iterable[Scalar] = DEFAULT_ALPHA_GRID,
    tol: float = DEFAULT_TOL,
    budget: int = DEFAULT_VERIFY_BUDGET,
    seed: int | None = 0,
    jobs: int = 1,
) -> VerificationReport:
    """Run one law over its default instance source.

    Laws about G_n^m use every member up to ``max_n`` while a class has at most ``budget``
    members, and a seeded sample of ``budget`` members otherwise. Laws about arbitrary
    digraphs use ``budget`` seeded random digraphs with at most ``max_n`` vertices.

    Args:
        law_id: Which law.
        max_n: Largest instance order.
        alpha_grid: Parameters to check.
        tol: Certificate tolerance for radius laws.
        budget: Instance budget.
        seed: Sampling seed.
        jobs: Worker processes for instance-based laws.

    Returns:
        The report.

    Raises:
        SizeLimitError: If ``max_n`` exceeds the limit of the chosen law.
    """
    grid = _grid(alpha_grid)
    logger.info("Verifying %s with max_n=%d, budget=%d, seed=%s", law_id.value, max_n, budget, seed)
    match law_id:
        case LawId.FAMILY_ENERGIES:
            return verify_family_energies(max_n, grid)
        case LawId.TREE_ENERGY_EXTREMES:
            return verify_tree_energy_extremes(max_n, grid)
        case LawId.SPECIAL_FAMILY_BOUNDS:
            return verify_special_bounds_3_10(default_special_bound_cases(max_n), grid)
        case LawId.MATRIX_MONOTONICITY:
            return verify_matrix_monotonicity(budget, max(2, max_n), seed, tol)
    check: Callable[[list[Instance]], VerificationReport]
    if law_id in (LawId.TREE_EIGENVALUES, *RADIUS_LAWS, *ENERGY_LAWS[2:]):
        if law_id is LawId.TREE_EIGENVALUES and max_n > DIVISIBILITY_MAX_N:
            raise SizeLimitError(f"{law_id.value} supports max_n <= {DIVISIBILITY_MAX_N}")
        instances: list[Instance] = list(gnm_instances(max_n, budget, seed))
    else:
        if law_id is LawId.SINGLETON_EIGENVALUES and max_n > DIVISIBILITY_MAX_N:
            raise SizeLimitError(f"{law_id.value} supports max_n <= {DIVISIBILITY_MAX_N}")
        instances = list(random_digraphs(budget, max_n, seed))
        if law_id is LawId.SIMPLE_SYMMETRIC_ENERGY:
            instances += random_digraphs(budget, max_n, seed, symmetric=True)
            instances += random_digraphs(budget, max_n, seed, oriented=True)
    match law_id:
        case LawId.TREE_EIGENVALUES:
            check = partial(verify_theorem_2_5, alpha_grid=grid)
        case LawId.SINGLETON_EIGENVALUES:
            check = partial(verify_singleton_eigenvalues, alpha_grid=grid)
        case LawId.ROW_SUM_BOUNDS:
            check = partial(verify_row_sum_bounds, alpha_grid=grid, tol=tol)
        case LawId.SUBDIGRAPH_MONOTONICITY:
            check = partial(verify_subdigraph_monotonicity, alpha_grid=grid, tol=tol)
        case _ if law_id in RADIUS_LAWS:
            check = _compose(verify_radius_orderings, grid, law_id, tol=tol)
        case _:
            check = _compose(verify_energy_laws, grid, law_id)
    return _run_chunked(check, instances, jobs)


def _single_law(
    runner: Callable[..., list[VerificationReport]],
    instances: list[Instance],
    *,
    alpha_grid: tuple[Fraction, ...],
    law: LawId,
    **kwargs: float,
) -> VerificationReport:
    return runner(instances, alpha_grid=alpha_grid, laws=(law,), **kwargs)[0]


def _compose(
    runner: Callable[..., list[VerificationReport]],
    grid: tuple[Fraction, ...],
    law: LawId,
    **kwargs: float,
) -> Callable[[list[Instance]], VerificationReport]:
    return partial(_single_law, runner, alpha_grid=grid, law=law, **kwargs)


__all__ = [
    "ENERGY_LAWS",
    "RADIUS_LAWS",
    "LawId",
    "SpecialBoundCase",
    "default_special_bound_cases",
    "energy_bounds",
    "family_energy",
    "family_specs",
    "merge_reports",
    "special_bounds",
    "special_members",
    "verify_energy_bounds",
    "verify_energy_laws",
    "verify_family_energies",
    "verify_law",
    "verify_matrix_monotonicity",
    "verify_radius_orderings",
    "verify_row_sum_bounds",
    "verify_singleton_eigenvalues",
    "verify_special_bounds_3_10",
    "verify_subdigraph_monotonicity",
    "verify_theorem_2_5",
    "verify_tree_energy_extremes",
]

__description__ = """
Exact and certified checks of eigenvalue, radius-ordering and energy laws over generated and
enumerated digraphs.
"""
