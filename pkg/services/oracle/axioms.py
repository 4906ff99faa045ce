"""
Axiom sweeps for the ternary structures.

- exhaustive_axiom_check: every triple of points of a conic over F_p, the
  conic group laws plus the symbol group acting simply transitively.
- exhaustive_algebra_check: every triple of A(q) over F_p, the ternary
  algebra laws.
- random_conic_check: seeded sweep over rational conic points.

Nothing here re-implements the algebra: products come from the conic,
matalg and ternary_core modules. Sweeps above the configured ceilings
fall back to a fixed-seed sample and say so in the report.
"""

import itertools
from concurrent.futures import ProcessPoolExecutor
from random import Random
from typing import Any, Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

import structlog

from config import settings
from models.reports import Axiom, AxiomReport, AxiomResult
from services.conic import Conic, ConicPoint
from services.errors import ClosureViolation, InfeasibleSize, NotFound
from services.matalg import AlgebraElement, MatrixTernaryAlgebra
from services.oracle.enumeration import FiniteConic, enumerate_conic_points
from services.oracle.sampler import random_rational
from services.quadform import QuadraticForm
from services.ternary_core import symbol_act, symbol_eq, symbol_mul

logger = structlog.get_logger()

MISSING = -1


class _Tally:
    """Counts cases for one axiom and keeps the first counterexample."""

    def __init__(self, axiom: Axiom, exhaustive: bool = True):
        self.axiom = axiom
        self.exhaustive = exhaustive
        self.checked = 0
        self.counterexample: Optional[str] = None

    def record(self, ok: bool, case: Callable[[], str]) -> None:
        self.checked += 1
        if not ok and self.counterexample is None:
            self.counterexample = case()

    def result(self) -> AxiomResult:
        return AxiomResult(
            axiom=self.axiom,
            passed=self.counterexample is None,
            checked=self.checked,
            exhaustive=self.exhaustive,
            counterexample=self.counterexample
        )


def _fmt(*points: Any) -> str:
    return " ".join(f"({point})" for point in points)


# ==================== Partitioning ====================

def partition(count: int, workers: int) -> List[range]:
    """Split range(count) into at most `workers` contiguous, disjoint chunks."""
    workers = max(1, min(workers, count)) if count else 1
    size, extra = divmod(count, workers)
    chunks, start = [], 0
    for i in range(workers):
        end = start + size + (1 if i < extra else 0)
        chunks.append(range(start, end))
        start = end
    return chunks


def _triple_rows(conic: Conic, points: Sequence[ConicPoint], rows: range) -> List[List[List[int]]]:
    """table[i][j][k] = index of P_i * P_j^* * P_k, or MISSING when off the point list."""
    index = {point: i for i, point in enumerate(points)}
    table = []
    for i in rows:
        plane = []
        for j in range(len(points)):
            plane.append([
                index.get(conic.triple(points[i], points[j], points[k]), MISSING)
                for k in range(len(points))
            ])
        table.append(plane)
    return table


def build_triple_table(
    conic: Conic,
    points: Sequence[ConicPoint],
    workers: Optional[int] = None
) -> List[List[List[int]]]:
    """
    Index table of every triple product, computed in disjoint chunks of the
    first index and merged in order.

    Args:
        conic: Conic
        points: Carrier, in a fixed order
        workers: Process count (settings.oracle_workers by default)
    """
    workers = workers or settings.oracle_workers
    chunks = partition(len(points), workers)
    if len(chunks) == 1:
        return _triple_rows(conic, points, chunks[0])

    logger.info("triple_table_partitioned", points=len(points), workers=len(chunks))
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        parts = pool.map(_triple_rows, itertools.repeat(conic), itertools.repeat(list(points)), chunks)
        return [plane for part in parts for plane in part]


def _quintuples(n: int, seed: int) -> Tuple[Iterator[Tuple[int, ...]], bool]:
    if n ** 5 <= settings.oracle_quintuple_cap:
        return itertools.product(range(n), repeat=5), True
    rng = Random(seed)
    sample = (
        tuple(rng.randrange(n) for _ in range(5))
        for _ in range(settings.oracle_sample_size)
    )
    return sample, False


# ==================== Conic group over F_p ====================

def exhaustive_axiom_check(
    conic: FiniteConic,
    base: Optional[ConicPoint] = None,
    workers: Optional[int] = None,
    seed: Optional[int] = None
) -> AxiomReport:
    """
    Check the commutative ternary group laws over every triple of points.

    Associativity runs over all quintuples when n^5 is within
    settings.oracle_quintuple_cap, otherwise over a seeded sample of
    settings.oracle_sample_size quintuples. The symbol classes P * Q^* are
    checked to form an abelian group of order n acting simply transitively.

    Args:
        conic: Conic over F_p
        base: Identity point (first enumerated point by default)
        workers: Process count for the triple table
        seed: Seed for sampled associativity (settings.seed by default)

    Returns:
        AxiomReport

    Raises:
        InfeasibleSize: n^3 above settings.oracle_max_triples
        NotFound: the conic has no points
        NotOnConic: base is not on the conic
    """
    seed = settings.seed if seed is None else seed
    points = enumerate_conic_points(conic)
    n = len(points)
    if n == 0:
        raise NotFound(f"{conic} has no points over F_{conic.p}")
    if n ** 3 > settings.oracle_max_triples:
        raise InfeasibleSize(f"{n} points: {n ** 3} triples exceed {settings.oracle_max_triples}")

    base = conic.point(base.x, base.y) if base is not None else points[0]
    index = {point: i for i, point in enumerate(points)}
    b = index[base]

    logger.info("axiom_check_started", conic=str(conic.form), p=conic.p, points=n, base=str(base))
    table = build_triple_table(conic, points, workers)
    everything = list(itertools.product(range(n), repeat=3))

    closure = _Tally(Axiom.CLOSURE)
    commutativity = _Tally(Axiom.COMMUTATIVITY)
    for i, j, k in everything:
        closure.record(table[i][j][k] != MISSING, lambda: _fmt(points[i], points[j], points[k]))
        commutativity.record(table[i][j][k] == table[k][j][i], lambda: _fmt(points[i], points[j], points[k]))

    quintuples, exhaustive = _quintuples(n, seed)
    associativity = _Tally(Axiom.ASSOCIATIVITY, exhaustive)
    for i, j, k, l, m in quintuples:
        left = table[i][j][k]
        right = table[k][l][m]
        ok = left != MISSING and right != MISSING and table[left][l][m] == table[i][j][right]
        associativity.record(ok, lambda: _fmt(points[i], points[j], points[k], points[l], points[m]))

    identity = _Tally(Axiom.IDENTITY)
    inverses = _Tally(Axiom.INVERSES)
    for i in range(n):
        identity.record(table[i][b][b] == i, lambda: _fmt(points[i]))
        inverses.record(b in table[i][b], lambda: _fmt(points[i]))

    results = [tally.result() for tally in (closure, commutativity, associativity, identity, inverses)]
    order, symbol_results = _symbol_group_checks(conic, base, points)
    results.extend(symbol_results)

    report = AxiomReport(
        subject=str(conic),
        field=conic.field.name,
        base=str(base),
        point_count=n,
        symbol_group_order=order,
        seed=None if exhaustive else seed,
        results=results
    )
    _log_report(report)
    return report


def _symbol_group_checks(
    conic: Conic,
    base: ConicPoint,
    points: Sequence[ConicPoint]
) -> Tuple[int, List[AxiomResult]]:
    group = conic.group(base)
    classes = group.symbol_classes(points)
    n = len(points)

    order = _Tally(Axiom.SYMBOL_GROUP_ORDER)
    order.record(len(classes) == n, lambda: f"{len(classes)} classes for {n} points")

    abelian = _Tally(Axiom.SYMBOL_GROUP_ABELIAN)
    for g, h in itertools.product(classes, repeat=2):
        abelian.record(symbol_eq(symbol_mul(g, h), symbol_mul(h, g)), lambda: f"{g} / {h}")

    transitivity = _Tally(Axiom.TRANSITIVITY)
    for target, source in itertools.product(points, repeat=2):
        witness = group.witness(target, source)
        transitivity.record(symbol_act(witness, source) == target, lambda: _fmt(target, source))

    free = _Tally(Axiom.FREE_ACTION)
    images = {symbol_act(g, base) for g in classes}
    free.record(len(images) == len(classes), lambda: f"{len(images)} images of {len(classes)} classes")

    return len(classes), [tally.result() for tally in (order, abelian, transitivity, free)]


# ==================== Ternary algebra over F_p ====================

def exhaustive_algebra_check(form: QuadraticForm, seed: Optional[int] = None) -> AxiomReport:
    """
    Check the six ternary algebra laws of A(q) for q over F_p.

    Closure, commutativity and linearity (all scalars) run over every
    triple; associativity and distributivity over all quintuples /
    quadruples when within settings.oracle_quintuple_cap, else sampled;
    nondegeneracy (A A^* A = det(A) A, zero iff det A = 0) over every element.

    Raises:
        TypeError: form is not over a finite field
        DegenerateDisc: Disc(q) == 0 in F_p
        InfeasibleSize: the p^6 triples times the 2p linearity products
            exceed settings.oracle_max_triples
    """
    field = form.field
    if not field.is_finite:
        raise TypeError(f"{form} is over {field.name}; exhaustive checks need F_p")
    seed = settings.seed if seed is None else seed
    algebra = MatrixTernaryAlgebra(form)
    elements = [AlgebraElement(form, x, y) for x in field.elements() for y in field.elements()]
    n = len(elements)
    work = n ** 3 * 2 * field.p
    if work > settings.oracle_max_triples:
        raise InfeasibleSize(
            f"{n} elements: {n ** 3} triples x {2 * field.p} linearity products exceed {settings.oracle_max_triples}"
        )

    logger.info("algebra_check_started", form=str(form), field=field.name, elements=n)
    scalars = list(field.elements())

    closure = _Tally(Axiom.CLOSURE)
    commutativity = _Tally(Axiom.COMMUTATIVITY)
    linearity = _Tally(Axiom.LINEARITY)
    for A, B, C in itertools.product(elements, repeat=3):
        try:
            product = algebra.triple(A, B, C)
        except ClosureViolation:
            closure.record(False, lambda: _fmt(A, B, C))
            continue
        closure.record(True, str)
        commutativity.record(product == algebra.triple(C, B, A), lambda: _fmt(A, B, C))
        for alpha in scalars:
            scaled = algebra.scale(alpha, product)
            linearity.record(
                algebra.triple(algebra.scale(alpha, A), B, C) == scaled
                and algebra.triple(A, B, algebra.scale(alpha, C)) == scaled,
                lambda: f"{alpha} {_fmt(A, B, C)}"
            )

    quintuples, exhaustive = _quintuples(n, seed)
    associativity = _Tally(Axiom.ASSOCIATIVITY, exhaustive)
    for i, j, k, l, m in quintuples:
        A, B, C, D, E = (elements[t] for t in (i, j, k, l, m))
        associativity.record(
            algebra.triple(algebra.triple(A, B, C), D, E) == algebra.triple(A, B, algebra.triple(C, D, E)),
            lambda: _fmt(A, B, C, D, E)
        )

    distributivity = _Tally(Axiom.DISTRIBUTIVITY, n ** 4 <= settings.oracle_quintuple_cap)
    if distributivity.exhaustive:
        quadruples: Iterable[Tuple[int, ...]] = itertools.product(range(n), repeat=4)
    else:
        rng = Random(seed + 1)
        quadruples = (tuple(rng.randrange(n) for _ in range(4)) for _ in range(settings.oracle_sample_size))
    for i, j, k, l in quadruples:
        A, B, C, D = (elements[t] for t in (i, j, k, l))
        distributivity.record(
            algebra.triple(algebra.add(A, D), B, C) == algebra.add(algebra.triple(A, B, C), algebra.triple(D, B, C)),
            lambda: _fmt(A, D, B, C)
        )

    nondegeneracy = _Tally(Axiom.NONDEGENERACY)
    for A in elements:
        cube = algebra.triple(A, A, A)
        det = algebra.det(A)
        nondegeneracy.record(
            cube == algebra.scale(det, A) and cube.is_zero() == det.is_zero(),
            lambda: _fmt(A)
        )

    report = AxiomReport(
        subject=algebra.describe(),
        field=field.name,
        base=_fmt(*algebra.base_pair),
        point_count=n,
        seed=None if exhaustive and distributivity.exhaustive else seed,
        results=[
            tally.result()
            for tally in (closure, commutativity, associativity, distributivity, linearity, nondegeneracy)
        ]
    )
    _log_report(report)
    return report


# ==================== Random sweep over Q ====================

def random_conic_points(conic: Conic, base: ConicPoint, count: int, rng: Random) -> List[ConicPoint]:
    """`count` rational points from random slopes through `base`; asymptotic slopes are skipped."""
    points = []
    while len(points) < count:
        try:
            points.append(conic.point_from_slope(base, random_rational(rng)))
        except NotFound:
            continue
    return points


def random_conic_check(
    conic: Conic,
    base: ConicPoint,
    count: int,
    seed: Optional[int] = None
) -> AxiomReport:
    """
    Seeded sweep of the conic group laws over rational points.

    Each of the `count` cases draws five random points on the conic and
    checks closure, commutativity, associativity, identity, inverses and
    transitivity of the symbol action.

    Raises:
        NotOnConic: base is not on the conic
    """
    seed = settings.seed if seed is None else seed
    base = conic.require_point(base)
    group = conic.group(base)
    rng = Random(seed)

    tallies = {axiom: _Tally(axiom, exhaustive=False) for axiom in (
        Axiom.CLOSURE, Axiom.COMMUTATIVITY, Axiom.ASSOCIATIVITY,
        Axiom.IDENTITY, Axiom.INVERSES, Axiom.TRANSITIVITY,
    )}
    for _ in range(count):
        P, Q, R, S, T = random_conic_points(conic, base, 5, rng)
        product = conic.triple(P, Q, R)
        tallies[Axiom.CLOSURE].record(conic.contains(product.x, product.y), lambda: _fmt(P, Q, R))
        tallies[Axiom.COMMUTATIVITY].record(product == conic.triple(R, Q, P), lambda: _fmt(P, Q, R))
        tallies[Axiom.ASSOCIATIVITY].record(
            conic.triple(product, S, T) == conic.triple(P, Q, conic.triple(R, S, T)),
            lambda: _fmt(P, Q, R, S, T)
        )
        tallies[Axiom.IDENTITY].record(conic.triple(P, base, base) == P, lambda: _fmt(P))
        tallies[Axiom.INVERSES].record(
            conic.triple(P, base, group.inverse(P)) == base, lambda: _fmt(P)
        )
        tallies[Axiom.TRANSITIVITY].record(
            group.act(group.witness(P, Q), Q) == P, lambda: _fmt(P, Q)
        )

    report = AxiomReport(
        subject=str(conic),
        field=conic.field.name,
        base=str(base),
        seed=seed,
        results=[tally.result() for tally in tallies.values()]
    )
    _log_report(report)
    return report


def _log_report(report: AxiomReport) -> None:
    failed = [result.axiom.value for result in report.results if not result.passed]
    if failed:
        logger.warning("axiom_check_failed", subject=report.subject, field=report.field, failed=failed)
    else:
        logger.info(
            "axiom_check_passed",
            subject=report.subject,
            field=report.field,
            cases=sum(result.checked for result in report.results)
        )
