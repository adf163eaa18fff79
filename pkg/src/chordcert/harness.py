"""Exhaustive verification sweeps over small fields.

A sweep walks every field of size at most ``max_field``, checks the group
axioms on each curve and certifies every triple of points. Curves are
independent, so they are spread over a process pool; results are merged in
curve order so the report does not depend on scheduling.
"""

import itertools
import logging
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence

from pydantic import BaseModel, Field

from chordcert.certificate import canonical_json, certify
from chordcert.config import RationalConfig, SweepConfig
from chordcert.curve import CurvePoint, WeierstrassCurve, parse_curve_point, parse_curve_spec
from chordcert.errors import (
    AxiomFailure,
    CertificationError,
    ChordCertError,
    NotPrime,
    SingularCurve,
)
from chordcert.fields import RATIONALS, FieldHandle, build_prime_field, parse_field_spec
from chordcert.journal import SweepJournal
from chordcert.ten_points import PATTERNS

logger = logging.getLogger(__name__)


class CurveResult(BaseModel):
    """Outcome of the axiom suite and the certification of every triple on one curve."""
    curve: str
    points: int
    triples: int
    axiom_checks: int
    paths: Dict[str, int] = Field(default_factory=dict)
    nodes: Dict[str, int] = Field(default_factory=dict)
    patterns: Dict[str, int] = Field(default_factory=dict)
    failures: List[str] = Field(default_factory=list)


class FieldSweep(BaseModel):
    field: str
    exhaustive: bool
    curves: int = 0
    triples: int = 0
    axiom_checks: int = 0
    paths: Dict[str, int] = Field(default_factory=dict)
    patterns: Dict[str, int] = Field(default_factory=dict)
    failures: List[str] = Field(default_factory=list)
    results: List[CurveResult] = Field(default_factory=list)


class RationalSpotCheck(BaseModel):
    curve: str
    generator: str
    points: List[str]
    triples: int
    paths: Dict[str, int] = Field(default_factory=dict)
    failures: List[str] = Field(default_factory=list)


class SweepReport(BaseModel):
    """Deterministic sweep summary; wall time is kept out of the JSON form."""
    max_field: int
    fields: List[FieldSweep] = Field(default_factory=list)
    curves: int = 0
    triples: int = 0
    paths: Dict[str, int] = Field(default_factory=dict)
    nodes: Dict[str, int] = Field(default_factory=dict)
    patterns: Dict[str, int] = Field(default_factory=dict)
    unattained_patterns: List[str] = Field(default_factory=list)
    rational: List[RationalSpotCheck] = Field(default_factory=list)
    failures: List[str] = Field(default_factory=list)
    wall_time: float = Field(default=0.0, exclude=True)

    @property
    def ok(self) -> bool:
        return not self.failures


def _merge(into: Dict[str, int], counts: Dict[str, int]) -> None:
    for key, value in counts.items():
        into[key] = into.get(key, 0) + value


def _sorted(counts: Dict[str, int]) -> Dict[str, int]:
    return dict(sorted(counts.items()))


# -- curve lists ----------------------------------------------------------------


def _smooth(field: FieldHandle, coeffs: Sequence) -> Optional[WeierstrassCurve]:
    try:
        return WeierstrassCurve(field, *coeffs)
    except SingularCurve:
        return None


def exhaustive_curves(field: FieldHandle) -> List[WeierstrassCurve]:
    """Every smooth (a1, a2, a3, a4, a6) over a finite field, a1 varying slowest."""
    elements = field.elements()
    curves = []
    for coeffs in itertools.product(elements, repeat=5):
        curve = _smooth(field, coeffs)
        if curve is not None:
            curves.append(curve)
    logger.debug(f"{len(curves)} smooth curves over {field}")
    return curves


def sampled_curves(field: FieldHandle, count: int, seed: int) -> List[WeierstrassCurve]:
    """``count`` distinct smooth curves drawn with a generator seeded by ``seed`` and the field."""
    elements = field.elements()
    total = len(elements) ** 5
    rng = random.Random(f"{seed}:{field}")
    seen = set()
    curves: List[WeierstrassCurve] = []
    while len(curves) < count and len(seen) < total:
        coeffs = tuple(rng.choice(elements) for _ in range(5))
        if coeffs in seen:
            continue
        seen.add(coeffs)
        curve = _smooth(field, coeffs)
        if curve is not None:
            curves.append(curve)
    return curves


def sweep_fields(config: SweepConfig) -> List[FieldHandle]:
    """Prime fields up to ``max_field`` followed by the configured extensions that fit."""
    fields: List[FieldHandle] = []
    for p in range(2, config.max_field + 1):
        try:
            fields.append(build_prime_field(p))
        except NotPrime:
            continue
    for spec in config.extension_fields:
        handle = parse_field_spec(spec)
        if handle.size is not None and handle.size <= config.max_field and handle not in fields:
            fields.append(handle)
    return sorted(fields, key=lambda h: (h.size, str(h)))


# -- axioms ---------------------------------------------------------------------


def _fail(message: str, *witness: CurvePoint) -> None:
    logger.error(message)
    raise AxiomFailure(message, tuple(str(w) for w in witness))


def verify_group_axioms(curve: WeierstrassCurve,
                        points: Optional[Sequence[CurvePoint]] = None) -> int:
    """Check identity, inverses, commutativity, associativity and the star identities.

    Returns the number of checks performed.
    """
    pts = list(points) if points is not None else curve.points()
    o = curve.infinity()
    checks = 0
    for p in pts:
        if curve.add(p, o) != p or curve.add(o, p) != p:
            _fail(f"P + O != P on {curve}", p)
        if curve.add(p, curve.negate(p)) != o:
            _fail(f"P + (-P) != O on {curve}", p)
        if curve.negate(p) != curve.star(p, o):
            _fail(f"-P != P*O on {curve}", p)
        checks += 3
    for p, q in itertools.product(pts, repeat=2):
        pq = curve.star(p, q)
        if curve.add(p, q) != curve.add(q, p):
            _fail(f"P + Q != Q + P on {curve}", p, q)
        if curve.star(pq, p) != q:
            _fail(f"(P*Q)*P != Q on {curve}", p, q)
        if curve.negate(pq) != curve.star(curve.negate(p), curve.negate(q)):
            _fail(f"-(P*Q) != (-P)*(-Q) on {curve}", p, q)
        checks += 3
    for p, q, r in itertools.product(pts, repeat=3):
        if curve.add(curve.add(p, q), r) != curve.add(p, curve.add(q, r)):
            _fail(f"(P+Q)+R != P+(Q+R) on {curve}", p, q, r)
        checks += 1
    return checks


# -- certification --------------------------------------------------------------


def verify_all_triples(curve: WeierstrassCurve,
                       points: Optional[Sequence[CurvePoint]] = None) -> CurveResult:
    """Certify every triple and tally the routes taken.

    A pattern counts for a triple only when a reduction node of its certificate
    established it.

    Raises the first certification error; ``exc.partial`` holds the partial tree.
    """
    pts = list(points) if points is not None else curve.points()
    paths: Counter = Counter()
    nodes: Counter = Counter()
    patterns: Counter = Counter()
    triples = 0
    for p, q, r in itertools.product(pts, repeat=3):
        cert = certify(curve, p, q, r)
        labels = cert.paths()
        paths[labels[0]] += 1
        nodes.update(labels)
        patterns.update(cert.exercised_patterns())
        triples += 1
    return CurveResult(
        curve=curve.spec(),
        points=len(pts),
        triples=triples,
        axiom_checks=0,
        paths=_sorted(dict(paths)),
        nodes=_sorted(dict(nodes)),
        patterns=_sorted(dict(patterns)),
    )


def sweep_curve(curve: WeierstrassCurve) -> CurveResult:
    """Axioms plus certification for one curve; failures are recorded, not raised."""
    n = len(curve.points())
    try:
        checks = verify_group_axioms(curve)
        result = verify_all_triples(curve)
        result.axiom_checks = checks
        return result
    except CertificationError as exc:
        detail = f"{type(exc).__name__}: {exc}"
        if exc.partial is not None:
            detail += "\n" + canonical_json(exc.partial)
    except ChordCertError as exc:
        detail = f"{type(exc).__name__}: {exc}"
    return CurveResult(
        curve=curve.spec(), points=n, triples=n ** 3, axiom_checks=0, failures=[detail]
    )


def _run(curves: List[WeierstrassCurve], workers: int) -> Iterable[CurveResult]:
    if workers <= 1:
        return map(sweep_curve, curves)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(sweep_curve, curves))


def sweep_field(field: FieldHandle, config: SweepConfig,
                journal: Optional[SweepJournal] = None) -> FieldSweep:
    size = field.size or 0
    exhaustive = size <= config.exhaustive_max_size
    if exhaustive:
        curves = exhaustive_curves(field)
    else:
        curves = sampled_curves(field, config.sampled_curves, config.sample_seed)
    mode = "exhaustive" if exhaustive else "sampled"
    logger.info(f"Sweeping {len(curves)} curves over {field} ({mode})")
    sweep = FieldSweep(field=str(field), exhaustive=exhaustive)
    for result in _run(curves, config.workers):
        sweep.curves += 1
        sweep.triples += result.triples
        sweep.axiom_checks += result.axiom_checks
        _merge(sweep.paths, result.paths)
        _merge(sweep.patterns, result.patterns)
        sweep.failures.extend(f"{field} {result.curve}: {f}" for f in result.failures)
        sweep.results.append(result)
        if journal is not None:
            journal.log_curve_done(str(field), result.curve, result.triples, result.paths)
            for failure in result.failures:
                journal.log_failure(str(field), result.curve, failure.split(":", 1)[0])
    sweep.paths = _sorted(sweep.paths)
    sweep.patterns = _sorted(sweep.patterns)
    return sweep


def _multiples(curve: WeierstrassCurve, generator: CurvePoint, count: int,
               max_bits: int) -> List[CurvePoint]:
    points = [curve.infinity()]
    current = curve.infinity()
    while len(points) < count:
        current = curve.add(current, generator)
        sizes = [abs(c.value.numerator).bit_length() for c in current.point.coords]
        sizes += [c.value.denominator.bit_length() for c in current.point.coords]
        if max(sizes) > max_bits:
            logger.warning(f"Stopping at {len(points)} points: coordinates exceed {max_bits} bits")
            break
        points.append(current)
    return points


def verify_rational_curves(config: RationalConfig) -> List[RationalSpotCheck]:
    """Axioms and certification on multiples of a generator over Q."""
    checks = []
    for entry in config.curves:
        curve = parse_curve_spec(RATIONALS, entry.curve)
        generator = parse_curve_point(curve, entry.generator)
        points = _multiples(curve, generator, config.points, config.max_bits)
        logger.info(f"Rational spot check on {curve} with {len(points)} points")
        failures: List[str] = []
        paths: Dict[str, int] = {}
        try:
            verify_group_axioms(curve, points)
            result = verify_all_triples(curve, points)
            paths = result.paths
        except ChordCertError as exc:
            failures.append(f"{type(exc).__name__}: {exc}")
        checks.append(RationalSpotCheck(
            curve=entry.curve,
            generator=entry.generator,
            points=[str(p) for p in points],
            triples=len(points) ** 3,
            paths=paths,
            failures=failures,
        ))
    return checks


def run_sweep(config: SweepConfig, journal: Optional[SweepJournal] = None, config_hash: str = "",
              include_rational: bool = True) -> SweepReport:
    started = time.monotonic()
    fields = sweep_fields(config)
    if journal is not None:
        journal.log_sweep_start([str(f) for f in fields], config_hash)
    report = SweepReport(max_field=config.max_field)
    for field in fields:
        sweep = sweep_field(field, config, journal)
        report.fields.append(sweep)
        report.curves += sweep.curves
        report.triples += sweep.triples
        _merge(report.paths, sweep.paths)
        _merge(report.patterns, sweep.patterns)
        for result in sweep.results:
            _merge(report.nodes, result.nodes)
        report.failures.extend(sweep.failures)
    if include_rational:
        report.rational = verify_rational_curves(config.rational)
        for spot in report.rational:
            report.failures.extend(f"Q {spot.curve}: {f}" for f in spot.failures)
    report.paths = _sorted(report.paths)
    report.nodes = _sorted(report.nodes)
    report.patterns = {name: report.patterns.get(name, 0) for name in PATTERNS}
    report.unattained_patterns = [name for name, count in report.patterns.items() if count == 0]
    for name in report.unattained_patterns:
        i, j, k = PATTERNS[name]
        logger.warning(f"Pattern {name} (P{i} = P{j} = P{k}) has no instance over tested fields")
    report.wall_time = time.monotonic() - started
    if journal is not None:
        journal.log_sweep_finish(report.curves, report.triples, len(report.failures))
    logger.info(f"Sweep finished: {report.curves} curves, {report.triples} triples, "
                f"{len(report.failures)} failures in {report.wall_time:.1f}s")
    return report


def render_report_text(report: SweepReport) -> str:
    lines = [f"Sweep up to field size {report.max_field}"]
    for sweep in report.fields:
        mode = "exhaustive" if sweep.exhaustive else "sampled"
        lines.append(f"  {sweep.field}: {sweep.curves} curves ({mode}), {sweep.triples} triples, "
                     f"{sweep.axiom_checks} axiom checks, {len(sweep.failures)} failures")
    lines.append(f"Total: {report.curves} curves, {report.triples} triples")
    lines.append("Routes:")
    lines.extend(f"  {name}: {count}" for name, count in report.paths.items())
    lines.append("Certificate nodes:")
    lines.extend(f"  {name}: {count}" for name, count in report.nodes.items())
    lines.append("Coincidence patterns:")
    for name, count in report.patterns.items():
        i, j, k = PATTERNS[name]
        status = f"{count} triples" if count else "no instance over tested fields"
        lines.append(f"  {name} (P{i} = P{j} = P{k}): {status}")
    for spot in report.rational:
        status = "ok" if not spot.failures else f"{len(spot.failures)} failures"
        lines.append(f"Rational {spot.curve} from {spot.generator}: {len(spot.points)} points, "
                     f"{spot.triples} triples, {status}")
    for failure in report.failures:
        lines.append(f"FAILURE {failure}")
    lines.append(f"Wall time: {report.wall_time:.2f}s")
    return "\n".join(lines)
