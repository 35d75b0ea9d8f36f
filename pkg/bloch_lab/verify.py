"""Seeded certification campaigns for the Lipschitz estimates.

A campaign draws one function and one pair (z, w) per trial, estimates the
norms the estimate is stated in, and records the quotient of the left side
by everything on the right side except the constant. Norm estimates are
lower bounds and sit in denominators, so reported quotients err upward.

Pairs are stratified through zeta = phi_z(w): even trials take
rho(z, w) = |zeta| <= 1/3, odd trials rho > 1/3.
"""

import io
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np
import pandas as pd

from . import settings
from .analytic import AnalyticFunction, LogFixture
from .bounds import case1_bound, constant_set, lemma23_pair
from .codex import MapCodex
from .disk_geometry import DiskPoint, as_point, phi, pseudo_distance
from .exceptions import (
    BlochLabError,
    DiskDomainError,
    NotSensePreservingError,
)
from .generators import gen_harmonic, gen_quasiregular
from .harmonic import HarmonicMap
from .seminorms import (
    SupConfig,
    bloch_seminorm,
    bloch_type_seminorm,
    dilatation_sup,
    harmonic_bloch_seminorm,
)

logger = logging.getLogger(__name__)

# Campaign functions stay small so a trial costs a few grid searches.
CAMPAIGN_MAX_DEGREE = 12
Z_MAX = 0.99
ZETA_MIN = 1e-6
ZETA_MAX = 0.99
LEMMA21_W_MAX = 0.5
LEMMA21_RELATIVE_BOUND = 1e-4
DEFAULT_K_VALUES = (0.1, 0.5, 0.9)


class CampaignKind(str, Enum):
    THEOREM_A = "theorem_a"
    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    LEMMA21 = "lemma21"
    LEMMA22 = "lemma22"
    LEMMA23 = "lemma23"


@dataclass(frozen=True)
class TrialRecord:
    """One certified instance.
    quotient: lhs over the constant-free right side; bound: the constant
    it is certified against; violated when quotient exceeds bound by more
    than the slack.
    """

    trial_id: int
    function_spec: dict
    z: DiskPoint
    w: DiskPoint
    lhs: float
    rhs: float
    quotient: float
    bound: float
    violated: bool
    rho: float = 0.0
    tolerance_rel: float = 0.0

    @property
    def ratio(self) -> float:
        return self.quotient / self.bound

    def to_dict(self) -> dict[str, Any]:
        return {
            "trial_id": self.trial_id,
            "function_spec": self.function_spec,
            "z": self.z.to_pair(),
            "w": self.w.to_pair(),
            "rho": self.rho,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "quotient": self.quotient,
            "bound": self.bound,
            "violated": self.violated,
        }


@dataclass
class CampaignReport:
    campaign_name: str
    seed: int
    n_trials: int
    max_quotient: float
    argmax_trial: TrialRecord | None
    violations: list[TrialRecord]
    histogram: list[int]
    runtime_ms: float
    stratum_max: dict[str, float] = field(default_factory=dict)
    errors: list[dict[str, Any]] = field(default_factory=list)
    records: list[TrialRecord] = field(default_factory=list, repr=False)

    def to_dict(self, include_runtime: bool = False) -> dict[str, Any]:
        data = {
            "campaign_name": self.campaign_name,
            "seed": self.seed,
            "n_trials": self.n_trials,
            "max_quotient": self.max_quotient,
            "argmax_trial": (
                None
                if self.argmax_trial is None
                else self.argmax_trial.to_dict()
            ),
            "violations": [record.to_dict() for record in self.violations],
            "histogram": self.histogram,
            "stratum_max": self.stratum_max,
            "errors": self.errors,
        }
        if include_runtime:
            data["runtime_ms"] = self.runtime_ms
        return data

    def to_json(self, include_runtime: bool = False) -> str:
        return json.dumps(self.to_dict(include_runtime), indent=2)

    def to_csv(self) -> str:
        frame = pd.DataFrame(
            [
                {
                    "trial_id": record.trial_id,
                    "rho": record.rho,
                    "quotient": record.quotient,
                    "bound": record.bound,
                    "violated": record.violated,
                }
                for record in self.records
            ],
            columns=["trial_id", "rho", "quotient", "bound", "violated"],
        )
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False)
        return buffer.getvalue()


#
# Quotients
#
def _weighted(values, z):
    return (1.0 - abs(z) ** 2) * values


def _separation(z: complex, w: complex) -> float:
    separation = pseudo_distance(z, w)
    if separation == 0.0:
        raise DiskDomainError("z and w coincide")
    return separation


def theorem_a_quotient(
    h: AnalyticFunction,
    norm_b: float,
    z: "DiskPoint | complex",
    w: "DiskPoint | complex",
) -> float:
    """|(1-|z|^2)|h'(z)| - (1-|w|^2)|h'(w)|| / (rho(z, w) ||h||_B)"""
    z, w = as_point(z).value, as_point(w).value
    lhs = abs(
        _weighted(abs(complex(h.deriv(z))), z)
        - _weighted(abs(complex(h.deriv(w))), w)
    )
    return lhs / (_separation(z, w) * norm_b)


def theorem1_quotient(
    f: HarmonicMap,
    norm_bh: float,
    z: "DiskPoint | complex",
    w: "DiskPoint | complex",
) -> float:
    """|(1-|z|^2) Lambda_f(z) - (1-|w|^2) Lambda_f(w)| / (rho ||f||_{B_h})"""
    z, w = as_point(z).value, as_point(w).value
    lhs = abs(
        _weighted(float(f.big_lambda(z)), z)
        - _weighted(float(f.big_lambda(w)), w)
    )
    return lhs / (_separation(z, w) * norm_bh)


def theorem2_quotient(
    f: HarmonicMap,
    norm_bhstar: float,
    K: float,
    z: "DiskPoint | complex",
    w: "DiskPoint | complex",
) -> float:
    """|(1-|z|^2) sqrt J_f(z) - (1-|w|^2) sqrt J_f(w)|
    / ((K + 1) rho ||f||_{B_h*})
    """
    z, w = as_point(z).value, as_point(w).value
    jz, jw = float(f.jacobian(z)), float(f.jacobian(w))
    if jz <= 0.0 or jw <= 0.0:
        raise NotSensePreservingError("J_f is not positive at z or w")
    lhs = abs(_weighted(np.sqrt(jz), z) - _weighted(np.sqrt(jw), w))
    return float(lhs / ((K + 1.0) * _separation(z, w) * norm_bhstar))


def case1_form(f: HarmonicMap, z: complex, w: complex) -> float:
    """|zeta|^2 Lambda_psi(0) + (1-|zeta|^2)|Lambda_psi(zeta)-Lambda_psi(0)|
    with psi = f o phi_w and zeta = phi_w(z).
    """
    psi = f.compose_with_mobius(w)
    zeta = complex(phi(w, z))
    at_origin = float(psi.big_lambda(0.0))
    at_zeta = float(psi.big_lambda(zeta))
    t = abs(zeta) ** 2
    return t * at_origin + (1.0 - t) * abs(at_zeta - at_origin)


def non_lipschitz_witness(x: float, t: float) -> tuple[float, float]:
    """Difference quotient of log(1 - z^2) between x and x + t, with the
    reference growth 1/(1 - x).
    """
    if not 0.0 < x < 1.0 or t <= 0.0:
        raise DiskDomainError(f"need 0 < x < 1 and t > 0, got x={x}, t={t}")
    if x + t >= 1.0:
        raise DiskDomainError(f"x + t = {x + t} leaves the disk")
    h = LogFixture()
    quotient = abs(complex(h.eval(x) - h.eval(x + t))) / t
    return quotient, 1.0 / (1.0 - x)


#
# Campaigns
#
def trial_rng(seed: int, trial_id: int) -> np.random.Generator:
    """Stream of one trial, independent of scheduling."""
    return np.random.default_rng(np.random.SeedSequence([seed, trial_id]))


def stratified_pair(
    rng: np.random.Generator, trial_id: int
) -> tuple[complex, complex]:
    """z uniform by area, w = phi_z(zeta) so rho(z, w) = |zeta| exactly."""
    radius = Z_MAX * np.sqrt(rng.uniform())
    z = radius * np.exp(2j * np.pi * rng.uniform())
    if trial_id % 2 == 0:
        modulus = rng.uniform(ZETA_MIN, settings.STRATUM_THRESHOLD)
    else:
        modulus = rng.uniform(settings.STRATUM_THRESHOLD, ZETA_MAX)
    zeta = modulus * np.exp(2j * np.pi * rng.uniform())
    return complex(z), complex(phi(z, zeta))


def _k_for(trial_id: int, k: float | None) -> float:
    if k is not None:
        return k
    return DEFAULT_K_VALUES[trial_id % len(DEFAULT_K_VALUES)]


def campaign_quasiregularity(f: HarmonicMap, cfg: SupConfig) -> float:
    """K(f) = (1 + k) / (1 - k) with k the maximum of |g'/h'| on the circle
    of radius cfg.r_max. omega is analytic, so its maximum over the closed
    disk sits on that circle.
    """
    k = dilatation_sup(f, n_boundary=4 * cfg.n_angular, r_max=cfg.r_max)
    if k >= 1.0:
        raise NotSensePreservingError(f"dilatation reaches {k:.6g}")
    return (1.0 + k) / (1.0 - k)


@dataclass(frozen=True)
class _Outcome:
    """Quotient of one trial and the norms it was computed from."""

    lhs: float
    rhs: float
    quotient: float
    tolerance_rel: float
    case1_ratio: float | None = None


def _theorem_a(h, z, w, cfg):
    estimate = bloch_seminorm(h, cfg)
    norm = estimate.value
    quotient = theorem_a_quotient(h, norm, z, w)
    rhs = pseudo_distance(z, w) * norm
    return _Outcome(quotient * rhs, rhs, quotient, estimate.relative_tolerance)


def _theorem1(f, z, w, cfg):
    estimate = harmonic_bloch_seminorm(f, cfg)
    norm = estimate.value
    quotient = theorem1_quotient(f, norm, z, w)
    separation = pseudo_distance(z, w)
    rhs = separation * norm
    case1_ratio = None
    if separation <= settings.STRATUM_THRESHOLD:
        case1_ratio = case1_form(f, z, w) / (case1_bound(separation) * norm)
    return _Outcome(
        quotient * rhs,
        rhs,
        quotient,
        estimate.relative_tolerance,
        case1_ratio,
    )


def _theorem2(f, z, w, cfg):
    estimate = bloch_type_seminorm(f, cfg)
    K = campaign_quasiregularity(f, cfg)
    quotient = theorem2_quotient(f, estimate.value, K, z, w)
    rhs = (K + 1.0) * pseudo_distance(z, w) * estimate.value
    return _Outcome(quotient * rhs, rhs, quotient, estimate.relative_tolerance)


def _lemma21(f, w, cfg):
    moved = f.compose_with_mobius(w)
    worst, tolerance = 0.0, 0.0
    for seminorm in (harmonic_bloch_seminorm, bloch_type_seminorm):
        a, b = seminorm(f, cfg), seminorm(moved, cfg)
        scale = max(a.value, b.value, 1e-300)
        worst = max(worst, abs(a.value - b.value) / scale)
        tolerance = max(tolerance, a.relative_tolerance, b.relative_tolerance)
    return _Outcome(worst, 1.0, worst, tolerance)


def _lemma22(f, cfg):
    bh = harmonic_bloch_seminorm(f, cfg)
    bhs = bloch_type_seminorm(f, cfg)
    K = campaign_quasiregularity(f, cfg)
    lower = bhs.value / bh.value
    upper = bh.value / (np.sqrt(K) * bhs.value)
    tolerance = max(bh.relative_tolerance, bhs.relative_tolerance)
    worst = max(lower, upper)
    return _Outcome(worst, 1.0, worst, tolerance)


def _lemma23(h, w, zeta, cfg):
    estimate = bloch_seminorm(h, cfg)
    lhs, rhs = lemma23_pair(h, w, zeta, estimate.value)
    unit = abs(zeta) * estimate.value
    quotient = 0.0 if unit == 0.0 else lhs / unit
    return _Outcome(lhs, rhs, quotient, estimate.relative_tolerance)


def _bound_for(kind: CampaignKind) -> float:
    constants = constant_set()
    return {
        CampaignKind.THEOREM_A: constants.theorem_a_constant,
        CampaignKind.THEOREM1: constants.c2,
        CampaignKind.THEOREM2: constants.c3,
        CampaignKind.LEMMA21: LEMMA21_RELATIVE_BOUND,
        CampaignKind.LEMMA22: 1.0,
        CampaignKind.LEMMA23: constants.c1,
    }[kind]


def _evaluate(kind, rng, trial_id, cfg, k):
    """Draw the trial's data and compute its outcome under `cfg`."""
    degree = int(rng.integers(1, CAMPAIGN_MAX_DEGREE + 1))
    if kind in (CampaignKind.THEOREM_A, CampaignKind.LEMMA23):
        f = gen_harmonic(rng, degree, analytic=True)
    elif kind in (CampaignKind.THEOREM2, CampaignKind.LEMMA22):
        f, _ = gen_quasiregular(rng, degree, _k_for(trial_id, k))
    else:
        f = gen_harmonic(rng, degree)
    z, w = stratified_pair(rng, trial_id)
    zeta = complex(phi(w, z))
    if kind == CampaignKind.LEMMA21:
        w = LEMMA21_W_MAX * w
    elif kind == CampaignKind.LEMMA23:
        # the lemma only covers |zeta| <= 1/3
        if abs(zeta) > settings.STRATUM_THRESHOLD:
            modulus = rng.uniform(ZETA_MIN, settings.STRATUM_THRESHOLD)
            zeta *= modulus / abs(zeta)
        z = complex(phi(w, zeta))

    def outcome(grid: SupConfig) -> _Outcome:
        if kind == CampaignKind.THEOREM_A:
            return _theorem_a(f.h, z, w, grid)
        if kind == CampaignKind.THEOREM1:
            return _theorem1(f, z, w, grid)
        if kind == CampaignKind.THEOREM2:
            return _theorem2(f, z, w, grid)
        if kind == CampaignKind.LEMMA21:
            return _lemma21(f, w, grid)
        if kind == CampaignKind.LEMMA22:
            return _lemma22(f, grid)
        return _lemma23(f.h, w, zeta, grid)

    return f, z, w, outcome


def run_trial(
    kind: CampaignKind,
    seed: int,
    trial_id: int,
    cfg: SupConfig,
    k: float | None = None,
    bound_scale: float = 1.0,
) -> tuple[TrialRecord, float | None]:
    kind = CampaignKind(kind)
    rng = trial_rng(seed, trial_id)
    bound = _bound_for(kind) * bound_scale
    f, z, w, outcome = _evaluate(kind, rng, trial_id, cfg, k)
    result = outcome(cfg)
    if result.quotient > settings.NEAR_VIOLATION_RATIO * bound:
        logger.warning(
            "trial %d of %s at %.6f of its bound, re-estimating norms",
            trial_id,
            kind.value,
            result.quotient / bound,
        )
        finer = outcome(cfg.refined(2))
        # norm estimates only grow under refinement
        if finer.quotient < result.quotient:
            result = finer
    threshold = bound * (1.0 + settings.SLACK_FACTOR * result.tolerance_rel)
    record = TrialRecord(
        trial_id=trial_id,
        function_spec=MapCodex.map2json(f),
        z=DiskPoint(z),
        w=DiskPoint(w),
        lhs=float(result.lhs),
        rhs=float(result.rhs),
        quotient=float(result.quotient),
        bound=bound,
        violated=bool(result.quotient > threshold),
        rho=pseudo_distance(z, w),
        tolerance_rel=float(result.tolerance_rel),
    )
    if record.violated:
        logger.error(
            "trial %d of %s violates its bound: %.12g > %.12g",
            trial_id,
            kind.value,
            result.quotient,
            bound,
        )
    return record, result.case1_ratio


def _workers(threads: int) -> int:
    if threads > 0:
        return threads
    return os.cpu_count() or 1


def _attempt(job: tuple) -> "tuple[TrialRecord, float | None] | dict":
    """Run one trial in a worker process; errors come back as data."""
    kind, seed, trial_id, cfg, k, bound_scale = job
    try:
        return run_trial(kind, seed, trial_id, cfg, k, bound_scale)
    except BlochLabError as error:
        logger.warning("trial %d failed: %s", trial_id, error)
        return {"trial_id": trial_id, "error": str(error)}


def _histogram(ratios: np.ndarray) -> list[int]:
    upper = max(1.0, float(ratios.max())) if ratios.size else 1.0
    counts, _ = np.histogram(
        ratios, bins=settings.HISTOGRAM_BINS, range=(0.0, upper)
    )
    return [int(count) for count in counts]


def assemble_report(
    name: str,
    seed: int,
    n_trials: int,
    records: list[TrialRecord],
    errors: list[dict[str, Any]],
    runtime_ms: float,
    stratum_max: dict[str, float] | None = None,
) -> CampaignReport:
    """Deterministic merge keyed by trial_id."""
    records = sorted(records, key=lambda record: record.trial_id)
    errors = sorted(errors, key=lambda error: error["trial_id"])
    ratios = np.array([record.ratio for record in records])
    argmax = records[int(np.argmax(ratios))] if records else None
    return CampaignReport(
        campaign_name=name,
        seed=seed,
        n_trials=n_trials,
        max_quotient=float(ratios.max()) if ratios.size else 0.0,
        argmax_trial=argmax,
        violations=[record for record in records if record.violated],
        histogram=_histogram(ratios),
        runtime_ms=runtime_ms,
        stratum_max=stratum_max or {},
        errors=errors,
        records=records,
    )


def run_campaign(
    kind: "CampaignKind | str",
    seed: int = settings.DEFAULT_SEED,
    n_trials: int = 1000,
    cfg: SupConfig = SupConfig(),
    threads: int = 1,
    k: float | None = None,
    bound_scale: float = 1.0,
) -> CampaignReport:
    """Certify one estimate over n_trials seeded trials.
    threads: worker processes, 0 for one per CPU; 1 runs in this process.
    k: fixed dilatation bound for quasiregular kinds; cycles through
    0.1, 0.5, 0.9 when None.
    bound_scale: multiplies the certified constant.
    """
    if n_trials < 1:
        raise ValueError(f"n_trials must be at least 1, got {n_trials}")
    kind = CampaignKind(kind)
    logger.info(
        "campaign %s: seed=%d trials=%d", kind.value, seed, n_trials
    )
    start = time.perf_counter()

    jobs = [
        (kind, seed, trial_id, cfg, k, bound_scale)
        for trial_id in range(n_trials)
    ]
    workers = min(_workers(threads), n_trials)
    if workers == 1:
        results = [_attempt(job) for job in jobs]
    else:
        chunksize = max(1, n_trials // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_attempt, jobs, chunksize=chunksize))

    records, errors = [], []
    strata = {"rho<=1/3": 0.0, "rho>1/3": 0.0}
    case1 = 0.0
    for result in results:
        if isinstance(result, dict):
            errors.append(result)
            continue
        record, case1_ratio = result
        records.append(record)
        key = (
            "rho<=1/3"
            if record.rho <= settings.STRATUM_THRESHOLD
            else "rho>1/3"
        )
        strata[key] = max(strata[key], record.ratio)
        if case1_ratio is not None:
            case1 = max(case1, case1_ratio)
    if kind == CampaignKind.THEOREM1:
        strata["case1_form"] = case1

    report = assemble_report(
        kind.value,
        seed,
        n_trials,
        records,
        errors,
        (time.perf_counter() - start) * 1000.0,
        strata,
    )
    logger.info(
        "campaign %s done: max quotient %.6f, %d violations, %d errors",
        kind.value,
        report.max_quotient,
        len(report.violations),
        len(report.errors),
    )
    return report


#
# Sharpness
#
SHARPNESS_CONFIG = SupConfig(n_radial=16, n_angular=32, refine_top=2)
SHARPNESS_STEPS = 50
SHARPNESS_DEGREE = 4
SHARPNESS_STEP = 0.05


def _perturb_pair(rng, z, zeta, scale):
    """Gaussian step on z and on zeta = phi_z(w), both kept in the disk."""
    z = z + scale * complex(rng.normal(), rng.normal())
    if abs(z) >= Z_MAX:
        z *= Z_MAX / abs(z)
    zeta = zeta + scale * complex(rng.normal(), rng.normal())
    if abs(zeta) >= ZETA_MAX:
        zeta *= ZETA_MAX / abs(zeta)
    return z, zeta


def _perturb_map(rng, f: HarmonicMap, scale: float, analytic: bool):
    def nudge(p):
        c = p.coefficients
        bound = scale / np.arange(1, c.size + 1)
        noise = rng.normal(size=c.size) + 1j * rng.normal(size=c.size)
        return type(p)(c + bound * noise)

    h = nudge(f.h)
    return HarmonicMap.analytic(h) if analytic else HarmonicMap(h, nudge(f.g))


def sharpness_search(
    kind: "CampaignKind | str",
    seed: int = settings.DEFAULT_SEED,
    budget: int = 10_000,
    cfg: SupConfig = SHARPNESS_CONFIG,
    analytic: bool = False,
) -> CampaignReport:
    """Random-restart hill climbing on the normalized quotient.
    Each restart owns its own stream and a fixed number of steps, so a
    larger budget only appends evaluations and the running maximum never
    decreases. The result is an empirical lower bound on the optimal
    constant, not a claim of sharpness.
    theorem1 climbs over coefficients and (z, w); theorem2 keeps the
    quasiregular map of a restart fixed and climbs over (z, w).
    analytic: restrict theorem1 to g = 0 and compare against 3.31.
    """
    kind = CampaignKind(kind)
    if kind not in (CampaignKind.THEOREM1, CampaignKind.THEOREM2):
        raise ValueError("sharpness search supports theorem1 and theorem2")
    if budget < 100:
        raise ValueError(f"budget must be at least 100, got {budget}")
    start = time.perf_counter()
    constants = constant_set()
    if kind == CampaignKind.THEOREM2:
        bound = constants.c3
    elif analytic:
        bound = constants.theorem_a_constant
    else:
        bound = constants.c2

    def score(f, z, w):
        if kind == CampaignKind.THEOREM1:
            norm = harmonic_bloch_seminorm(f, cfg).value
            return theorem1_quotient(f, norm, z, w)
        norm = bloch_type_seminorm(f, cfg).value
        K = campaign_quasiregularity(f, cfg)
        return theorem2_quotient(f, norm, K, z, w)

    records: list[TrialRecord] = []
    ratios: list[float] = []
    errors: list[dict[str, Any]] = []
    best = -np.inf
    spent, restart = 0, 0
    while spent < budget:
        rng = trial_rng(seed, restart)
        if kind == CampaignKind.THEOREM1:
            f = gen_harmonic(rng, SHARPNESS_DEGREE, analytic=analytic)
        else:
            k = DEFAULT_K_VALUES[restart % len(DEFAULT_K_VALUES)]
            f, _ = gen_quasiregular(rng, SHARPNESS_DEGREE, k)
        z, w = stratified_pair(rng, restart)
        zeta = complex(phi(z, w))
        current = -np.inf
        for _ in range(min(SHARPNESS_STEPS, budget - spent)):
            spent += 1
            candidate_f, cz, czeta = f, z, zeta
            if current > -np.inf:
                cz, czeta = _perturb_pair(rng, z, zeta, SHARPNESS_STEP)
                if kind == CampaignKind.THEOREM1 and rng.uniform() < 0.5:
                    candidate_f = _perturb_map(
                        rng, f, SHARPNESS_STEP, analytic
                    )
            w = complex(phi(cz, czeta))
            try:
                quotient = score(candidate_f, cz, w)
            except BlochLabError as error:
                errors.append({"trial_id": spent - 1, "error": str(error)})
                continue
            ratios.append(quotient / bound)
            if quotient <= current:
                continue
            f, z, zeta, current = candidate_f, cz, czeta, quotient
            if quotient <= best:
                continue
            best = quotient
            records.append(
                TrialRecord(
                    trial_id=spent - 1,
                    function_spec=MapCodex.map2json(f),
                    z=DiskPoint(z),
                    w=DiskPoint(w),
                    lhs=float(quotient),
                    rhs=1.0,
                    quotient=float(quotient),
                    bound=bound,
                    violated=bool(quotient > bound),
                    rho=abs(zeta),
                )
            )
        restart += 1

    name = f"sharpness_{kind.value}" + ("_analytic" if analytic else "")
    report = assemble_report(
        name,
        seed,
        budget,
        records,
        errors,
        (time.perf_counter() - start) * 1000.0,
    )
    report.histogram = _histogram(np.array(ratios))
    logger.info(
        "sharpness %s: best quotient %.6f after %d evaluations",
        kind.value,
        best,
        spent,
    )
    return report
