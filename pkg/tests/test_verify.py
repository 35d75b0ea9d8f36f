import io
import json
import logging
import unittest

import numpy as np
import pandas as pd

from bloch_lab.analytic import LogFixture, Polynomial
from bloch_lab.bounds import case1_bound, constant_set
from bloch_lab.codex import MapCodex
from bloch_lab.disk_geometry import pseudo_distance, random_disk_points
from bloch_lab.exceptions import DiskDomainError, NotSensePreservingError
from bloch_lab.generators import gen_quasiregular
from bloch_lab.harmonic import HarmonicMap
from bloch_lab.seminorms import (
    SupConfig,
    harmonic_bloch_seminorm,
    quasiregularity_constant,
)
from bloch_lab.verify import (
    CampaignKind,
    campaign_quasiregularity,
    case1_form,
    non_lipschitz_witness,
    run_campaign,
    run_trial,
    sharpness_search,
    stratified_pair,
    theorem1_quotient,
    theorem2_quotient,
    theorem_a_quotient,
    trial_rng,
)

from .test_params import (
    lemma_trials,
    quasiregular_trials,
    random_pairs,
    sharpness_budget,
    theorem_trials,
)

logger = logging.getLogger(__name__)


class QuotientTestCase(unittest.TestCase):
    def test_theorem1_affine(self) -> None:
        f = HarmonicMap.affine(0.5)
        quotient = theorem1_quotient(f, 1.5, 0.0, 0.5)
        self.assertAlmostEqual(quotient, 0.5, places=14)

    def test_theorem1_identity(self) -> None:
        """Test that f = z has quotient at most 1 on random pairs."""
        f = HarmonicMap.analytic(Polynomial.identity())
        rng = np.random.default_rng(50)
        z = random_disk_points(rng, 2000, 0.999)
        w = random_disk_points(rng, 2000, 0.999)
        worst = max(
            theorem1_quotient(f, 1.0, complex(a), complex(b))
            for a, b in zip(z, w)
        )
        assert worst <= 1.0 + 1e-12

    def test_theorem2_identity(self) -> None:
        f = HarmonicMap.analytic(Polynomial.identity())
        self.assertAlmostEqual(
            theorem2_quotient(f, 1.0, 1.0, 0.0, 0.5), 0.25, places=14
        )
        affine = HarmonicMap.affine(0.5)
        quotient = theorem2_quotient(affine, np.sqrt(0.75), 3.0, 0.0, 0.5)
        self.assertAlmostEqual(quotient, 0.125, places=14)

    def test_theorem_a(self) -> None:
        identity = Polynomial.identity()
        self.assertAlmostEqual(
            theorem_a_quotient(identity, 1.0, 0.0, 0.5), 0.5, places=14
        )

    def test_coincident_points(self) -> None:
        f = HarmonicMap.affine(0.5)
        with self.assertRaises(DiskDomainError):
            theorem1_quotient(f, 1.5, 0.2, 0.2)
        with self.assertRaises(DiskDomainError):
            theorem_a_quotient(Polynomial.identity(), 1.0, 0.3j, 0.3j)

    def test_theorem2_needs_positive_jacobian(self) -> None:
        reversed_map = HarmonicMap(
            h=Polynomial.identity(), g=Polynomial([0, 2])
        )
        with self.assertRaises(NotSensePreservingError):
            theorem2_quotient(reversed_map, 1.0, 3.0, 0.0, 0.5)

    def test_campaign_quasiregularity(self) -> None:
        """Test the boundary K against its closed value and the grid K."""
        cfg = SupConfig(n_radial=16, n_angular=32)
        K = campaign_quasiregularity(HarmonicMap.affine(0.5), cfg)
        self.assertAlmostEqual(K, 3.0, places=12)
        for seed in range(5):
            f, nominal = gen_quasiregular(seed, 6, 0.5)
            K = campaign_quasiregularity(f, cfg)
            assert K <= nominal * (1 + 1e-9)
            assert K >= quasiregularity_constant(f, cfg) * (1 - 1e-9)

    def test_case1_form(self) -> None:
        """Test the case-one form against its closed value for f = z."""
        f = HarmonicMap.analytic(Polynomial.identity())
        zeta = 0.2 / 0.97
        at_zeta = 0.91 / (1 - 0.3 * zeta) ** 2
        expected = zeta**2 * 0.91 + (1 - zeta**2) * abs(at_zeta - 0.91)
        form = case1_form(f, 0.1, 0.3)
        self.assertAlmostEqual(form, expected, places=14)
        assert form <= zeta**2 + 2 * constant_set().c1 * zeta


class WitnessTestCase(unittest.TestCase):
    def test_quotient_grows(self) -> None:
        """Test that log(1 - z^2) is not Lipschitz near the boundary."""
        for x in (0.9, 0.99, 0.999):
            t = (1 - x) / 100
            quotient, reference = non_lipschitz_witness(x, t)
            assert reference == 1 / (1 - x)
            assert quotient >= 0.9 * reference
            assert abs(quotient / (2 * x / (1 - x * x)) - 1) < 0.02

    def test_examples(self) -> None:
        quotient, reference = non_lipschitz_witness(0.99, 1e-4)
        self.assertAlmostEqual(reference, 100.0, places=9)
        assert 99.0 < quotient < 101.0
        quotient, _ = non_lipschitz_witness(0.9, 1e-4)
        assert abs(quotient - 9.4787) < 1e-3

    def test_domain(self) -> None:
        for x, t in ((0.0, 0.1), (1.0, 0.1), (0.5, 0.0), (0.99, 0.02)):
            with self.assertRaises(DiskDomainError):
                non_lipschitz_witness(x, t)


class StratifiedSamplingTestCase(unittest.TestCase):
    def test_strata(self) -> None:
        """Test that even trials fall in rho <= 1/3 and odd ones above."""
        for trial_id in range(2000):
            z, w = stratified_pair(trial_rng(42, trial_id), trial_id)
            rho = pseudo_distance(z, w)
            if trial_id % 2 == 0:
                assert rho <= 1 / 3 + 1e-12
            else:
                assert rho > 1 / 3 - 1e-12

    def test_trial_streams(self) -> None:
        first = trial_rng(42, 7).uniform(size=4)
        assert np.array_equal(first, trial_rng(42, 7).uniform(size=4))
        assert not np.array_equal(first, trial_rng(42, 8).uniform(size=4))
        assert not np.array_equal(first, trial_rng(43, 7).uniform(size=4))

    def test_pairs_stay_inside(self) -> None:
        rng = np.random.default_rng(51)
        for trial_id in range(random_pairs // 100):
            z, w = stratified_pair(rng, trial_id)
            assert abs(z) < 0.99 + 1e-12
            assert abs(w) < 1.0


class CampaignTestCase(unittest.TestCase):
    def test_theorem1(self) -> None:
        report = run_campaign("theorem1", seed=42, n_trials=theorem_trials)
        logger.info(f"theorem1 max quotient {report.max_quotient:.6f}")
        assert report.violations == []
        assert report.errors == []
        assert report.max_quotient <= 1.0
        assert report.argmax_trial is not None
        assert sum(report.histogram) == theorem_trials
        assert len(report.histogram) == 50
        assert set(report.stratum_max) == {
            "rho<=1/3",
            "rho>1/3",
            "case1_form",
        }
        assert report.stratum_max["case1_form"] <= 1.0
        assert [r.trial_id for r in report.records] == list(
            range(theorem_trials)
        )

    def test_theorem_a(self) -> None:
        report = run_campaign("theorem_a", seed=3, n_trials=theorem_trials)
        assert report.violations == []
        assert report.max_quotient <= 1.0
        assert report.argmax_trial.bound == 3.31

    def test_theorem2(self) -> None:
        for k in (0.1, 0.5, 0.9):
            report = run_campaign(
                CampaignKind.THEOREM2,
                seed=11,
                n_trials=quasiregular_trials,
                k=k,
            )
            logger.info(f"theorem2 k={k} max {report.max_quotient:.6f}")
            assert report.violations == []
            assert report.errors == []
            assert report.max_quotient <= 1.0
            for record in report.records:
                assert type(record.quotient) is float
                assert type(record.violated) is bool
            data = json.loads(report.to_json())
            assert data["argmax_trial"]["violated"] is False

    def test_lemmas(self) -> None:
        for kind in ("lemma21", "lemma22", "lemma23"):
            report = run_campaign(kind, seed=5, n_trials=lemma_trials)
            logger.info(f"{kind} max ratio {report.max_quotient:.6f}")
            assert report.violations == [], kind
            assert report.errors == [], kind

    def test_deterministic_across_threads(self) -> None:
        """Test that the report does not depend on the worker count."""
        cfg = SupConfig(n_radial=16, n_angular=32)
        single = run_campaign("theorem1", seed=7, n_trials=12, cfg=cfg)
        pooled = run_campaign(
            "theorem1", seed=7, n_trials=12, cfg=cfg, threads=4
        )
        assert single.to_json() == pooled.to_json()
        assert single.to_csv() == pooled.to_csv()
        assert "runtime_ms" not in single.to_dict()
        assert "runtime_ms" in single.to_dict(include_runtime=True)

    def test_bound_scale_produces_violations(self) -> None:
        cfg = SupConfig(n_radial=16, n_angular=32)
        report = run_campaign(
            "theorem1", seed=7, n_trials=4, cfg=cfg, bound_scale=1e-9
        )
        assert len(report.violations) == 4
        assert all(record.violated for record in report.violations)

    def test_csv(self) -> None:
        cfg = SupConfig(n_radial=16, n_angular=32)
        report = run_campaign("theorem1", seed=1, n_trials=6, cfg=cfg)
        frame = pd.read_csv(io.StringIO(report.to_csv()))
        assert list(frame.columns) == [
            "trial_id",
            "rho",
            "quotient",
            "bound",
            "violated",
        ]
        assert frame["trial_id"].tolist() == list(range(6))
        assert not frame["violated"].any()

    def test_report_is_json(self) -> None:
        cfg = SupConfig(n_radial=16, n_angular=32)
        report = run_campaign("lemma23", seed=2, n_trials=4, cfg=cfg)
        data = json.loads(report.to_json())
        assert data["campaign_name"] == "lemma23"
        assert data["n_trials"] == 4
        assert data["argmax_trial"]["trial_id"] in range(4)

    def test_single_trial(self) -> None:
        cfg = SupConfig(n_radial=16, n_angular=32)
        record, case1 = run_trial("theorem1", 9, 0, cfg)
        assert record.rho <= 1 / 3 + 1e-12
        f = MapCodex.json2map(record.function_spec)
        norm = harmonic_bloch_seminorm(f, cfg).value
        form = case1_form(f, record.z.value, record.w.value)
        expected = form / (case1_bound(record.rho) * norm)
        self.assertAlmostEqual(case1, expected, places=12)
        record, case1 = run_trial("theorem1", 9, 1, cfg)
        assert case1 is None

    def test_invalid_arguments(self) -> None:
        with self.assertRaises(ValueError):
            run_campaign("theorem3", n_trials=1)
        with self.assertRaises(ValueError):
            run_campaign("theorem1", n_trials=0)

    def test_print_stats(self) -> None:
        cfg = SupConfig(n_radial=16, n_angular=32)
        report = run_campaign("theorem1", seed=42, n_trials=20, cfg=cfg)
        print(f"Trials: {report.n_trials}")
        print(f"Largest normalized quotient: {report.max_quotient:.4f}")
        for stratum, value in report.stratum_max.items():
            print(f"  {stratum}: {value:.4f}")


class SharpnessTestCase(unittest.TestCase):
    def test_search(self) -> None:
        report = sharpness_search("theorem1", seed=42, budget=sharpness_budget)
        logger.info(f"sharpness best ratio {report.max_quotient:.6f}")
        assert 0.0 < report.max_quotient <= 1.0
        assert report.argmax_trial.quotient >= 0.5
        assert report.violations == []
        assert report.campaign_name == "sharpness_theorem1"

    def test_budget_is_monotone(self) -> None:
        """Test that a larger budget never lowers the best quotient."""
        small = sharpness_search("theorem1", seed=3, budget=100)
        large = sharpness_search("theorem1", seed=3, budget=150)
        assert large.max_quotient >= small.max_quotient
        again = sharpness_search("theorem1", seed=3, budget=100)
        assert again.to_json() == small.to_json()

    def test_analytic_restriction(self) -> None:
        report = sharpness_search(
            "theorem1", seed=4, budget=100, analytic=True
        )
        assert report.argmax_trial.bound == 3.31
        assert report.max_quotient <= 1.0
        assert report.argmax_trial.function_spec["g"] == [[0.0, 0.0]]

    def test_theorem2(self) -> None:
        report = sharpness_search("theorem2", seed=5, budget=100)
        assert report.max_quotient <= 1.0
        assert report.argmax_trial.bound == constant_set().c3
        data = json.loads(report.to_json())
        assert data["argmax_trial"]["violated"] is False
        assert type(data["max_quotient"]) is float

    def test_invalid(self) -> None:
        with self.assertRaises(ValueError):
            sharpness_search("lemma21")
        with self.assertRaises(ValueError):
            sharpness_search("theorem1", budget=10)

    def test_log_fixture_is_bloch_but_not_lipschitz(self) -> None:
        f = HarmonicMap.analytic(LogFixture())
        quotient = theorem1_quotient(f, 2.0, 0.99, 0.995)
        assert quotient <= constant_set().c2
