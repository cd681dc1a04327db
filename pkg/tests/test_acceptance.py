"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s`.  The Monte-Carlo checks
are property-based (no violation verdicts at the stated tolerances), with
deterministic seeds so reruns are exact.
"""

import time

import numpy as np
import pytest

from mubcorr.conjectures import bound_ladder, kappa1, kappa2
from mubcorr.harness import ExperimentConfig, run, trial_rng
from mubcorr.isotropic import iso_ecqc_gap, iso_measured_mi, iso_mutual_information
from mubcorr.measure import classical_mi, joint_distribution, one_sided_mi
from mubcorr.mubs import mub_family, overlap_matrix
from mubcorr.states import (
    BipartiteState,
    isotropic,
    isotropic_p_range,
    maximally_entangled,
    quantum_mutual_information,
    random_mixed,
    random_pure,
)
from reference_data import families_match, published_family_d3, published_family_d5

SEED = 987654321


def report(number: int, name: str, ok: bool, detail: str = "") -> None:
    line = f"CRITERION {number} ({name}): {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  [{detail}]"
    print(line)
    assert ok, line


@pytest.fixture(scope="session")
def mc_runs(tmp_path_factory):
    """Criterion-5 Monte-Carlo campaigns, shared with criterion 6."""
    out = tmp_path_factory.mktemp("mc")
    runs = {}
    t0 = time.perf_counter()
    for key, command, dim, n in (
        ("cqc-d2", "check-cqc", 2, 10_000),
        ("ecqc-d3", "check-ecqc", 3, 10_000),
        ("ecqc-d5", "check-ecqc", 5, 1_000),
    ):
        cfg = ExperimentConfig(
            command=command, dim=dim, n_trials=n, state_kind="mixed",
            seed=SEED, threads=0, out_path=str(out / f"{key}.csv"),
        )
        runs[key] = run(cfg)
    return runs, time.perf_counter() - t0


def test_criterion_1_mub_correctness():
    t0 = time.perf_counter()
    for d in (2, 3, 5, 7, 11, 13):
        fam = mub_family(d)
        assert len(fam) == d + 1
        for i in range(d + 1):
            unitarity = np.linalg.norm(
                fam[i].matrix.conj().T @ fam[i].matrix - np.eye(d)
            )
            assert unitarity < 1e-10
            for j in range(i + 1, d + 1):
                assert np.abs(overlap_matrix(fam[i], fam[j]) - 1 / d).max() < 1e-10
    match3 = families_match([b.matrix for b in mub_family(3)], published_family_d3())
    match5 = families_match([b.matrix for b in mub_family(5)], published_family_d5())
    elapsed = time.perf_counter() - t0
    report(
        1, "MUB correctness", match3 and match5 and elapsed < 1.0,
        f"d=3/d=5 published match, {elapsed:.2f}s",
    )


def test_criterion_2_isotropic_agreement():
    t0 = time.perf_counter()
    worst_mi = worst_zz = worst_other = 0.0
    for d in (3, 5):
        fam = mub_family(d)
        lo, hi = isotropic_p_range(d)
        for p in np.linspace(lo, hi, 50):
            st = isotropic(d, float(p))
            worst_mi = max(
                worst_mi,
                abs(quantum_mutual_information(st) - iso_mutual_information(d, float(p))),
            )
            zz = classical_mi(joint_distribution(st, fam[0], fam[0]))
            worst_zz = max(worst_zz, abs(zz - iso_measured_mi(d, float(p))))
            for basis in fam[2:]:
                worst_other = max(
                    worst_other, classical_mi(joint_distribution(st, basis, basis))
                )
    elapsed = time.perf_counter() - t0
    ok = worst_mi < 1e-9 and worst_zz < 1e-9 and worst_other < 1e-9 and elapsed < 30.0
    report(
        2, "isotropic analytic/numeric", ok,
        f"|dI|={worst_mi:.1e} |dI_ZZ|={worst_zz:.1e} other={worst_other:.1e} {elapsed:.1f}s",
    )


def test_criterion_3_tightness_point():
    lhs = iso_mutual_information(3, 1.0)
    rhs = 2 * iso_measured_mi(3, 1.0)
    gap = iso_ecqc_gap(3, 1.0)
    two_log3 = 2 * np.log2(3.0)
    ok = abs(gap) < 1e-9 and abs(lhs - two_log3) < 1e-9 and abs(rhs - two_log3) < 1e-9
    report(3, "tightness at d=3, p=1", ok, f"both sides {lhs:.6f} =~ {two_log3:.6f}")


def test_criterion_4_theorem_ladder():
    t0 = time.perf_counter()
    worst_slack = np.inf
    worst_dpi1 = worst_dpi2 = np.inf
    for d in (2, 3, 5):
        fam = mub_family(d)
        rng = trial_rng(SEED, 40_000 + d)
        states = [random_pure(d, rng) for _ in range(1_000)]
        states += [random_mixed(d, rng=rng) for _ in range(1_000)]
        for st in states:
            ladder = bound_ladder(st, fam)
            worst_slack = min(worst_slack, min(ladder.proven_slacks()))
            i_ab = quantum_mutual_information(st)
            for basis in fam:
                two = classical_mi(joint_distribution(st, basis, basis))
                one = one_sided_mi(st, basis, "A")
                worst_dpi1 = min(worst_dpi1, one - two)
                worst_dpi2 = min(worst_dpi2, i_ab - one)
    elapsed = time.perf_counter() - t0
    ok = (
        worst_slack >= -1e-9
        and worst_dpi1 >= -1e-9
        and worst_dpi2 >= -2e-9
        and elapsed < 600.0
    )
    report(
        4, "theorem ladder", ok,
        f"min slack={worst_slack:.2e} min DPI steps=({worst_dpi1:.2e},{worst_dpi2:.2e}) {elapsed:.0f}s",
    )


def test_criterion_5_conjecture_reproduction(mc_runs):
    runs, elapsed = mc_runs
    violations = sum(r.counts.get("VIOLATION", 0) for r in runs.values())
    warn_lines = []
    for key, result in runs.items():
        for rec in result.records:
            if rec.verdict == "WARN":
                warn_lines.append(f"{key} trial {rec.trial_id}: gap {rec.verdict_gap:.3e}")
    for line in warn_lines:
        print(f"  WARN: {line}")
    sizes = {k: len(r.records) for k, r in runs.items()}
    ok = (
        violations == 0
        and sizes == {"cqc-d2": 10_000, "ecqc-d3": 10_000, "ecqc-d5": 1_000}
        and all(r.exit_code == 0 for r in runs.values())
        and elapsed < 900.0
    )
    report(
        5, "desk-scale conjecture reproduction", ok,
        f"0 violations, {len(warn_lines)} warns, {elapsed:.0f}s",
    )


def test_criterion_6_sufficient_condition_implications(mc_runs, tmp_path):
    runs, _ = mc_runs
    cqc_ok = ecqc_ok = True
    n_suff_cqc = n_suff_ecqc = 0
    for result in runs.values():
        for rec in result.records:
            if rec.suff_cqc_satisfied:
                n_suff_cqc += 1
                cqc_ok &= rec.cqc_gap >= -1e-9
            if rec.suff_ecqc_satisfied:
                n_suff_ecqc += 1
                ecqc_ok &= rec.ecqc_gap >= -1e-9
    scatter = run(
        ExperimentConfig(
            command="suffcond-scatter", dim=2, n_trials=100, seed=SEED,
            threads=0, out_path=str(tmp_path / "scatter.csv"),
        )
    )
    scatter_ok = len(scatter.records) >= 100 and all(
        r.cqc_gap >= -1e-9 for r in scatter.records
    )
    ok = cqc_ok and ecqc_ok and scatter_ok
    report(
        6, "sufficient-condition implications", ok,
        f"suff-cqc fired {n_suff_cqc}, suff-ecqc fired {n_suff_ecqc}, "
        f"{len(scatter.records)} filtered separable states",
    )


def test_criterion_7_kappa_diagnostics():
    identical = True
    rng = trial_rng(SEED, 70_001)
    for d in (2, 3, 5):
        fam = mub_family(d)
        for _ in range(50):
            st = random_mixed(d, rng=rng)
            k1 = kappa1(st, fam[0], fam[1])
            mu = bound_ladder(st, fam).maassen_uffink_slack
            identical &= abs(k1 - mu) < 1e-12
    mixed_ok = all(
        abs(kappa2(BipartiteState(np.eye(d * d) / d**2, d), mub_family(d))) < 1e-9
        for d in (3, 5)
    )
    entangled_ok = all(
        abs(kappa2(maximally_entangled(d), mub_family(d)) - (d - 2) * np.log2(d)) < 1e-9
        for d in (3, 5)
    )
    report(7, "kappa diagnostics", identical and mixed_ok and entangled_ok)


def test_criterion_8_large_prime_sweep():
    t0 = time.perf_counter()
    mins, mids = {}, {}
    for d in (11, 13, 17, 23):
        lo, hi = isotropic_p_range(d)
        gaps = np.array([iso_ecqc_gap(d, float(p)) for p in np.linspace(lo, hi, 200)])
        mins[d] = gaps.min()
        mids[d] = iso_ecqc_gap(d, 0.5)
    elapsed = time.perf_counter() - t0
    grows = all(mids[b] > mids[a] for a, b in ((11, 13), (13, 17), (17, 23)))
    vanishes = all(abs(iso_ecqc_gap(d, 1.0)) < 1e-9 for d in (11, 13, 17, 23))
    ok = min(mins.values()) >= -1e-9 and grows and vanishes and elapsed < 1.0
    report(
        8, "large-prime analytic sweep", ok,
        f"min gap {min(mins.values()):.2e}, mid gaps {[f'{mids[d]:.2f}' for d in (11, 13, 17, 23)]}, "
        f"{elapsed * 1000:.0f}ms",
    )


def test_criterion_9_determinism(tmp_path):
    blobs = []
    for threads in (1, 2, 8):
        path = tmp_path / f"det-{threads}.csv"
        cfg = ExperimentConfig(
            command="check-ecqc", dim=3, n_trials=250, state_kind="mixed",
            seed=SEED, threads=threads, out_path=str(path),
        )
        run(cfg)
        blobs.append(path.read_bytes())
    ok = blobs[0] == blobs[1] == blobs[2]
    report(9, "seeded determinism across thread counts", ok, f"{len(blobs[0])} bytes")
