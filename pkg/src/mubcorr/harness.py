"""Experiment harness: seeded parallel trials, CSV/JSONL output, plotting.

Trials are embarrassingly parallel.  Each trial owns an independent
generator derived counter-style from (master seed, trial id), so output is
byte-identical for any thread count and records are always written in
trial order.
"""

from __future__ import annotations

import csv
import json
import os
import sys
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .conjectures import bound_ladder, ecqc_report, sufficient_cqc
from .isotropic import isotropic_point
from .mubs import MubSet, is_prime, mub_family
from .states import (
    BipartiteState,
    has_maximally_mixed_subsystem,
    is_ppt,
    isotropic,
    isotropic_p_range,
    purity,
    random_mixed,
    random_pure,
)

COMMANDS = (
    "check-cqc",
    "check-ecqc",
    "sweep-isotropic",
    "suffcond-scatter",
    "dump-mubs",
    "bound-audit",
)
STATE_KINDS = ("pure", "mixed", "isotropic", "separable-filtered")

# Largest supported prime: fixes the mi_0..mi_23 column width of the
# record schema (d + 1 = 24 per-basis columns at d = 23).
MAX_DIM = 23
MI_COLUMNS = MAX_DIM + 1

HOLD_TOL_DEFAULT = 1e-9
WARN_TOL_DEFAULT = 1e-6

# Rejection-sampler budget per accepted state.
FILTER_ATTEMPT_CAP = 100_000

CSV_COLUMNS = (
    ["trial_id", "dim", "state_kind", "p", "i_ab"]
    + [f"mi_{k}" for k in range(MI_COLUMNS)]
    + [
        "mi_sum_all",
        "mi_max",
        "ecqc_rhs",
        "ecqc_gap",
        "cqc_gap",
        "kappa1",
        "kappa2",
        "suff_cqc_lhs",
        "suff_cqc_rhs",
        "xie_slack",
        "berta_slack",
        "mu_slack",
        "sanchez_slack",
        "cp_slack",
        "witness_fired",
        "verdict",
    ]
)


class ConfigError(ValueError):
    """Invalid experiment configuration (maps to exit code 2)."""


@dataclass
class ExperimentConfig:
    command: str
    dim: int
    n_trials: int | None = None
    state_kind: str = "mixed"
    p_min: float | None = None
    p_max: float | None = None
    p_steps: int = 200
    seed: int | None = None
    threads: int = 0
    out_path: str | None = None
    format: str = "csv"
    hold_tol: float = HOLD_TOL_DEFAULT
    warn_tol: float = WARN_TOL_DEFAULT
    full: bool = False
    alt_sanchez_constant: bool = False
    plot: bool = False

    def resolved(self) -> "ExperimentConfig":
        """Validate and fill defaults; draws a seed if none was given."""
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if not is_prime(self.dim):
            raise ConfigError(f"dim must be prime, got {self.dim}")
        if self.dim > MAX_DIM:
            raise ConfigError(f"dim {self.dim} exceeds the supported maximum {MAX_DIM}")
        if self.format not in ("csv", "jsonl"):
            raise ConfigError(f"format must be 'csv' or 'jsonl', got {self.format!r}")
        if self.state_kind not in STATE_KINDS:
            raise ConfigError(f"unknown state kind {self.state_kind!r}")
        if self.threads < 0:
            raise ConfigError("threads must be >= 0 (0 = auto)")
        if not (0.0 < self.hold_tol < self.warn_tol):
            raise ConfigError("tolerances must satisfy 0 < hold_tol < warn_tol")

        cfg = replace(self)
        if cfg.command == "suffcond-scatter":
            cfg.state_kind = "separable-filtered"
        if cfg.state_kind == "separable-filtered" and cfg.dim != 2:
            raise ConfigError("separable-filtered sampling is defined for dim 2 only")

        lo, hi = isotropic_p_range(cfg.dim)
        cfg.p_min = lo if cfg.p_min is None else cfg.p_min
        cfg.p_max = hi if cfg.p_max is None else cfg.p_max
        if not (lo - 1e-12 <= cfg.p_min <= cfg.p_max <= hi + 1e-12):
            raise ConfigError(f"p range [{cfg.p_min}, {cfg.p_max}] not inside [{lo}, {hi}]")
        if cfg.p_steps < 1:
            raise ConfigError("p_steps must be >= 1")

        if cfg.n_trials is None:
            cfg.n_trials = default_trials(cfg.command, cfg.dim, cfg.full)
        if cfg.n_trials < 1:
            raise ConfigError("n_trials must be >= 1")

        if cfg.seed is None and cfg.command not in ("dump-mubs", "sweep-isotropic"):
            cfg.seed = int.from_bytes(os.urandom(8), "big")
            print(f"seed {cfg.seed}", file=sys.stderr)
        if cfg.seed is not None and not (0 <= cfg.seed < 2**64):
            raise ConfigError("seed must fit in 64 unsigned bits")

        if cfg.threads == 0:
            cfg.threads = os.cpu_count() or 1
        if cfg.out_path is None and cfg.command != "dump-mubs":
            ext = "csv" if cfg.format == "csv" else "jsonl"
            cfg.out_path = f"{cfg.command}-d{cfg.dim}.{ext}"
        return cfg


def default_trials(command: str, dim: int, full: bool) -> int:
    """Desk-scale trial counts; --full raises them to publication scale."""
    if command == "suffcond-scatter":
        base = 200
    else:
        base = 10_000 if dim <= 3 else 1_000
    return base * 10 if full else base


def trial_rng(master_seed: int, trial_id: int) -> np.random.Generator:
    """Independent per-trial stream via counter-based seed derivation."""
    return np.random.default_rng(np.random.SeedSequence(entropy=master_seed, spawn_key=(trial_id,)))


@dataclass(eq=False)
class TrialRecord:
    """One output row.  ``None`` fields serialize as empty/null."""

    trial_id: int
    dim: int
    state_kind: str
    p: float | None
    i_ab: float
    mi: tuple[float, ...]
    mi_sum_all: float
    mi_max: float
    ecqc_rhs: float
    ecqc_gap: float
    cqc_gap: float
    kappa1: float | None
    kappa2: float | None
    suff_cqc_lhs: float | None
    suff_cqc_rhs: float | None
    xie_slack: float | None
    berta_slack: float | None
    mu_slack: float | None
    sanchez_slack: float | None
    cp_slack: float | None
    witness_fired: bool | None
    verdict: str
    # In-memory extras, not serialized.
    verdict_gap: float = 0.0
    suff_ecqc_lhs: float | None = field(default=None, repr=False)
    suff_ecqc_rhs: float | None = field(default=None, repr=False)
    suff_cqc_satisfied: bool | None = field(default=None, repr=False)
    suff_ecqc_satisfied: bool | None = field(default=None, repr=False)
    state_matrix: np.ndarray | None = field(default=None, repr=False)
    sample_attempts: int = field(default=1, repr=False)


def classify(gap: float, hold_tol: float, warn_tol: float) -> str:
    if gap >= -hold_tol:
        return "HOLD"
    if gap > -warn_tol:
        return "WARN"
    return "VIOLATION"


def separable_filtered_sampler(
    rng: np.random.Generator,
    mubs: MubSet | None = None,
    max_attempts: int = FILTER_ATTEMPT_CAP,
) -> tuple[BipartiteState, int]:
    """Rejection-sample a 2x2 separable mixed state in the target class.

    Accepts Ginibre draws that are PPT (= separable at this size), mixed,
    have no maximally mixed marginal, and satisfy the CQC sufficient
    condition.  Returns the state and how many draws it took.
    """
    if mubs is None:
        mubs = mub_family(2)
    z, x = mubs[0], mubs[1]
    for attempt in range(1, max_attempts + 1):
        state = random_mixed(2, rng=rng)
        if purity(state) >= 1.0 - 1e-6:
            continue
        if has_maximally_mixed_subsystem(state, eps=1e-3):
            continue
        if not is_ppt(state):
            continue
        if not sufficient_cqc(state, z, x).satisfied:
            continue
        return state, attempt
    raise RuntimeError(f"no acceptable state within {max_attempts} attempts")


def _sample_state(cfg: ExperimentConfig, rng: np.random.Generator, mubs: MubSet):
    """Draw (state, p, attempts) for one trial according to the configured kind."""
    if cfg.state_kind == "pure":
        return random_pure(cfg.dim, rng), None, 1
    if cfg.state_kind == "mixed":
        return random_mixed(cfg.dim, rng=rng), None, 1
    if cfg.state_kind == "isotropic":
        p = float(rng.uniform(cfg.p_min, cfg.p_max))
        return isotropic(cfg.dim, p), p, 1
    if cfg.state_kind == "separable-filtered":
        state, attempts = separable_filtered_sampler(rng, mubs)
        return state, None, attempts
    raise ConfigError(f"unknown state kind {cfg.state_kind!r}")


def _gap_for(cfg: ExperimentConfig, report, bounds) -> float:
    if cfg.command in ("check-cqc", "suffcond-scatter"):
        return report.cqc_gap
    if cfg.command == "check-ecqc":
        return report.ecqc_gap
    if cfg.command == "bound-audit":
        return min(bounds.proven_slacks())
    raise ConfigError(f"command {cfg.command!r} has no verdict gap")


def _pad_mi(mi: tuple[float, ...]) -> tuple[float | None, ...]:
    return tuple(mi) + (None,) * (MI_COLUMNS - len(mi))


def evaluate_numeric_trial(cfg: ExperimentConfig, mubs: MubSet, trial_id: int) -> TrialRecord:
    """Sample one state and fill a full record (all numeric commands)."""
    rng = trial_rng(cfg.seed, trial_id)
    state, p, attempts = _sample_state(cfg, rng, mubs)
    report = ecqc_report(state, mubs, tol=cfg.hold_tol)
    bounds = bound_ladder(state, mubs, alt_sanchez_constant=cfg.alt_sanchez_constant)
    gap = _gap_for(cfg, report, bounds)
    verdict = classify(gap, cfg.hold_tol, cfg.warn_tol)
    return TrialRecord(
        trial_id=trial_id,
        dim=cfg.dim,
        state_kind=cfg.state_kind,
        p=p,
        i_ab=report.i_ab,
        mi=_pad_mi(report.per_basis_mi),
        mi_sum_all=report.mi_sum_all,
        mi_max=report.mi_max,
        ecqc_rhs=report.ecqc_rhs,
        ecqc_gap=report.ecqc_gap,
        cqc_gap=report.cqc_gap,
        kappa1=report.kappa1,
        kappa2=report.kappa2,
        suff_cqc_lhs=report.suff_cqc_lhs,
        suff_cqc_rhs=report.suff_cqc_rhs,
        xie_slack=bounds.xie_slack,
        berta_slack=bounds.berta_slack,
        mu_slack=bounds.maassen_uffink_slack,
        sanchez_slack=bounds.sanchez_slack,
        cp_slack=bounds.coles_piani_slack,
        witness_fired=report.witness_fired,
        verdict=verdict,
        verdict_gap=gap,
        suff_ecqc_lhs=report.suff_ecqc_lhs,
        suff_ecqc_rhs=report.suff_ecqc_rhs,
        suff_cqc_satisfied=report.suff_cqc_satisfied,
        suff_ecqc_satisfied=report.suff_ecqc_satisfied,
        state_matrix=state.matrix if verdict == "VIOLATION" else None,
        sample_attempts=attempts,
    )


def evaluate_sweep_point(cfg: ExperimentConfig, trial_id: int, p: float) -> TrialRecord:
    """Analytic isotropic record; no matrices are built.

    The ecqc_gap column carries the analytic gap (quantum MI minus twice
    the measured MI): the full-family comparison for odd d, exactly the
    drop-the-largest one at d = 2.  Quantities without an analytic closed
    form here are left empty.
    """
    point = isotropic_point(cfg.dim, p)
    gap = point.i_ab - 2.0 * point.mi_zx
    m = point.mi_zx
    mi = (m, m, m) if cfg.dim == 2 else (m, m) + (0.0,) * (cfg.dim - 1)
    verdict = classify(gap, cfg.hold_tol, cfg.warn_tol)
    return TrialRecord(
        trial_id=trial_id,
        dim=cfg.dim,
        state_kind="isotropic",
        p=p,
        i_ab=point.i_ab,
        mi=_pad_mi(mi),
        mi_sum_all=float(sum(mi)),
        mi_max=m,
        ecqc_rhs=point.ecqc_rhs_analytic,
        ecqc_gap=gap,
        cqc_gap=point.i_ab - 2.0 * m,
        kappa1=None,
        kappa2=None,
        suff_cqc_lhs=None,
        suff_cqc_rhs=None,
        xie_slack=None,
        berta_slack=None,
        mu_slack=None,
        sanchez_slack=None,
        cp_slack=None,
        witness_fired=None,
        verdict=verdict,
        verdict_gap=gap,
    )


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _raw_values(rec: TrialRecord) -> list:
    row = [rec.trial_id, rec.dim, rec.state_kind, rec.p, rec.i_ab]
    row.extend(rec.mi)
    row.extend(
        [
            rec.mi_sum_all,
            rec.mi_max,
            rec.ecqc_rhs,
            rec.ecqc_gap,
            rec.cqc_gap,
            rec.kappa1,
            rec.kappa2,
            rec.suff_cqc_lhs,
            rec.suff_cqc_rhs,
            rec.xie_slack,
            rec.berta_slack,
            rec.mu_slack,
            rec.sanchez_slack,
            rec.cp_slack,
            rec.witness_fired,
            rec.verdict,
        ]
    )
    return row


def record_row(rec: TrialRecord) -> list[str]:
    return [_fmt(v) for v in _raw_values(rec)]


def write_records(records: list[TrialRecord], out_path: str | Path, fmt: str) -> Path:
    path = Path(out_path)
    if fmt == "csv":
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for rec in records:
                writer.writerow(record_row(rec))
    elif fmt == "jsonl":
        with open(path, "w") as fh:
            for rec in records:
                obj = {}
                for key, raw, text in zip(CSV_COLUMNS, _raw_values(rec), record_row(rec)):
                    # Round floats through the same 12-significant-digit
                    # formatting the CSV uses so the two formats agree.
                    obj[key] = raw if not isinstance(raw, float) else float(text)
                fh.write(json.dumps(obj) + "\n")
    else:
        raise ConfigError(f"unknown format {fmt!r}")
    return path


def write_violation_sidecar(records: list[TrialRecord], out_path: str | Path) -> Path | None:
    """Dump offending states next to the main output for independent rechecking."""
    offenders = [r for r in records if r.verdict == "VIOLATION"]
    if not offenders:
        return None
    path = Path(str(out_path) + ".violations.jsonl")
    with open(path, "w") as fh:
        for rec in offenders:
            obj = {
                "trial_id": rec.trial_id,
                "dim": rec.dim,
                "state_kind": rec.state_kind,
                "p": rec.p,
                "gap": rec.verdict_gap,
            }
            if rec.state_matrix is not None:
                obj["matrix_re"] = rec.state_matrix.real.tolist()
                obj["matrix_im"] = rec.state_matrix.imag.tolist()
            fh.write(json.dumps(obj) + "\n")
    return path


def emit_plot(records: list[TrialRecord], out_path: str | Path) -> Path:
    """Scatter of the per-record gap (p or trial index on x, zero line drawn)."""
    if not records:
        raise ValueError("cannot plot an empty record list")
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    sweep = all(r.p is not None for r in records)
    xs = [r.p if sweep else r.trial_id for r in records]
    ys = [r.verdict_gap for r in records]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.scatter(xs, ys, s=8, alpha=0.6)
    ax.axhline(0.0, color="black", linewidth=0.8)
    ax.set_xlabel("p" if sweep else "trial")
    ax.set_ylabel("gap (bits)")
    ax.set_title(f"d = {records[0].dim}, {records[0].state_kind}")
    path = Path(out_path)
    fig.savefig(path, format="svg")
    plt.close(fig)
    return path


def dump_mub_blocks(dim: int) -> str:
    """Family dump: one basis per block, entries as quoted "re,im" fields."""
    family = mub_family(dim)
    lines = []
    for idx, basis in enumerate(family):
        for row in basis.matrix:
            lines.append(",".join(f'"{z.real:.12g},{z.imag:.12g}"' for z in row))
        if idx < len(family) - 1:
            lines.append("")
    return "\n".join(lines) + "\n"


@dataclass
class RunResult:
    exit_code: int
    records: list[TrialRecord]
    out_path: Path | None
    counts: Counter
    seed: int | None
    attempts: int = 0


def run(config: ExperimentConfig) -> RunResult:
    """Execute one experiment; writes outputs and returns the records."""
    cfg = config.resolved()

    if cfg.command == "dump-mubs":
        text = dump_mub_blocks(cfg.dim)
        if cfg.out_path is None:
            sys.stdout.write(text)
            return RunResult(0, [], None, Counter(), cfg.seed)
        Path(cfg.out_path).write_text(text)
        return RunResult(0, [], Path(cfg.out_path), Counter(), cfg.seed)

    if cfg.command == "sweep-isotropic":
        grid = np.linspace(cfg.p_min, cfg.p_max, cfg.p_steps)
        records = [evaluate_sweep_point(cfg, i, float(p)) for i, p in enumerate(grid)]
    else:
        mubs = mub_family(cfg.dim)

        def worker(trial_id: int) -> TrialRecord:
            return evaluate_numeric_trial(cfg, mubs, trial_id)

        if cfg.threads > 1:
            with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
                records = list(pool.map(worker, range(cfg.n_trials), chunksize=16))
        else:
            records = [worker(tid) for tid in range(cfg.n_trials)]

    out_path = write_records(records, cfg.out_path, cfg.format)
    sidecar = write_violation_sidecar(records, out_path)
    if cfg.plot:
        emit_plot(records, out_path.with_suffix(".svg"))

    counts = Counter(r.verdict for r in records)
    warns = [r for r in records if r.verdict == "WARN"]
    if warns:
        print(
            f"{cfg.command}: {len(warns)} WARN of {len(records)} trials "
            f"(min gap {min(r.verdict_gap for r in warns):.3e})",
            file=sys.stderr,
        )
        for rec in warns:
            print(f"  WARN trial {rec.trial_id}: gap {rec.verdict_gap:.6e}", file=sys.stderr)
    if counts.get("VIOLATION"):
        print(
            f"{cfg.command}: {counts['VIOLATION']} VIOLATION trials, states dumped to {sidecar}",
            file=sys.stderr,
        )
    attempts = 0
    if cfg.state_kind == "separable-filtered":
        attempts = sum(r.sample_attempts for r in records)
        print(
            f"{cfg.command}: accepted {len(records)} states in {attempts} draws "
            f"(rate {len(records) / attempts:.4f})",
            file=sys.stderr,
        )

    exit_code = 1 if counts.get("VIOLATION") else 0
    return RunResult(exit_code, records, out_path, counts, cfg.seed, attempts)
