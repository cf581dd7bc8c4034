"""Random configurations and repeatable solve experiments."""
from __future__ import annotations

import hashlib
import json
import platform
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import __version__
from .combinatorics import ContentVector, as_content, kostka
from .errors import RealSchubertError
from .projective import conjugate_distance
from .solver import (ProblemConfig, SolutionSet, SolverParams, hulls, is_separated,
                     solve_problem1)

MODES = ("separated", "overlapping", "sweep")
SWEEP_AMOUNTS = (0.0, 0.1, 0.2, 0.4, 0.8)


def random_separated_config(d: int, content, seed: int) -> ProblemConfig:
    """Block ``j`` gets ``a_j + 1`` uniform points in ``[j, j + 0.8]`` (``j = 1..q``)."""
    content = as_content(content)
    if content.d != d:
        raise ValueError(f"content {content.entries} belongs to d = {content.d}, not {d}")
    rng = np.random.default_rng(seed)
    blocks = []
    for j, a in enumerate(content.entries, start=1):
        xs = np.sort(rng.uniform(j, j + 0.8, size=a + 1))
        blocks.append(tuple((float(x), 1) for x in xs))
    return ProblemConfig(d, tuple(blocks))


def random_composition(total: int, rng: np.random.Generator) -> tuple[int, ...]:
    """Uniform random composition of ``total`` into positive parts."""
    cuts = sorted(rng.choice(np.arange(1, total), size=rng.integers(0, total), replace=False)) if total > 1 else []
    edges = [0, *map(int, cuts), total]
    return tuple(b - a for a, b in zip(edges[:-1], edges[1:]))


def random_polynomial_config(d: int, seed: int) -> ProblemConfig:
    """Separated blocks with ``sum a_j = d - 1``: the setting with a unique polynomial solution."""
    rng = np.random.default_rng(seed)
    content = random_composition(d - 1, rng)
    blocks = []
    for j, a in enumerate(content, start=1):
        xs = np.sort(rng.uniform(j, j + 0.8, size=a + 1))
        blocks.append(tuple((float(x), 1) for x in xs))
    return ProblemConfig(d, tuple(blocks))


def perturb_to_overlap(config: ProblemConfig, amount: float, seed: int = 0) -> ProblemConfig:
    """Slide every odd-indexed block (0-based) left, into its left neighbour.

    Block ``i`` moves by ``min(amount, c_i - c_{i-1})`` relative to block
    ``i-1``, where ``c`` are the original interval centres, and everything to
    its right moves along with it. Hence no pairwise gap ever grows, and any
    ``amount`` at least as large as the gap makes the two intervals meet.
    ``seed`` is accepted for interface symmetry; the construction is
    deterministic.
    """
    if amount < 0:
        raise ValueError("amount must be non-negative")
    if amount == 0:
        return config
    h = hulls(config)
    centres = [(lo + hi) / 2 for lo, hi in h]
    shift = 0.0
    blocks = []
    for i, blk in enumerate(config.blocks):
        if i % 2 == 1:
            shift += min(amount, centres[i] - centres[i - 1])
        blocks.append(tuple((x - shift, m) for x, m in blk))
    pts = [x for blk in blocks for x, _ in blk]
    collided = len(set(pts)) != len(pts)
    return ProblemConfig(config.d, tuple(blocks), non_generic=config.non_generic or collided)


def config_digest(config: ProblemConfig) -> str:
    blob = json.dumps(config.to_json(), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _derived_seed(*parts: int) -> int:
    return int(np.random.SeedSequence(list(parts)).generate_state(1)[0])


def conjugate_pairs_ok(sol: SolutionSet) -> bool:
    """Every non-real class has a complex-conjugate partner among the other classes."""
    tol = 1e-6
    for i, (f, real) in enumerate(zip(sol.classes, sol.reality_flags)):
        if real:
            continue
        partners = [j for j, g in enumerate(sol.classes)
                    if j != i and not sol.reality_flags[j] and conjugate_distance(f, g) <= tol]
        if not partners:
            return False
    return True


@dataclass
class ExperimentSpec:
    d: int
    content: ContentVector
    trials: int = 20
    seed: int = 0
    mode: str = "separated"
    params: SolverParams = field(default_factory=SolverParams)
    overlap_amount: float = 1.0

    def __post_init__(self):
        self.content = as_content(self.content)
        if self.content.d != self.d:
            raise ValueError(f"content {self.content.entries} belongs to d = {self.content.d}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")

    def to_json(self) -> dict:
        return {"d": self.d, "content": list(self.content.entries), "trials": self.trials,
                "seed": self.seed, "mode": self.mode, "overlap_amount": self.overlap_amount,
                "params": self.params.to_json()}


@dataclass
class ExperimentReport:
    spec: ExperimentSpec
    trials: list[dict]
    created_at: float = field(default_factory=time.time)

    @property
    def aggregate(self) -> dict:
        ok = [t for t in self.trials if t.get("error") is None]
        all_real = [t for t in ok if t["found"] > 0 and t["real_count"] == t["found"]]
        return {
            "kostka": kostka(self.spec.content),
            "trials": len(self.trials),
            "errors": len(self.trials) - len(ok),
            "fraction_all_real": len(all_real) / len(ok) if ok else 0.0,
            "min_real_count": min((t["real_count"] for t in ok), default=None),
            "trials_with_nonreal": sum(1 for t in ok if t["real_count"] < t["found"]),
            "deficits": sum(1 for t in ok if t["deficit"]),
            "conjugate_pairs_ok": all(t["conjugate_pairs_ok"] for t in ok),
        }

    def to_json(self, include_timestamp: bool = True) -> dict:
        out = {
            "spec": self.spec.to_json(),
            "aggregate": self.aggregate,
            "trials": self.trials,
            "provenance": {
                "seed": self.spec.seed,
                "params": self.spec.params.to_json(),
                "versions": {"realschubert": __version__, "numpy": np.__version__,
                             "python": platform.python_version()},
            },
        }
        if include_timestamp:
            out["provenance"]["timestamp"] = self.created_at
        return out

    def dumps(self, include_timestamp: bool = True) -> str:
        return json.dumps(self.to_json(include_timestamp), sort_keys=True, indent=2)


def trial_record(config: ProblemConfig, sol: SolutionSet, **extra) -> dict:
    rec = {
        "config_digest": config_digest(config),
        "config": config.to_json(),
        "separated": is_separated(config),
        "found": sol.found,
        "real_count": sol.real_count,
        "nonreal_count": sol.found - sol.real_count,
        "target": sol.target_count,
        "deficit": sol.deficit,
        "residual_max": max(sol.residuals, default=0.0),
        "starts_used": sol.starts_used,
        "conjugate_pairs_ok": conjugate_pairs_ok(sol),
        "error": None,
    }
    rec.update(extra)
    return rec


def _run_one(config: ProblemConfig, params: SolverParams, **extra) -> dict:
    try:
        sol = solve_problem1(config, params)
    except (RealSchubertError, AssertionError, np.linalg.LinAlgError) as exc:
        return {"config_digest": config_digest(config), "config": config.to_json(),
                "error": f"{type(exc).__name__}: {exc}", **extra}
    return trial_record(config, sol, **extra)


def run_experiment(spec: ExperimentSpec) -> ExperimentReport:
    """Solve ``spec.trials`` random configurations; trial ``i`` is seeded from ``(seed, i)``.

    The same seed gives the same base configurations in every mode, so a
    separated run and an overlapping run can be compared trial by trial.
    """
    records = []
    for i in range(spec.trials):
        cfg_seed = _derived_seed(spec.seed, i, 0)
        solve_seed = _derived_seed(spec.seed, i, 1)
        params = SolverParams(**{**spec.params.to_json(), "seed": solve_seed})
        base = random_separated_config(spec.d, spec.content, cfg_seed)
        if spec.mode == "separated":
            records.append(_run_one(base, params, trial=i))
        elif spec.mode == "overlapping":
            cfg = perturb_to_overlap(base, spec.overlap_amount, cfg_seed)
            records.append(_run_one(cfg, params, trial=i))
        else:
            for amount in SWEEP_AMOUNTS:
                cfg = perturb_to_overlap(base, amount, cfg_seed)
                records.append(_run_one(cfg, params, trial=i, amount=amount))
    return ExperimentReport(spec, records)


def check_real_reports(report: ExperimentReport) -> Optional[str]:
    """Consistency of a report: counts add up and never exceed the bound."""
    bound = kostka(report.spec.content)
    for t in report.trials:
        if t.get("error"):
            continue
        if not t["real_count"] <= t["found"] <= bound:
            return f"trial {t['trial']}: real {t['real_count']} found {t['found']} bound {bound}"
        if t["found"] != t["real_count"] + t["nonreal_count"]:
            return f"trial {t['trial']}: counts do not add up"
    return None
