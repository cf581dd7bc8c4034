"""End-to-end checks run by ``realschubert selftest`` and the acceptance tests.

Each check returns a :class:`CheckResult`; nothing here raises on failure.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .combinatorics import (ContentVector, catalan_count, enumerate_ssyt, hook_count, kostka,
                            valid_contents)
from .harness import (ExperimentSpec, _derived_seed, random_polynomial_config,
                      random_separated_config, run_experiment)
from .nets import BlockStructure, bijection_report, enumerate_nets
from .solver import (SolverParams, block_remainder, derivative_roots_in_gaps,
                     polynomial_system, relative_residual, solve_critical_points,
                     solve_polynomial, solve_problem1)
from . import exact


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    elapsed: float
    details: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.name} ({self.elapsed:.2f}s)"


def _timed(number: int, name: str, fn: Callable[[], tuple[bool, dict]]) -> CheckResult:
    t0 = time.perf_counter()
    passed, details = fn()
    return CheckResult(number, name, passed, time.perf_counter() - t0, details)


CATALAN = {3: 2, 4: 5, 5: 14, 6: 42, 7: 132}


def check_closed_forms() -> CheckResult:
    def run():
        bad = []
        for d in range(2, 8):
            ones = ContentVector((1,) * (2 * d - 2))
            if kostka(ones) != catalan_count(d) or CATALAN.get(d, kostka(ones)) != kostka(ones):
                bad.append(("catalan", d))
            for a1 in range(1, d):
                cv = ContentVector((a1,) + (1,) * (2 * d - 2 - a1))
                if kostka(cv) != hook_count(a1, d):
                    bad.append(("hook", d, a1))
        return not bad, {"mismatches": bad}

    result = _timed(1, "closed-form Kostka counts, d=2..7", run)
    result.passed = result.passed and result.elapsed < 10
    return result


def check_permutation_invariance(samples: int = 10, seed: int = 0) -> CheckResult:
    def run():
        rng = np.random.default_rng(seed)
        bad, checked = [], 0
        for d in range(2, 7):
            for cv in valid_contents(d):
                k = kostka(cv)
                for _ in range(samples):
                    perm = tuple(int(a) for a in rng.permutation(cv.entries))
                    checked += 1
                    if kostka(perm) != k:
                        bad.append((cv.entries, perm))
        return not bad, {"checked": checked, "mismatches": bad}

    return _timed(2, "permutation invariance of Kostka numbers, d<=6", run)


def check_net_bijection(max_d: int = 6) -> CheckResult:
    def run():
        rows = bijection_report(max_d)
        bad = [r for r in rows if not r["ok"]]
        return not bad, {"contents": len(rows), "failures": bad}

    result = _timed(3, f"nets <-> SSYT bijection, d<={max_d}", run)
    result.passed = result.passed and result.elapsed < 60
    return result


def check_polynomial_case(per_d: int = 100, seed: int = 0) -> CheckResult:
    def run():
        bad = []
        worst = 0.0
        for d in range(3, 7):
            for i in range(per_d):
                cfg = random_polynomial_config(d, _derived_seed(seed, d, i))
                rows, _ = polynomial_system(cfg, use_exact=True)
                if exact.det(rows) == 0:
                    bad.append((d, i, "singular"))
                    continue
                fe = solve_polynomial(cfg, "exact")
                if any(c != 0 for blk in cfg.blocks for c in block_remainder(fe, blk)):
                    bad.append((d, i, "exact residual"))
                ff = solve_polynomial(cfg, "float")
                r = relative_residual(ff, cfg)
                worst = max(worst, r)
                if r >= 1e-10:
                    bad.append((d, i, f"float residual {r:.2e}"))
                if not derivative_roots_in_gaps(cfg, fe):
                    bad.append((d, i, "derivative roots"))
        return not bad, {"failures": bad, "worst_relative_residual": worst}

    return _timed(4, "unique polynomial for sum a_j = d-1 (Rolle check), d=3..6", run)


def _separated_batch(d: int, content, trials: int, seed: int) -> dict:
    target = kostka(content)
    bad = []
    over_bound = False
    for i in range(trials):
        cfg = random_separated_config(d, content, _derived_seed(seed, d, i))
        sol = solve_problem1(cfg, SolverParams(seed=_derived_seed(seed, d, i, 1)))
        if sol.found > target:
            over_bound = True
        if sol.found != target or sol.real_count != target or max(sol.residuals) >= 1e-8:
            bad.append({"trial": i, "found": sol.found, "real": sol.real_count,
                        "residual": max(sol.residuals, default=None)})
    return {"failures": bad, "over_bound": over_bound}


def check_separated_solutions(seed: int = 0) -> CheckResult:
    def run():
        t0 = time.perf_counter()
        small = _separated_batch(3, (1, 1, 1, 1), 20, seed)
        t_small = time.perf_counter() - t0
        t0 = time.perf_counter()
        large = _separated_batch(4, (1,) * 6, 5, seed)
        t_large = time.perf_counter() - t0
        passed = (not small["failures"] and not large["failures"] and t_small < 5 and t_large < 180
                  and not small["over_bound"] and not large["over_bound"])
        return passed, {"d3": small, "d4": large, "d3_seconds": t_small, "d4_seconds": t_large}

    return _timed(5, "separated configurations: Kostka-many classes, all real", run)


def check_critical_points(seed: int = 0) -> CheckResult:
    def run():
        bad = []
        for i in range(20):
            rng = np.random.default_rng(_derived_seed(seed, 3, i))
            xs = np.sort(rng.uniform(-2.0, 2.0, size=4))
            sol = solve_critical_points([(float(x), 1) for x in xs], 3,
                                        SolverParams(seed=_derived_seed(seed, 3, i, 1)))
            if (sol.found != 2 or sol.real_count != 2
                    or max(sol.wronskian_residuals) >= 1e-8):
                bad.append({"d": 3, "trial": i, "found": sol.found, "real": sol.real_count,
                            "wronskian": sol.wronskian_residuals})
        mults = (1, 1, 2, 2)
        target = kostka(mults)
        for i in range(5):
            rng = np.random.default_rng(_derived_seed(seed, 4, i))
            xs = np.sort(rng.uniform(-2.0, 2.0, size=4))
            sol = solve_critical_points(list(zip(map(float, xs), mults)), 4,
                                        SolverParams(seed=_derived_seed(seed, 4, i, 1)))
            if sol.found != target or sol.real_count != target or max(sol.wronskian_residuals) >= 1e-8:
                bad.append({"d": 4, "trial": i, "found": sol.found, "real": sol.real_count,
                            "wronskian": sol.wronskian_residuals})
        return not bad and target == 2, {"failures": bad, "kostka_1122": target}

    return _timed(6, "prescribed real critical points: Kostka-many real classes", run)


def check_separation_phenomenology(trials: int = 100, seed: int = 0) -> CheckResult:
    def run():
        over = run_experiment(ExperimentSpec(3, (1, 1, 1, 1), trials=trials, seed=seed,
                                             mode="overlapping"))
        sep = run_experiment(ExperimentSpec(3, (1, 1, 1, 1), trials=trials, seed=seed,
                                            mode="separated"))
        agg_o, agg_s = over.aggregate, sep.aggregate
        passed = (agg_o["trials_with_nonreal"] >= 1 and agg_o["conjugate_pairs_ok"]
                  and agg_s["fraction_all_real"] == 1.0 and agg_s["errors"] == 0)
        return passed, {"overlapping": agg_o, "separated": agg_s}

    return _timed(7, "overlap produces non-real pairs, separation does not", run)


def check_cross_consistency(seed: int = 0) -> CheckResult:
    def run():
        content = (1, 1, 1, 1)
        cfg = random_separated_config(3, content, seed)
        sol = solve_problem1(cfg, SolverParams(seed=seed))
        counts = {
            "solver": sol.found,
            "kostka": kostka(content),
            "nets": len(enumerate_nets(BlockStructure.from_content(content))),
            "ssyt": len(enumerate_ssyt(content)),
        }
        return len(set(counts.values())) == 1 and counts["kostka"] == 2, counts

    return _timed(8, "solver = Kostka = nets = SSYT for d=3", run)


CHECKS = (check_closed_forms, check_permutation_invariance, check_net_bijection,
          check_polynomial_case, check_separated_solutions, check_critical_points,
          check_separation_phenomenology, check_cross_consistency)


def run_all() -> list[CheckResult]:
    return [check() for check in CHECKS]
