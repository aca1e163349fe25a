"""End-to-end verification suite over seeded random contractions.

Every trial generates one contraction and runs the whole identity battery:
Julia unitarity with its positive/skew split, the intertwining residual by
two independent routes, the column-switched variant, the Halmos factorization
and power dilation on square cases, and the polynomial/square-root
convergence checks.

Trials are independent: trial ``i`` is keyed by ``derive_seed(seed, i)``, so
results do not depend on execution order and a failing case is reproducible
from the master seed and its trial index alone.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .dilation import (
    flip,
    halmos,
    intertwining_residual,
    intertwining_residual_from_split,
    julia,
    julia_column_switched,
    verify_julia,
)
from .generate import KINDS, GeneratorSpec, gen_contraction
from .jsonio import write_json
from .linalg import DEFAULT_BASE_TOL, frobenius
from .polynomials import MAX_SQRT_POLY_LEVEL, weierstrass_convergence_check
from .powerdil import MAX_POWER_STEPS, dilation_residuals, power_dilation
from .report import ResidualCheck
from .rng import Xoshiro256StarStar, splitmix64

__all__ = ["SuiteConfig", "derive_seed", "trial_spec", "run_trial", "run_suite"]

# Cap on per-case diagnostics echoed into the report.
_MAX_FAILURE_DETAILS = 25


@dataclass(frozen=True)
class SuiteConfig:
    """Corpus size, dimension range, kinds, tolerances, and output path."""

    trials: int = 100
    min_dim: int = 1
    max_dim: int = 8
    kinds: tuple[str, ...] = KINDS
    seed: int = 0
    base_tol: float = DEFAULT_BASE_TOL
    n_steps: int = 4
    weierstrass_level: int = 8
    report_path: str | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trial count must be >= 1, got {self.trials}")
        if not 1 <= self.min_dim <= self.max_dim:
            raise ValueError(
                f"need 1 <= min_dim <= max_dim, got [{self.min_dim}, {self.max_dim}]"
            )
        if not self.kinds:
            raise ValueError("at least one generator kind is required")
        unknown = [k for k in self.kinds if k not in KINDS]
        if unknown:
            raise ValueError(f"unknown kinds {unknown}; expected a subset of {KINDS}")
        if "rank_deficient" in self.kinds and self.max_dim < 2:
            raise ValueError("rank_deficient trials need max_dim >= 2")
        if self.base_tol <= 0:
            raise ValueError(f"base tolerance must be > 0, got {self.base_tol}")
        if not 1 <= self.n_steps <= MAX_POWER_STEPS:
            raise ValueError(
                f"n_steps must lie in [1, {MAX_POWER_STEPS}], got {self.n_steps}"
            )
        if not 1 <= self.weierstrass_level <= MAX_SQRT_POLY_LEVEL:
            raise ValueError(
                f"weierstrass level must lie in [1, {MAX_SQRT_POLY_LEVEL}], "
                f"got {self.weierstrass_level}"
            )


def derive_seed(master: int, index: int) -> int:
    """Order-independent 64-bit seed for trial ``index`` under ``master``."""
    _, mixed_index = splitmix64(index & ((1 << 64) - 1))
    _, derived = splitmix64((master ^ mixed_index) & ((1 << 64) - 1))
    return derived


def _draw_dims(stream: Xoshiro256StarStar, kind: str, lo: int, hi: int) -> tuple[int, int]:
    # Kind-specific dimension relations; the draw order is fixed.
    if kind == "rank_deficient":
        lo = max(lo, 2)
    h = stream.uniform_int(lo, hi)
    if kind == "unitary":
        return h, h
    if kind == "isometry":
        return h, stream.uniform_int(lo, h)
    if kind == "coisometry":
        return h, stream.uniform_int(h, hi)
    return h, stream.uniform_int(lo, hi)


def trial_spec(cfg: SuiteConfig, index: int) -> GeneratorSpec:
    """Generator spec for trial ``index``: kinds cycle, dimensions are drawn."""
    kind = cfg.kinds[index % len(cfg.kinds)]
    seed = derive_seed(cfg.seed, index)
    stream = Xoshiro256StarStar(seed)
    dim_h, dim_k = _draw_dims(stream, kind, cfg.min_dim, cfg.max_dim)
    return GeneratorSpec(dim_h=dim_h, dim_k=dim_k, kind=kind, seed=seed)


def run_trial(spec: GeneratorSpec, cfg: SuiteConfig) -> list[ResidualCheck]:
    """All checks for one generated contraction."""
    a = gen_contraction(spec)
    base = cfg.base_tol
    checks = list(verify_julia(a, base=base).checks)

    n = a.dim_h + a.dim_k
    direct = intertwining_residual(a)
    via_split = intertwining_residual_from_split(a)
    checks.append(ResidualCheck("intertwining", direct, n * base))
    checks.append(
        ResidualCheck("intertwining_path_agreement", abs(direct - via_split), 1e-13)
    )

    switched = julia_column_switched(a).to_matrix()
    eye = np.eye(n, dtype=np.complex128)
    checks.append(
        ResidualCheck(
            "switched_unitarity",
            frobenius(switched.conj().T @ switched - eye),
            n * base * (1.0 + frobenius(a.matrix)),
        )
    )
    factor = julia(a).to_matrix() @ flip(a.dim_h, a.dim_k).to_matrix()
    checks.append(
        ResidualCheck(
            "switched_factorization",
            float(np.max(np.abs(switched - factor))),
            1e-14,
        )
    )

    if a.dim_h == a.dim_k:
        square_flip = flip(a.dim_h, a.dim_h).to_matrix()
        halmos_diff = halmos(a).to_matrix() - julia(a).to_matrix() @ square_flip
        checks.append(
            ResidualCheck("halmos_factorization", float(np.max(np.abs(halmos_diff))), 1e-14)
        )
        dil = power_dilation(a, cfg.n_steps)
        for c in dilation_residuals(dil, a, base=base).checks:
            checks.append(ResidualCheck(f"dilation_{c.name}", c.residual, c.tolerance))

    for c in weierstrass_convergence_check(a, cfg.weierstrass_level, base=base).checks:
        checks.append(c)

    if spec.kind == "unitary":
        pair = a.defects
        defect_mass = float(np.sqrt(frobenius(pair.s) ** 2 + frobenius(pair.t) ** 2))
        checks.append(ResidualCheck("unitary_defect_mass", defect_mass, 1e-12))

    return checks


def run_suite(cfg: SuiteConfig) -> dict:
    """Run the configured corpus; aggregate the maximum residual per check.

    Returns the suite report (also written to ``cfg.report_path`` when set).
    The report's ``"pass"`` field is the overall verdict.
    """
    aggregate: dict[str, dict] = {}
    failures: list[dict] = []
    for index in range(cfg.trials):
        spec = trial_spec(cfg, index)
        for c in run_trial(spec, cfg):
            entry = aggregate.setdefault(
                c.name, {"trials": 0, "max_residual": 0.0, "violations": 0}
            )
            entry["trials"] += 1
            entry["max_residual"] = max(entry["max_residual"], c.residual)
            if not c.passed:
                entry["violations"] += 1
                if len(failures) < _MAX_FAILURE_DETAILS:
                    failures.append(
                        {
                            "trial": index,
                            "kind": spec.kind,
                            "dim_h": spec.dim_h,
                            "dim_k": spec.dim_k,
                            "seed": spec.seed,
                            "check": c.name,
                            "residual": c.residual,
                            "tolerance": c.tolerance,
                        }
                    )
    config = asdict(cfg)
    config["kinds"] = list(cfg.kinds)
    report = {
        "suite": config,
        "checks": [
            {
                "name": name,
                "trials": entry["trials"],
                "max_residual": entry["max_residual"],
                "violations": entry["violations"],
                "pass": entry["violations"] == 0,
            }
            for name, entry in sorted(aggregate.items())
        ],
        "failures": failures,
        "pass": all(entry["violations"] == 0 for entry in aggregate.values()),
    }
    if cfg.report_path is not None:
        write_json(cfg.report_path, report)
    return report
