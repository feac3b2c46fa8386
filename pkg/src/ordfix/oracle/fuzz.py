"""Seeded soundness fuzzing: validate a theorem on many generated instances."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Optional

from ..errors import CapExceeded, GenerationExhausted, IncompatibleInstance
from .generate import GenSpec, generate
from .theorems import TheoremId, validate

# generator used when the caller gives no spec
_DEFAULTS = {
    TheoremId.TARSKI: GenSpec("increasing-map", max_size=8),
    TheoremId.MARKOWSKY: GenSpec("increasing-map", max_size=5, carrier="poset-with-bottom"),
    TheoremId.ABIAN_BROWN: GenSpec("correspondence", max_size=5, carrier="poset-with-bottom"),
    TheoremId.SABARWAL: GenSpec("correspondence", max_size=5, carrier="poset-with-bottom"),
    TheoremId.CHAIN_COMPLETE_VALUES: GenSpec("v-ascending-filtered", max_size=6),
    TheoremId.C_ASCENDING_EXTREMAL: GenSpec("correspondence", max_size=6, require=("upper-c-ascending",)),
    TheoremId.GAME: GenSpec("game", max_size=5, max_players=3),
}


def default_spec(t) -> GenSpec:
    return _DEFAULTS.get(TheoremId.parse(t), GenSpec("correspondence", max_size=6))


def instance_seed(seed: int, index: int) -> int:
    """64-bit seed of instance ``index`` in a run seeded with ``seed``."""
    return random.Random(f"{seed}:{index}").getrandbits(64)


def instance_at(spec: GenSpec, seed: int, index: int):
    """Replay a single instance of a fuzz run."""
    return generate(replace(spec, seed=instance_seed(seed, index)))


@dataclass
class FuzzReport:
    theorem: str
    count: int
    seed: int
    spec: dict
    held: list[int] = field(default_factory=list)
    failed: list[int] = field(default_factory=list)
    skipped: list[tuple[int, str]] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)

    @property
    def sound(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "count": self.count,
            "seed": self.seed,
            "spec": self.spec,
            "hypotheses_held": len(self.held),
            "hypotheses_failed": len(self.failed),
            "skipped": [{"index": i, "reason": r} for i, r in self.skipped],
            "violations": self.violations,
            "sound": self.sound,
        }


def _run_one(args):
    t, spec, seed, index = args
    try:
        inst = instance_at(spec, seed, index)
        report = validate(t, inst)
    except (IncompatibleInstance, GenerationExhausted, CapExceeded) as exc:
        return index, "skipped", str(exc)
    if not report.sound:
        return index, "violation", report.to_dict()
    return index, "held" if report.hypotheses_hold else "failed", None


def fuzz(t, count: int, spec: Optional[GenSpec] = None, seed: int = 0, *, workers: int = 1) -> FuzzReport:
    """Validate theorem ``t`` on ``count`` instances; instance i is replayable via :func:`instance_at`."""
    t = TheoremId.parse(t)
    spec = spec or default_spec(t)
    jobs = [(t, spec, seed, i) for i in range(count)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs, chunksize=max(1, count // (4 * workers))))
    else:
        results = [_run_one(j) for j in jobs]
    spec_dict = asdict(spec)
    spec_dict.pop("extra", None)
    report = FuzzReport(t.value, count, seed, spec_dict)
    for index, outcome, detail in sorted(results, key=lambda r: r[0]):
        if outcome == "held":
            report.held.append(index)
        elif outcome == "failed":
            report.failed.append(index)
        elif outcome == "skipped":
            report.skipped.append((index, detail))
        else:
            # a sound instance never lands here; hypotheses held by construction
            report.held.append(index)
            report.violations.append({"index": index, "report": detail})
    return report
