"""Seeded property sweeps with timing: constructed summable instances,
trivially stabilized (non-summable) fractions, or univariate instances
cross-checked against polynomial residues."""

import argparse
import json
import statistics
import sys
import time
from dataclasses import asdict, dataclass

from bisum import KernelProblem, decide, is_summable_uni, solve_kernel, verify
from bisum.gen import InstanceConfig, negative_instance, roundtrip_instance, seeded, univariate_instance


@dataclass(frozen=True)
class SweepConfig:
    kind: str = "roundtrip"
    count: int = 200
    seed: int = 0
    max_factors: int = 2
    max_den_deg: int = 3
    jsonl: bool = False


def one(kind, rng, cfg, i):
    if kind == "roundtrip":
        f, _, _ = roundtrip_instance(rng, cfg)
        D = decide(f)
        return f, D.summable and verify(f, D.g, D.h)
    if kind == "negative":
        f, _ = negative_instance(rng)
        return f, not decide(f).summable
    want = i % 2 == 0
    f = univariate_instance(rng, want)
    ker = solve_kernel(KernelProblem(f.num, f.den.to_upoly("x"), 1, 0, 1)) is not None
    return f, ker == is_summable_uni(f, "x") == want


def run(cfg):
    rng = seeded(cfg.seed)
    icfg = InstanceConfig(seed=cfg.seed, max_factors=cfg.max_factors, max_den_deg=cfg.max_den_deg)
    times, bad = [], 0
    for i in range(cfg.count):
        t0 = time.perf_counter()
        f, ok = one(cfg.kind, rng, icfg, i)
        dt = time.perf_counter() - t0
        times.append(dt)
        bad += not ok
        if cfg.jsonl:
            print(json.dumps({"i": i, "ok": ok, "seconds": round(dt, 4), "f": str(f)}))
    summary = {"config": asdict(cfg), "passed": cfg.count - bad, "failed": bad,
               "total_s": round(sum(times), 2), "median_s": round(statistics.median(times), 4),
               "max_s": round(max(times), 3)}
    print(json.dumps(summary))
    return bad


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kind", choices=["roundtrip", "negative", "univariate"], default="roundtrip")
    ap.add_argument("--count", type=int, default=SweepConfig.count)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--max-factors", type=int, default=SweepConfig.max_factors)
    ap.add_argument("--max-den-deg", type=int, default=SweepConfig.max_den_deg)
    ap.add_argument("--jsonl", action="store_true", help="one JSON line per instance")
    a = ap.parse_args(argv)
    cfg = SweepConfig(a.kind, a.count, a.seed, a.max_factors, a.max_den_deg, a.jsonl)
    return 1 if run(cfg) else 0


if __name__ == "__main__":
    sys.exit(main())
