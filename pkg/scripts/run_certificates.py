"""Run the certificate suite and write report.json / report.md.

    python3 scripts/run_certificates.py --out report --seed 1
"""

import argparse
from dataclasses import dataclass

from linecong.algebra.ring import DEFAULT_CHARACTERISTIC
from linecong.report import run_certificates, write_report


@dataclass
class RunConfig:
    out: str = "report"
    seed: int = 1
    characteristic: int = DEFAULT_CHARACTERISTIC
    only: str = ""
    timings: bool = True


def main(cfg: RunConfig) -> int:
    only = [s for s in cfg.only.split(",") if s] or None
    report = run_certificates(only, cfg.seed, cfg.characteristic,
                              progress=lambda c: print(f"{c.status:8s} {c.id:28s} {c.runtime_ms} ms", flush=True))
    paths = write_report(report, cfg.out, timings=cfg.timings)
    print("wrote", *paths)
    return report.exit_code()


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(RunConfig()).items():
        if isinstance(default, bool):
            ap.add_argument(f"--{name}", action=argparse.BooleanOptionalAction, default=default)
        else:
            ap.add_argument(f"--{name}", type=type(default), default=default)
    raise SystemExit(main(RunConfig(**vars(ap.parse_args()))))
