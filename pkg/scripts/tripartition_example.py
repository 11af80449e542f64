"""Enumerate a simultaneous core set completely and show how it was bounded."""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from multicores.finiteness import decide_finite, enumerate_members, pair_constraints
from multicores.multicore import format_multipartition, parse_datum_set


@dataclass(frozen=True)
class ExampleConfig:
    data: str = "0:1,3,0;0:3,0,1"
    ceiling: int = 40


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data", default=ExampleConfig.data)
    parser.add_argument("--ceiling", type=int, default=ExampleConfig.ceiling)
    ns = parser.parse_args(argv)
    cfg = ExampleConfig(ns.data, ns.ceiling)

    T = parse_datum_set(cfg.data)
    verdict = decide_finite(T)
    print(f"verdict: {verdict.as_dict()}")
    if not verdict.finite:
        return
    for pc in pair_constraints(T).values():
        print(f"components {pc.pair}: moduli {sorted(pc.core_moduli)} hook bounds {dict(pc.hook_bounds)}")
    start = time.perf_counter()
    res = enumerate_members(T, mode="complete", ceiling=cfg.ceiling)
    elapsed = time.perf_counter() - start
    print(f"{res.count} members, certificate {res.certificate}, bound {res.bound_used}, {elapsed:.2f}s")
    print("sizes:", dict(sorted(Counter(m.size for m in res.members).items())))
    print("largest:", format_multipartition(res.max_member))


if __name__ == "__main__":
    main()
