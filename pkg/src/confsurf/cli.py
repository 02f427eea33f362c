"""Command-line front end: basis reports, delta evaluation, kernel and
weight-filtration ranks, and theorem verification with JSON/CSV output.

The cache directory defaults to the CONFSURF_CACHE_DIR environment
variable; --cache-dir overrides it.  Exit status is nonzero iff some
verdict is refuted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import verify as verify_mod
from .groupring import AlgebraElement, format_word, mu, parse_word, zeta
from .moriyama import delta, dimension, format_arrangement
from .surface import surface_space
from .verify import (STATUS_REFUTED, Verdict, cross_check, ker_gr_delta,
                     verify_independence, verify_lemma_cyclic, verify_pairing,
                     verify_theorem_A, verify_theorem_C, verify_vanishing)
from .weights import weight_filter

ENV_CACHE = "CONFSURF_CACHE_DIR"


@dataclass
class RunConfig:
    cache_dir: str | None = None
    max_dim: int | None = None
    max_vectors: int | None = None
    fmt: str = "text"
    tier: str = "fast"


# default verification cases per theorem and tier
CASES = {
    "A": {"fast": [(3, 2), (3, 3)], "slow": [(4, 3)]},
    "C": {"fast": [(1, 3, 3), (2, 3, 3), (3, 3, 3)], "slow": [(4, 4, 4)]},
    "vanishing": {"fast": [(3, 2), (3, 3)], "slow": [(4, 3)]},
    "independence": {"fast": [(2, 2), (3, 3)], "slow": [(4, 4)]},
    "pairing": {"fast": [(3, 3)], "slow": [(4, 4)]},
    "cyclic": {"fast": [(1, 0, 2), (1, 1, 2), (1, 1, 3)],
               "slow": [(2, 1, 4), (2, 2, 4)]},
}


def _emit(payload: dict, cfg: RunConfig):
    if cfg.fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for key in sorted(payload):
            print(f"{key}: {payload[key]}")


def _emit_verdict(v: Verdict, cfg: RunConfig):
    if cfg.fmt == "json":
        print(v.to_json())
    elif cfg.fmt == "csv":
        params = " ".join(f"{k}={val}" for k, val in sorted(v.params.items()))
        tags = ";".join(str(t) for t in v.tags)
        print(f"{v.theorem},{params},{v.status},{tags}")
    else:
        print(f"[{v.status}] theorem {v.theorem} {v.params} dims={v.dims}"
              + (f" tags={v.tags}" if v.tags else ""))


def cmd_basis(args, cfg: RunConfig) -> int:
    if args.n == 0:
        _emit({"n": 0, "g": args.g, "ambient_dim": 1, "kernel_rank": 0,
               "quotient_dim": 1}, cfg)
        return 0
    space = surface_space(args.n, args.g, cache_dir=cfg.cache_dir,
                          max_dim=cfg.max_dim)
    _emit({"n": args.n, "g": args.g, "ambient_dim": dimension(args.n, args.g),
           "kernel_rank": space.kernel.rank,
           "quotient_dim": space.quotient_dim}, cfg)
    return 0


def _element(args) -> AlgebraElement:
    if args.mu:
        return mu(args.g, max(args.n, 2))
    if args.zeta:
        return zeta(args.g, args.n)
    if args.word is None:
        raise SystemExit("need one of --word, --mu, --zeta")
    w = parse_word(args.word)
    return AlgebraElement(max(args.n, len(w)), {w: 1})


def cmd_delta(args, cfg: RunConfig) -> int:
    x = _element(args)
    cls = delta(x, range(1, args.n + 1), args.g)
    space = surface_space(args.n, args.g, cache_dir=cfg.cache_dir,
                          max_dim=cfg.max_dim)
    coords = space.project(cls)
    payload = {
        "n": args.n, "g": args.g,
        "hclass": {format_arrangement(e): str(c) for e, c in
                   sorted(cls.terms.items(), key=lambda kv: kv[0].sort_key())},
        "surface_coords": {format_arrangement(e): str(c) for e, c in
                           sorted(coords.items(), key=lambda kv: kv[0].sort_key())},
        "surface_zero": not coords,
    }
    _emit(payload, cfg)
    return 0


def cmd_kernel(args, cfg: RunConfig) -> int:
    k = args.k if args.k is not None else args.n
    sub = ker_gr_delta(k, args.n, args.g, cache_dir=cfg.cache_dir,
                       max_dim=cfg.max_dim)
    _emit({"k": k, "n": args.n, "g": args.g, "kernel_rank": sub.rank,
           "labute_quotient_dim": len(sub.indexing)}, cfg)
    return 0


def cmd_weights(args, cfg: RunConfig) -> int:
    if args.w is None:
        raise SystemExit("need --w")
    sub = weight_filter(args.n, args.w, args.g)
    _emit({"n": args.n, "w": args.w, "g": args.g, "rank": sub.rank}, cfg)
    return 0


def _run_theorem(theorem: str, params: tuple, cfg: RunConfig) -> Verdict:
    kw = {"cache_dir": cfg.cache_dir, "max_dim": cfg.max_dim}
    if theorem == "A":
        return verify_theorem_A(*params, **kw)
    if theorem == "C":
        return verify_theorem_C(*params, **kw)
    if theorem == "vanishing":
        return verify_vanishing(*params, **kw)
    if theorem == "independence":
        return verify_independence(*params, **kw)
    if theorem == "pairing":
        return verify_pairing(*params, **kw)
    if theorem == "cyclic":
        return verify_lemma_cyclic(*params, **kw)
    raise SystemExit(f"unknown theorem {theorem!r}")


def _explicit_params(theorem: str, args) -> tuple | None:
    if theorem in ("A", "vanishing", "independence", "pairing"):
        if args.n is not None and args.g is not None:
            return (args.n, args.g)
    elif theorem == "C":
        if args.k is not None and args.n is not None and args.g is not None:
            return (args.k, args.n, args.g)
    elif theorem == "cyclic":
        if args.k is not None and args.w is not None and args.g is not None:
            return (args.k, args.w, args.g)
    return None


def cmd_verify(args, cfg: RunConfig) -> int:
    theorem = args.theorem
    if theorem not in CASES:
        raise SystemExit(f"unknown theorem {theorem!r}")
    explicit = _explicit_params(theorem, args)
    if explicit is not None:
        case_list = [explicit]
    else:
        tiers = ["fast", "slow"] if cfg.tier == "all" else [cfg.tier]
        case_list = [c for t in tiers for c in CASES[theorem][t]]
    verdicts = []
    for params in case_list:
        v = _run_theorem(theorem, params, cfg)
        verdicts.append(v)
        _emit_verdict(v, cfg)
        if theorem == "pairing" and v.status == verify_mod.STATUS_EQUAL:
            n, g = params
            indep = verify_independence(n, g, cache_dir=cfg.cache_dir,
                                        max_dim=cfg.max_dim,
                                        include_extended=False)
            cross_check(v, indep)
    return 1 if any(v.status == STATUS_REFUTED for v in verdicts) else 0


def cmd_pairing(args, cfg: RunConfig) -> int:
    args.theorem = "pairing"
    return cmd_verify(args, cfg)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="confsurf",
        description="exact homology computations for particle "
                    "configurations on surfaces")
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--csv", action="store_true")
    parser.add_argument("--cache-dir", default=None)
    parser.add_argument("--max-dim", type=int, default=None)
    parser.add_argument("--tier", choices=["fast", "slow", "all"],
                        default="fast")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, required=True):
        p.add_argument("--n", type=int, default=None, required=required)
        p.add_argument("--g", type=int, default=None, required=required)
        p.add_argument("--k", type=int, default=None)
        p.add_argument("--w", type=int, default=None)

    p = sub.add_parser("basis", help="ambient/kernel/quotient dimensions")
    common(p)
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("delta", help="evaluate the configuration class map")
    common(p)
    p.add_argument("--word", default=None)
    p.add_argument("--mu", action="store_true")
    p.add_argument("--zeta", action="store_true")
    p.set_defaults(fn=cmd_delta)

    p = sub.add_parser("kernel", help="kernel rank of the graded map")
    common(p)
    p.set_defaults(fn=cmd_kernel)

    p = sub.add_parser("weights", help="weight filtration rank")
    common(p)
    p.set_defaults(fn=cmd_weights)

    p = sub.add_parser("verify", help="run theorem checks")
    p.add_argument("theorem", choices=sorted(CASES))
    common(p, required=False)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("pairing", help="run the perfect-pairing check")
    common(p, required=False)
    p.set_defaults(fn=cmd_pairing)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    fmt = "json" if args.json else ("csv" if args.csv else "text")
    cfg = RunConfig(cache_dir=args.cache_dir or os.environ.get(ENV_CACHE),
                    max_dim=args.max_dim, fmt=fmt, tier=args.tier)
    return args.fn(args, cfg)


if __name__ == "__main__":
    sys.exit(main())
