"""Batch command-line frontend.

Exit codes: 0 success, 1 a finding inconsistent with the classification
theorem, 2 usage error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import __version__
from .codes import MAX_ENUM_DIM, extend, is_type2_extremal, qr_codes, weight_distribution
from .cyclotomic import build_cosets, minimal_polynomials, residue_split
from .designs import design_sweep
from .errors import CapExceeded, FalsificationError
from .gf2m import build_field, check_prime
from .psl2 import (
    MAX_GROUP_ORDER,
    MAX_SPIN_N,
    all_invariant_subspaces,
    as_extended_cyclic,
    classify_all,
    label_for,
    predicted_invariant_sets,
    predicted_subspace_count,
)
from .spectral import admissible_pairs, check_blahut, random_extended_word, spectral_witness

SCHEMA = "psl2codes/1"

EXIT_OK, EXIT_INCONSISTENT, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    n: int
    command: str
    output: str = "json"
    seed: int = 0
    trials: int = 1000
    max_dimension: int = MAX_ENUM_DIM
    max_group_order: int = MAX_GROUP_ORDER
    max_spin_n: int = MAX_SPIN_N

    def __post_init__(self):
        if min(self.max_dimension, self.max_group_order, self.max_spin_n) <= 0:
            raise UsageError("caps must be positive")
        if self.trials < 0:
            raise UsageError("--trials must be non-negative")


def _sorted_sets(sets) -> list[list[int]]:
    return sorted((sorted(s) for s in sets), key=lambda s: (len(s), s))


def cmd_field(cfg: RunConfig) -> tuple[dict, int]:
    ctx = build_field(cfg.n)
    return {
        "n": cfg.n,
        "m": ctx.m,
        "modulus": ctx.modulus.bitstring(ctx.m + 1),
        "modulus_str": str(ctx.modulus),
        "alpha": ctx.hex(ctx.alpha),
        "beta": ctx.hex(ctx.beta),
        "log_tables": ctx.has_tables,
    }, EXIT_OK


def cmd_cosets(cfg: RunConfig) -> tuple[dict, int]:
    n = cfg.n
    table = build_cosets(n)
    split = residue_split(n)
    mins = minimal_polynomials(n)
    return {
        "n": n,
        "cosets": [sorted(c) for c in table.cosets],
        "leaders": list(table.leaders),
        "minimal_polynomials": {str(i): mins[i].bitstring(mins[i].degree + 1) for i in table.leaders},
        "pi": split.pi,
        "h": split.h,
        "Q": sorted(split.Q),
        "N": sorted(split.N),
        "two_is_residue": split.two_is_residue,
    }, EXIT_OK


def cmd_qr(cfg: RunConfig, extremal: bool = False) -> tuple[dict, int]:
    n = cfg.n
    try:
        pair = qr_codes(n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    entries = []
    for label, code in zip(("QR_Q", "QR_N"), pair):
        ext = extend(code)
        dist = weight_distribution(ext, cfg.max_dimension)
        entry = {
            "label": label,
            "length": ext.length,
            "dim": ext.dimension,
            "d": next(i for i in range(1, ext.length + 1) if dist[i]),
            "self_dual": ext == ext.dual(),
            "weight_distribution": {str(k): a for k, a in dist.nonzero().items()},
            "code": code.to_json(extended=True),
        }
        if extremal:
            verdict = is_type2_extremal(ext, cfg.max_dimension)
            entry["type2_extremal"] = verdict.extremal
            if verdict.reason:
                entry["type2_reason"] = verdict.reason
        entries.append(entry)
    head = {k: entries[0][k] for k in ("length", "dim", "d", "self_dual")}
    if extremal:
        head["type2_extremal"] = entries[0]["type2_extremal"]
    return {"n": n, **head, "codes": entries}, EXIT_OK


def cmd_classify(cfg: RunConfig, show_all: bool = False) -> tuple[dict, int]:
    n = cfg.n
    results = classify_all(n)
    invariant = [r for r in results if r.invariant]
    found = {r.defining_set for r in invariant}
    expected = predicted_invariant_sets(n)
    out = {
        "n": n,
        "n_mod_8": n % 8,
        "defining_sets_checked": len(results),
        "invariant_count": len(invariant),
        "expected_count": len(expected),
        "consistent": found == expected,
        "codes": [r.to_json() for r in (results if show_all else invariant)],
    }
    if found != expected:
        out["diff"] = {"missing": _sorted_sets(expected - found), "unexpected": _sorted_sets(found - expected)}
        return out, EXIT_INCONSISTENT
    return out, EXIT_OK


def cmd_spin(cfg: RunConfig) -> tuple[dict, int]:
    n = cfg.n
    subspaces = all_invariant_subspaces(n, cfg.max_spin_n)
    full_dim = n + 1
    rows = []
    ok = len(subspaces) == predicted_subspace_count(n)
    for code in subspaces:
        T = as_extended_cyclic(code) if code.dimension < full_dim else None
        row = {"dimension": code.dimension, "extended_cyclic": T is not None}
        if T is not None:
            row["defining_set"] = sorted(T)
            row["label"] = label_for(n, T)
        elif code.dimension < full_dim:
            ok = False
        row["basis"] = [f"{r:x}" for r in code.basis]
        rows.append(row)
    out = {
        "n": n,
        "count": len(subspaces),
        "expected_count": predicted_subspace_count(n),
        "consistent": ok,
        "subspaces": rows,
    }
    return out, EXIT_OK if ok else EXIT_INCONSISTENT


def cmd_designs(cfg: RunConfig) -> tuple[dict, int]:
    n = cfg.n
    if n % 8 not in (1, 7):
        raise UsageError(f"designs needs n = +-1 mod 8 for a QR code, got n = {n}")
    rows = design_sweep(n, max_dim=cfg.max_dimension)
    failed = [r for r in rows if r.status == "not a design"]
    capped = [r for r in rows if r.status.startswith("cap")]
    status = "failed" if failed else "partial" if capped else "verified"
    out = {"n": n, "code": "QR_Q extended", "table": [r.to_json() for r in rows], "status": status}
    return out, EXIT_INCONSISTENT if failed else EXIT_OK


def cmd_fourier_check(cfg: RunConfig) -> tuple[dict, int]:
    n = cfg.n
    rng = random.Random(cfg.seed)
    failures = []
    for _ in range(cfg.trials):
        w = random_extended_word(n, rng)
        if not check_blahut(w, n):
            failures.append(f"{w:x}")
    out = {"n": n, "trials": cfg.trials, "seed": cfg.seed}
    if n % 8 in (1, 7):
        ext = extend(qr_codes(n)[0])
        if ext.dimension <= min(cfg.max_dimension, 16):
            bad = [f"{w:x}" for w in ext.codewords() if not check_blahut(w, n)]
            out["qr_codewords_checked"] = 1 << ext.dimension
            failures += bad
    out["failures"] = failures
    return out, EXIT_INCONSISTENT if failures else EXIT_OK


def cmd_witness(cfg: RunConfig, defining_set=()) -> tuple[dict, int]:
    n = cfg.n
    ctx = build_field(n)
    table = build_cosets(n)
    T = frozenset(defining_set)
    if not table.is_union(T):
        raise UsageError(f"defining set {sorted(T)} is not a union of cyclotomic cosets")
    pairs = admissible_pairs(n, T)
    witnesses, failures = [], []
    for l, s in pairs:
        try:
            witnesses.append(spectral_witness(n, T, l, s, seed=cfg.seed).to_json(ctx))
        except FalsificationError as exc:
            failures.append({"l": l, "s": s, "error": str(exc)})
    out = {
        "n": n,
        "defining_set": sorted(T),
        "two_is_residue": residue_split(n).two_is_residue,
        "pairs": len(pairs),
        "witnesses": witnesses,
        "failures": failures,
    }
    return out, EXIT_INCONSISTENT if failures else EXIT_OK


def _render_text(command: str, payload: dict) -> str:
    lines = [f"{command} n={payload.get('n')}"]
    for key, value in payload.items():
        if key in ("schema", "command", "n"):
            continue
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            cols = list(value[0].keys())
            lines.append("  " + "\t".join(cols))
            for row in value:
                lines.append("  " + "\t".join(json.dumps(row.get(c), separators=(",", ":")) for c in cols))
        else:
            lines.append(f"{key}: {json.dumps(value, separators=(',', ':'))}")
    return "\n".join(lines)


def _parse_set(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad residue list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="odd prime code length")
    common.add_argument("--output", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=1000)
    common.add_argument("--max-dim", type=int, default=MAX_ENUM_DIM, dest="max_dim")

    parser = argparse.ArgumentParser(prog="psl2codes", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("field", parents=[common], help="GF(2^m) context for n")
    sub.add_parser("cosets", parents=[common], help="cyclotomic cosets, Q/N split, minimal polynomials")
    qr = sub.add_parser("qr", parents=[common], help="extended quadratic residue codes")
    qr.add_argument("--extremal", action="store_true", help="also test Type II extremality")
    cl = sub.add_parser("classify", parents=[common], help="invariant extended cyclic codes")
    cl.add_argument("--all", action="store_true", dest="show_all", help="list non-invariant defining sets too")
    sub.add_parser("spin", parents=[common], help="all invariant subspaces by spinning (n <= 13)")
    sub.add_parser("designs", parents=[common], help="t-designs in the extended QR code")
    sub.add_parser("fourier-check", parents=[common], help="batch check of the twisted spectrum identity")
    wt = sub.add_parser("witness", parents=[common], help="spectral nonvanishing witnesses")
    wt.add_argument("--defining-set", type=_parse_set, default=[], help="comma-separated residues, default empty")
    return parser


def run(argv=None) -> tuple[str, int]:
    """Run a command; returns (rendered output, exit code)."""
    args = build_parser().parse_args(argv)
    check_prime(args.n)
    cfg = RunConfig(n=args.n, command=args.command, output=args.output, seed=args.seed,
                    trials=args.trials, max_dimension=args.max_dim)
    if args.command == "field":
        payload, code = cmd_field(cfg)
    elif args.command == "cosets":
        payload, code = cmd_cosets(cfg)
    elif args.command == "qr":
        payload, code = cmd_qr(cfg, args.extremal)
    elif args.command == "classify":
        payload, code = cmd_classify(cfg, args.show_all)
    elif args.command == "spin":
        payload, code = cmd_spin(cfg)
    elif args.command == "designs":
        payload, code = cmd_designs(cfg)
    elif args.command == "fourier-check":
        payload, code = cmd_fourier_check(cfg)
    else:
        payload, code = cmd_witness(cfg, args.defining_set)
    payload = {"schema": SCHEMA, "command": args.command, **payload}
    if cfg.output == "text":
        return _render_text(args.command, payload), code
    return json.dumps(payload, indent=2), code


def main(argv=None) -> int:
    try:
        text, code = run(argv)
    except (UsageError, ValueError) as exc:
        print(f"psl2codes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"psl2codes: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except FalsificationError as exc:
        print(f"psl2codes: FALSIFICATION: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
