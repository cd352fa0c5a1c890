"""Command-line interface.  Payloads go to stdout as JSON, diagnostics to stderr."""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Sequence

from . import designs as D
from .algebra.field import is_prime
from .bounds import BoundInputs, bound_report
from .io import FormatError, dumps, load
from .lrc import (
    DecodingError,
    LrcError,
    LrcParams,
    construct,
    delta_reduce,
    encode,
    global_decode,
    local_repair,
    m2_reduce,
    plan_from_family,
    puncture_reduce,
    recover,
)
from .verify import certify_optimal, check_locality, check_mds_partition

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(payload: Any, out: str | None = None) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, separators=(",", ":")) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers") from None


def _load_code(path: str):
    try:
        return load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_family(path: str) -> D.BlockFamily:
    try:
        with open(path, encoding="utf-8") as fh:
            return D.BlockFamily.from_json(json.load(fh))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None


def design_family(kind: str, params: LrcParams) -> D.BlockFamily:
    block = params.block
    if kind == "identical":
        return D.identical(params.w, block)
    if kind == "sunflower":
        return D.sunflower(params.w, params.r, params.delta - 1)
    if kind == "affine-plane":
        if not is_prime(block):
            raise UsageError(f"affine-plane needs r+delta-1 prime, got {block}")
        return D.affine_plane_lines(block)
    if kind == "sts":
        if block != 3:
            raise UsageError(f"sts needs r+delta-1 = 3, got {block}")
        room = params.q - (params.r - params.v)
        n1 = room - (room - 3) % 6
        if n1 < 3:
            raise UsageError(f"GF({params.q}) leaves no room for a Steiner triple system")
        return D.steiner_triple_bose(n1)
    if kind.startswith("file:"):
        return _load_family(kind[5:])
    raise UsageError(f"unknown design {kind!r}")


def cmd_construct(args) -> int:
    params = LrcParams(args.q, args.r, args.delta, args.v, args.w)
    family = design_family(args.design, params)
    code = construct(params, plan_from_family(params, family))
    print(f"constructed [{code.n}, {code.k}] code over GF({code.q}), target d = {code.claimed_d}", file=sys.stderr)
    _emit(dumps(code), args.out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    _emit(bound_report(BoundInputs(args.q, args.r, args.delta, args.k, args.d, args.n)))
    return EXIT_OK


def _trials(code, count: int, seed: int) -> dict[str, Any]:
    """Seeded repair round-trips: delta-1 erasures in one set, and d-1 erasures anywhere."""
    rng = random.Random(seed)
    F = code.field
    stats = {"trials": count, "seed": seed, "local_ok": 0, "global_ok": 0}
    d = code.claimed_d
    for _ in range(count):
        info = [rng.randrange(F.q) for _ in range(code.k)]
        word = encode(code, info)
        R = rng.choice(code.repair_sets)
        E = rng.sample(list(R), min(code.delta - 1, len(R)))
        if list(local_repair(code, [None if j in E else int(x) for j, x in enumerate(word)], E)) == list(word):
            stats["local_ok"] += 1
        E = rng.sample(range(code.n), min(d - 1, code.n))
        try:
            got = global_decode(code, [None if j in E else int(x) for j, x in enumerate(word)], E)
            stats["global_ok"] += list(got) == list(word)
        except DecodingError:
            pass
    return stats


def cmd_verify(args) -> int:
    code = _load_code(args.code)
    cert = certify_optimal(code, threads=args.threads)
    locality = check_locality(code)
    report = cert.to_json()
    report["locality"] = locality.ok
    if not locality.ok:
        report["locality_failure"] = {"reason": locality.reason, "witness": locality.witness}
    report["mds_partition"] = check_mds_partition(code).ok
    ok = cert.optimal and locality.ok
    if args.trials:
        t = _trials(code, args.trials, args.seed)
        report["trials"] = t
        ok = ok and t["local_ok"] == t["global_ok"] == args.trials
    _emit(report)
    if not ok:
        print("code is not a certified optimal locally repairable code", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_encode(args) -> int:
    code = _load_code(args.code)
    info = _ints(args.info, "--info")
    if len(info) != code.k:
        raise UsageError(f"--info needs {code.k} symbols, got {len(info)}")
    _emit({"codeword": [int(x) for x in encode(code, info)]})
    return EXIT_OK


def _parse_word(text: str) -> tuple[list[int | None], list[int]]:
    word: list[int | None] = []
    erased = []
    for i, tok in enumerate(text.split(",")):
        tok = tok.strip()
        if tok == "_":
            word.append(None)
            erased.append(i)
        else:
            try:
                word.append(int(tok))
            except ValueError:
                raise UsageError(f"bad symbol {tok!r} at position {i}") from None
    return word, erased


def cmd_decode(args) -> int:
    code = _load_code(args.code)
    word, erased = _parse_word(args.word)
    if len(word) != code.n:
        raise UsageError(f"--word needs {code.n} symbols, got {len(word)}")
    try:
        out, method = recover(code, word, erased)
    except DecodingError as exc:
        _emit({"codeword": None, "error": str(exc), "deficiency": exc.deficiency})
        print(f"decoding failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit({"codeword": [int(x) for x in out], "method": method, "erasures": len(erased)})
    return EXIT_OK


def cmd_reduce(args) -> int:
    code = _load_code(args.code)
    if args.mode == "delta":
        _emit(dumps(delta_reduce(code)), args.out)
    elif args.mode == "puncture":
        d = args.d
        if d is None:
            cert = certify_optimal(code, threads=args.threads)
            if cert.d is None:
                raise UsageError("distance exceeds the bound; pass --d")
            d = cert.d
        _emit(dumps(puncture_reduce(code, d)), args.out)
    else:
        M = m2_reduce(code)
        _emit({"q": code.q, "rows": M.shape[0], "cols": M.shape[1], "M2": M.tolist()}, args.out)
    return EXIT_OK


def cmd_designs(args) -> int:
    if args.action == "check":
        fam = _load_family(args.file)
        report: dict[str, Any] = {"blocks": len(fam), "overlap": D.overlap(fam)}
        checks = []
        if args.mu is not None:
            if args.delta is None:
                raise UsageError("--mu needs --delta")
            checks.append(("mu_condition", D.check_mu_condition(fam, args.mu, args.delta)))
        if args.uibf is not None:
            if args.delta is None:
                raise UsageError("--uibf needs --delta")
            s, t = args.uibf
            checks.append(("uibf", D.check_uibf(fam, s, t, args.delta)))
        if args.packing is not None:
            checks.append(("packing", D.check_packing(fam, args.packing)))
        if args.ecf:
            checks.append(("ecf", D.check_ecf(fam)))
        for name, res in checks:
            report[name] = {"ok": res.ok, "witness": res.witness}
        _emit(report)
        return EXIT_OK if all(res.ok for _, res in checks) else EXIT_FAIL
    if args.kind is None:
        raise UsageError("designs needs --kind or the check action")
    if args.kind == "sunflower":
        if None in (args.w, args.petal, args.core):
            raise UsageError("sunflower needs --w, --petal and --core")
        fam = D.sunflower(args.w, args.petal, args.core)
    elif args.kind == "sts":
        if args.n1 is None:
            raise UsageError("sts needs --n1")
        fam = D.steiner_triple_bose(args.n1)
    else:
        if args.p is None:
            raise UsageError("affine-plane needs --p")
        fam = D.affine_plane_lines(args.p)
    if args.prune:
        fam = D.prune_to_ecf(fam)
    _emit(fam.dumps() + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="superlrc", description="Optimal locally repairable codes over small fields.")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized trials (default 0)")
    ap.add_argument("--threads", type=int, default=1, help="worker processes for distance search")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code from parameters and a design")
    for name in ("q", "r", "delta", "v", "w"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--design", default="identical",
                   help="identical, sunflower, affine-plane, sts or file:PATH")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", help="evaluate distance and length bounds")
    for name in ("q", "r", "delta", "k"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="certify distance, locality and optimality")
    p.add_argument("code")
    p.add_argument("--trials", type=int, default=0, help="also run this many seeded repair round-trips")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("encode", help="encode an information vector")
    p.add_argument("code")
    p.add_argument("--info", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="fill erasures marked with _")
    p.add_argument("code")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("reduce", help="derive a related code")
    p.add_argument("code")
    p.add_argument("--mode", choices=["delta", "puncture", "m2"], required=True)
    p.add_argument("--d", type=int, help="distance for puncture mode (certified if omitted)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("designs", help="generate or check block designs")
    p.add_argument("--kind", choices=["sunflower", "sts", "affine-plane"])
    p.add_argument("--w", type=int)
    p.add_argument("--petal", type=int)
    p.add_argument("--core", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--prune", action="store_true", help="prune to an exact cover family")
    p.add_argument("--out")
    p.set_defaults(func=cmd_designs, action=None)
    dsub = p.add_subparsers(dest="action")
    c = dsub.add_parser("check", help="run condition checkers on a family file")
    c.add_argument("file")
    c.add_argument("--mu", type=int)
    c.add_argument("--delta", type=int)
    c.add_argument("--uibf", type=int, nargs=2, metavar=("S", "T"))
    c.add_argument("--packing", type=int, metavar="TAU_PLUS_1")
    c.add_argument("--ecf", action="store_true")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (UsageError, LrcError, D.DesignError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
