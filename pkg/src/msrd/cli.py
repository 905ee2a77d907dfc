"""Command-line front end.

Exit codes: 0 success / MSRD confirmed, 1 verification failed,
2 invalid parameters or input file, 3 enumeration budget exceeded,
4 invariant breach.  ``MSRD_THREADS`` caps enumeration threads
(0 or unset: one per CPU).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .bounds import RectShape, check_eligibility, decompose_distance, defect, singleton_dimension
from .codefile import dumps_code, read_code
from .constructions import construct
from .errors import BudgetExceeded, InvariantBreach, MSRDError, ParameterError
from .fields import make_field
from .sumrank import DEFAULT_CAP, basis_rank_check
from .verify import is_msrd, min_distance_sampled, weight_distribution

EXIT_OK, EXIT_FAIL, EXIT_PARAM, EXIT_BUDGET, EXIT_BREACH = 0, 1, 2, 3, 4


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _eligibility_lines(sizes, d_sr) -> list[str]:
    rep = check_eligibility(sizes, d_sr)
    fmt = {True: "pass", False: "FAIL", None: "vacuous"}
    lines = [
        f"strictly decreasing: {fmt[rep.strictly_decreasing]}",
        f"prefix capacity: {fmt[rep.condition1]}",
        f"tail capacity: {fmt[rep.condition2]}",
        f"all-distance condition: {fmt[rep.all_distances]}",
    ]
    if len(sizes) == 2:
        lines.append(f"two-block condition n_1 >= n_2^2: {fmt[sizes[0] >= sizes[1] ** 2]}")
    lines.append(f"eligible: {'yes' if rep.eligible and (len(sizes) != 2 or sizes[0] >= sizes[1] ** 2) else 'no'}")
    return lines


def cmd_bound(args) -> int:
    make_field(args.q)
    if args.m_sizes is not None:
        if len(args.m_sizes) != len(args.sizes):
            raise ParameterError("--m-sizes must have one entry per block")
        shape = RectShape(tuple(zip(args.sizes, args.m_sizes)))
    else:
        shape = RectShape.square(args.sizes)
    prof = decompose_distance(shape, args.distance)
    dim = singleton_dimension(shape, args.distance)
    print(f"q = {args.q}, sizes = {list(shape.pairs)}, N = {shape.N}, d_sr = {args.distance}")
    print(f"j = {prof.j}")
    print(f"d_1 = {prof.d_1}")
    print(f"delta = {prof.delta}")
    print(f"singleton dimension = {dim}  (|C| <= {args.q}^{dim})")
    if all(n == m for n, m in shape.pairs):
        for line in _eligibility_lines(shape.sizes, args.distance):
            print(line)
    else:
        print("eligibility: not applicable to rectangular blocks")
    return EXIT_OK


def cmd_construct(args) -> int:
    code = construct(args.q, args.sizes, args.distance)
    text = dumps_code(code)
    summary = f"dimension = {code.k}\ngenerators = {code.k}"
    if args.out:
        Path(args.out).write_text(text)
        print(summary)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    code = read_code(args.path)
    print(f"q = {code.shape.q}, sizes = {list(code.shape.sizes)}, designed distance = {code.designed_distance}")
    if args.mode == "sampled":
        dim = basis_rank_check(code)
        print(f"dimension = {dim}")
        print(f"singleton dimension = {singleton_dimension(code.shape, code.designed_distance)}")
        print(f"defect = {defect(code.shape, code.designed_distance, dim)}")
        est = min_distance_sampled(code, args.trials, args.seed)
        print(f"distance <= {est}  (sampled upper bound, {args.trials} trials, seed {args.seed})")
        print("verdict: none (sampled mode)")
        return EXIT_OK
    rep = is_msrd(code, cap=args.cap, workers=None)
    print(f"dimension = {rep.dimension}")
    print(f"singleton dimension = {rep.singleton_dimension}")
    print(f"defect = {rep.defect}")
    print(f"distance = {rep.distance}  (exact)")
    print(f"verdict: {'MSRD' if rep.msrd else 'not MSRD'}")
    return EXIT_OK if rep.msrd else EXIT_FAIL


def cmd_weights(args) -> int:
    code = read_code(args.path)
    hist = weight_distribution(code, cap=args.cap, workers=None)
    print("weight count")
    for w, c in hist.items():
        print(f"{w} {c}")
    print(f"total {sum(hist.values())}")
    return EXIT_OK


def _grid_rows(path: str) -> list[dict]:
    try:
        rows = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParameterError(f"config is not valid JSON: {exc}") from exc
    if isinstance(rows, dict):
        rows = rows.get("rows", [])
    if not isinstance(rows, list):
        raise ParameterError("config must be a list of rows")
    return rows


def cmd_grid(args) -> int:
    rows = _grid_rows(args.config)
    header = f"{'q':>3} {'sizes':<12} {'d_sr':>4} {'dim':>4} {'bound':>5} {'dist':>4}  verdict"
    print(header)
    ok = True
    for row in rows:
        q, sizes, d = row.get("q"), row.get("sizes"), row.get("distance")
        label = f"{q!s:>3} {','.join(map(str, sizes or [])):<12} {d!s:>4}"
        try:
            code = construct(int(q), [int(n) for n in sizes], int(d))
            rep = is_msrd(code, cap=int(row.get("cap", DEFAULT_CAP)), workers=None)
        except MSRDError as exc:
            ok = False
            print(f"{label} {'-':>4} {'-':>5} {'-':>4}  {type(exc).__name__}: {exc}")
            continue
        except (TypeError, ValueError) as exc:
            ok = False
            print(f"{label} {'-':>4} {'-':>5} {'-':>4}  invalid row: {exc}")
            continue
        ok &= rep.msrd
        print(f"{label} {rep.dimension:>4} {rep.singleton_dimension:>5} {rep.distance!s:>4}  "
              f"{'MSRD' if rep.msrd else 'not MSRD'}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="msrd", description="Construct and verify MSRD sum-rank-metric codes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="Singleton bound and eligibility report")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--m-sizes", type=_int_list, default=None)
    p.add_argument("--distance", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("construct", help="build a code and write its file")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--distance", type=int, required=True)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="certify a code file")
    p.add_argument("path")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("weights", help="sum-rank weight distribution of a code file")
    p.add_argument("path")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("grid", help="construct and verify every row of a JSON config")
    p.add_argument("--config", required=True)
    p.set_defaults(func=cmd_grid)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantBreach as exc:
        print(f"error: invariant breach: {exc}", file=sys.stderr)
        return EXIT_BREACH
    except (ParameterError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARAM


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
