"""Command-line interface: ``qgrass <command> [options]``.

Dimension vectors are comma separated and refer to the relabelled vertex
order (arrows ascend); the relabelling is printed whenever it is not the
identity.  Exit codes: 0 success, 1 verification failure, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .errors import QGrassError
from .grass import (dual_canonical_data, dual_pbw, euler_characteristic, point_count,
                    poincare_for, poincare_raw, poincare_typeA_fast)
from .laurent import LaurentPoly
from .oracle import ModularRep, count_subreps, verify_against_formula
from .quiver import Quiver, dim_vectors_up_to, load_quiver, sub, sub_dim_vectors
from .repmod import generic_decomposition
from .roots import root_system
from .shuffle import ShuffleElement, shuffle_many
from .words import format_word, parse_word

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(QGrassError, ValueError):
    """Bad command-line value."""


def parse_vector(text: str, n: int | None = None) -> tuple[int, ...]:
    try:
        vec = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad dimension vector {text!r}") from exc
    if any(x < 0 for x in vec):
        raise InputError(f"negative entry in {text!r}")
    if n is not None and len(vec) != n:
        raise InputError(f"{text!r} has {len(vec)} entries, the quiver has {n} vertices")
    return vec


def parse_primes(text: str) -> list[int]:
    primes = [int(x) for x in text.split(",") if x.strip()]
    for p in primes:
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise InputError(f"{p} is not a prime")
    return primes


def fmt_vec(v: Sequence[int]) -> str:
    return ",".join(map(str, v))


def _load(args) -> Quiver:
    quiver, relabel = load_quiver(Path(args.quiver))
    args.relabel = relabel
    if any(k != v for k, v in relabel.items()) and not getattr(args, "json", False):
        pairs = ", ".join(f"{k}->{v}" for k, v in sorted(relabel.items()))
        print(f"relabeled vertices (old->new): {pairs}")
    return quiver


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        if hasattr(args, "relabel"):
            payload = {"relabel": {str(k): v for k, v in sorted(args.relabel.items())}, **payload}
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


# -- commands ---------------------------------------------------------------

def cmd_poincare(args) -> int:
    quiver = _load(args)
    total = parse_vector(args.total, quiver.n)
    mu = parse_vector(args.sub, quiver.n)
    if any(m > t for m, t in zip(mu, total)):
        raise InputError(f"sub-dimension {fmt_vec(mu)} exceeds total {fmt_vec(total)}")
    kw = {"strict": args.strict}
    if args.partition:
        kw["partition"] = root_system(quiver).parse_partition(args.partition)
    if args.dual_canonical:
        try:
            data = json.loads(Path(args.dual_canonical).read_text())
            kw["dual_canonical"] = ShuffleElement.from_json(data)
        except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
            raise InputError(f"cannot read dual canonical file: {exc}") from exc
    res = poincare_for(quiver, total, mu, **kw)
    primes = parse_primes(args.primes) if args.primes else []
    counts = {p: point_count(res, p) for p in primes}
    rs = root_system(quiver) if quiver.is_dynkin else None
    part = rs.format_partition(res.partition) if rs and res.partition is not None else None
    label = rs.format_partition(res.label) if rs and res.label is not None else None
    payload = {"total": list(total), "sub": list(mu), "normalized": str(res.normalized),
               "raw": str(res.raw), "shift": res.shift, "partition": part, "label": label,
               "euler_characteristic": euler_characteristic(res),
               "point_counts": {str(p): c for p, c in counts.items()}, "notes": list(res.notes)}
    lines = [f"normalized: {res.normalized}", f"raw: {res.raw}", f"shift: {res.shift}"]
    if part is not None:
        lines.append(f"partition: {part}")
    if label is not None and label != part:
        lines.append(f"dual canonical label: {label}")
    lines.append(f"euler characteristic: {euler_characteristic(res)}")
    lines += [f"points over F_{p}: {c}" for p, c in counts.items()]
    lines += [f"note: {n}" for n in res.notes]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_shuffle(args) -> int:
    quiver = _load(args)
    words = [parse_word(w) for w in args.words.split("|")]
    for w in words:
        if any(not 1 <= a <= quiver.n for a in w):
            raise InputError(f"word {format_word(w)} uses a letter outside 1..{quiver.n}")
    result = shuffle_many([ShuffleElement.word(w) for w in words], quiver)
    _emit(args, result.to_json(), [str(result)])
    return EXIT_OK


def cmd_pbw(args) -> int:
    quiver = _load(args)
    rs = root_system(quiver)
    if args.partition:
        lams = [rs.parse_partition(args.partition)]
    elif args.dim:
        lams = rs.kostant_partitions(parse_vector(args.dim, quiver.n))
    else:
        raise InputError("pbw needs --partition or --dim")
    rows = [(rs.format_partition(lam), dual_pbw(quiver, lam)) for lam in lams]
    _emit(args, {"elements": [{"partition": k, "element": e.to_json()} for k, e in rows]},
          [f"{k}: {e}" for k, e in rows])
    return EXIT_OK


def cmd_dualcanonical(args) -> int:
    quiver = _load(args)
    rs = root_system(quiver)
    nu = parse_vector(args.dim, quiver.n)
    data = dual_canonical_data(quiver, nu)
    rows = [(rs.format_partition(lam), data.elements[lam]) for lam in data.partitions]
    _emit(args, {"elements": [{"partition": k, "element": e.to_json(nu)} for k, e in rows]},
          [f"{k}: {e}" for k, e in rows])
    return EXIT_OK


def cmd_lyndon(args) -> int:
    quiver = _load(args)
    rs = root_system(quiver)
    rows = [(fmt_vec(b), format_word(rs.lyndon_word(b))) for b in rs.roots]
    _emit(args, {"roots": [{"root": r, "word": w} for r, w in rows]},
          [f"{r} -> {w}" for r, w in rows])
    return EXIT_OK


def cmd_decompose(args) -> int:
    quiver = _load(args)
    nu = parse_vector(args.dim, quiver.n)
    lam = generic_decomposition(quiver, nu)
    text = root_system(quiver).format_partition(lam)
    _emit(args, {"dim": list(nu), "partition": text}, [text])
    return EXIT_OK


def cmd_count_points(args) -> int:
    rep = ModularRep.from_json(Path(args.rep))
    mu = parse_vector(args.sub, rep.quiver.n)
    count = count_subreps(rep, mu)
    _emit(args, {"prime": rep.p, "sub": list(mu), "count": count}, [str(count)])
    return EXIT_OK


def _shape_ok(quiver: Quiver, nu, mu, normalized: LaurentPoly) -> bool:
    if normalized.is_zero():
        return True
    d = quiver.euler_form(mu, nu)
    return (normalized.max_exponent() == 2 * d
            and all(normalized[k] == normalized[2 * d - k] for k in range(2 * d + 1)))


def cmd_verify(args) -> int:
    quiver = _load(args)
    primes = parse_primes(args.primes)
    rs = root_system(quiver)
    checked = 0
    for total in dim_vectors_up_to(quiver.n, args.max_height, 1):
        lam = generic_decomposition(quiver, total)
        for mu in sub_dim_vectors(total):
            nu = sub(total, mu)
            report = verify_against_formula(quiver, nu, mu, primes)
            res = poincare_for(quiver, total, mu)
            problems = [f"F_{c.p}: oracle {c.oracle}, formula {c.formula}"
                        for c in report.checks if not c.ok]
            if not _shape_ok(quiver, nu, mu, res.normalized):
                problems.append(f"degree/palindromy violated by {res.normalized}")
            if poincare_typeA_fast(quiver, lam, nu, mu) != poincare_raw(quiver, nu, mu, lam):
                problems.append("multi-shuffle shortcut disagrees with the shuffle coefficient")
            if problems:
                print(f"MISMATCH total {fmt_vec(total)} sub {fmt_vec(mu)} "
                      f"(generic {rs.format_partition(lam)}): {report.polynomial}")
                for line in problems:
                    print(f"  {line}")
                return EXIT_MISMATCH
            checked += 1
        print(f"{fmt_vec(total):>12}  {rs.format_partition(lam):<24} ok")
    print(f"{checked} cases verified at primes {fmt_vec(primes)}")
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgrass", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, quiver=True):
        p = subs.add_parser(name, help=help_text)
        if quiver:
            p.add_argument("-q", "--quiver", required=True, help="quiver JSON file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = command("poincare", cmd_poincare, "Poincaré polynomial of Gr_sub(M), M rigid of dim total")
    p.add_argument("--total", required=True)
    p.add_argument("--sub", required=True)
    p.add_argument("--partition", help='Kostant partition, e.g. "1,2|1"')
    p.add_argument("--dual-canonical", help="JSON file with a dual canonical element")
    p.add_argument("--primes", help="also print point counts at these primes")
    p.add_argument("--strict", action="store_true",
                   help="fail instead of falling back when the root order is not adapted")

    p = command("shuffle", cmd_shuffle, "shuffle product of words")
    p.add_argument("--words", required=True, help='words separated by "|", e.g. "1,2|1"')

    p = command("pbw", cmd_pbw, "dual PBW elements")
    p.add_argument("--partition")
    p.add_argument("--dim")

    p = command("dualcanonical", cmd_dualcanonical, "dual canonical basis of a weight")
    p.add_argument("--dim", required=True)

    command("lyndon", cmd_lyndon, "good Lyndon words of the positive roots")

    p = command("decompose", cmd_decompose, "generic (rigid) decomposition of a dimension vector")
    p.add_argument("--dim", required=True)

    p = command("count-points", cmd_count_points, "count subrepresentations over F_p", quiver=False)
    p.add_argument("-r", "--rep", required=True, help='representation JSON with a "prime" field')
    p.add_argument("--sub", required=True)

    p = command("verify", cmd_verify, "check the formula against brute-force counts")
    p.add_argument("--max-height", type=int, default=4)
    p.add_argument("--primes", default="2,3")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (QGrassError, ValueError) as exc:
        print(f"qgrass {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
