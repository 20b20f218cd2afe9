"""Command-line interface: ``promweb <group> <command> [options]``.

Output is JSON on stdout (``--pretty`` gives a human-readable rendering).
Exit codes: 0 success, 1 a checked property failed or the input violates a
contract, 2 usage error, 3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from . import csp, spider
from .qcombinatorics import NotRationalError, eval_at_root, fake_degree, kappa, \
    q_hook_polynomial
from .tableaux import ENUM_CAP_ENV, EnumerationLimitError, LabeledWord, Partition, \
    StandardTableau, count_syt, enumerate_syt, enumeration_cap, promote_power, promote_word, \
    tableau_of_word, yamanouchi_words
from .webs import GrowthStall, PlanarWeb, grow, validate
from .webs.render import to_dot, to_svg

SCHEMA_VERSION = 1
EXIT_OK, EXIT_CONTRACT, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


@dataclass
class CommandResult:
    payload: object
    ok: bool = True
    text: str | None = None

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.ok else EXIT_CONTRACT


class ContractError(Exception):
    """Input rejected by a precondition; reported as exit code 1."""


# ----- argument helpers -----

def _shape(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _rect(shape: Partition) -> Partition:
    if not shape.is_rectangle():
        raise ContractError(f"shape {shape} is not a rectangle")
    return shape


def _word(args) -> LabeledWord:
    try:
        return LabeledWord.parse(args.word, args.alphabet)
    except ValueError as exc:
        raise ContractError(str(exc)) from exc


def _format_word(w: LabeledWord, alphabet: str) -> str:
    if alphabet == "labels":
        return " ".join(str(x) for x in w.labels)
    return str(w)


def _dominant(w: LabeledWord, rows: int) -> LabeledWord:
    if not w.is_dominant() or w.num_rows != rows:
        raise ContractError(f"{w} is not a balanced Yamanouchi word on {rows} letters")
    return w


def _load_web(args) -> PlanarWeb:
    if getattr(args, "web", None):
        text = sys.stdin.read() if args.web == "-" else Path(args.web).read_text()
        data = json.loads(text)
        return PlanarWeb.from_json(data.get("web", data))
    if getattr(args, "word", None):
        return grow(_dominant(_word(args), 3))
    raise ContractError("give --web FILE or --word WORD")


def _web_payload(web: PlanarWeb, alphabet: str) -> dict:
    return {"word": _format_word(web.word_at_cut(), alphabet), "web": web.to_json()}


# ----- syt -----

def cmd_syt_count(args) -> CommandResult:
    return CommandResult({"shape": str(args.shape), "count": count_syt(args.shape)})


def cmd_syt_enumerate(args) -> CommandResult:
    tableaux = enumerate_syt(args.shape)
    return CommandResult([t.to_json() for t in tableaux],
                         text="\n\n".join(str(t) for t in tableaux))


def cmd_syt_promote(args) -> CommandResult:
    try:
        t = StandardTableau.from_json(json.loads(args.tableau))
    except (ValueError, TypeError) as exc:
        raise ContractError(f"bad tableau: {exc}") from exc
    p = promote_power(t, args.times)
    return CommandResult(p.to_json(), text=str(p))


# ----- word -----

def cmd_word_promote(args) -> CommandResult:
    w = _word(args)
    try:
        p = promote_word(w)
    except ValueError as exc:
        raise ContractError(str(exc)) from exc
    return CommandResult(_format_word(p, args.alphabet), text=_format_word(p, args.alphabet))


def cmd_word_validate(args) -> CommandResult:
    w = _word(args)
    payload = {"word": str(w), "yamanouchi": w.is_yamanouchi(), "balanced": w.is_balanced(),
               "first_violation": w.first_violation()}
    if w.is_yamanouchi():
        payload["tableau"] = tableau_of_word(w).to_json()
    return CommandResult(payload, ok=w.is_dominant())


# ----- web -----

def cmd_web_grow(args) -> CommandResult:
    w = _word(args)
    try:
        web = grow(w)
    except GrowthStall as exc:
        return CommandResult({"error": "growth_stall", "message": str(exc)}, ok=False)
    return CommandResult(_web_payload(web, args.alphabet))


def cmd_web_word(args) -> CommandResult:
    web = _load_web(args)
    w = web.word_at_cut(args.cut)
    return CommandResult(_format_word(w, args.alphabet), text=_format_word(w, args.alphabet))


def cmd_web_rotate(args) -> CommandResult:
    web = _load_web(args).rotate(args.times)
    return CommandResult(_web_payload(web, args.alphabet))


def cmd_web_validate(args) -> CommandResult:
    report = validate(_load_web(args))
    return CommandResult(report.to_json(), ok=report.ok)


def cmd_web_render(args) -> CommandResult:
    web = _load_web(args)
    text = to_svg(web) if args.format == "svg" else to_dot(web)
    if args.output:
        Path(args.output).write_text(text)
        return CommandResult({"written": args.output, "format": args.format})
    return CommandResult({"format": args.format, "content": text}, text=text)


# ----- spider -----

def _sum_input(args) -> spider.WebSum:
    rows = 2 if args.rank == spider.A1 else 3
    if args.sum:
        data = json.loads(args.sum)
        terms = {}
        for key, c in data.items():
            terms[_dominant(LabeledWord.parse(key, "rows"), rows)] = int(c)
        size = len(next(iter(terms))) if terms else 0
        return spider.WebSum(args.rank, size, terms)
    return spider.WebSum.basis(args.rank, _dominant(_word(args), rows))


def cmd_spider_apply(args) -> CommandResult:
    x = _sum_input(args)
    if not 1 <= args.gen < x.size:
        raise ContractError(f"generator {args.gen} out of range 1..{x.size - 1}")
    y = spider.attach_uncrossing(x, args.gen) if args.uncrossing else \
        spider.coxeter_action(args.gen, x)
    return CommandResult(y.to_json(), text=str(y))


def cmd_spider_longcycle(args) -> CommandResult:
    y = spider.long_cycle_action(_sum_input(args))
    return CommandResult(y.to_json(), text=str(y))


def cmd_spider_reduce(args) -> CommandResult:
    web = _load_web(args)
    try:
        y = spider.reduce(web)
    except ValueError as exc:
        raise ContractError(str(exc)) from exc
    return CommandResult(y.to_json(), text=str(y))


# ----- qpoly -----

def cmd_qpoly_hook(args) -> CommandResult:
    poly = q_hook_polynomial(args.shape)
    return CommandResult({"shape": str(args.shape), "coeffs": poly.to_json(),
                          "kappa": kappa(args.shape)}, text=str(poly))


def cmd_qpoly_eval(args) -> CommandResult:
    poly = q_hook_polynomial(args.shape)
    m = args.m or args.shape.n
    ds = [args.d] if args.d is not None else list(range(m))
    fake = fake_degree(args.shape) if args.fake else None
    values = {}
    for d in ds:
        try:
            values[str(d)] = fake.eval_at_root(m, d) if fake else eval_at_root(poly, m, d)
        except NotRationalError as exc:
            raise ContractError(str(exc)) from exc
    return CommandResult({"shape": str(args.shape), "m": m, "values": values})


# ----- verify -----

def _parallel_map(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def cmd_verify_csp(args) -> CommandResult:
    report = csp.verify_csp(_rect(args.shape))
    lines = [f"{'d':>3} {'fixed':>8} {'eval':>8}  ok"]
    lines += [f"{r.d:>3} {r.fixed:>8} {r.value:>8}  {'yes' if r.ok else 'NO'}" for r in report.rows]
    return CommandResult(report.to_json(), ok=report.ok, text="\n".join(lines))


def _rotation_promotion_one(w: LabeledWord) -> str | None:
    web = grow(w)
    if web.word_at_cut() != w:
        return f"{w}: round trip gave {web.word_at_cut()}"
    if web.rotate().word_at_cut() != promote_word(w):
        return f"{w}: rotation gave {web.rotate().word_at_cut()}, promotion {promote_word(w)}"
    return None


def cmd_verify_rotation_promotion(args) -> CommandResult:
    words = list(_words(args.n))
    bad = [msg for msg in _parallel_map(_rotation_promotion_one, words, args.jobs) if msg]
    return CommandResult({"n": args.n, "webs": len(words), "violations": bad}, ok=not bad)


def _words(n: int):
    count = count_syt((n, n, n))
    if count > enumeration_cap():
        raise EnumerationLimitError(f"{count} webs exceed the cap {enumeration_cap()}")
    return yamanouchi_words((n, n, n))


def cmd_verify_rotcyc(args) -> CommandResult:
    sign = spider.rotation_sign(args.rank)
    bad = []
    basis = spider.web_basis(args.rank, args.n)
    for w in basis:
        got = spider.long_cycle_action(spider.WebSum.basis(args.rank, w))
        want = spider.WebSum.basis(args.rank, spider.rotate_basis(args.rank, w), sign)
        if got != want:
            bad.append({"word": str(w), "got": got.to_json(), "expected": want.to_json()})
    return CommandResult({"rank": args.rank, "n": args.n, "sign": sign, "basis": len(basis),
                          "violations": bad}, ok=not bad)


def cmd_verify_coxeter(args) -> CommandResult:
    size = (2 if args.rank == spider.A1 else 3) * args.n
    mats = [spider.rep_matrix(i, args.n, args.rank) for i in range(1, size)]
    ident = np.eye(len(spider.web_basis(args.rank, args.n)), dtype=int)
    failures = []
    for i, a in enumerate(mats, start=1):
        if not (a.dot(a) == ident).all():
            failures.append(f"s_{i}^2 != 1")
    for i in range(len(mats) - 1):
        a, b = mats[i], mats[i + 1]
        if not (a.dot(b).dot(a) == b.dot(a).dot(b)).all():
            failures.append(f"braid relation fails for s_{i + 1}, s_{i + 2}")
        for j in range(i + 2, len(mats)):
            if not (a.dot(mats[j]) == mats[j].dot(a)).all():
                failures.append(f"s_{i + 1} and s_{j + 1} do not commute")
    return CommandResult({"rank": args.rank, "n": args.n, "dimension": int(ident.shape[0]),
                          "failures": failures}, ok=not failures)


def _confluence_one(job: tuple[LabeledWord, int, int]) -> str | None:
    w, trials, seed = job
    ref = grow(w)
    code = ref.canonical_form()
    rng = random.Random(f"{seed}:{w}")
    for _ in range(trials):
        other = grow(w, rng=rng)
        if other.canonical_form() != code or other.word_at_cut() != w:
            return str(w)
    return None


def cmd_verify_growth_confluence(args) -> CommandResult:
    words = list(_words(args.n))
    jobs = [(w, args.trials, args.seed) for w in words]
    bad = [w for w in _parallel_map(_confluence_one, jobs, args.jobs) if w]
    return CommandResult({"n": args.n, "words": len(words), "trials": args.trials,
                          "violations": bad}, ok=not bad)


def cmd_orbits(args) -> CommandResult:
    c = csp.promotion_orbits(args.shape)
    text = "\n".join(f"o_{k} = {o}" for k, o in sorted(c.orbits.items()))
    return CommandResult(c.to_json(), text=text)


# ----- parser -----

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--envelope", action="store_true",
                        help="wrap JSON output with schema version and status")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    word_opts = argparse.ArgumentParser(add_help=False)
    word_opts.add_argument("--word", help="word such as 111223233 or '1 0 m1'")
    word_opts.add_argument("--alphabet", choices=("rows", "labels"), default="rows")

    web_opts = argparse.ArgumentParser(add_help=False, parents=[word_opts])
    web_opts.add_argument("--web", help="web JSON file, or - for stdin")

    rank_opts = argparse.ArgumentParser(add_help=False)
    rank_opts.add_argument("--rank", choices=(spider.A1, spider.A2), default=spider.A2)

    parser = argparse.ArgumentParser(prog="promweb", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    groups = parser.add_subparsers(dest="group", required=True)

    def command(sub, name, func, parents=(), **kw):
        p = sub.add_parser(name, parents=[common, *parents], **kw)
        p.set_defaults(func=func)
        return p

    syt = groups.add_parser("syt", help="standard tableaux").add_subparsers(dest="cmd", required=True)
    command(syt, "count", cmd_syt_count).add_argument("--shape", type=_shape, required=True)
    command(syt, "enumerate", cmd_syt_enumerate).add_argument("--shape", type=_shape, required=True)
    p = command(syt, "promote", cmd_syt_promote)
    p.add_argument("--tableau", required=True, help="JSON rows, e.g. '[[1,2],[3,4]]'")
    p.add_argument("--times", type=int, default=1)

    word = groups.add_parser("word", help="Yamanouchi words").add_subparsers(dest="cmd", required=True)
    command(word, "promote", cmd_word_promote, [word_opts])
    command(word, "validate", cmd_word_validate, [word_opts])

    web = groups.add_parser("web", help="three-row webs").add_subparsers(dest="cmd", required=True)
    command(web, "grow", cmd_web_grow, [word_opts])
    command(web, "word", cmd_web_word, [web_opts]).add_argument("--cut", type=int, default=None)
    command(web, "rotate", cmd_web_rotate, [web_opts]).add_argument("--times", type=int, default=1)
    command(web, "validate", cmd_web_validate, [web_opts])
    p = command(web, "render", cmd_web_render, [web_opts])
    p.add_argument("--format", choices=("dot", "svg"), default="dot")
    p.add_argument("--output")

    sp = groups.add_parser("spider", help="web reduction and group actions").add_subparsers(
        dest="cmd", required=True)
    p = command(sp, "apply", cmd_spider_apply, [word_opts, rank_opts])
    p.add_argument("--gen", type=int, required=True)
    p.add_argument("--sum", help="JSON map from word to coefficient")
    p.add_argument("--uncrossing", action="store_true", help="apply t_i instead of s_i")
    p = command(sp, "longcycle", cmd_spider_longcycle, [word_opts, rank_opts])
    p.add_argument("--sum", help="JSON map from word to coefficient")
    command(sp, "reduce", cmd_spider_reduce, [web_opts])

    qp = groups.add_parser("qpoly", help="q-hook polynomials").add_subparsers(dest="cmd", required=True)
    command(qp, "hook", cmd_qpoly_hook).add_argument("--shape", type=_shape, required=True)
    p = command(qp, "eval", cmd_qpoly_eval)
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--m", type=int, help="root of unity order (default: size of the shape)")
    p.add_argument("--d", type=int, help="single power (default: all 0..m-1)")
    p.add_argument("--fake", action="store_true", help="evaluate the fake degree instead")

    ver = groups.add_parser("verify", help="exhaustive checks").add_subparsers(dest="cmd", required=True)
    command(ver, "csp", cmd_verify_csp).add_argument("--shape", type=_shape, required=True)
    command(ver, "rotation-promotion", cmd_verify_rotation_promotion).add_argument(
        "--n", type=int, required=True)
    command(ver, "rotcyc", cmd_verify_rotcyc, [rank_opts]).add_argument(
        "--n", type=int, required=True)
    command(ver, "coxeter", cmd_verify_coxeter, [rank_opts]).add_argument(
        "--n", type=int, required=True)
    p = command(ver, "growth-confluence", cmd_verify_growth_confluence)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    command(groups, "orbits", cmd_orbits, help="promotion orbit census").add_argument(
        "--shape", type=_shape, required=True)
    return parser


def _emit(result: CommandResult, args, status: str) -> None:
    if args.pretty and result.text is not None:
        print(result.text)
        return
    payload = result.payload
    if args.envelope:
        command = f"{args.group} {getattr(args, 'cmd', '')}".strip()
        payload = {"schema_version": SCHEMA_VERSION, "command": command,
                   "status": status, "result": payload}
    print(json.dumps(payload, indent=2 if args.pretty else None))


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        result = args.func(args)
    except EnumerationLimitError as exc:
        result = CommandResult({"error": "enumeration_cap", "message": str(exc),
                                "override": ENUM_CAP_ENV}, ok=False)
        _emit(result, args, "guard")
        return EXIT_GUARD
    except ContractError as exc:
        result = CommandResult({"error": "contract", "message": str(exc)}, ok=False)
        _emit(result, args, "violation")
        return EXIT_CONTRACT
    _emit(result, args, "ok" if result.ok else "violation")
    return result.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
