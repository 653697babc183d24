"""Command line front end.

    eudoxus eval "sqrt(2) + 1/3" --digits 20 [--eps E] [--json] [--max-index M]
    eudoxus repl
    eudoxus verify [--scale small|full] [--seed S] [--report PATH]

Exit codes: 0 success, 1 evaluation error, 2 usage or parse error,
3 a verification check failed.
"""

import argparse
import contextlib
import json
import os
import sys
from fractions import Fraction

from . import config
from .expr import MAX_DIGITS, ParseError, eval_expr, is_evaluation_error, parse

EXIT_OK, EXIT_EVAL, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'not an integer: {text!r}')
    if value < 1:
        raise argparse.ArgumentTypeError(f'must be positive: {text!r}')
    return value


def _digits(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'not an integer: {text!r}')
    if not 0 <= value <= MAX_DIGITS:
        raise argparse.ArgumentTypeError(f'digits must be between 0 and {MAX_DIGITS}')
    return value


def _eps(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f'not a rational or decimal: {text!r}')
    if value <= 0:
        raise argparse.ArgumentTypeError('eps must be positive')
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog='eudoxus',
                                     description='Exact real arithmetic with slopes.')
    sub = parser.add_subparsers(dest='command', required=True)

    ev = sub.add_parser('eval', help='evaluate one expression')
    ev.add_argument('expr')
    ev.add_argument('--digits', type=_digits, default=10)
    ev.add_argument('--eps', type=_eps, default=None,
                    help='also require the certified radius to be at most this')
    ev.add_argument('--json', action='store_true')
    ev.add_argument('--max-index', type=_positive_int, default=None,
                    help='largest slope index to evaluate (overrides MAX_INDEX)')

    repl = sub.add_parser('repl', help='interactive evaluation')
    repl.add_argument('--digits', type=_digits, default=10)

    ver = sub.add_parser('verify', help='run the bound checks and the axiom suite')
    ver.add_argument('--scale', choices=('small', 'full'), default='small')
    ver.add_argument('--seed', type=int, default=0)
    ver.add_argument('--report', default=None, help='write JSON lines here')
    return parser


def _index_cap(args):
    if getattr(args, 'max_index', None) is not None:
        return args.max_index
    env = os.environ.get('MAX_INDEX')
    if env is None:
        return None
    try:
        value = int(env)
    except ValueError:
        raise UsageError(f'MAX_INDEX is not an integer: {env!r}')
    if value < 1:
        raise UsageError('MAX_INDEX must be positive')
    return value


def _cmd_eval(args, out):
    try:
        node = parse(args.expr)
    except ParseError as exc:
        print(f'parse error: {exc}', file=sys.stderr)
        return EXIT_USAGE
    try:
        result = eval_expr(node, args.digits, eps=args.eps, source=args.expr)
    except Exception as exc:
        if not is_evaluation_error(exc):
            raise
        print(f'error: {exc}', file=sys.stderr)
        return EXIT_EVAL
    if args.json:
        print(json.dumps(result.to_json()), file=out)
    else:
        print(result, file=out)
    return EXIT_OK


def _cmd_repl(args, out, stdin):
    session = {}
    digits = args.digits
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        if line in (':quit', ':q'):
            break
        if line.startswith(':digits'):
            try:
                digits = _digits(line.split(maxsplit=1)[1])
            except (IndexError, argparse.ArgumentTypeError) as exc:
                print(f'usage: :digits N  ({exc})', file=out)
            continue
        try:
            print(eval_expr(parse(line), digits, session=session, source=line), file=out)
        except ParseError as exc:
            print(f'parse error: {exc}', file=out)
        except Exception as exc:
            if not is_evaluation_error(exc):
                raise
            print(f'error: {exc}', file=out)
    return EXIT_OK


def _cmd_verify(args, out):
    from .verify import run_verification, summarize, write_report
    reports = run_verification(args.seed, args.scale)
    if args.report:
        write_report(reports, args.report)
    print(summarize(reports), file=out)
    return EXIT_VERIFY if any(r.outcome == 'fail' for r in reports) else EXIT_OK


def main(argv=None, out=None, stdin=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cap = _index_cap(args)
    except UsageError as exc:
        print(f'usage error: {exc}', file=sys.stderr)
        return EXIT_USAGE
    limit = config.override(index_cap=cap) if cap is not None else contextlib.nullcontext()
    with limit:
        if args.command == 'eval':
            return _cmd_eval(args, out)
        if args.command == 'repl':
            return _cmd_repl(args, out, sys.stdin if stdin is None else stdin)
        return _cmd_verify(args, out)


if __name__ == '__main__':
    sys.exit(main())
