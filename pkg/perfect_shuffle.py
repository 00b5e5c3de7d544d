#!/usr/bin/env python3
"""
perfect_shuffle.py: Exact rook-polynomial calculator for no-equal-neighbour shuffles.

Computes, bit-exactly, how many orderings of a multiset deck have no two adjacent
cards of equal value, the full distribution of equal-value neighbours, classical
rook/hit numbers of boards, the closed-form polynomials l_n and l*_n,
generalized derangement counts, and a seeded Monte Carlo cross-check.

Usage:
    python perfect_shuffle.py prob --deck 13x4 [--digits N] [--json] [--group|--no-group] [--words]
    python perfect_shuffle.py dist --deck 2,2 [--json] [--group|--no-group]
    python perfect_shuffle.py rook BOARD_FILE [--hits] [--json]
    python perfect_shuffle.py poly (--full N | --linear N) [--power E] [--phi]
    python perfect_shuffle.py derange --counts 1,1,1,1 [--dist] [--group|--no-group]
    python perfect_shuffle.py simulate --deck 13x4 [--trials T] [--seed S] [--workers W] [--json]
    python perfect_shuffle.py brute --deck 4,4

Exit codes: 0 success, 1 usage/parse error (or brute FAIL), 2 guard violation.
Results go to stdout; diagnostics go to stderr.
"""

import argparse
import json
import sys
from typing import List, Optional

import config_loader
from boards import (AdjacencyConditionSet, SizeLimitError, avoiders_in_ambient,
                    generalized_rook_polynomial, hit_numbers_from_rook, load_board,
                    rook_numbers, rook_polynomial)
from closedforms import full_adjacency_poly, full_board_poly
from exactnum import factorial, format_integer, reduce
from polynomial import phi, render
from shuffle import (DeckComposition, adjacency_distribution, bruteforce_distribution,
                     derangement_distribution, format_distribution, format_report,
                     generalized_derangement_count, parse_deck_spec, perfect_shuffle_count,
                     perfect_shuffle_report)
from verify import format_simulation, simulate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this tool reserves 2 for guard violations."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _deck_arg(text: str) -> DeckComposition:
    try:
        return parse_deck_spec(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _counts_arg(text: str) -> DeckComposition:
    fields = [f.strip() for f in text.split(',')]
    if not all(f.isdigit() for f in fields):
        raise argparse.ArgumentTypeError(f"malformed count list {text!r}: expected e.g. '1,1,1,1'")
    try:
        return DeckComposition(tuple(int(f) for f in fields))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


# ── Commands ──────────────────────────────────────────────────────────────────

def cmd_prob(args: argparse.Namespace) -> int:
    report = perfect_shuffle_report(args.deck, digits=args.digits)
    print(format_report(report, as_json=args.json, group=args.group, words=args.words))
    return EXIT_OK


def cmd_dist(args: argparse.Namespace) -> int:
    dist = adjacency_distribution(args.deck)
    print(format_distribution(dist, as_json=args.json, group=args.group))
    return EXIT_OK


def cmd_rook(args: argparse.Namespace) -> int:
    board = load_board(args.board_file)

    if isinstance(board, AdjacencyConditionSet):
        poly = generalized_rook_polynomial(board)
        avoiders = avoiders_in_ambient(board)
        if args.json:
            data = {'kind': 'adjacency', 'n': board.n, 'polynomial': render(poly),
                    'coefficients': list(poly.coeffs)}
            if args.hits:
                data['avoiders'] = avoiders
            print(json.dumps(data, indent=2))
            return EXIT_OK
        print(render(poly))
        if args.hits:
            print(f"avoiders: {avoiders}")
        return EXIT_OK

    poly = rook_polynomial(board)
    if args.json:
        data = {'kind': 'board', 'n': board.n, 'polynomial': render(poly),
                'rook_numbers': rook_numbers(board)}
        if args.hits:
            data['hits'] = hit_numbers_from_rook(board)
        print(json.dumps(data, indent=2))
        return EXIT_OK
    print(render(poly))
    if args.hits:
        print(' '.join(str(h) for h in hit_numbers_from_rook(board)))
    return EXIT_OK


def cmd_poly(args: argparse.Namespace) -> int:
    if args.full is not None:
        poly = full_board_poly(args.full)
    else:
        poly = full_adjacency_poly(args.linear)
    poly = poly ** args.power
    print(render(poly))
    if args.phi:
        print(f"phi: {format_integer(phi(poly), args.group)}")
    return EXIT_OK


def cmd_derange(args: argparse.Namespace) -> int:
    if args.dist:
        print(format_distribution(derangement_distribution(args.counts), group=args.group))
        return EXIT_OK
    print(format_integer(generalized_derangement_count(args.counts), args.group))
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    result = simulate(args.deck, trials=args.trials, seed=args.seed,
                      workers=args.workers, verbose=True)
    exact = None
    if args.deck.n <= config_loader.get_limit('max_exact_compare_n'):
        exact = reduce(perfect_shuffle_count(args.deck), factorial(args.deck.n))
    print(format_simulation(result, exact=exact, as_json=args.json))
    return EXIT_OK


def cmd_brute(args: argparse.Namespace) -> int:
    brute = bruteforce_distribution(args.deck)
    exact = adjacency_distribution(args.deck)
    print(format_distribution(brute))
    if brute.counts_by_k == exact.counts_by_k:
        print("PASS")
        return EXIT_OK
    print("FAIL")
    print(f"❌ brute force {list(brute.counts_by_k)} != rook inversion {list(exact.counts_by_k)}",
          file=sys.stderr)
    return EXIT_USAGE


# ── Parser ────────────────────────────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    output = _Parser(add_help=False)
    output.add_argument('--json', action='store_true', help='Machine-readable JSON output')

    grouping = _Parser(add_help=False)
    grouping.add_argument('--group', action=argparse.BooleanOptionalAction,
                          default=config_loader.get_group_digits(),
                          help='Comma-separate exact integers every three digits (default from config)')

    deck = _Parser(add_help=False)
    deck.add_argument('--deck', type=_deck_arg, required=True, metavar='SPEC',
                      help="Deck: 'RxC' (R values, C cards each) or a list like '4,4,4'")

    p = sub.add_parser('prob', parents=[deck, output, grouping], help='Exact perfect-shuffle probability')
    p.add_argument('--digits', type=_non_negative, default=None,
                   help='Fractional digits in the decimal line (default from config)')
    p.add_argument('--words', action='store_true',
                   help='Also report colour-word counts (labelled counts / prod n_i!)')
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser('dist', parents=[deck, output, grouping], help='Distribution of equal-value neighbours')
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser('rook', parents=[output], help='Rook polynomial of a board file')
    p.add_argument('board_file', metavar='BOARD_FILE')
    p.add_argument('--hits', action='store_true', help='Also print the hit vector')
    p.set_defaults(func=cmd_rook)

    p = sub.add_parser('poly', parents=[grouping], help='Closed-form l_n or l*_n')
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument('--full', type=_non_negative, metavar='N', help='l_n: full n x n board')
    kind.add_argument('--linear', type=_non_negative, metavar='N', help='l*_n: all adjacencies on [n]')
    p.add_argument('--power', type=_non_negative, default=1, metavar='E')
    p.add_argument('--phi', action='store_true', help='Also print phi of the polynomial')
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser('derange', parents=[grouping], help='Generalized derangement count')
    p.add_argument('--counts', type=_counts_arg, required=True, metavar='LIST')
    p.add_argument('--dist', action='store_true',
                   help='Distribution by number of same-colour fixed positions')
    p.set_defaults(func=cmd_derange)

    defaults = config_loader.get_simulation_defaults()
    p = sub.add_parser('simulate', parents=[deck, output], help='Seeded Monte Carlo estimate')
    p.add_argument('--trials', type=_positive, default=defaults['trials'])
    p.add_argument('--seed', type=_non_negative, default=defaults['seed'])
    p.add_argument('--workers', type=_positive, default=defaults['workers'])
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser('brute', parents=[deck], help='Exhaustive oracle vs. exact distribution')
    p.set_defaults(func=cmd_brute)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, OSError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
