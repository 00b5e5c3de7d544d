"""Perfect-shuffle solver: no two adjacent cards of equal value.

A deck is a multiset of colour counts (n_1, ..., n_r); cards are labelled, so
all n! orderings are equally likely. The perfect-shuffle count is
phi(prod l*_{n_i}(x)); the same product, read as signed rook numbers and pushed
through t -> t - 1, gives the full distribution of equal-value neighbours.
The full-board analogue prod l_{n_i}(x) counts generalized derangements.
"""

import itertools
import json
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce as fold
from typing import Dict, List, Optional, Tuple

import config_loader
from boards import Board, SizeLimitError, hit_numbers_bruteforce
from closedforms import full_adjacency_poly, full_board_poly
from exactnum import (FactorMap, decimal_string, factorial, format_integer,
                      format_rational, is_probable_prime, percent_string,
                      reduce, trial_division)
from polynomial import ONE, IntPolynomial, hit_polynomial, multiply, phi

DECK_SPEC_RE = re.compile(r'^\s*(\d+)\s*[xX×]\s*(\d+)\s*$')


@dataclass(frozen=True)
class DeckComposition:
    """Colour counts (n_1, ..., n_r); every count >= 1."""
    counts: Tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if not counts:
            raise ValueError("deck needs at least one colour")
        if any(c < 1 for c in counts):
            raise ValueError(f"colour counts must be positive: {counts}")
        object.__setattr__(self, 'counts', counts)

    @classmethod
    def uniform(cls, colors: int, per_color: int) -> 'DeckComposition':
        return cls((per_color,) * colors)

    @property
    def n(self) -> int:
        return sum(self.counts)

    @property
    def colors(self) -> List[int]:
        """Colour of each label 1..n, in label order (0-based colours)."""
        return [color for color, c in enumerate(self.counts) for _ in range(c)]

    @property
    def word_divisor(self) -> int:
        """prod n_i!: labelled arrangements per distinct colour word."""
        return math.prod(factorial(c) for c in self.counts)

    def spec(self) -> str:
        if len(set(self.counts)) == 1 and len(self.counts) > 1:
            return f"{len(self.counts)}x{self.counts[0]}"
        return ','.join(map(str, self.counts))


STANDARD_DECK = DeckComposition.uniform(13, 4)


def parse_deck_spec(text: str) -> DeckComposition:
    """'13x4' (13 colours of 4 cards) or a comma list such as '4,4,4' or '3'."""
    match = DECK_SPEC_RE.match(text)
    if match:
        colors, per_color = int(match.group(1)), int(match.group(2))
        if colors < 1 or per_color < 1:
            raise ValueError(f"malformed deck spec {text!r}: counts must be positive")
        return DeckComposition.uniform(colors, per_color)
    fields = [f.strip() for f in text.split(',')]
    if not fields or not all(f.isdigit() for f in fields):
        raise ValueError(f"malformed deck spec {text!r}: expected 'RxC' or a comma list like '4,4,4'")
    try:
        return DeckComposition(tuple(int(f) for f in fields))
    except ValueError as e:
        raise ValueError(f"malformed deck spec {text!r}: {e}") from None


def check_deck_size(deck: DeckComposition, max_n: Optional[int] = None) -> None:
    """Raise SizeLimitError when the deck exceeds max_n (default: max_deck_size)."""
    limit = max_n if max_n is not None else config_loader.get_limit('max_deck_size')
    if deck.n > limit:
        raise SizeLimitError(f"deck too large: n={deck.n} > {limit}")


def _enumeration_guard(deck: DeckComposition, max_n: Optional[int]) -> None:
    limit = max_n if max_n is not None else config_loader.get_limit('max_enumeration_n')
    if deck.n > limit:
        raise SizeLimitError(f"deck too large for enumeration: n={deck.n} > {limit}")


def product_polynomial(deck: DeckComposition, linear: bool = True) -> IntPolynomial:
    """prod l*_{n_i}(x) (linear=True) or prod l_{n_i}(x) (linear=False)."""
    family = full_adjacency_poly if linear else full_board_poly
    # Equal counts share one polynomial; repeated squaring does the rest.
    by_count = Counter(deck.counts)
    return fold(multiply, (family(c) ** mult for c, mult in sorted(by_count.items())), ONE)


# ── Exact counts ──────────────────────────────────────────────────────────────

def perfect_shuffle_count(deck: DeckComposition, max_n: Optional[int] = None) -> int:
    """Labelled orderings with no two equal-colour neighbours."""
    check_deck_size(deck, max_n)
    return phi(product_polynomial(deck))


def generalized_derangement_count(deck: DeckComposition, max_n: Optional[int] = None) -> int:
    """Permutations pi of [n] with color(i) != color(pi(i)) for every i."""
    check_deck_size(deck, max_n)
    return phi(product_polynomial(deck, linear=False))


@dataclass(frozen=True)
class AdjacencyDistribution:
    """counts_by_k[k] = labelled orderings with exactly k equal-colour neighbour pairs."""
    deck: DeckComposition
    counts_by_k: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts_by_k)

    def count(self, k: int) -> int:
        return self.counts_by_k[k] if 0 <= k < len(self.counts_by_k) else 0

    def padded(self, length: int) -> List[int]:
        return [self.count(k) for k in range(length)]


def _hit_distribution(deck: DeckComposition, linear: bool) -> Tuple[int, ...]:
    hits = hit_polynomial(product_polynomial(deck, linear), deck.n)
    return hits.coeffs or (0,)


def adjacency_distribution(deck: DeckComposition, max_n: Optional[int] = None) -> AdjacencyDistribution:
    """Exact distribution of the number of equal-colour neighbour pairs."""
    check_deck_size(deck, max_n)
    return AdjacencyDistribution(deck, _hit_distribution(deck, linear=True))


def bruteforce_distribution(deck: DeckComposition, max_n: Optional[int] = None) -> AdjacencyDistribution:
    """Enumerate all n! labelled orderings and count equal-colour neighbours."""
    _enumeration_guard(deck, max_n)
    tally = Counter()
    # permutations() treats positions as distinct, so equal colours still
    # yield one tuple per labelled ordering.
    for word in itertools.permutations(deck.colors):
        tally[sum(a == b for a, b in zip(word, word[1:]))] += 1
    counts = [tally.get(k, 0) for k in range(max(tally) + 1)]
    return AdjacencyDistribution(deck, tuple(counts))


def derangement_distribution(deck: DeckComposition, max_n: Optional[int] = None) -> AdjacencyDistribution:
    """Entry k = permutations with exactly k positions i where color(pi(i)) = color(i)."""
    check_deck_size(deck, max_n)
    return AdjacencyDistribution(deck, _hit_distribution(deck, linear=False))


def bruteforce_derangement_distribution(deck: DeckComposition,
                                        max_n: Optional[int] = None) -> AdjacencyDistribution:
    _enumeration_guard(deck, max_n)
    hits = hit_numbers_bruteforce(Board.color_blocks(deck.counts), max_n=deck.n)
    return AdjacencyDistribution(deck, tuple(hits))


# ── Report ────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class ShuffleReport:
    deck: DeckComposition
    count: int
    total: int
    probability: Fraction
    decimal: str
    digits: int
    numerator_probable_prime: bool
    denominator_factors: FactorMap = field(default_factory=dict)
    denominator_cofactor: int = 1
    trial_bound: int = 2

    @property
    def complement(self) -> Fraction:
        return 1 - self.probability

    @property
    def word_count(self) -> int:
        """Perfect colour words (distinct multiset arrangements)."""
        return self.count // self.deck.word_divisor

    @property
    def word_total(self) -> int:
        return self.total // self.deck.word_divisor


def perfect_shuffle_report(deck: DeckComposition, digits: Optional[int] = None,
                           max_n: Optional[int] = None) -> ShuffleReport:
    """Exact count, reduced probability, decimal, and the number theory of the fraction."""
    digits = config_loader.get_decimal_digits() if digits is None else digits
    count = perfect_shuffle_count(deck, max_n)
    total = factorial(deck.n)
    probability = reduce(count, total)
    bound = max(deck.n - 1, 2)
    factors, cofactor = trial_division(probability.denominator, bound)
    return ShuffleReport(
        deck=deck,
        count=count,
        total=total,
        probability=probability,
        decimal=decimal_string(probability, digits),
        digits=digits,
        numerator_probable_prime=is_probable_prime(probability.numerator),
        denominator_factors=factors,
        denominator_cofactor=cofactor,
        trial_bound=bound,
    )


# ── Rendering ─────────────────────────────────────────────────────────────────

def format_factors(factors: FactorMap, cofactor: int = 1) -> str:
    """'3^5 * 5^10 * 29', with any leftover cofactor appended."""
    parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in factors.items()]
    if cofactor != 1 or not parts:
        parts.append(str(cofactor))
    return ' * '.join(parts)


def report_to_dict(report: ShuffleReport, words: bool = False) -> Dict:
    data = {
        'deck': report.deck.spec(),
        'n': report.deck.n,
        'count': report.count,
        'total': report.total,
        'probability': format_rational(report.probability),
        'decimal': report.decimal,
        'complement': format_rational(report.complement),
        'complement_percent': percent_string(report.complement, max(report.digits - 2, 0)),
        'numerator_probable_prime': report.numerator_probable_prime,
        'denominator_factors': {str(p): e for p, e in report.denominator_factors.items()},
        'denominator_cofactor': report.denominator_cofactor,
        'trial_bound': report.trial_bound,
    }
    if words:
        data['word_count'] = report.word_count
        data['word_total'] = report.word_total
    return data


def format_report(report: ShuffleReport, as_json: bool = False, group: bool = False,
                  words: bool = False) -> str:
    """key: value lines, or JSON. Exact integers are always written in full."""
    if as_json:
        return json.dumps(report_to_dict(report, words), indent=2)
    def fmt(value: int) -> str:
        return format_integer(value, group)

    lines = [
        f"deck: {report.deck.spec()}",
        f"n: {report.deck.n}",
        f"count: {fmt(report.count)}",
        f"total: {fmt(report.total)}",
        f"probability: {format_rational(report.probability, group)}",
        f"decimal: {report.decimal}",
        f"complement: {percent_string(report.complement, max(report.digits - 2, 0))}",
        f"numerator_probable_prime: {'yes' if report.numerator_probable_prime else 'no'}",
        f"denominator_factors: {format_factors(report.denominator_factors, report.denominator_cofactor)}",
        f"trial_bound: {report.trial_bound}",
    ]
    if words:
        lines.append(f"word_count: {fmt(report.word_count)}")
        lines.append(f"word_total: {fmt(report.word_total)}")
    return '\n'.join(lines)


def distribution_rows(dist: AdjacencyDistribution, rows: Optional[int] = None) -> List[Tuple[int, int, Fraction]]:
    """(k, count, probability) for k = 0 .. rows-1; by default at least n rows."""
    rows = max(dist.deck.n, len(dist.counts_by_k)) if rows is None else rows
    total = factorial(dist.deck.n)
    return [(k, c, Fraction(c, total)) for k, c in enumerate(dist.padded(rows))]


def format_distribution(dist: AdjacencyDistribution, as_json: bool = False, group: bool = False,
                        digits: Optional[int] = None) -> str:
    digits = config_loader.get_decimal_digits() if digits is None else digits
    rows = distribution_rows(dist)
    if as_json:
        return json.dumps({
            'deck': dist.deck.spec(),
            'n': dist.deck.n,
            'total': dist.total,
            'rows': [{'k': k, 'count': c, 'probability': format_rational(p)} for k, c, p in rows],
        }, indent=2)

    cells = [(str(k), format_integer(c, group), decimal_string(p, digits)) for k, c, p in rows]
    total_cell = ('total', format_integer(dist.total, group), decimal_string(Fraction(1), digits))
    widths = [max(len(row[i]) for row in cells + [total_cell, ('k', 'count', 'probability')])
              for i in range(3)]
    header = ('k', 'count', 'probability')
    out = ['  '.join(h.rjust(w) for h, w in zip(header, widths))]
    out.extend('  '.join(c.rjust(w) for c, w in zip(row, widths)) for row in cells)
    out.append('  '.join(c.rjust(w) for c, w in zip(total_cell, widths)))
    return '\n'.join(out)
