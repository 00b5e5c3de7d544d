"""Boards, adjacency condition sets, rook numbers and hit numbers.

Two condition families are supported:

* Board: cells (i, j) of [n] x [n]; a permutation "hits" the cell when
  pi(i) = j. Rook numbers count non-attacking placements, hit numbers count
  permutations by how many cells their graph meets.
* AdjacencyConditionSet: ordered pairs (i, j), i != j, read as "i is
  immediately followed by j" in one-line notation. A subset is compatible when
  it can hold simultaneously: distinct predecessors, distinct successors and
  no directed cycle. Every compatible subset glues |A| pairs together, so its
  rank is |A| in both families.

Brute-force oracles enumerate S_n directly and are guarded by
config limits.max_enumeration_n.
"""

import itertools
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import config_loader
from polynomial import IntPolynomial, from_rook_numbers, hit_polynomial, phi, shift

Cell = Tuple[int, int]
RookNumberVector = List[int]
HitNumberVector = List[int]


class SizeLimitError(ValueError):
    """An enumeration guard or sanity bound was exceeded."""


class BoardFormatError(ValueError):
    """Malformed board or adjacency file."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _trim(values: List[int]) -> List[int]:
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return values


def _enumeration_guard(n: int, max_n: Optional[int], what: str) -> None:
    limit = max_n if max_n is not None else config_loader.get_limit('max_enumeration_n')
    if n > limit:
        raise SizeLimitError(f"{what} too large for enumeration: n={n} > {limit}")


def _check_cells(n: int, cells: Iterable[Cell], kind: str) -> FrozenSet[Cell]:
    if n < 1:
        raise ValueError(f"{kind} size must be positive, got {n}")
    checked = set()
    for i, j in cells:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"{kind} entry ({i}, {j}) outside [1, {n}]")
        checked.add((int(i), int(j)))
    return frozenset(checked)


# ── Classical boards ──────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Board:
    """A board B inside the n x n chessboard, 1-based cells."""
    n: int
    cells: FrozenSet[Cell] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, 'cells', _check_cells(self.n, self.cells, 'board'))

    @classmethod
    def empty(cls, n: int) -> 'Board':
        return cls(n)

    @classmethod
    def full(cls, n: int) -> 'Board':
        return cls(n, frozenset(itertools.product(range(1, n + 1), repeat=2)))

    @classmethod
    def diagonal(cls, n: int) -> 'Board':
        return cls(n, frozenset((i, i) for i in range(1, n + 1)))

    @classmethod
    def color_blocks(cls, counts: Sequence[int]) -> 'Board':
        """Cell (i, j) iff labels i and j share a colour (block-diagonal full boards)."""
        board = None
        for c in counts:
            block = cls.full(c)
            board = block if board is None else direct_sum(board, block)
        if board is None:
            raise ValueError("need at least one colour")
        return board


def direct_sum(a: Board, b: Board) -> Board:
    """a in the top-left block, b shifted into the bottom-right block."""
    moved = ((i + a.n, j + a.n) for i, j in b.cells)
    return Board(a.n + b.n, a.cells | frozenset(moved))


def rook_numbers(b: Board) -> RookNumberVector:
    """r[k] = number of k-cell placements with distinct rows and columns.

    Backtracks row by row, skipping the row or placing on a free column.
    """
    rows: Dict[int, List[int]] = {}
    for i, j in sorted(b.cells):
        rows.setdefault(i, []).append(j)
    row_cols = list(rows.values())
    counts = [0] * (len(row_cols) + 1)

    def place(idx: int, used: FrozenSet[int], k: int) -> None:
        if idx == len(row_cols):
            counts[k] += 1
            return
        place(idx + 1, used, k)
        for j in row_cols[idx]:
            if j not in used:
                place(idx + 1, used | {j}, k + 1)

    place(0, frozenset(), 0)
    return _trim(counts)


def rook_polynomial(b: Board) -> IntPolynomial:
    """r_B(x) = sum_k (-1)^k r_k(B) x^(n-k); phi of it is h_0(B)."""
    return from_rook_numbers(rook_numbers(b), b.n)


def hit_numbers_bruteforce(b: Board, max_n: Optional[int] = None) -> HitNumberVector:
    """h[k] = permutations of [n] whose graph meets exactly k cells, by enumeration."""
    _enumeration_guard(b.n, max_n, 'board')
    tally = Counter()
    for perm in itertools.permutations(range(1, b.n + 1)):
        tally[sum((i, pi) in b.cells for i, pi in enumerate(perm, start=1))] += 1
    return _trim([tally.get(k, 0) for k in range(b.n + 1)])


def hit_numbers_from_rook(b: Board) -> HitNumberVector:
    """h[i] = sum_{j>=i} (-1)^(j-i) C(j,i) r_j (n-j)!, via the t -> t-1 substitution."""
    hits = hit_polynomial(rook_polynomial(b), b.n)
    return _trim(list(hits.coeffs) or [0])


# ── Adjacency condition sets ──────────────────────────────────────────────────

@dataclass(frozen=True)
class AdjacencyConditionSet:
    """Conditions "i is immediately followed by j" on permutations of [n]."""
    n: int
    pairs: FrozenSet[Cell] = frozenset()

    def __post_init__(self):
        pairs = _check_cells(self.n, self.pairs, 'adjacency')
        loops = sorted(p for p in pairs if p[0] == p[1])
        if loops:
            raise ValueError(f"adjacency pair {loops[0]} has i == j")
        object.__setattr__(self, 'pairs', pairs)

    @classmethod
    def full(cls, n: int) -> 'AdjacencyConditionSet':
        """C_n: every ordered pair of distinct elements."""
        return cls(n, frozenset(itertools.permutations(range(1, n + 1), 2)))

    @classmethod
    def for_deck(cls, counts: Sequence[int]) -> 'AdjacencyConditionSet':
        """Every ordered pair of distinct labels of the same colour."""
        pairs = set()
        start = 1
        for c in counts:
            labels = range(start, start + c)
            pairs.update(itertools.permutations(labels, 2))
            start += c
        return cls(start - 1, frozenset(pairs))


def _chain_end(succ: Dict[int, int], node: int) -> int:
    while node in succ:
        node = succ[node]
    return node


def is_compatible(a: AdjacencyConditionSet) -> bool:
    """Distinct predecessors, distinct successors, and no directed cycle."""
    succ: Dict[int, int] = {}
    pred: Dict[int, int] = {}
    for i, j in sorted(a.pairs):
        if i in succ or j in pred:
            return False
        if _chain_end(succ, j) == i:
            return False
        succ[i] = j
        pred[j] = i
    return True


def compatible_subset_counts(a: AdjacencyConditionSet,
                             max_pairs: Optional[int] = None) -> List[int]:
    """c[k] = number of compatible k-subsets, by pruned backtracking."""
    limit = max_pairs if max_pairs is not None else config_loader.get_limit('max_condition_pairs')
    if len(a.pairs) > limit:
        raise SizeLimitError(
            f"condition set too large: {len(a.pairs)} pairs > {limit}")

    pairs = sorted(a.pairs)
    counts = [0] * (len(pairs) + 1)
    succ: Dict[int, int] = {}
    pred: Dict[int, int] = {}

    def extend(idx: int, k: int) -> None:
        counts[k] += 1
        for pos in range(idx, len(pairs)):
            i, j = pairs[pos]
            if i in succ or j in pred or _chain_end(succ, j) == i:
                continue
            succ[i] = j
            pred[j] = i
            extend(pos + 1, k + 1)
            del succ[i]
            del pred[j]

    extend(0, 0)
    return _trim(counts)


def generalized_rook_polynomial(a: AdjacencyConditionSet,
                                max_pairs: Optional[int] = None) -> IntPolynomial:
    """sum over compatible A of (-1)^|A| x^(n - |A|)."""
    return from_rook_numbers(compatible_subset_counts(a, max_pairs), a.n)


def _avoids(perm: Sequence[int], pairs: FrozenSet[Cell]) -> bool:
    return not any((x, y) in pairs for x, y in zip(perm, perm[1:]))


def avoiders_bruteforce(a: AdjacencyConditionSet, m: Optional[int] = None,
                        max_n: Optional[int] = None) -> int:
    """Permutations of [m] (default m = n) avoiding every listed adjacency."""
    m = a.n if m is None else m
    if m < a.n:
        raise ValueError(f"ambient size {m} smaller than n={a.n}")
    _enumeration_guard(m, max_n, 'condition set')
    return sum(_avoids(perm, a.pairs) for perm in itertools.permutations(range(1, m + 1)))


def avoiders_in_ambient(a: AdjacencyConditionSet, m: Optional[int] = None) -> int:
    """phi(r_A(x) * x^(m-n)): avoiders among permutations of [m], any m >= n."""
    m = a.n if m is None else m
    if m < a.n:
        raise ValueError(f"ambient size {m} smaller than n={a.n}")
    return phi(shift(generalized_rook_polynomial(a), m - a.n))


# ── Text format ───────────────────────────────────────────────────────────────

def parse_board_text(text: str) -> Union[Board, AdjacencyConditionSet]:
    """Parse "n" or "adjacency n" followed by "i j" lines; '#' starts a comment."""
    header = None
    seen: Dict[Cell, int] = {}
    adjacency = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if fields[0].lower() == 'adjacency':
                adjacency = True
                fields = fields[1:]
            if len(fields) != 1 or not fields[0].isdigit() or int(fields[0]) < 1:
                raise BoardFormatError(f"expected header 'n' or 'adjacency n', got {line!r}", lineno)
            header = (int(fields[0]), lineno)
            continue
        if len(fields) != 2:
            raise BoardFormatError(f"expected 'i j', got {line!r}", lineno)
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise BoardFormatError(f"non-integer entry {line!r}", lineno) from None
        n = header[0]
        if not (1 <= i <= n and 1 <= j <= n):
            raise BoardFormatError(f"entry ({i}, {j}) outside [1, {n}]", lineno)
        if adjacency and i == j:
            raise BoardFormatError(f"adjacency pair ({i}, {j}) has i == j", lineno)
        if (i, j) in seen:
            raise BoardFormatError(f"duplicate entry ({i}, {j}), first on line {seen[(i, j)]}", lineno)
        seen[(i, j)] = lineno

    if header is None:
        raise BoardFormatError("missing size header", 1)
    n = header[0]
    if adjacency:
        return AdjacencyConditionSet(n, frozenset(seen))
    return Board(n, frozenset(seen))


def load_board(path: Union[str, Path]) -> Union[Board, AdjacencyConditionSet]:
    return parse_board_text(Path(path).read_text(encoding='utf-8'))

