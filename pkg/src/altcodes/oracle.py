"""Brute-force ground truth for small instances.

Nothing here goes through the decision pipeline in :mod:`altcodes.fic` or
the remainder-set machinery in :mod:`altcodes.codes`; only the basic word
and set primitives are shared.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass

from .alternative import Decomposition
from .codes import AmbiguityWitness
from .errors import BudgetExceeded
from .language import EMPTY, Language, require_nonempty_words, right_quotient, suffix_set, word_key


@dataclass
class OracleBudget:
    max_words: int = 16
    max_word_length: int = 8
    max_suffixes: int = 24
    max_nodes: int = 5_000_000


@dataclass(frozen=True)
class OracleResult:
    decompositions: tuple[Decomposition, ...]
    is_code: bool
    witness: AmbiguityWitness | None = None


def _candidate_suffixes(z: Language) -> list[str]:
    return sorted(set(suffix_set(z).words) - {EMPTY}, key=word_key)


def brute_force_decompositions(
    z: Language,
    budget: OracleBudget | None = None,
    max_len: int | None = None,
) -> OracleResult:
    """All pairs (X, Y) with XY = Z and |X|·|Y| = |Z|.

    Y ranges over subsets of the non-empty proper suffixes of Z whose size
    divides |Z|; X ranges over subsets of ``⋂ Zy⁻¹ \\ {ε}`` of the matching
    size. Any factorization Z = XY lives in this space. Subsets of Y are
    grown one word at a time and abandoned once the X pool is too small,
    which drops no solution because the pool only shrinks as Y grows.
    """
    budget = budget or OracleBudget()
    require_nonempty_words(z)
    if not z.words:
        raise ValueError("the empty language is not accepted")
    suffixes = _candidate_suffixes(z)
    if (
        len(z) > budget.max_words
        or z.max_length() > budget.max_word_length
        or len(suffixes) > budget.max_suffixes
    ):
        raise BudgetExceeded(
            f"instance too large for the oracle: |Z|={len(z)}, "
            f"max length {z.max_length()}, {len(suffixes)} suffixes"
        )
    n = len(z)
    target = z.words
    quotients = {s: right_quotient(z, s).words - {EMPTY} for s in suffixes}
    found: list[Decomposition] = []
    nodes = 0

    def extend(start: int, chosen: list[str], pool: frozenset[str], size: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget.max_nodes:
            raise BudgetExceeded("oracle node budget exhausted")
        need = n // size
        if len(chosen) == size:
            for xs in _subsets(sorted(pool, key=word_key), need):
                nodes += 1
                if {a + b for a in xs for b in chosen} == target:
                    found.append(Decomposition(z.with_words(xs), z.with_words(chosen)))
            return
        for i in range(start, len(suffixes)):
            y = suffixes[i]
            narrowed = pool & quotients[y] if chosen else quotients[y]
            if len(narrowed) >= need:
                extend(i + 1, chosen + [y], frozenset(narrowed), size)

    for size in range(1, n + 1):
        if n % size == 0:
            extend(0, [], frozenset(), size)

    ok, witness = naive_code_check(z, max_len if max_len is not None else default_max_len(z))
    found.sort(key=Decomposition.sort_key)
    return OracleResult(tuple(found), ok, witness)


def _subsets(items: list[str], k: int):
    """k-subsets by plain recursion, in lexicographic order of positions."""
    if k == 0:
        yield ()
        return
    for i in range(len(items) - k + 1):
        for rest in _subsets(items[i + 1:], k - 1):
            yield (items[i],) + rest


def default_max_len(z: Language) -> int:
    """Twice the sum of the two longest word lengths."""
    lengths = sorted((len(w) for w in z.words), reverse=True)
    return 2 * sum(lengths[:2]) if len(lengths) > 1 else 2 * lengths[0]


def naive_code_check(z: Language, max_len: int) -> tuple[bool, AmbiguityWitness | None]:
    """Look for a word of length at most ``max_len`` with two factorizations.

    Pairs of factor sequences are extended, shortest concatenation first,
    while one concatenation stays a prefix of the other; any two
    factorizations of a single word pass through such pairs, so none are
    skipped. There is no merging of states, which keeps this independent of
    the remainder-set method.
    """
    require_nonempty_words(z)
    words = sorted(z.words, key=word_key)
    heap: list = []
    tie = 0
    for a in words:
        for b in words:
            if a < b and (a.startswith(b) or b.startswith(a)):
                heapq.heappush(heap, (max(len(a), len(b)), tie, (a,), (b,)))
                tie += 1
    while heap:
        length, _, left, right = heapq.heappop(heap)
        if length > max_len:
            break
        u, v = "".join(left), "".join(right)
        if u == v:
            pair = sorted([left, right], key=lambda seq: [word_key(f) for f in seq])
            return False, AmbiguityWitness(u, pair[0], pair[1])
        if len(u) < len(v):
            left, right, u, v = right, left, v, u
        # right is behind
        for c in words:
            w = v + c
            if u.startswith(w) or w.startswith(u):
                heapq.heappush(heap, (max(len(u), len(w)), tie, left, right + (c,)))
                tie += 1
    return True, None
