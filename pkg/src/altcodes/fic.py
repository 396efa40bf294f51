"""Deciding whether a finite code is induced by an alternative code.

The pipeline is: reject non-codes, dispatch the non-standard shapes
(a length-one word, a one-letter alphabet, a common first or last letter),
apply the gcd obstruction on first-letter block sizes, then run the
prefix-pool search over candidate right factors Y and left factors X.
"""
from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .alternative import Decomposition, check_strong
from .codes import require_code
from .errors import BudgetExceeded
from .language import (
    EMPTY,
    Language,
    left_quotient,
    partition_by_first_letter,
    product,
    proper_prefixes,
    require_nonempty_words,
    right_quotient,
    word_key,
)

DEFAULT_MAX_CANDIDATES = 10**8


@dataclass
class SearchBudget:
    max_candidates: int = DEFAULT_MAX_CANDIDATES
    timeout: float | None = None


class StandardForm(str, enum.Enum):
    STANDARD = "Standard"
    HAS_LENGTH1 = "HasLength1"
    ONE_LETTER_ALPHABET = "OneLetterAlphabet"
    COMMON_FIRST = "CommonFirst"
    COMMON_LAST = "CommonLast"


class Route(str, enum.Enum):
    LENGTH1_REJECT = "Length1Reject"
    ONE_LETTER_ALPHABET = "OneLetterAlphabet"
    COMMON_FIRST_LETTER = "CommonFirstLetter"
    COMMON_LAST_LETTER = "CommonLastLetter"
    GCD_REJECT = "GcdReject"
    PRIME_REJECT = "PrimeReject"
    FIC_FOUND = "FicFound"
    FIC_EXHAUSTED = "FicExhausted"


class AltVerdictLabel(str, enum.Enum):
    ALT_INDUCED = "AltInduced"
    NOT_ALT_INDUCED = "NotAltInduced"


@dataclass(frozen=True)
class FormClass:
    form: StandardForm
    letter: str | None = None


@dataclass(frozen=True)
class GcdResult:
    rejected: bool
    gcd: int
    block_sizes: dict[str, int]
    d_set: tuple[int, ...]


@dataclass
class SearchStats:
    u_tried: int = 0
    y_tried: int = 0
    x_tried: int = 0

    @property
    def candidates(self) -> int:
        return self.y_tried + self.x_tried


@dataclass
class PrefixStep:
    """One pass of the outer loop: a prefix u of w and its pool S = u⁻¹Z_t."""

    u: str
    s: Language
    y_tried: int = 0
    x_tried: int = 0


@dataclass
class FicTrace:
    w: str = ""
    t: str = ""
    p_w: tuple[str, ...] = ()
    d_set: tuple[int, ...] = ()
    steps: list[PrefixStep] = field(default_factory=list)


@dataclass
class DecisionReport:
    verdict: AltVerdictLabel
    route: Route
    decomposition: Decomposition | None = None
    stats: SearchStats = field(default_factory=SearchStats)
    gcd: GcdResult | None = None
    trace: FicTrace | None = None

    @property
    def is_alt_induced(self) -> bool:
        return self.verdict is AltVerdictLabel.ALT_INDUCED


class _Clock:
    def __init__(self, budget: SearchBudget | None, stats: SearchStats):
        self.budget = budget or SearchBudget()
        self.stats = stats
        self.deadline = (
            None if self.budget.timeout is None else time.monotonic() + self.budget.timeout
        )

    def tick(self) -> None:
        if self.stats.candidates > self.budget.max_candidates:
            raise BudgetExceeded(
                f"candidate budget of {self.budget.max_candidates} exhausted"
            )
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"timeout of {self.budget.timeout}s exceeded")


def classify_standard_form(z: Language) -> FormClass:
    if any(len(w) < 2 for w in z.words):
        return FormClass(StandardForm.HAS_LENGTH1)
    letters = {c for w in z.words for c in w}
    if len(letters) == 1:
        return FormClass(StandardForm.ONE_LETTER_ALPHABET, next(iter(letters)))
    firsts = {w[0] for w in z.words}
    if len(firsts) == 1:
        return FormClass(StandardForm.COMMON_FIRST, next(iter(firsts)))
    lasts = {w[-1] for w in z.words}
    if len(lasts) == 1:
        return FormClass(StandardForm.COMMON_LAST, next(iter(lasts)))
    return FormClass(StandardForm.STANDARD)


def gcd_pretest(z: Language) -> GcdResult:
    """Reject when the first-letter block sizes are coprime."""
    sizes = {a: len(b) for a, b in partition_by_first_letter(z).items()}
    g = math.gcd(*sizes.values())
    divisors = tuple(d for d in range(2, g + 1) if g % d == 0)
    return GcdResult(g == 1, g, sizes, divisors)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, math.isqrt(n) + 1))


def _right_pool(z: Language, ys: tuple[str, ...]) -> list[str]:
    """``⋂_{y∈Y} Zy⁻¹`` without ε, in canonical order."""
    pool = set(right_quotient(z, ys[0]).words)
    for y in ys[1:]:
        pool &= right_quotient(z, y).words
        if not pool:
            break
    pool.discard(EMPTY)
    return sorted(pool, key=word_key)


def _search(
    z: Language,
    sizes: tuple[int, ...],
    stats: SearchStats,
    clock: _Clock,
    trace: FicTrace | None,
    largest_first: bool = True,
) -> Iterator[Decomposition]:
    """Yield every decomposition reachable from the pools of the shortest word.

    ``sizes`` are the admissible values of |Y|. Order is canonical: u by
    increasing length, then |Y| (largest first unless ``largest_first`` is
    false), then Y and X lexicographically by their sorted members.
    """
    target = z.words
    w = min(z.words, key=word_key)
    t = w[0]
    block = partition_by_first_letter(z)[t]
    p_w = proper_prefixes(w)[1:]
    if trace is not None:
        trace.w, trace.t, trace.p_w = w, t, tuple(p_w)
    for u in p_w:
        stats.u_tried += 1
        pool_s = left_quotient(u, block)
        step = PrefixStep(u, pool_s)
        if trace is not None:
            trace.steps.append(step)
        s = pool_s.sorted()
        for d in sorted(sizes, reverse=largest_first):
            need = len(z) // d
            for ys in combinations(s, d):
                stats.y_tried += 1
                step.y_tried += 1
                clock.tick()
                p = _right_pool(z, ys)
                if len(p) < need:
                    continue
                for xs in combinations(p, need):
                    stats.x_tried += 1
                    step.x_tried += 1
                    clock.tick()
                    if {a + b for a in xs for b in ys} == target:
                        yield Decomposition(z.with_words(xs), z.with_words(ys))


def fic_search(
    z: Language,
    d_set: tuple[int, ...] | list[int] | set[int],
    budget: SearchBudget | None = None,
    stats: SearchStats | None = None,
    trace: FicTrace | None = None,
    largest_first: bool = True,
) -> Decomposition | None:
    """First decomposition in canonical order with |Y| drawn from ``d_set``, or None.

    Trying the largest admissible |Y| first keeps the X pools small; pass
    ``largest_first=False`` for the small-first order.
    """
    form = classify_standard_form(z)
    if form.form is not StandardForm.STANDARD:
        raise ValueError(f"input is not of standard form ({form.form.value})")
    sizes = tuple(sorted(set(d_set)))
    if not sizes or min(sizes) < 2:
        raise ValueError("d_set must be a non-empty set of integers >= 2")
    if any(len(block) % d for block in partition_by_first_letter(z).values() for d in sizes):
        raise ValueError("every size in d_set must divide every block size")
    stats = stats if stats is not None else SearchStats()
    if trace is not None:
        trace.d_set = sizes
    clock = _Clock(budget, stats)
    for found in _search(z, sizes, stats, clock, trace, largest_first):
        return found
    return None


def _check_input(z: Language) -> None:
    if not z.words:
        raise ValueError("the empty language is not accepted")
    require_nonempty_words(z)
    require_code(z)


def decide_alt_induced(z: Language, budget: SearchBudget | None = None) -> DecisionReport:
    """Decide whether the finite code ``z`` is alt-induced.

    Raises :class:`~altcodes.codes.NotACodeError` for non-codes and
    :class:`BudgetExceeded` when the search budget runs out.
    """
    _check_input(z)
    form = classify_standard_form(z)
    yes, no = AltVerdictLabel.ALT_INDUCED, AltVerdictLabel.NOT_ALT_INDUCED
    if form.form is StandardForm.HAS_LENGTH1:
        return DecisionReport(no, Route.LENGTH1_REJECT)
    if form.form is StandardForm.ONE_LETTER_ALPHABET:
        (w,) = z.words
        dec = Decomposition(z.with_words([w[0]]), z.with_words([w[1:]]))
        return DecisionReport(yes, Route.ONE_LETTER_ALPHABET, dec)
    if form.form is StandardForm.COMMON_FIRST:
        a = form.letter
        dec = Decomposition(z.with_words([a]), left_quotient(a, z))
        return DecisionReport(yes, Route.COMMON_FIRST_LETTER, dec)
    if form.form is StandardForm.COMMON_LAST:
        b = form.letter
        dec = Decomposition(right_quotient(z, b), z.with_words([b]))
        return DecisionReport(yes, Route.COMMON_LAST_LETTER, dec)

    g = gcd_pretest(z)
    if g.rejected:
        route = Route.PRIME_REJECT if _is_prime(len(z)) else Route.GCD_REJECT
        return DecisionReport(no, route, gcd=g)
    stats = SearchStats()
    trace = FicTrace()
    found = fic_search(z, g.d_set, budget, stats, trace)
    if found is None:
        return DecisionReport(no, Route.FIC_EXHAUSTED, None, stats, g, trace)
    return DecisionReport(yes, Route.FIC_FOUND, found, stats, g, trace)


def enumerate_decompositions(
    z: Language, budget: SearchBudget | None = None
) -> list[Decomposition]:
    """Every (X, Y) with XY = Z and |X|·|Y| = |Z|, in canonical order.

    Runs the prefix-pool search to exhaustion with every common divisor of
    the block sizes, 1 included, as an admissible |Y|. A language with a
    word of length one has no decomposition into non-empty factors.
    """
    _check_input(z)
    if any(len(w) < 2 for w in z.words):
        return []
    g = math.gcd(*(len(b) for b in partition_by_first_letter(z).values()))
    sizes = tuple(d for d in range(1, g + 1) if g % d == 0)
    clock = _Clock(budget, SearchStats())
    found = set(_search(z, sizes, clock.stats, clock, None))
    return sorted(found, key=Decomposition.sort_key)


def enumerate_strong_decompositions(
    z: Language, budget: SearchBudget | None = None
) -> list[Decomposition]:
    return [d for d in enumerate_decompositions(z, budget) if check_strong(d.x, d.y).is_strong]

