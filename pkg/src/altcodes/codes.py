"""Unique decipherability and the prefix / suffix / bifix code classes."""
from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass
from fractions import Fraction

from .language import (
    EMPTY,
    Language,
    left_quotient_set,
    require_nonempty_words,
    reverse,
    word_key,
    kraft_sum,
)


class Verdict(str, enum.Enum):
    CODE = "Code"
    NOT_CODE = "NotCode"


class HaltingReason(str, enum.Enum):
    EMPTY_SET_REACHED = "EmptySetReached"
    CYCLE_DETECTED = "CycleDetected"
    EPSILON_FOUND = "EpsilonFound"


class NotACodeError(ValueError):
    """Raised where a code is required; carries an ambiguity witness."""

    def __init__(self, witness: "AmbiguityWitness"):
        self.witness = witness
        super().__init__(f"not a code: {witness}")


@dataclass(frozen=True)
class SpTrace:
    """The remainder sets U₁, U₂, ... up to the halting step."""

    u_sets: tuple[Language, ...]
    verdict: Verdict
    halting_reason: HaltingReason

    @property
    def is_code(self) -> bool:
        return self.verdict is Verdict.CODE


@dataclass(frozen=True)
class AmbiguityWitness:
    word: str
    factorization_a: tuple[str, ...]
    factorization_b: tuple[str, ...]

    def validate(self, x: Language) -> bool:
        return (
            "".join(self.factorization_a) == self.word
            and "".join(self.factorization_b) == self.word
            and self.factorization_a != self.factorization_b
            and all(f in x for f in self.factorization_a + self.factorization_b)
        )

    def __str__(self) -> str:
        a = "".join(f"({f})" for f in self.factorization_a)
        b = "".join(f"({f})" for f in self.factorization_b)
        return f"{self.word} = {a} = {b}"


@dataclass(frozen=True)
class CodeClassReport:
    is_code: bool
    is_prefix: bool
    is_suffix: bool
    is_bifix: bool
    is_maximal_prefix: bool
    is_maximal_suffix: bool
    is_maximal_bifix: bool
    witness: AmbiguityWitness | None = None


def _require_code_input(x: Language) -> None:
    require_nonempty_words(x)
    if not x.words:
        raise ValueError("the empty language is not accepted here")


def sardinas_patterson(x: Language) -> SpTrace:
    """Run the Sardinas–Patterson recurrence on a finite language.

    ``U₁ = X⁻¹X \\ {ε}`` and ``U_{n+1} = X⁻¹U_n ∪ U_n⁻¹X``. Every U_n is a set
    of suffixes of words of X, so a repeated set proves the sequence cycles
    without ever producing ε.
    """
    _require_code_input(x)
    current = left_quotient_set(x, x) - x.with_words([EMPTY])
    sets = [current]
    seen = {current.words}
    while True:
        if EMPTY in current:
            return SpTrace(tuple(sets), Verdict.NOT_CODE, HaltingReason.EPSILON_FOUND)
        if not current.words:
            return SpTrace(tuple(sets), Verdict.CODE, HaltingReason.EMPTY_SET_REACHED)
        current = left_quotient_set(x, current) | left_quotient_set(current, x)
        if current.words in seen and EMPTY not in current:
            sets.append(current)
            return SpTrace(tuple(sets), Verdict.CODE, HaltingReason.CYCLE_DETECTED)
        seen.add(current.words)
        sets.append(current)


def is_code(x: Language) -> bool:
    return sardinas_patterson(x).is_code


def ambiguity_witness(x: Language) -> AmbiguityWitness:
    """A shortest word with two distinct factorizations over ``x``.

    Search state is the pending remainder: the part of the longer partial
    factorization not yet matched by the shorter one. Costs are the length
    of the longer side, so a best-first search pops the shortest completion
    first. Ties are broken by canonical word order, which keeps the output
    deterministic.
    """
    _require_code_input(x)
    words = sorted(x.words, key=word_key)
    heap: list = []
    counter = 0

    def push(cost, rem, ahead, behind):
        nonlocal counter
        heapq.heappush(heap, (cost, word_key(rem), counter, rem, ahead, behind))
        counter += 1

    for a in words:
        for b in words:
            if a != b and b.startswith(a):
                push(len(b), b[len(a):], (b,), (a,))

    settled: set[str] = set()
    while heap:
        cost, _, _, rem, ahead, behind = heapq.heappop(heap)
        if rem == EMPTY:
            word = "".join(ahead)
            fa, fb = sorted([ahead, behind], key=lambda seq: [word_key(f) for f in seq])
            return AmbiguityWitness(word, fa, fb)
        if rem in settled:
            continue
        settled.add(rem)
        for z in words:
            if z.startswith(rem):
                # behind side overtakes; the roles swap
                push(cost + len(z) - len(rem), z[len(rem):], behind + (z,), ahead)
            elif rem.startswith(z):
                push(cost, rem[len(z):], ahead, behind + (z,))
    raise ValueError("language is a code; no ambiguity witness exists")


def is_prefix_code(x: Language) -> bool:
    _require_code_input(x)
    ws = sorted(x.words)
    return not any(ws[i + 1].startswith(ws[i]) for i in range(len(ws) - 1))


def is_suffix_code(x: Language) -> bool:
    return is_prefix_code(reverse(x))


def is_bifix_code(x: Language) -> bool:
    return is_prefix_code(x) and is_suffix_code(x)


def is_maximal_prefix(x: Language, alphabet_size: int | None = None) -> bool:
    """Finite prefix codes are maximal exactly when their Kraft sum is 1."""
    if not is_prefix_code(x):
        raise ValueError("not a prefix code")
    return kraft_sum(x, alphabet_size) == Fraction(1)


def is_maximal_suffix(x: Language, alphabet_size: int | None = None) -> bool:
    if not is_suffix_code(x):
        raise ValueError("not a suffix code")
    return kraft_sum(x, alphabet_size) == Fraction(1)


def is_maximal_bifix(x: Language, alphabet_size: int | None = None) -> bool:
    # finite sets are thin, so maximal bifix = maximal prefix and maximal suffix
    if not is_bifix_code(x):
        raise ValueError("not a bifix code")
    return is_maximal_prefix(x, alphabet_size) and is_maximal_suffix(x, alphabet_size)


def is_thin(x: Language) -> bool:
    """Finite languages are always thin: a word longer than all of X avoids it."""
    return True


def classify(x: Language, alphabet_size: int | None = None) -> CodeClassReport:
    trace = sardinas_patterson(x)
    prefix = is_prefix_code(x)
    suffix = is_suffix_code(x)
    max_prefix = prefix and is_maximal_prefix(x, alphabet_size)
    max_suffix = suffix and is_maximal_suffix(x, alphabet_size)
    return CodeClassReport(
        is_code=trace.is_code,
        is_prefix=prefix,
        is_suffix=suffix,
        is_bifix=prefix and suffix,
        is_maximal_prefix=max_prefix,
        is_maximal_suffix=max_suffix,
        is_maximal_bifix=max_prefix and max_suffix,
        witness=None if trace.is_code else ambiguity_witness(x),
    )


def require_code(x: Language) -> None:
    if not is_code(x):
        raise NotACodeError(ambiguity_witness(x))
