"""Finite languages over a finite alphabet and the set algebra on them.

Words are plain ``str`` values whose characters are the letters. A
:class:`Language` is an immutable finite set of words together with the
alphabet it lives over. The alphabet is either declared explicitly or
inferred from the letters that occur in the words.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

EMPTY = ""


class AlphabetError(ValueError):
    """A word uses a letter outside the declared alphabet, or alphabets clash."""


class EmptyWordError(ValueError):
    """The empty word appeared where only non-empty words are allowed."""


def word_key(w: str) -> tuple[int, str]:
    """Length-then-lexicographic sort key used for every canonical order."""
    return (len(w), w)


def canonical(words: Iterable[str]) -> list[str]:
    return sorted(words, key=word_key)


def subset_key(words: Iterable[str]) -> tuple[int, tuple[tuple[int, str], ...]]:
    """Order subsets by size, then lexicographically by their sorted members."""
    ws = canonical(words)
    return (len(ws), tuple(word_key(w) for w in ws))


class Language:
    """An immutable finite set of words.

    Equality and hashing look at the words only; the alphabet is context
    carried along for Kraft sums and file rendering.
    """

    __slots__ = ("words", "alphabet", "declared")

    def __init__(self, words: Iterable[str] = (), alphabet: Iterable[str] | None = None):
        ws = frozenset(words)
        for w in ws:
            if not isinstance(w, str):
                raise TypeError(f"words must be str, got {type(w).__name__}")
        used = frozenset(c for w in ws for c in w)
        if alphabet is None:
            letters, declared = used, False
        else:
            letters = frozenset(alphabet)
            for c in letters:
                if len(c) != 1:
                    raise AlphabetError(f"letters must be single characters, got {c!r}")
            stray = used - letters
            if stray:
                raise AlphabetError(
                    f"letters {''.join(sorted(stray))!r} are not in the alphabet "
                    f"{''.join(sorted(letters))!r}"
                )
            declared = True
        object.__setattr__(self, "words", ws)
        object.__setattr__(self, "alphabet", letters)
        object.__setattr__(self, "declared", declared)

    def __setattr__(self, name, value):
        raise AttributeError("Language is immutable")

    @classmethod
    def of(cls, *words: str, alphabet: Iterable[str] | None = None) -> "Language":
        return cls(words, alphabet=alphabet)

    def with_words(self, words: Iterable[str]) -> "Language":
        """A language over the same alphabet (declared or inferred) as ``self``."""
        if self.declared:
            return Language(words, alphabet=self.alphabet)
        return Language(words)

    def __iter__(self) -> Iterator[str]:
        return iter(canonical(self.words))

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: object) -> bool:
        return w in self.words

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Language):
            return self.words == other.words
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.words)

    def __le__(self, other: "Language") -> bool:
        return self.words <= other.words

    def __or__(self, other: "Language") -> "Language":
        return Language(self.words | other.words, alphabet=_merge_alphabets(self, other))

    def __and__(self, other: "Language") -> "Language":
        return Language(self.words & other.words, alphabet=_merge_alphabets(self, other))

    def __sub__(self, other: "Language") -> "Language":
        return self.with_words(self.words - other.words)

    def __mul__(self, other: "Language") -> "Language":
        return product(self, other)

    def __pow__(self, n: int) -> "Language":
        return power(self, n)

    def __repr__(self) -> str:
        body = ", ".join(repr(w) for w in self)
        return f"Language({{{body}}})"

    def __str__(self) -> str:
        return "{" + ", ".join(w if w else "ε" for w in self) + "}"

    @property
    def cardinality(self) -> int:
        return len(self.words)

    def sorted(self) -> list[str]:
        return canonical(self.words)

    def min_length(self) -> int:
        return min(len(w) for w in self.words)

    def max_length(self) -> int:
        return max(len(w) for w in self.words)


def _merge_alphabets(x: Language, y: Language) -> frozenset[str] | None:
    if x.declared and y.declared:
        if x.alphabet != y.alphabet:
            raise AlphabetError(
                f"alphabet mismatch: {''.join(sorted(x.alphabet))!r} "
                f"vs {''.join(sorted(y.alphabet))!r}"
            )
        return x.alphabet
    if x.declared:
        return x.alphabet | y.alphabet
    if y.declared:
        return y.alphabet | x.alphabet
    return None


def as_language(x: Language | Iterable[str]) -> Language:
    return x if isinstance(x, Language) else Language(x)


def require_nonempty_words(x: Language, what: str = "language") -> None:
    if EMPTY in x.words:
        raise EmptyWordError(f"{what} contains the empty word")


def product(x: Language, y: Language) -> Language:
    """The concatenation product ``{uv | u in x, v in y}``."""
    alphabet = _merge_alphabets(x, y)
    return Language((u + v for u in x.words for v in y.words), alphabet=alphabet)


def power(x: Language, n: int) -> Language:
    if n < 0:
        raise ValueError("power must be non-negative")
    result = x.with_words([EMPTY])
    for _ in range(n):
        result = product(result, x)
    return result


def left_quotient(u: str, x: Language) -> Language:
    """``u⁻¹X``: every v with uv in X."""
    n = len(u)
    return x.with_words(w[n:] for w in x.words if w.startswith(u))


def right_quotient(x: Language, u: str) -> Language:
    """``Xu⁻¹``: every v with vu in X."""
    n = len(u)
    return x.with_words(w[: len(w) - n] for w in x.words if w.endswith(u))


def left_quotient_set(x: Language, y: Language) -> Language:
    """``X⁻¹Y``, the union of ``u⁻¹Y`` over u in X."""
    out = set()
    for u in x.words:
        n = len(u)
        out.update(w[n:] for w in y.words if w.startswith(u))
    return y.with_words(out)


def right_quotient_set(x: Language, y: Language) -> Language:
    """``XY⁻¹``, the union of ``Xu⁻¹`` over u in Y."""
    out = set()
    for u in y.words:
        n = len(u)
        out.update(w[: len(w) - n] for w in x.words if w.endswith(u))
    return x.with_words(out)


def proper_prefixes(w: str) -> list[str]:
    """All prefixes of ``w`` other than ``w`` itself, shortest first (ε included)."""
    return [w[:i] for i in range(len(w))]


def proper_suffixes(w: str) -> list[str]:
    """All suffixes of ``w`` other than ``w`` itself, shortest first (ε included)."""
    return [w[len(w) - i:] for i in range(len(w))]


def prefix_set(x: Language) -> Language:
    """Pref(X): proper prefixes of the words of X."""
    return x.with_words(p for w in x.words for p in proper_prefixes(w))


def suffix_set(x: Language) -> Language:
    """Suff(X): proper suffixes of the words of X."""
    return x.with_words(s for w in x.words for s in proper_suffixes(w))


def reverse(x: Language) -> Language:
    return x.with_words(w[::-1] for w in x.words)


def partition_by_first_letter(z: Language) -> dict[str, Language]:
    """Split Z into its non-empty blocks ``Z_a`` of words beginning with ``a``.

    Keys are in sorted letter order.
    """
    require_nonempty_words(z)
    blocks: dict[str, set[str]] = {}
    for w in z.words:
        blocks.setdefault(w[0], set()).add(w)
    return {a: z.with_words(blocks[a]) for a in sorted(blocks)}


def block_sizes(partition: Mapping[str, Language]) -> dict[str, int]:
    return {a: len(block) for a, block in partition.items()}


def kraft_sum(x: Language, alphabet_size: int | None = None) -> Fraction:
    """Exact ``Σ k^-|w|`` over the words of X, k being the alphabet size."""
    require_nonempty_words(x)
    k = len(x.alphabet) if alphabet_size is None else alphabet_size
    if not x.words:
        return Fraction(0)
    if k < 1:
        raise AlphabetError("Kraft sum needs an alphabet of at least one letter")
    return sum((Fraction(1, k ** len(w)) for w in x.words), Fraction(0))
