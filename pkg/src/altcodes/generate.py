"""Seeded random instances: prefix codes, planted alt-induced codes, random codes."""
from __future__ import annotations

import random
import string

from .alternative import Decomposition
from .codes import is_code
from .fic import StandardForm, classify_standard_form
from .language import Language, product

KINDS = ("prefix", "maximal-prefix", "alt-induced", "random-code", "hard")
MAX_ATTEMPTS = 10_000


class InfeasibleError(ValueError):
    """No instance with the requested parameters exists (or none was found)."""


def letters(k: int) -> str:
    if not 1 <= k <= 26:
        raise InfeasibleError("alphabet size must be between 1 and 26")
    return string.ascii_lowercase[:k]


def _split(rng: random.Random, leaves: list[str], alphabet: str, maxlen: int) -> bool:
    open_leaves = [i for i, w in enumerate(leaves) if len(w) < maxlen]
    if not open_leaves:
        return False
    i = rng.choice(open_leaves)
    w = leaves.pop(i)
    leaves.extend(w + c for c in alphabet)
    return True


def _tree_leaves(rng: random.Random, alphabet: str, at_least: int, maxlen: int) -> list[str]:
    """Leaves of a random complete k-ary tree: a maximal prefix code."""
    if maxlen < 1:
        raise InfeasibleError("maxlen must be positive")
    leaves = list(alphabet)
    while len(leaves) < at_least:
        if not _split(rng, leaves, alphabet, maxlen):
            raise InfeasibleError(
                f"no prefix code of {at_least} words over {len(alphabet)} letters "
                f"with length at most {maxlen}"
            )
    return leaves


def random_prefix_code(rng: random.Random, k: int, size: int, maxlen: int) -> Language:
    """A random prefix code: a random subset of the leaves of a random tree."""
    alphabet = letters(k)
    if size < 1:
        raise InfeasibleError("size must be positive")
    if k == 1 and size > 1:
        raise InfeasibleError("over one letter a prefix code has a single word")
    leaves = _tree_leaves(rng, alphabet, size, maxlen)
    for _ in range(rng.randint(0, size)):
        if not _split(rng, leaves, alphabet, maxlen):
            break
    return Language(rng.sample(sorted(leaves), size), alphabet=alphabet)


def maximal_prefix_code(rng: random.Random, k: int, size: int, maxlen: int) -> Language:
    """A random finite maximal prefix code (Kraft sum exactly 1)."""
    alphabet = letters(k)
    if k < 2:
        raise InfeasibleError("maximal prefix codes need at least two letters")
    if size < k or (size - 1) % (k - 1):
        raise InfeasibleError(
            f"a maximal prefix code over {k} letters has 1 + j*{k - 1} words (j >= 1)"
        )
    leaves = list(alphabet)
    while len(leaves) < size:
        if not _split(rng, leaves, alphabet, maxlen):
            raise InfeasibleError(f"size {size} is impossible with maxlen {maxlen}")
    return Language(leaves, alphabet=alphabet)


def planted_alt_induced(
    rng: random.Random, k: int, size: int, maxlen: int
) -> tuple[Language, Decomposition]:
    """Z = XY for random prefix codes X, Y with |X|·|Y| = size."""
    if maxlen < 2:
        raise InfeasibleError("alt-induced instances need maxlen >= 2")
    pairs = [(a, size // a) for a in range(2, size) if size % a == 0 and size // a >= 2]
    a, b = rng.choice(pairs) if pairs else (1, size)
    splits = [lx for lx in range(1, maxlen) if k**lx >= a and k ** (maxlen - lx) >= b]
    if not splits:
        raise InfeasibleError(f"no split of length {maxlen} fits {a} x {b} words over {k} letters")
    lx = rng.choice(splits)
    x = random_prefix_code(rng, k, a, lx)
    y = random_prefix_code(rng, k, b, maxlen - lx)
    return product(x, y), Decomposition(x, y)


def planted_hard(
    rng: random.Random, k: int, n: int, maxlen: int
) -> tuple[Language, Decomposition]:
    """A standard-form code with k first-letter blocks of exactly n words each.

    X has one word per letter, each of length two with pairwise distinct
    second letters, and Y is a random prefix code of n words. The search
    has to exhaust the pool of the one-letter prefix, which holds n words,
    before it reaches the planted pair.
    """
    alphabet = letters(k)
    if k < 2:
        raise InfeasibleError("hard instances need at least two letters")
    for _ in range(MAX_ATTEMPTS):
        seconds = rng.sample(alphabet, k)
        x = Language([c + d for c, d in zip(alphabet, seconds)], alphabet=alphabet)
        y = random_prefix_code(rng, k, n, maxlen)
        z = product(x, y)
        if classify_standard_form(z).form is StandardForm.STANDARD:
            return z, Decomposition(x, y)
    raise InfeasibleError("could not draw a standard-form instance")


def random_code(rng: random.Random, k: int, size: int, maxlen: int) -> Language:
    """Rejection-sample random word sets until one is a code."""
    alphabet = letters(k)
    universe = sum(k**i for i in range(1, maxlen + 1))
    if size > universe:
        raise InfeasibleError(f"only {universe} words of length at most {maxlen}")
    for _ in range(MAX_ATTEMPTS):
        words: set[str] = set()
        while len(words) < size:
            length = rng.randint(1, maxlen)
            words.add("".join(rng.choice(alphabet) for _ in range(length)))
        lang = Language(words, alphabet=alphabet)
        if is_code(lang):
            return lang
    raise InfeasibleError(f"no code found in {MAX_ATTEMPTS} attempts")


def gen_instance(
    kind: str, alphabet_size: int, size: int, maxlen: int, seed: int
) -> tuple[Language, Decomposition | None]:
    """Deterministic instance for ``seed``; planted pair for planted kinds.

    For ``hard``, ``size`` is the block size n, so |Z| = alphabet_size·n.
    """
    rng = random.Random(seed)
    if kind == "prefix":
        return random_prefix_code(rng, alphabet_size, size, maxlen), None
    if kind == "maximal-prefix":
        return maximal_prefix_code(rng, alphabet_size, size, maxlen), None
    if kind == "alt-induced":
        return planted_alt_induced(rng, alphabet_size, size, maxlen)
    if kind == "random-code":
        return random_code(rng, alphabet_size, size, maxlen), None
    if kind == "hard":
        return planted_hard(rng, alphabet_size, size, maxlen)
    raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
