"""Unambiguous products, alternative codes and strong alternative codes.

Each verdict is computed along two independent routes and the routes are
required to agree; a disagreement raises :class:`InvariantError`.
"""
from __future__ import annotations

from dataclasses import dataclass

from .codes import (
    SpTrace,
    is_prefix_code,
    is_suffix_code,
    sardinas_patterson,
)
from .language import (
    EMPTY,
    Language,
    left_quotient,
    left_quotient_set,
    power,
    product,
    require_nonempty_words,
    right_quotient,
    right_quotient_set,
    subset_key,
)

EVIDENCE_CAP = 16


class InvariantError(AssertionError):
    """Two routes that must agree did not. Always a defect, never a user error."""


@dataclass(frozen=True)
class Decomposition:
    """A pair (X, Y) claimed to induce Z = XY with an unambiguous product."""

    x: Language
    y: Language

    @property
    def product(self) -> Language:
        return product(self.x, self.y)

    def validate(self, z: Language) -> bool:
        return (
            EMPTY not in self.x
            and EMPTY not in self.y
            and self.product == z
            and len(self.x) * len(self.y) == len(z)
        )

    def sort_key(self):
        return (subset_key(self.x), subset_key(self.y))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class ProductVerdict:
    unambiguous: bool
    overlap_set: Language
    overlap_count: int
    cardinality_check: tuple[int, int]


@dataclass(frozen=True)
class AltVerdict:
    is_alternative: bool
    product_code: SpTrace
    product_unambiguous: ProductVerdict


@dataclass(frozen=True)
class StrongVerdict:
    is_strong: bool
    alternative: AltVerdict
    condition1_violations: Language
    condition2_violations: Language
    char_route: tuple[bool, bool, bool]


def _check_pair(x: Language, y: Language) -> None:
    require_nonempty_words(x, "X")
    require_nonempty_words(y, "Y")
    if not x.words or not y.words:
        raise ValueError("X and Y must be non-empty")


def _cap(lang: Language, cap: int | None) -> Language:
    if cap is None or len(lang) <= cap:
        return lang
    return lang.with_words(lang.sorted()[:cap])


def overlap_set(x: Language, y: Language) -> Language:
    """``X⁻¹X ∩ YY⁻¹ \\ {ε}``; empty exactly when XY is unambiguous."""
    both = left_quotient_set(x, x).words & right_quotient_set(y, y).words
    return x.with_words(both - {EMPTY})


def check_unambiguous(x: Language, y: Language, cap: int | None = EVIDENCE_CAP) -> ProductVerdict:
    _check_pair(x, y)
    overlap = overlap_set(x, y)
    counts = (len(product(x, y)), len(x) * len(y))
    by_quotients = not overlap.words
    by_cardinality = counts[0] == counts[1]
    if by_quotients != by_cardinality:
        raise InvariantError(
            f"unambiguity criteria disagree for X={x}, Y={y}: "
            f"quotient route {by_quotients}, cardinality route {by_cardinality}"
        )
    return ProductVerdict(by_quotients, _cap(overlap, cap), len(overlap), counts)


def check_alternative(x: Language, y: Language, cap: int | None = EVIDENCE_CAP) -> AltVerdict:
    """(X, Y) is alternative iff XY is a code and the product is unambiguous."""
    unamb = check_unambiguous(x, y, cap)
    trace = sardinas_patterson(product(x, y))
    return AltVerdict(trace.is_code and unamb.unambiguous, trace, unamb)


def strong_violations(x: Language, y: Language) -> tuple[Language, Language]:
    """``X⁻¹(XY) \\ Y`` and ``(XY)Y⁻¹ \\ X``."""
    xy = product(x, y)
    return left_quotient_set(x, xy) - y, right_quotient_set(xy, y) - x


def check_strong(x: Language, y: Language, cap: int | None = EVIDENCE_CAP) -> StrongVerdict:
    alt = check_alternative(x, y, cap)
    v1, v2 = strong_violations(x, y)
    by_definition = alt.is_alternative and not v1.words and not v2.words
    route = (is_prefix_code(x), is_suffix_code(y), alt.product_code.is_code)
    by_characterization = all(route)
    if by_definition != by_characterization:
        raise InvariantError(
            f"strong-code routes disagree for X={x}, Y={y}: "
            f"definition {by_definition}, characterization {route}"
        )
    return StrongVerdict(by_definition, alt, _cap(v1, cap), _cap(v2, cap), route)


def strong_condition_forms(x: Language, y: Language) -> tuple[bool, bool, bool]:
    """Evaluate the inclusion, equality and per-element forms of the strong conditions."""
    if not check_alternative(x, y).is_alternative:
        raise ValueError("(X, Y) is not an alternative code")
    xy = product(x, y)
    left = left_quotient_set(x, xy)
    right = right_quotient_set(xy, y)
    inclusion = left <= y and right <= x
    equality = left == y and right == x
    per_element = all(left_quotient(u, xy) == y for u in x.words) and all(
        right_quotient(xy, v) == x for v in y.words
    )
    if not inclusion == equality == per_element:
        raise InvariantError(f"strong condition forms disagree for X={x}, Y={y}")
    return inclusion, equality, per_element


def induced_by_sufficiency(z: Language, x: Language, y: Language) -> bool:
    """Cheap certificate: Z = XY is alt-induced when X is prefix or Y is suffix."""
    _check_pair(x, y)
    if product(x, y) != z:
        raise ValueError("Z is not the product XY")
    if not sardinas_patterson(z).is_code:
        raise ValueError("Z is not a code")
    return is_prefix_code(x) or is_suffix_code(y)


def power_alt_induced(z: Language, n: int) -> Decomposition:
    """The pair (Zⁿ⁻¹, Z), which induces Zⁿ whenever Z is alt-induced."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return Decomposition(power(z, n - 1), z)
