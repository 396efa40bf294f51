"""Plain-text language files.

One word per line, UTF-8. An optional first line ``#alphabet <letters>``
declares the alphabet; any other line starting with ``#`` is a comment.
Trailing whitespace is stripped and blank lines are skipped.
"""
from __future__ import annotations

import logging
from pathlib import Path

from .language import Language

log = logging.getLogger(__name__)

HEADER = "#alphabet"


class LanguageFileError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<string>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def parse_language(text: str, source: str = "<string>") -> Language:
    alphabet = None
    words: list[str] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if lineno == 1 and (line == HEADER or line.startswith(HEADER + " ")):
            letters = line[len(HEADER):].strip()
            if not letters:
                raise LanguageFileError("empty alphabet declaration", lineno, source)
            if any(c.isspace() for c in letters):
                raise LanguageFileError("alphabet letters must not be separated", lineno, source)
            if len(set(letters)) != len(letters):
                raise LanguageFileError("repeated letter in alphabet declaration", lineno, source)
            alphabet = frozenset(letters)
            continue
        if not line or line.startswith("#"):
            continue
        if any(c.isspace() for c in line):
            raise LanguageFileError(f"whitespace inside word {line!r}", lineno, source)
        if alphabet is not None:
            stray = sorted(set(line) - alphabet)
            if stray:
                raise LanguageFileError(
                    f"letter {stray[0]!r} of {line!r} is not in the declared alphabet",
                    lineno,
                    source,
                )
        if line in seen:
            log.warning("%s:%d: duplicate word %r ignored", source, lineno, line)
            continue
        seen.add(line)
        words.append(line)
    return Language(words, alphabet=alphabet)


def render_language(lang: Language) -> str:
    lines = []
    if lang.declared:
        lines.append(f"{HEADER} {''.join(sorted(lang.alphabet))}")
    lines.extend(lang.sorted())
    return "".join(line + "\n" for line in lines)


def read_language(path: str | Path) -> Language:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise LanguageFileError(f"not valid UTF-8 ({exc.reason})", source=str(path)) from exc
    except OSError as exc:
        raise LanguageFileError(exc.strerror or str(exc), source=str(path)) from exc
    return parse_language(text, str(path))


def write_language(lang: Language, path: str | Path) -> None:
    Path(path).write_text(render_language(lang), encoding="utf-8")
