from __future__ import annotations

import sys
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from altcodes.language import Language  # noqa: E402

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def words(alphabet: str = "ab", min_size: int = 1, max_size: int = 4):
    return st.text(alphabet=alphabet, min_size=min_size, max_size=max_size)


def languages(alphabet: str = "ab", min_size: int = 1, max_size: int = 5, max_len: int = 4):
    return st.frozensets(words(alphabet, 1, max_len), min_size=min_size, max_size=max_size).map(
        lambda ws: Language(ws, alphabet=alphabet)
    )


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
