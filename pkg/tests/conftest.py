import hypothesis.strategies as st
from hypothesis import settings

from posbraid.braid import BraidWord

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def braid_words(draw, min_q=2, max_q=4, max_w=8):
    q = draw(st.integers(min_q, max_q))
    w = draw(st.integers(0, max_w)) if q > 1 else 0
    letters = draw(st.lists(st.integers(1, max(q - 1, 1)), min_size=w, max_size=w))
    return BraidWord(q, tuple(letters))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
