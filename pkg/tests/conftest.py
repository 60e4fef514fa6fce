import itertools

from hypothesis import strategies as st

ternary = st.text(alphabet="abc", max_size=14)
ternary_nonempty = st.text(alphabet="abc", min_size=1, max_size=14)


def all_words(letters, max_len, min_len=0):
    for n in range(min_len, max_len + 1):
        for t in itertools.product(letters, repeat=n):
            yield "".join(t)


def naive_bwt(w):
    rotations = sorted(w[i:] + w[:i] for i in range(len(w)))
    return "".join(r[-1] for r in rotations)


def naive_is_lyndon(w):
    rots = [w[i:] + w[:i] for i in range(1, len(w))]
    return all(w < r for r in rots)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
