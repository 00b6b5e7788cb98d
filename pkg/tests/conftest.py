import contextlib

import pytest

_LINES = pytest.StashKey[list]()


class _Record:
    detail = ""


@pytest.fixture
def criterion(request):
    """``with criterion(3, "title") as rec:`` records one PASS/FAIL line.

    Set ``rec.detail`` inside the block for a short note on what was checked.
    """
    lines = request.config.stash.setdefault(_LINES, [])

    @contextlib.contextmanager
    def run(num, title):
        rec = _Record()
        try:
            yield rec
        except BaseException as exc:
            msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
            lines.append((num, f"FAIL  criterion {num}: {title}  ({msg[:160]})"))
            print(lines[-1][1])
            raise
        lines.append((num, f"PASS  criterion {num}: {title}" + (f"  ({rec.detail})" if rec.detail else "")))
        print(lines[-1][1])

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(lines):
        terminalreporter.write_line(line)
