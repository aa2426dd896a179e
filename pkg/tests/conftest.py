import pytest

from bsymbol import build_tower, validate_params


@pytest.fixture(scope="session")
def params_cache():
    cache = {}

    def get(p, e, r, N=2):
        key = (p, e, r, N)
        if key not in cache:
            cache[key] = validate_params(build_tower(p, e, r), N)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def p3r2(params_cache):
    return params_cache(3, 1, 2)


@pytest.fixture(scope="session")
def p3r4(params_cache):
    return params_cache(3, 1, 4)


@pytest.fixture(scope="session")
def p5r2(params_cache):
    return params_cache(5, 1, 2)


@pytest.fixture(scope="session")
def p5r4(params_cache):
    return params_cache(5, 1, 4)


@pytest.fixture(scope="session")
def acceptance_log(request):
    """criterion number -> (passed, seconds, note); printed in the terminal summary."""
    return request.config.__dict__.setdefault("_acceptance", {})


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = getattr(config, "_acceptance", None)
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(log):
        passed, seconds, note = log[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if passed else 'FAIL'} ({seconds:.1f}s) {note}")
