import pytest

from ringlab.suites import SUITES, run_suite, run_suites


@pytest.mark.parametrize("name", list(SUITES))
def test_suite_passes_on_catalog(extensions, name):
    result = run_suite(name, extensions)
    assert result.cases > 0
    assert result.passed, result.failures[:3]


def test_unknown_suite(extensions):
    with pytest.raises(KeyError):
        run_suite("nope", extensions)


def test_run_suites_order(extensions):
    small = extensions[:2]
    assert [r.name for r in run_suites(small, ["psi", "rad"])] == ["psi", "rad"]
    assert [r.name for r in run_suites(small)] == list(SUITES)
