import pytest

from covering_serre import mutations, suites
from covering_serre.suites import Config

QUICK = Config(m_max=1, n_max=4, rank1_m=4, rank1_ab=3, w_min=-3, w_max=3, ul_max=3)


def failing_suites():
    out = []
    for s in suites.SUITES:
        if s == "bar":
            continue
        if any(not suites.run_check(*c)[0] for c in suites.cases(s, QUICK)):
            out.append(s)
    return out


def test_clean_build_is_green():
    assert failing_suites() == []


@pytest.mark.parametrize("name", sorted(mutations.KNOWN))
def test_each_mutation_is_caught(name):
    with mutations.mutate(name):
        assert failing_suites(), f"{name} slipped through"
    assert not mutations.active(name)


def test_unknown_mutation():
    with pytest.raises(KeyError):
        with mutations.mutate("nope"):
            pass
