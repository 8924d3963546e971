import os

from hypothesis import HealthCheck, settings, strategies as st

from covering_serre.arith import QPiLaurent

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=600, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

coeff = st.integers(-9, 9)
pair = st.tuples(coeff, coeff)
qpi = st.dictionaries(st.integers(-6, 6), pair, max_size=5).map(QPiLaurent)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import VERDICTS
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(VERDICTS):
        terminalreporter.write_line(VERDICTS[k])
