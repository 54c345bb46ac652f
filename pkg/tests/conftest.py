import time

from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")

SUITE_BUDGET_SECONDS = 60.0
_suite_started = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _suite_started
    within = elapsed < SUITE_BUDGET_SECONDS
    print(
        f"\n[ACCEPTANCE] {'PASS' if within else 'FAIL'}  full suite wall time "
        f"{elapsed:.1f}s (budget {SUITE_BUDGET_SECONDS:.0f}s)"
    )
    if not within and exitstatus == 0:
        session.exitstatus = 1
