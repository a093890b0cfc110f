import time

import pytest

from gridcast import feasibility_table


@pytest.fixture(scope="session")
def table_15x8():
    """Full sweep over 1 <= t <= 15, 1 <= r <= 8, computed once per session.

    Yields (results, elapsed_seconds) so the acceptance suite can check the
    runtime budget alongside the values.
    """
    start = time.perf_counter()
    results = feasibility_table(15, 8)
    return results, time.perf_counter() - start
