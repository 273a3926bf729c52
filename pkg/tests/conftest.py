from __future__ import annotations

import pytest

from oracles import mask_connected_classes


@pytest.fixture(scope="session")
def oracle_connected():
    """Connected isomorphism classes for n <= 7 from the naive labeled
    enumeration (the ground truth the production enumerator is checked
    against). Computed once per session; n = 7 is the expensive level."""
    return {n: mask_connected_classes(n) for n in range(1, 8)}
