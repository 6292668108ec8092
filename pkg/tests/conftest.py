"""Shared quivers, corpus iteration and the acceptance summary hook."""
from __future__ import annotations

import pytest

from qgrass.quiver import Quiver, dim_vectors_up_to, load_quiver, sub, sub_dim_vectors

# every orientation of A2 and A3, in the user's labels
ORIENTATIONS = {
    "A2 1->2": [[1, 2]],
    "A2 2->1": [[2, 1]],
    "A3 1->2->3": [[1, 2], [2, 3]],
    "A3 3->2->1": [[3, 2], [2, 1]],
    "A3 1->2<-3": [[1, 2], [3, 2]],
    "A3 1<-2->3": [[2, 1], [2, 3]],
}


def load(arrows, n=None) -> Quiver:
    n = n if n is not None else max(max(h) for h in arrows)
    return load_quiver({"vertices": n, "arrows": arrows})[0]


A1 = Quiver(1, ())
A2 = load([[1, 2]])
A3_LINEAR = load([[1, 2], [2, 3]])
A3_SINK = load([[1, 2], [3, 2]])      # relabelled arrows (1,3), (2,3)
A3_SOURCE = load([[2, 1], [2, 3]])    # relabelled arrows (1,2), (1,3)


def corpus_quivers():
    return [(name, load(arrows)) for name, arrows in ORIENTATIONS.items()]


def corpus_instances(quiver: Quiver, max_height: int = 5):
    """Every ``(total, nu, mu)`` with ``1 <= height(total) <= max_height``."""
    for total in dim_vectors_up_to(quiver.n, max_height, 1):
        for mu in sub_dim_vectors(total):
            yield total, sub(total, mu), mu


_SUMMARY: list[str] = []


@pytest.fixture
def acceptance_line():
    return _SUMMARY.append


def pytest_terminal_summary(terminalreporter):
    if _SUMMARY:
        terminalreporter.section("acceptance criteria")
        for line in _SUMMARY:
            terminalreporter.write_line(line)
