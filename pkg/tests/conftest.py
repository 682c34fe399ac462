import pytest

from roughlat import kernels
from roughlat.lattice import lattice_from_order


def lattice_from_covers(elements, covers):
    """Lattice from its Hasse diagram; ``covers`` lists (lower, upper) pairs."""
    elements = list(elements)
    leq = {(e, e) for e in elements}
    leq |= set(covers)
    changed = True
    while changed:
        changed = False
        for a, b in list(leq):
            for c, d in list(leq):
                if b == c and (a, d) not in leq:
                    leq.add((a, d))
                    changed = True
    return lattice_from_order(elements, sorted(leq))


@pytest.fixture
def chain2():
    return lattice_from_covers(["0", "1"], [("0", "1")])


@pytest.fixture
def chain3():
    return lattice_from_covers(["0", "m", "1"], [("0", "m"), ("m", "1")])


@pytest.fixture
def b4():
    return lattice_from_covers(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


@pytest.fixture
def m3():
    return lattice_from_covers(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )


@pytest.fixture
def n5():
    return lattice_from_covers(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )


@pytest.fixture
def singleton():
    return lattice_from_order(["*"], [("*", "*")])


BACKENDS = [kernels.python_backend] + ([kernels.compiled_backend] if kernels.compiled_backend else [])


@pytest.fixture(params=BACKENDS, ids=lambda b: b.__name__.rsplit(".", 1)[-1])
def backend(request):
    return request.param


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
