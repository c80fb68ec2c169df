import numpy as np
import pytest

import voltlift as vl

K2STAR_DOC = {
    "vertices": ["a", "b"],
    "arcs": [
        {"from": "a", "to": "a", "voltage": "r^0*s"},
        {"from": "b", "to": "b", "voltage": "r^0*s"},
        {"from": "a", "to": "b", "voltage": "r^0"},
        {"from": "b", "to": "a", "voltage": "r^0"},
        {"from": "a", "to": "b", "voltage": "r^1"},
        {"from": "b", "to": "a", "voltage": "r^1"},
    ],
}


@pytest.fixture(scope="session")
def d3():
    return vl.build_builtin_group("dihedral:3")


@pytest.fixture(scope="session")
def d3_irreps(d3):
    return vl.builtin_irreps(d3)


@pytest.fixture(scope="session")
def k2star(d3):
    return vl.parse_voltage_digraph(K2STAR_DOC, d3)


# builtin groups of order <= 24 used by the randomized suites
GROUP_POOL_SPECS = [
    "cyclic:1",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:6",
    "cyclic:8",
    "cyclic:12",
    "dihedral:2",
    "dihedral:3",
    "dihedral:4",
    "dihedral:5",
    "dihedral:6",
    "dihedral:12",
    "product:cyclic:2,cyclic:3",
    "product:cyclic:2,cyclic:2",
    "product:cyclic:2,dihedral:3",
    "product:cyclic:3,dihedral:4",
]


def random_voltage_digraph(rng, group, max_vertices=6, max_arcs=20):
    r = int(rng.integers(1, max_vertices + 1))
    n_arcs = int(rng.integers(1, max_arcs + 1))
    arcs = [
        (int(rng.integers(r)), int(rng.integers(r)), int(rng.integers(group.order)))
        for _ in range(n_arcs)
    ]
    names = [f"v{i}" for i in range(r)]
    return vl.make_voltage_digraph(group, names, arcs)


# one PASS/FAIL line per acceptance criterion at the end of the run
def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            name = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in name:
                label = name.split("::test_criterion_", 1)[1]
                results[label] = status
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(results, key=lambda s: int(s.split("_")[0])):
        verdict = "PASS" if results[label] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {label.replace('_', ' ')}: {verdict}")
