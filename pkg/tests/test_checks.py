import json

import numpy as np

from garside_kit.checks import (
    CHECKS,
    load_fixture,
    report,
    report_markdown,
    run_check,
    simple_counts,
)
from garside_kit.garside import is_lattice


def test_registry_has_twelve_entries():
    assert len(CHECKS) == 12
    assert len({c[0] for c in CHECKS}) == 12


def test_fixtures_ship():
    m2 = load_fixture("lattice_m2.json")
    m3 = load_fixture("lattice_m3.json")
    assert len(m2["nodes"]) == 8 and len(m2["covers"]) == 9
    assert len(m3["nodes"]) == 21 and len(m3["covers"]) == 29


def test_is_lattice_rejects():
    # the "bowtie": two minimal, two maximal elements, no meet for the tops
    le = np.eye(4, dtype=bool)
    for a in (0, 1):
        for b in (2, 3):
            le[a, b] = True
    meet = np.zeros((4, 4), dtype=np.int64)
    join = np.zeros((4, 4), dtype=np.int64)
    assert not is_lattice(le, meet, join)
    chain = np.triu(np.ones((3, 3), dtype=bool))
    idx = np.arange(3)
    assert is_lattice(chain, np.minimum.outer(idx, idx), np.maximum.outer(idx, idx))


def test_check_details_serialise():
    r = run_check("duality")
    doc = r.to_json()
    assert json.loads(json.dumps(doc, ensure_ascii=False)) == doc
    assert doc["status"] == "pass"


def test_simple_counts():
    assert simple_counts(4) == {1: 3, 2: 8, 3: 21, 4: 55}


def test_report_shapes():
    doc, results = report(n_max=3, seed=1)
    assert [c["key"] for c in doc["checks"]] == [c[0] for c in CHECKS]
    skipped = {r.key for r in results if r.status == "skipped"}
    assert skipped == {"sigma-lcm", "scan"}
    assert all(r.passed for r in results if r.key not in skipped)
    md = report_markdown(doc)
    assert md.startswith("# ") and "| lattice-m2:" in md and "- n = 3: 21" in md
