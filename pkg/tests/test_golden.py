"""Golden-file checks: command reports are byte-stable across releases."""

import json
from pathlib import Path

import pytest

from apolar_kit.cli import main

GOLDEN = Path(__file__).parent / "golden"


def fresh_report(argv, tmp_path):
    out = tmp_path / "fresh.json"
    code = main(argv + ["--out", str(out)])
    assert code == 0
    return out.read_text()


@pytest.mark.parametrize("g", range(6, 26))
def test_numerology_golden(g, tmp_path):
    recorded = (GOLDEN / f"numerology_g{g}.json").read_text()
    assert fresh_report(["numerology", "--g", str(g)], tmp_path) == recorded


@pytest.mark.parametrize("k", range(2, 9))
def test_nakai_golden(k, tmp_path):
    recorded = (GOLDEN / f"nakai_k{k}.json").read_text()
    assert fresh_report(["nakai", "--k", str(k)], tmp_path) == recorded


def test_golden_values_spot_check():
    g7 = json.loads((GOLDEN / "numerology_g7.json").read_text())
    assert g7["multiplicities"] == [3, 3, 2, 2]
    assert g7["degS"] == 6
    g9 = json.loads((GOLDEN / "numerology_g9.json").read_text())
    assert g9["degS"] == 9
    k3 = json.loads((GOLDEN / "nakai_k3.json").read_text())
    assert k3["ample_self_intersection"] == 9 and k3["holds"]
