import os
from pathlib import Path

import pytest

import hiicheck

DATA = Path(os.environ.get("HIICHECK_DATA", Path(__file__).resolve().parents[2] / "data"))


def test_pgl2_rhs():
    r = hiicheck.hii_rhs({"datum": {"type": "A1", "lattice": "ad"}, "q": 3, "parameter": "steinberg"})
    assert r["rhs_squared"] == "81/64"


def test_reads_data_files():
    a = hiicheck.analyze(str(DATA / "sp4_order2.json"))
    assert a["ramification"]["c_chi_order"] == 2
    c = hiicheck.chain(DATA / "pgl2_steinberg.json")
    assert all(cl["status"] == "holds" for cl in c["clauses"])


def test_gamma_pgl2():
    g = hiicheck.gamma(DATA / "pgl2_gamma.json")
    assert g["gamma_abs_squared"] == "16/9"


def test_error_kind():
    with pytest.raises(hiicheck.HiiError) as e:
        hiicheck.hii_rhs(DATA / "sl2_quadratic.json")
    assert e.value.kind == "NotDiscrete"
    with pytest.raises(hiicheck.HiiError) as e:
        hiicheck.analyze("{not json")
    assert e.value.kind == "InvalidInput"


def test_verify_small():
    s = hiicheck.verify(max_rank=1, trials=5, seed=3)
    assert s["all_identities_pass"]
