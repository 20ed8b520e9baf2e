import pytest

import chaincode


def test_rt_distribution():
    doc = chaincode.run("wdist", family="gr", p=2, e=2, m=1, n=1, s=2, lambda_=3, nu=1)
    assert doc["schema"] == "1"
    assert doc["distribution"] == [1, 1, 6, 24, 96]
    assert chaincode.rt_weight_distribution(2, 2, 2, 2, 1) == [1, 1, 2, 12, 48]


def test_factor_negacyclic():
    doc = chaincode.run("factor", family="gr", p=2, e=2, m=3, n=5, s=1, lambda_=-1)
    assert doc["product_matches"] and doc["code_count"] == 25
    assert [c["d"] for c in doc["components"]] == [1, 4]


def test_domain_error():
    with pytest.raises(chaincode.ChaincodeError, match="not a unit"):
        chaincode.run("size", family="gr", p=2, e=2, m=1, n=1, s=1, lambda_=2, nu=1)


def test_verify_grid():
    assert chaincode.run("verify", grid="small")["status"] == "pass"


def test_binom_valuation():
    assert chaincode.binom_valuation(3, 4, 27) == 1
