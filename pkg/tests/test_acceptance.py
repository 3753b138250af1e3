"""The nine acceptance checks, one test each, with a pass/fail line printed."""

import pytest

from rootcoh.verify import (
    check_appendix_tables,
    check_bwb_oracle,
    check_certificates,
    check_column_statistics,
    check_corollary5,
    check_coxeter_numbers,
    check_pairing_bound,
    check_prop2_sufficiency,
    check_rho_top_degree,
)

CHECKS = [
    check_appendix_tables,
    check_coxeter_numbers,
    check_column_statistics,
    check_prop2_sufficiency,
    check_corollary5,
    check_pairing_bound,
    check_certificates,
    check_rho_top_degree,
    check_bwb_oracle,
]


@pytest.fixture(scope="module")
def results():
    out = {}
    for fn in CHECKS:
        res = fn()
        print(res.line)
        out[res.number] = res
    return out


@pytest.mark.parametrize("number", range(1, 10))
def test_criterion(results, number):
    res = results[number]
    print(res.line)
    assert res.ok, res.line
