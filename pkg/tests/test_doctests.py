import doctest

import pytest

from peritl import cli, fock, partitions, strata, tl, verify, weights

MODULES = [partitions, fock, tl, strata, weights, verify, cli]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_module_doctests(module):
    failures, _ = doctest.testmod(module)
    assert failures == 0
