import pytest

import helpers


@pytest.fixture
def ent_pair():
    return helpers.entangled_pair()


@pytest.fixture
def product_pair():
    return helpers.balanced_product()
