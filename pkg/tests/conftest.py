import pytest

from rmqc.lulc import LULCData, load_data
from rmqc.mbqc import MBQCInstance, example1_instance
from rmqc.rmfamily import FamilyParams, build


@pytest.fixture(scope="session")
def ghz4_instance() -> MBQCInstance:
    return example1_instance()


@pytest.fixture(scope="session")
def lulc_data() -> LULCData:
    return load_data()


@pytest.fixture(scope="session")
def family_12_5_2() -> MBQCInstance:
    return build(FamilyParams(1, 2, 5, 2))
