import pytest

from domain.services.classnum import ClassNumberService
from domain.value_objects.hz_params import HzParams
from tests.oracles import HurwitzTable


@pytest.fixture
def classes():
    return ClassNumberService()


@pytest.fixture(scope="session")
def sieved_classes():
    service = ClassNumberService()
    service.warm_up(20_000)
    return service


@pytest.fixture(scope="session")
def hurwitz_table():
    return HurwitzTable(20_000)


@pytest.fixture(params=[5, 13, 17])
def params(request):
    return HzParams(request.param)
