"""
테스트 공통 설정
app, common 패키지를 import 할 수 있도록 경로를 추가하고 서비스 싱글톤을 픽스처로 준다.
"""
import sys
from pathlib import Path

import pytest

base_dir = Path(__file__).resolve().parent.parent  # cyclofactorservice
root_dir = base_dir.parent  # math.minsol.kr

for path in (base_dir, root_dir):
    if str(path) not in sys.path:
        sys.path.insert(0, str(path))

from app.explicit.explicit_service import get_service as get_explicit_service  # noqa: E402
from app.field.field_service import get_service as get_field_service  # noqa: E402
from app.oracle.oracle_service import get_service as get_oracle_service  # noqa: E402
from app.table.table_service import get_service as get_table_service  # noqa: E402


@pytest.fixture(scope="session")
def field_service():
    return get_field_service()


@pytest.fixture(scope="session")
def explicit_service():
    return get_explicit_service()


@pytest.fixture(scope="session")
def oracle_service():
    return get_oracle_service()


@pytest.fixture(scope="session")
def table_service():
    return get_table_service()
