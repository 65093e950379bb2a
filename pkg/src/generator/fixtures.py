"""이름으로 찾는 고정 토폴로지 (data/fixtures/*.tim)"""

from pathlib import Path
from typing import Optional

from utils import get_settings
from utils.errors import UnknownFixture
from topology import Topology, load_topology


FIXTURE_NAMES = ("unit1", "chain3", "fig2like", "fig3like", "fourcell")


def fixture_path(name: str, fixtures_dir: Optional[Path] = None) -> Path:
    directory = fixtures_dir or get_settings().fixtures_dir
    return directory / f"{name}.tim"


def fixture(name: str, fixtures_dir: Optional[Path] = None) -> Topology:
    """고정 토폴로지 로드

    Raises:
        UnknownFixture: 이름이 목록에 없거나 파일이 없을 때
    """
    if name not in FIXTURE_NAMES:
        raise UnknownFixture(f"알 수 없는 고정 토폴로지: {name} (가능: {', '.join(FIXTURE_NAMES)})")
    path = fixture_path(name, fixtures_dir)
    if not path.exists():
        raise UnknownFixture(f"고정 토폴로지 파일이 없습니다: {path}")
    return load_topology(path)
