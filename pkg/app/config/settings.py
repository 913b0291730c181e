from pathlib import Path

from pydantic_settings import BaseSettings


class GroupSettings(BaseSettings):
    max_order: int = 1_000_000  # 군 closure 최대 크기
    closure_check_limit: int = 200  # 이 크기 이하면 모든 쌍으로 closure 검증

    class Config:
        env_prefix = "GROUP_"


class GraphSettings(BaseSettings):
    automorphism_max_n: int = 9
    coloring_oracle_bound: int = 10**8
    enumerate_max_n: int = 7

    class Config:
        env_prefix = "GRAPH_"


class SearchSettings(BaseSettings):
    max_n: int = 6
    max_subgroup_parent_order: int = 5000
    jobs: int = 1
    strict: bool = False
    progress: bool = False

    class Config:
        env_prefix = "SEARCH_"


class CacheSettings(BaseSettings):
    dir: Path = Path(".cache/reciprocity")  # CACHE_DIR 환경변수로 오버라이드
    enabled: bool = True

    class Config:
        env_prefix = "CACHE_"


class Settings(BaseSettings):
    app_name: str = "Reciprocal Pair Toolkit"
    version: str = "1.0.0"
    log_level: str = "WARNING"

    group: GroupSettings = GroupSettings()
    graph: GraphSettings = GraphSettings()
    search: SearchSettings = SearchSettings()
    cache: CacheSettings = CacheSettings()


settings = Settings()
