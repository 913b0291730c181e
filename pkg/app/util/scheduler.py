"""검색 작업 분배 - ProcessPoolExecutor 기반 워커 풀"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, TypeVar

from tqdm import tqdm

from app.config.settings import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class SearchScheduler:
    """독립 작업을 워커에 분배하고 입력 순서대로 결과를 돌려준다"""

    def imap(
        self,
        fn: Callable[[T], R],
        tasks: Iterable[T],
        jobs: int = None,
        desc: str = "search",
    ) -> Iterator[R]:
        """작업 결과를 입력 순서대로 yield

        Args:
            fn: 작업 함수 (jobs > 1이면 pickle 가능해야 함)
            tasks: 작업 입력
            jobs: 워커 수 (None이면 설정값, 1이면 현재 프로세스에서 실행)
            desc: 진행 표시 라벨
        """
        if jobs is None:
            jobs = settings.search.jobs
        tasks = list(tasks)
        total = len(tasks)

        logger.info("[Scheduler] %d tasks on %d worker(s)", total, jobs)
        progress = tqdm(total=total, desc=desc, disable=not settings.search.progress, leave=False)
        try:
            if jobs <= 1:
                for task in tasks:
                    yield fn(task)
                    progress.update(1)
                return

            with ProcessPoolExecutor(max_workers=jobs) as executor:
                for result in executor.map(fn, tasks):
                    yield result
                    progress.update(1)
        finally:
            progress.close()


# 전역 스케줄러 인스턴스
search_scheduler = SearchScheduler()
