"""검색 결과 캐시 - JSON-lines 파일 기반"""
import hashlib
import json
import logging
from pathlib import Path
from typing import Optional

from app.config.settings import settings

logger = logging.getLogger(__name__)


class CacheService:
    """키별 JSON-lines 파일에 레코드를 누적 저장

    설정(CACHE_DIR, CACHE_ENABLED)은 호출 시점에 읽는다.
    """

    @property
    def directory(self) -> Path:
        return Path(settings.cache.dir)

    def is_enabled(self) -> bool:
        return settings.cache.enabled

    def make_key(self, **parts) -> str:
        """키 구성요소의 정렬된 JSON에 대한 sha256 앞 16자리"""
        payload = json.dumps(parts, sort_keys=True)
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]

    def path(self, key: str, prefix: str = "search") -> Path:
        return self.directory / f"{prefix}-{key}.jsonl"

    def get_records(self, key: str, prefix: str = "search") -> list[dict]:
        """저장된 레코드 조회 (깨진 줄은 건너뜀)

        Args:
            key: 캐시 키
            prefix: 파일 이름 prefix

        Returns:
            레코드 딕셔너리 리스트 (없으면 빈 리스트)
        """
        if not self.is_enabled():
            return []
        path = self.path(key, prefix)
        if not path.exists():
            return []

        records = []
        with path.open("r", encoding="utf-8") as f:
            for line in f:
                line = line.strip()
                if not line:
                    continue
                try:
                    records.append(json.loads(line))
                except json.JSONDecodeError:
                    logger.warning("[Cache] Ignoring torn record in %s", path)
        logger.info("[Cache] Loaded %d records from %s", len(records), path)
        return records

    def append(self, key: str, record: dict, prefix: str = "search") -> bool:
        if not self.is_enabled():
            return False
        path = self.path(key, prefix)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            line = json.dumps(record, sort_keys=True) + "\n"
            if self._ends_mid_line(path):
                line = "\n" + line
            with path.open("a", encoding="utf-8") as f:
                f.write(line)
            return True
        except OSError as e:
            logger.warning("[Cache] Write failed for %s: %s", path, e)
            return False

    def _ends_mid_line(self, path: Path) -> bool:
        if not path.exists() or path.stat().st_size == 0:
            return False
        with path.open("rb") as f:
            f.seek(-1, 2)
            return f.read(1) != b"\n"

    def delete(self, key: str, prefix: str = "search") -> bool:
        path = self.path(key, prefix)
        if path.exists():
            path.unlink()
            return True
        return False

    def find_summary(self, records: list[dict]) -> Optional[dict]:
        for record in records:
            if record.get("kind") == "summary":
                return record
        return None


cache_service = CacheService()
