from abc import ABC, abstractmethod
from argparse import ArgumentParser, Namespace


class CommandHandler(ABC):
    """CLI 서브커맨드 핸들러 베이스 클래스"""

    @property
    @abstractmethod
    def command(self) -> str:
        """서브커맨드 이름"""
        pass

    @property
    def help(self) -> str:
        return ""

    @abstractmethod
    def configure(self, parser: ArgumentParser) -> None:
        """서브커맨드 인자 등록"""
        pass

    @abstractmethod
    def handle(self, args: Namespace) -> int:
        """명령 처리 - 종료 코드 반환"""
        pass
