import argparse
import json
import logging
import sys
from typing import TYPE_CHECKING, Any

from app.config.settings import settings
from app.util.exceptions import ReciprocityError

if TYPE_CHECKING:
    from app.util.cli.handler import CommandHandler

logger = logging.getLogger(__name__)


class CLIService:
    def __init__(self):
        self._handlers: dict[str, "CommandHandler"] = {}  # command -> handler

    def register_handler(self, handler: "CommandHandler"):
        """핸들러 등록"""
        self._handlers[handler.command] = handler

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog="reciprocity", description=settings.app_name)
        parser.add_argument("--json", action="store_true", help="machine-readable JSON output")
        parser.add_argument("--version", action="version", version=settings.version)

        # 서브커맨드 뒤에 와도 --json을 받는다
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

        subparsers = parser.add_subparsers(dest="command", required=True)
        for command, handler in self._handlers.items():
            sub = subparsers.add_parser(command, help=handler.help, parents=[common])
            handler.configure(sub)
        return parser

    def run(self, argv: list[str]) -> int:
        """argv를 파싱해 핸들러로 전달하고 종료 코드를 반환

        ReciprocityError는 exit_code로, argparse 사용 오류는 2로 변환된다.
        """
        parser = self.build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else 2

        handler = self._handlers[args.command]
        try:
            return handler.handle(args)
        except ReciprocityError as e:
            logger.error("[CLI] %s failed: %s", args.command, e.detail)
            print(f"error: {e.detail}", file=sys.stderr)
            return e.exit_code

    def emit(self, args: argparse.Namespace, text: str, payload: Any) -> None:
        """--json이면 payload를 정렬된 JSON 한 줄로, 아니면 text를 출력"""
        if getattr(args, "json", False):
            print(json.dumps(payload, sort_keys=True))
        else:
            print(text)


cli_service = CLIService()
