import logging
import sys

from app.config.settings import settings
from app.domain.graph.router import ChromPolyCommand
from app.domain.perm.router import CyclePolyCommand
from app.domain.reciprocity.router import CheckCommand, OrbitalCommand, Theorem1Command
from app.domain.search.router import ClassifyCommand, SearchCommand
from app.util.cli.client import cli_service


def register_cli_handlers():
    """CLI 핸들러 등록"""
    cli_service.register_handler(CyclePolyCommand())
    cli_service.register_handler(ChromPolyCommand())
    cli_service.register_handler(OrbitalCommand())
    cli_service.register_handler(CheckCommand())
    cli_service.register_handler(Theorem1Command())
    cli_service.register_handler(SearchCommand())
    cli_service.register_handler(ClassifyCommand())


def configure_logging():
    # stdout은 결과 전용, 로그는 stderr
    logging.basicConfig(
        level=settings.log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s %(message)s",
        stream=sys.stderr,
    )


def main(argv: list[str] = None) -> int:
    configure_logging()
    register_cli_handlers()
    return cli_service.run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
