from argparse import ArgumentParser, Namespace

from app.domain.perm.service import cycle_polynomial, group_to_spec
from app.domain.poly.service import format_polynomial, polynomial_to_json
from app.util.cli.client import cli_service
from app.util.cli.handler import CommandHandler
from app.util.validators import GroupSpecValidator


class CyclePolyCommand(CommandHandler):
    """F_G(x) 출력"""

    @property
    def command(self) -> str:
        return "cycle-poly"

    @property
    def help(self) -> str:
        return "print the cycle polynomial of a group"

    def configure(self, parser: ArgumentParser) -> None:
        parser.add_argument("--group", required=True, help="group spec, e.g. sym:3 or JSON")

    def handle(self, args: Namespace) -> int:
        group = GroupSpecValidator.validate(args.group)
        f = cycle_polynomial(group)
        cli_service.emit(
            args,
            format_polynomial(f),
            {"group": group_to_spec(group).model_dump(), "cycle": polynomial_to_json(f)},
        )
        return 0
