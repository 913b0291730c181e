from argparse import ArgumentParser, Namespace

from app.domain.graph.service import chromatic_polynomial, graph_to_spec
from app.domain.poly.service import format_polynomial, polynomial_to_json
from app.util.cli.client import cli_service
from app.util.cli.handler import CommandHandler
from app.util.validators import GraphSpecValidator


class ChromPolyCommand(CommandHandler):
    """P_Gamma(x) 출력"""

    @property
    def command(self) -> str:
        return "chrom-poly"

    @property
    def help(self) -> str:
        return "print the chromatic polynomial of a graph"

    def configure(self, parser: ArgumentParser) -> None:
        parser.add_argument("--graph", required=True, help="graph spec, e.g. cycle:4 or JSON")

    def handle(self, args: Namespace) -> int:
        graph = GraphSpecValidator.validate(args.graph)
        p = chromatic_polynomial(graph)
        cli_service.emit(
            args,
            format_polynomial(p),
            {"graph": graph_to_spec(graph).model_dump(), "chromatic": polynomial_to_json(p)},
        )
        return 0
