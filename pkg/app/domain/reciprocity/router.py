from argparse import ArgumentParser, Namespace

from app.domain.graph.service import graph_to_spec
from app.domain.perm.service import alternating, group_to_spec, symmetric, trivial
from app.domain.poly.service import format_polynomial, polynomial_to_json, sign_reflect
from app.domain.reciprocity.models import PairReport
from app.domain.reciprocity.service import (
    is_reciprocal_pair,
    orbital_chromatic_polynomial,
    pair_report_to_model,
    theorem1_expected,
    verify_theorem1,
)
from app.util.cli.client import cli_service
from app.util.cli.handler import CommandHandler
from app.util.validators import GraphSpecValidator, GroupSpecValidator

TOP_GROUPS = {"s": symmetric, "a": alternating, "trivial": trivial}


def format_report(report: PairReport) -> str:
    """PairReport 사람용 출력 (여러 줄)"""
    n = report.graph.n
    lines = [
        f"graph: n={n} edges={[list(e) for e in report.graph.sorted_edges()]}",
        f"group: order={report.group.order} degree={report.group.degree}",
        f"orbital: {format_polynomial(report.orbital)}",
        f"(-1)^{n} F(-x): {format_polynomial(sign_reflect(report.cycle, n))}",
        f"reciprocal: {'true' if report.reciprocal else 'false'}",
    ]
    if report.classification is not None:
        lines.append(f"classification: {report.classification.tag.value}")
    return "\n".join(lines)


class OrbitalCommand(CommandHandler):
    @property
    def command(self) -> str:
        return "orbital"

    @property
    def help(self) -> str:
        return "print the orbital chromatic polynomial of a (graph, group) pair"

    def configure(self, parser: ArgumentParser) -> None:
        parser.add_argument("--graph", required=True)
        parser.add_argument("--group", required=True)

    def handle(self, args: Namespace) -> int:
        graph = GraphSpecValidator.validate(args.graph)
        group = GroupSpecValidator.validate(args.group)
        p = orbital_chromatic_polynomial(graph, group)
        cli_service.emit(
            args,
            format_polynomial(p),
            {
                "graph": graph_to_spec(graph).model_dump(),
                "group": group_to_spec(group).model_dump(),
                "orbital": polynomial_to_json(p),
            },
        )
        return 0


class CheckCommand(CommandHandler):
    """reciprocity 검사 - reciprocal이면 0, 아니면 1"""

    @property
    def command(self) -> str:
        return "check"

    @property
    def help(self) -> str:
        return "check whether a (graph, group) pair is reciprocal"

    def configure(self, parser: ArgumentParser) -> None:
        parser.add_argument("--graph", required=True)
        parser.add_argument("--group", required=True)

    def handle(self, args: Namespace) -> int:
        graph = GraphSpecValidator.validate(args.graph)
        group = GroupSpecValidator.validate(args.group)
        report = is_reciprocal_pair(graph, group)
        cli_service.emit(args, format_report(report), pair_report_to_model(report).model_dump(mode="json"))
        return 0 if report.reciprocal else 1


class Theorem1Command(CommandHandler):
    """k-star 가족 검증 - 결과가 예측과 일치하면 0"""

    @property
    def command(self) -> str:
        return "theorem1"

    @property
    def help(self) -> str:
        return "verify a member of the k-star family S_k x (S_{k+1} wr H)"

    def configure(self, parser: ArgumentParser) -> None:
        parser.add_argument("--k", type=int, required=True)
        parser.add_argument("--r", type=int, required=True)
        parser.add_argument("--h", choices=sorted(TOP_GROUPS), required=True, help="H on r points")

    def handle(self, args: Namespace) -> int:
        top = TOP_GROUPS[args.h](args.r)
        report = verify_theorem1(args.k, args.r, top)
        expected = theorem1_expected(args.k, top)

        payload = pair_report_to_model(report).model_dump(mode="json")
        payload.update(k=args.k, r=args.r, h=args.h, expected=expected)
        text = format_report(report) + f"\nexpected: {'true' if expected else 'false'}"
        cli_service.emit(args, text, payload)
        return 0 if report.reciprocal == expected else 1
