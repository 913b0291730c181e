import json
from argparse import ArgumentParser, Namespace
from pathlib import Path

from pydantic import ValidationError

from app.config.settings import settings
from app.domain.graph.service import graph_from_spec
from app.domain.perm.service import format_cycles, group_from_spec
from app.domain.reciprocity.models import PairReport, PairReportModel
from app.domain.reciprocity.service import is_reciprocal_pair, pair_report_to_model
from app.domain.search.service import classify, search_pairs, search_summary
from app.util.cli.client import cli_service
from app.util.cli.handler import CommandHandler
from app.util.exceptions import InvalidArgumentError


def format_pair_line(report: PairReport) -> str:
    tag = report.classification.tag.value if report.classification else "-"
    generators = "".join(format_cycles(g) for g in report.group.generators) or "()"
    return f"[{tag}] n={report.graph.n} edges={[list(e) for e in report.graph.sorted_edges()]} |G|={report.group.order} gens={generators}"


class SearchCommand(CommandHandler):
    """n 정점 reciprocal pair 전수 검색 - JSON-lines 출력, 마지막 줄은 요약"""

    @property
    def command(self) -> str:
        return "search"

    @property
    def help(self) -> str:
        return "exhaustively search reciprocal pairs on n vertices"

    def configure(self, parser: ArgumentParser) -> None:
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--strict", action="store_true", help="exit 1 if any pair is unclassified")
        parser.add_argument("--jobs", type=int, default=None, help="worker processes")

    def handle(self, args: Namespace) -> int:
        if args.n < 1:
            raise InvalidArgumentError(f"--n must be at least 1. Got: {args.n}")
        if args.jobs is not None and args.jobs < 1:
            raise InvalidArgumentError(f"--jobs must be at least 1. Got: {args.jobs}")

        result = search_pairs(args.n, jobs=args.jobs)
        for report in result.pairs:
            cli_service.emit(args, format_pair_line(report), pair_report_to_model(report).model_dump(mode="json"))

        summary = search_summary(result)
        text = (
            f"summary: n={summary.n} graphs={summary.graphs_examined} subgroups={summary.subgroups_examined} "
            f"pairs={summary.pairs_found} unknown={summary.unknown_pairs}"
        )
        cli_service.emit(args, text, summary.model_dump(mode="json"))

        strict = args.strict or settings.search.strict
        return 1 if strict and summary.unknown_pairs else 0


class ClassifyCommand(CommandHandler):
    @property
    def command(self) -> str:
        return "classify"

    @property
    def help(self) -> str:
        return "classify a reciprocal pair given as a JSON file or inline JSON"

    def configure(self, parser: ArgumentParser) -> None:
        parser.add_argument("--pair", required=True, help="path to a JSON file or an inline JSON object")

    def handle(self, args: Namespace) -> int:
        model = self._load(args.pair)
        report = is_reciprocal_pair(graph_from_spec(model.graph), group_from_spec(model.group))
        classification = classify(report)

        payload = {"tag": classification.tag.value, "evidence": classification.evidence}
        text = classification.tag.value
        if classification.evidence:
            text += " " + json.dumps(classification.evidence, sort_keys=True)
        cli_service.emit(args, text, payload)
        return 0

    def _load(self, source: str) -> PairReportModel:
        """인라인 JSON 또는 파일 경로에서 쌍 읽기"""
        text = source.strip()
        if not text.startswith("{"):
            path = Path(source)
            if not path.is_file():
                raise InvalidArgumentError(f"Pair file not found: '{source}'")
            text = path.read_text(encoding="utf-8")
        try:
            return PairReportModel.model_validate_json(text)
        except ValidationError as e:
            raise InvalidArgumentError(f"Invalid pair JSON: {e.errors()[0]['msg']}")
