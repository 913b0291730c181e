"""유효성 검증 유틸리티 - CLI 군/그래프 스펙 문자열"""
from pydantic import ValidationError

from app.domain.graph.models import GraphSpecModel, SimpleGraph
from app.domain.graph.service import complete, cycle_graph, graph_from_spec, k_star, null
from app.domain.perm.models import GroupSpecModel, PermGroup
from app.domain.perm.service import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    group_from_spec,
    symmetric,
    trivial,
    wreath_product,
)
from app.util.exceptions import InvalidArgumentError


def _parse_ints(text: str, count: int, spec: str) -> list[int]:
    parts = text.split(",")
    if len(parts) != count:
        raise InvalidArgumentError(f"Expected {count} integer argument(s) in '{spec}'")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InvalidArgumentError(f"Non-integer argument in '{spec}'")


class GroupSpecValidator:
    """군 스펙 검증 클래스

    이름 형식: sym:n, alt:n, cyclic:n, dihedral:n, trivial:n,
    wreath:A,B (A wr B), product:A,B (A x B) - A와 B는 첫 쉼표에서 나뉜다.
    '{'로 시작하면 JSON {degree, generators} 이다.
    """

    NAMED = {
        "sym": symmetric,
        "alt": alternating,
        "cyclic": cyclic,
        "dihedral": dihedral,
        "trivial": trivial,
    }
    COMBINATORS = {
        "wreath": wreath_product,
        "product": direct_product,
    }

    @classmethod
    def validate(cls, spec: str) -> PermGroup:
        """군 스펙을 파싱해 군을 만든다

        Args:
            spec: 검증할 스펙 문자열

        Returns:
            완전히 나열된 군

        Raises:
            InvalidArgumentError: 스펙 형식이 올바르지 않은 경우
        """
        if not spec:
            raise InvalidArgumentError("Group spec is required")
        spec = spec.strip()

        if spec.startswith("{"):
            try:
                model = GroupSpecModel.model_validate_json(spec)
            except ValidationError as e:
                raise InvalidArgumentError(f"Invalid group JSON: {e.errors()[0]['msg']}")
            return group_from_spec(model)

        name, sep, args = spec.partition(":")
        if not sep:
            raise InvalidArgumentError(f"Group spec must look like 'name:args'. Got: '{spec}'")
        if name in cls.NAMED:
            (n,) = _parse_ints(args, 1, spec)
            return cls.NAMED[name](n)
        if name in cls.COMBINATORS:
            left, comma, right = args.partition(",")
            if not comma:
                raise InvalidArgumentError(f"'{name}' needs two group specs separated by a comma. Got: '{spec}'")
            return cls.COMBINATORS[name](cls.validate(left), cls.validate(right))
        raise InvalidArgumentError(f"Unknown group name '{name}'. Got: '{spec}'")

    @classmethod
    def validate_silent(cls, spec: str) -> bool:
        """군 스펙 검증 (예외 발생 없음)"""
        try:
            cls.validate(spec)
        except InvalidArgumentError:
            return False
        return True


class GraphSpecValidator:
    """그래프 스펙 검증 클래스

    이름 형식: complete:n, cycle:n, kstar:k,n, null:n.
    '{'로 시작하면 JSON {n, edges} 이다 (0-indexed).
    """

    NAMED = {
        "complete": (complete, 1),
        "cycle": (cycle_graph, 1),
        "kstar": (k_star, 2),
        "null": (null, 1),
    }

    @classmethod
    def validate(cls, spec: str) -> SimpleGraph:
        """그래프 스펙을 파싱해 그래프를 만든다

        Raises:
            InvalidArgumentError: 스펙 형식이 올바르지 않은 경우
        """
        if not spec:
            raise InvalidArgumentError("Graph spec is required")
        spec = spec.strip()

        if spec.startswith("{"):
            try:
                model = GraphSpecModel.model_validate_json(spec)
            except ValidationError as e:
                raise InvalidArgumentError(f"Invalid graph JSON: {e.errors()[0]['msg']}")
            return graph_from_spec(model)

        name, sep, args = spec.partition(":")
        if not sep or name not in cls.NAMED:
            raise InvalidArgumentError(
                f"Graph spec must be one of {', '.join(n + ':...' for n in cls.NAMED)} or JSON. Got: '{spec}'"
            )
        constructor, arity = cls.NAMED[name]
        return constructor(*_parse_ints(args, arity, spec))

    @classmethod
    def validate_silent(cls, spec: str) -> bool:
        try:
            cls.validate(spec)
        except InvalidArgumentError:
            return False
        return True
