"""툴킷 예외 정의 - 각 예외는 CLI 종료 코드를 가진다"""


class ReciprocityError(Exception):
    """모든 툴킷 예외의 베이스 클래스"""

    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InvalidArgumentError(ReciprocityError, ValueError):
    """잘못된 인자 (스펙 문자열, n/k/r 범위 등)"""

    exit_code = 2


class DegreeMismatchError(InvalidArgumentError):
    """순열/군/그래프의 차수가 맞지 않음"""


class OddPermutationInHError(InvalidArgumentError):
    """wreath 조합에 홀순열을 가진 H가 주어짐"""


class BoundExceededError(ReciprocityError):
    """설정된 계산 한도 초과"""

    exit_code = 3


class NotAutomorphismGroupError(ReciprocityError):
    """군의 원소 중 그래프 자기동형이 아닌 것이 있음"""


class NotReciprocalError(ReciprocityError):
    """reciprocal pair가 필요한 곳에 그렇지 않은 쌍이 주어짐"""


class InvariantViolationError(ReciprocityError):
    """증명된 구성이 재계산에서 실패 - 구현 버그"""
