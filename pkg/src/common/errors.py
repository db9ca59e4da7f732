"""
공통 예외 계층

DomainError 계열은 입력/도메인 문제(CLI 종료 코드 2),
그 외 예외는 내부 오류(종료 코드 1)로 취급한다.
"""


class KspError(Exception):
    """프로젝트 최상위 예외"""


class DomainError(KspError):
    """사용자 입력이나 도메인 제약 위반"""


class ScalarError(DomainError, ZeroDivisionError):
    """Q(√2) 스칼라 연산 오류 (0으로 나누기, 체 밖의 제곱근, 잘못된 리터럴)"""


class ModeSetError(DomainError):
    """모드 집합 파일/ID/차원 오류"""


class TransformError(DomainError):
    """직교(유니터리)가 아닌 변환 행렬"""


class StatisticsError(DomainError):
    """입자 수와 통계(페르미온/보손)가 맞지 않음"""


class PauliExclusionError(StatisticsError):
    """선형 종속인 인자를 가진 페르미온 곱 상태 (0 상태)"""


class TriggerError(DomainError):
    """트리거 패턴이 컨텍스트의 support에 없음"""


class ConfigError(DomainError):
    """설정 파일 / KSP_* 환경변수 값 오류"""
