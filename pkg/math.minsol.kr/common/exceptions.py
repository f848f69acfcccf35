"""
공통 예외 클래스
모든 예외는 CLI 종료 코드를 함께 가진다.
"""

EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_RESOURCE_BOUND = 3


class ServiceException(Exception):
    """서비스 공통 예외"""
    def __init__(self, detail: str, exit_code: int = EXIT_VERIFICATION_FAILED):
        super().__init__(detail)
        self.detail = detail
        self.exit_code = exit_code


class ValidationException(ServiceException):
    """유효성 검증 실패 (잘못된 입력)"""
    def __init__(self, detail: str = "Validation failed"):
        super().__init__(detail=detail, exit_code=EXIT_INVALID_INPUT)


class UnsupportedCaseException(ValidationException):
    """닫힌 공식이 없는 경우 (w 합성수)"""
    def __init__(self, detail: str = "Unsupported case"):
        super().__init__(detail=detail)


class ResourceBoundException(ServiceException):
    """체 크기 한도 초과"""
    def __init__(self, detail: str = "Field size bound exceeded"):
        super().__init__(detail=detail, exit_code=EXIT_RESOURCE_BOUND)


class VerificationException(ServiceException):
    """검증 실패"""
    def __init__(self, detail: str = "Verification failed"):
        super().__init__(detail=detail, exit_code=EXIT_VERIFICATION_FAILED)


class FieldArithmeticException(ServiceException):
    """체 연산 오류 (0으로 나누기, 컨텍스트 불일치)"""
    def __init__(self, detail: str = "Field arithmetic error"):
        super().__init__(detail=detail, exit_code=EXIT_VERIFICATION_FAILED)


class SubfieldException(FieldArithmeticException):
    """원소가 F_q 부분체에 속하지 않음"""
    def __init__(self, detail: str = "Element is not fixed by the q-power map"):
        super().__init__(detail=detail)
