from typing import Optional


class InvalidArgumentError(ValueError):
    pass


class InvalidDiscriminantError(InvalidArgumentError):
    pass


class DomainError(ValueError):
    """A real-valued formula was evaluated outside its domain"""
    pass


class DegenerateQuadraticError(DomainError):
    pass


class EligibilityError(ValueError):
    pass


class CacheFormatError(ValueError):
    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
