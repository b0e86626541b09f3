"""
Исключения операторной алгебры.
"""

from core.exceptions import DiamondSimError


class OperatorError(DiamondSimError):
    """Базовое исключение для ошибок в операторах"""


class NonFiniteMatrixError(OperatorError):
    """Матрица содержит NaN или бесконечности"""

    def __init__(self, message=None, operation=None):
        if not message:
            if operation:
                message = f"Матрица для операции '{operation}' содержит нечисловые элементы"
            else:
                message = "Матрица содержит нечисловые элементы"
        super().__init__(message, operation=operation)


class NotHermitianError(OperatorError):
    """Матрица не эрмитова в пределах допуска"""

    def __init__(self, residual=None, tolerance=None, message=None):
        self.residual = residual
        if not message:
            if residual is not None:
                message = f"Матрица не эрмитова: max|A - A†| = {residual:.3e} (допуск {tolerance:.1e})"
            else:
                message = "Матрица не эрмитова"
        super().__init__(message, residual=residual, tolerance=tolerance)


class DimensionMismatchError(OperatorError):
    """Неподходящие размерности операторов"""

    def __init__(self, shape_a=None, shape_b=None, message=None):
        if not message:
            if shape_b is not None:
                message = f"Несовместимые размерности: {shape_a} и {shape_b}"
            else:
                message = f"Ожидалась квадратная матрица, получено {shape_a}"
        super().__init__(message, shape_a=shape_a, shape_b=shape_b)
