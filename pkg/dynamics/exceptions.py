"""
Исключения движка эволюции.
"""

from core.exceptions import DiamondSimError


class DynamicsError(DiamondSimError):
    """Базовое исключение для ошибок эволюции"""


class NegativeRateError(DynamicsError):
    """Отрицательная скорость декогеренции"""

    def __init__(self, gamma=None, message=None):
        self.gamma = gamma
        if not message:
            message = f"Скорость декогеренции должна быть неотрицательной, получено γ = {gamma}"
        super().__init__(message, gamma=gamma)


class InvalidTimeGridError(DynamicsError):
    """Сетка времен пуста, не упорядочена или горизонт не положителен"""

    def __init__(self, reason=None, message=None):
        if not message:
            message = f"Недопустимая сетка времен: {reason}" if reason else "Недопустимая сетка времен"
        super().__init__(message, reason=reason)


class EvolutionInvariantError(DynamicsError):
    """
    Нарушение инварианта матрицы плотности при эволюции.

    diagnostics содержит шаг, дрейф следа, невязку эрмитовости, минимальное
    собственное значение и время нарушения.
    """

    def __init__(self, diagnostics=None, message=None):
        self.diagnostics = dict(diagnostics or {})
        if not message:
            details = ', '.join(f"{key}={value:.3e}" if isinstance(value, float) else f"{key}={value}"
                                for key, value in self.diagnostics.items())
            message = f"Нарушен инвариант эволюции ({details})" if details else "Нарушен инвариант эволюции"
        super().__init__(message, diagnostics=self.diagnostics)
