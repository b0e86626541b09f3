"""
Исключения кутритной модели.
"""

from core.exceptions import DiamondSimError


class InvalidQutritParameterError(DiamondSimError):
    """Параметры вне режима трансмона или недопустимые значения"""

    def __init__(self, parameter=None, value=None, reason=None, message=None):
        self.parameter = parameter
        self.value = value
        if not message:
            if parameter and reason:
                message = f"Недопустимый параметр кутрита '{parameter}' = {value}: {reason}"
            elif parameter:
                message = f"Недопустимый параметр кутрита '{parameter}' = {value}"
            else:
                message = "Недопустимые параметры кутритной модели"
        super().__init__(message, parameter=parameter, value=value)


class ResonantDenominatorError(DiamondSimError):
    """Знаменатель Δ± в оптимальной перекрестной связи близок к нулю"""

    def __init__(self, name=None, value=None, message=None):
        self.name = name
        self.value = value
        if not message:
            message = f"Резонанс: |{name}| = {abs(value):.3e} рад/с слишком мало для J_T^opt"
        super().__init__(message, name=name, value=value)
