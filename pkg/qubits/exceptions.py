"""
Исключения кубитной модели.
"""

from core.exceptions import DiamondSimError


class InvalidModelParameterError(DiamondSimError):
    """Недопустимое значение параметра модели"""

    def __init__(self, parameter=None, value=None, reason=None, message=None):
        self.parameter = parameter
        self.value = value
        if not message:
            if parameter and reason:
                message = f"Недопустимый параметр '{parameter}' = {value}: {reason}"
            elif parameter:
                message = f"Недопустимый параметр '{parameter}' = {value}"
            else:
                message = "Недопустимые параметры модели"
        super().__init__(message, parameter=parameter, value=value)


class UnknownControlLabelError(DiamondSimError):
    """Метка управляющего состояния не входит в базис"""

    def __init__(self, label=None, allowed=None, message=None):
        self.label = label
        if not message:
            if allowed:
                message = f"Неизвестное управляющее состояние '{label}', допустимо: {', '.join(allowed)}"
            else:
                message = f"Неизвестное управляющее состояние '{label}'"
        super().__init__(message, label=label)
