"""
Исключения квантования схемы.
"""

from core.exceptions import DiamondSimError


class InvalidCircuitParameterError(DiamondSimError):
    """Недопустимые емкости, джозефсоновские энергии или файл параметров схемы"""

    def __init__(self, parameter=None, value=None, reason=None, message=None):
        self.parameter = parameter
        self.value = value
        if not message:
            if parameter and reason:
                message = f"Недопустимый параметр схемы '{parameter}' = {value}: {reason}"
            elif parameter:
                message = f"Недопустимый параметр схемы '{parameter}' = {value}"
            else:
                message = "Недопустимые параметры схемы"
        super().__init__(message, parameter=parameter, value=value)


class SingularCapacitanceError(DiamondSimError):
    """Матрица емкостей K вырождена или плохо обусловлена"""

    def __init__(self, condition_number=None, message=None, original_error=None):
        self.condition_number = condition_number
        if not message:
            if condition_number is not None:
                message = f"Матрица емкостей вырождена: число обусловленности {condition_number:.3e}"
            else:
                message = "Матрица емкостей вырождена"
        super().__init__(message, original_error=original_error, condition_number=condition_number)


class DesignNotFoundError(DiamondSimError):
    """Подбор емкостей под заданные связи не удался"""

    def __init__(self, parameter=None, target=None, reason=None, message=None):
        self.parameter = parameter
        self.target = target
        if not message:
            message = f"Не удалось подобрать '{parameter}' под связь {target:.4e} рад/с"
            if reason:
                message = f"{message}: {reason}"
        super().__init__(message, parameter=parameter, target=target)
