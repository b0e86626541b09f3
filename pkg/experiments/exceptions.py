"""
Исключения сценариев и их конфигурации.
"""

from django.core.exceptions import ImproperlyConfigured

from core.exceptions import DiamondSimError


class ScenarioConfigError(ImproperlyConfigured):
    """Неизвестный ключ, неверное значение или нечитаемый файл конфигурации"""

    def __init__(self, key=None, value=None, reason=None, message=None):
        self.key = key
        self.value = value
        if not message:
            if key and reason:
                message = f"Ошибка конфигурации '{key}' = {value!r}: {reason}"
            elif key:
                message = f"Ошибка конфигурации '{key}' = {value!r}"
            else:
                message = "Ошибка конфигурации сценария"
        super().__init__(message)


class UnknownScenarioError(DiamondSimError):
    """Сценарий с таким идентификатором не зарегистрирован"""

    def __init__(self, scenario=None, allowed=None, message=None):
        self.scenario = scenario
        if not message:
            message = f"Неизвестный сценарий '{scenario}'"
            if allowed:
                message = f"{message}, доступны: {', '.join(allowed)}"
        super().__init__(message, scenario=scenario)
