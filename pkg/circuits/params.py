"""
Параметры схемы из четырех трансмонов.

Емкости хранятся в фарадах, джозефсоновские энергии как угловые частоты
(рад/с). Файлы параметров схемы содержат плоские пары key=value:
    c_ff, c_prime_ff, c_t_ff, c_c_ff   емкости в фФ
    e_jt_ghz, e_jc_ghz                 E_J/2π в ГГц
"""

import dataclasses
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Mapping

from dotenv import dotenv_values

from utils.units import from_femtofarad, from_ghz, to_femtofarad, to_ghz

from .exceptions import InvalidCircuitParameterError

logger = logging.getLogger('diamondsim.circuits')

# C_C, C_T должны превышать C, C′ хотя бы во столько раз
WEAK_COUPLING_RATIO = 10.0

# ключ файла -> (поле, перевод в СИ, обратный перевод)
FILE_KEYS = {
    'c_ff': ('c', from_femtofarad, to_femtofarad),
    'c_prime_ff': ('c_prime', from_femtofarad, to_femtofarad),
    'c_t_ff': ('c_t', from_femtofarad, to_femtofarad),
    'c_c_ff': ('c_c', from_femtofarad, to_femtofarad),
    'e_jt_ghz': ('e_j_t', from_ghz, to_ghz),
    'e_jc_ghz': ('e_j_c', from_ghz, to_ghz),
}


@dataclass(frozen=True)
class CircuitParams:
    """
    Сосредоточенные элементы схемы.

    Attributes:
        c: связь трансмона с соседними узлами C, Ф
        c_prime: прямая емкость между управляющими C′, Ф (может быть 0)
        c_t: шунтирующая емкость мишени C_T, Ф
        c_c: емкость управляющего трансмона на землю C_C, Ф
        e_j_t, e_j_c: джозефсоновские энергии мишеней и управляющих, рад/с
    """

    c: float
    c_prime: float
    c_t: float
    c_c: float
    e_j_t: float
    e_j_c: float

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if not math.isfinite(value):
                raise InvalidCircuitParameterError(field.name, value, "значение должно быть конечным")
            if field.name == 'c_prime':
                if value < 0:
                    raise InvalidCircuitParameterError(field.name, value, "емкость не может быть отрицательной")
            elif value <= 0:
                raise InvalidCircuitParameterError(field.name, value, "значение должно быть положительным")

    def warn_if_strongly_coupled(self):
        if not self.is_weakly_coupled:
            logger.warning(
                f"Слабая связь нарушена: C_C = {to_femtofarad(self.c_c):.1f} фФ, "
                f"C_T = {to_femtofarad(self.c_t):.1f} фФ при C = {to_femtofarad(self.c):.1f} фФ, "
                f"C′ = {to_femtofarad(self.c_prime):.1f} фФ (нужен запас в {WEAK_COUPLING_RATIO:g} раз)"
            )

    @property
    def is_weakly_coupled(self) -> bool:
        return min(self.c_c, self.c_t) >= WEAK_COUPLING_RATIO * max(self.c, self.c_prime)

    @classmethod
    def from_mapping(cls, values: Mapping[str, str]) -> 'CircuitParams':
        """
        Собрать параметры из словаря с ключами файла (значения в фФ и ГГц).

        Raises:
            InvalidCircuitParameterError: неизвестный или пропущенный ключ,
                нечисловое значение
        """
        unknown = sorted(set(values) - set(FILE_KEYS))
        if unknown:
            raise InvalidCircuitParameterError(unknown[0], values[unknown[0]], "неизвестный ключ")

        fields = {}
        for key, (name, convert, _) in FILE_KEYS.items():
            if values.get(key) in (None, ''):
                raise InvalidCircuitParameterError(key, None, "ключ обязателен")
            try:
                fields[name] = convert(values[key])
            except (TypeError, ValueError) as e:
                raise InvalidCircuitParameterError(key, values[key], "ожидается число") from e
        return cls(**fields)

    @classmethod
    def from_file(cls, path) -> 'CircuitParams':
        path = Path(path)
        if not path.is_file():
            raise InvalidCircuitParameterError('path', str(path), "файл не найден")
        return cls.from_mapping(dotenv_values(path))

    def to_mapping(self) -> Dict[str, float]:
        """Обратное преобразование в ключи файла"""
        return {key: back(getattr(self, name)) for key, (name, _, back) in FILE_KEYS.items()}

    def replace(self, **changes) -> 'CircuitParams':
        return dataclasses.replace(self, **changes)
