"""
Перевод единиц на границе конфигурации.

Внутри симулятора все частоты хранятся как угловые (рад/с), время в
секундах, ёмкости в фарадах. Конфигурации и CLI принимают значение/2π в
МГц или ГГц, скорости декогеренции в МГц (1/мкс) и ёмкости в фФ.
"""

import math

TWO_PI = 2.0 * math.pi


def from_mhz(value: float) -> float:
    """Частота value/2π в МГц -> угловая частота, рад/с"""
    return TWO_PI * 1e6 * float(value)


def from_ghz(value: float) -> float:
    """Частота value/2π в ГГц -> угловая частота, рад/с"""
    return TWO_PI * 1e9 * float(value)


def to_mhz(angular: float) -> float:
    return float(angular) / (TWO_PI * 1e6)


def to_ghz(angular: float) -> float:
    return float(angular) / (TWO_PI * 1e9)


def rate_from_mhz(value: float) -> float:
    """Скорость в МГц (1/мкс) -> 1/с. Множитель 2π не применяется."""
    return 1e6 * float(value)


def rate_to_mhz(rate: float) -> float:
    return float(rate) / 1e6


def from_ns(value: float) -> float:
    return 1e-9 * float(value)


def to_ns(seconds: float) -> float:
    return 1e9 * float(seconds)


def from_femtofarad(value: float) -> float:
    return 1e-15 * float(value)


def to_femtofarad(farad: float) -> float:
    return float(farad) / 1e-15
