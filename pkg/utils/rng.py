"""
Счетчиковые генераторы случайных чисел для свипов.

Каждая точка свипа получает собственный подпоток Philox, определяемый парой
(главный seed, индекс точки). Порядок выполнения точек в пуле воркеров
поэтому не влияет на случайные выборки.
"""

import numpy as np

MAX_SEED = 2**64 - 1


def validate_seed(seed: int) -> int:
    """Проверить, что seed помещается в 64-битное беззнаковое целое"""
    seed = int(seed)
    if seed < 0 or seed > MAX_SEED:
        raise ValueError(f"Seed должен быть в диапазоне [0, 2^64 - 1], получено {seed}")
    return seed


def point_generator(seed: int, index: int, stream: int = 0) -> np.random.Generator:
    """
    Генератор для точки свипа.

    Args:
        seed: главный seed запуска
        index: индекс точки свипа
        stream: номер независимого потока внутри точки (повторения и т.п.)

    Returns:
        np.random.Generator на битовом генераторе Philox
    """
    sequence = np.random.SeedSequence([validate_seed(seed), int(index), int(stream)])
    return np.random.Generator(np.random.Philox(sequence))
