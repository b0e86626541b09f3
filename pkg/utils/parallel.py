"""
Пул воркеров для независимых точек свипа.

Результаты возвращаются в порядке входных элементов, поэтому число воркеров
не влияет на содержимое выходных файлов.
"""

import logging
from multiprocessing import Pool
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger('diamondsim.parallel')

T = TypeVar('T')
R = TypeVar('R')


def _init_worker():
    """Инициализация Django в дочернем процессе (нужно при методе spawn)"""
    import django
    from django.apps import apps

    if not apps.ready:
        django.setup()


def map_points(func: Callable[[T], R], items: Sequence[T], workers: int = 1) -> List[R]:
    """
    Применить func к каждому элементу, при workers > 1 в пуле процессов.

    func должна быть функцией уровня модуля (передается через pickle).
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    processes = min(int(workers), len(items))
    logger.debug(f"Запуск пула: {processes} процессов, {len(items)} точек")
    with Pool(processes=processes, initializer=_init_worker) as pool:
        return pool.map(func, items, chunksize=1)
