"""
Замер времени долгих численных вызовов
"""

from functools import wraps
import time
import logging

from django.conf import settings

logger = logging.getLogger('diamondsim.performance')


def timed(func):
    """
    Декоратор для отслеживания времени выполнения численных процедур.
    Медленные вызовы попадают в лог с уровнем WARNING.
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.perf_counter()

        result = func(*args, **kwargs)

        execution_time = time.perf_counter() - start_time
        logger.debug(f"Function {func.__name__}: {execution_time:.3f}s")

        threshold = getattr(settings, 'DIAMONDSIM_SLOW_CALL_SECONDS', 30.0)
        if execution_time > threshold:
            logger.warning(
                f"Slow function detected: {func.__name__} - {execution_time:.3f}s"
            )
        return result
    return wrapper
