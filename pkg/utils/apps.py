"""
Конфигурация приложения utils: общая инфраструктура симулятора.
"""

from django.apps import AppConfig


class UtilsConfig(AppConfig):
    """Конфигурация приложения utils"""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'utils'
    verbose_name = 'Утилиты'

    def ready(self):
        """
        Создает каталог для результатов сценариев при запуске.
        """
        from django.conf import settings

        try:
            settings.DIAMONDSIM_RESULTS_DIR.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            # Логируем ошибку, но не прерываем запуск приложения
            import logging
            logger = logging.getLogger('diamondsim')
            logger.warning(f"Failed to create results directory: {e}")
