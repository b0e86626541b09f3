from django.db import models


class RunStatus(models.TextChoices):
    """Статусы запуска сценария"""
    RUNNING = 'running', 'Выполняется'
    SUCCEEDED = 'succeeded', 'Завершен'
    FAILED = 'failed', 'Ошибка'


class ScenarioRun(models.Model):
    """
    Запись журнала запусков.

    Журнал нужен только для истории: выходные файлы из него не читаются и
    меток времени не содержат.
    """
    scenario = models.CharField(max_length=64, verbose_name='Сценарий')
    seed = models.CharField(max_length=20, verbose_name='Seed')
    config_hash = models.CharField(max_length=64, verbose_name='Хеш конфигурации')
    workers = models.PositiveIntegerField(default=1, verbose_name='Воркеры')
    output_path = models.CharField(max_length=500, blank=True, verbose_name='Выходной файл')
    status = models.CharField(
        max_length=16,
        choices=RunStatus.choices,
        default=RunStatus.RUNNING,
        verbose_name='Статус'
    )
    row_count = models.PositiveIntegerField(null=True, blank=True, verbose_name='Строк')
    duration = models.FloatField(null=True, blank=True, verbose_name='Длительность, с')
    error = models.TextField(blank=True, verbose_name='Ошибка')

    created_at = models.DateTimeField(auto_now_add=True, verbose_name='Начат')
    finished_at = models.DateTimeField(null=True, blank=True, verbose_name='Завершен')

    class Meta:
        ordering = ['-created_at']
        indexes = [
            models.Index(fields=['scenario', '-created_at'], name='experiments_scenari_0c1e2a_idx'),
            models.Index(fields=['config_hash'], name='experiments_config__7b9d41_idx'),
        ]
        verbose_name = 'Запуск сценария'
        verbose_name_plural = 'Запуски сценариев'

    def __str__(self):
        return f"{self.scenario} (seed {self.seed}, {self.get_status_display()})"
