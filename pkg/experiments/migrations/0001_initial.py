# Generated by Django 5.2.5 on 2026-10-17 12:00

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='ScenarioRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('scenario', models.CharField(max_length=64, verbose_name='Сценарий')),
                ('seed', models.CharField(max_length=20, verbose_name='Seed')),
                ('config_hash', models.CharField(max_length=64, verbose_name='Хеш конфигурации')),
                ('workers', models.PositiveIntegerField(default=1, verbose_name='Воркеры')),
                ('output_path', models.CharField(blank=True, max_length=500, verbose_name='Выходной файл')),
                ('status', models.CharField(choices=[('running', 'Выполняется'), ('succeeded', 'Завершен'), ('failed', 'Ошибка')], default='running', max_length=16, verbose_name='Статус')),
                ('row_count', models.PositiveIntegerField(blank=True, null=True, verbose_name='Строк')),
                ('duration', models.FloatField(blank=True, null=True, verbose_name='Длительность, с')),
                ('error', models.TextField(blank=True, verbose_name='Ошибка')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Начат')),
                ('finished_at', models.DateTimeField(blank=True, null=True, verbose_name='Завершен')),
            ],
            options={
                'verbose_name': 'Запуск сценария',
                'verbose_name_plural': 'Запуски сценариев',
                'ordering': ['-created_at'],
                'indexes': [models.Index(fields=['scenario', '-created_at'], name='experiments_scenari_0c1e2a_idx'), models.Index(fields=['config_hash'], name='experiments_config__7b9d41_idx')],
            },
        ),
    ]
