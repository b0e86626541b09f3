"""
Management команда для запуска сценария и записи CSV с результатами.
"""

import logging

from django.core.exceptions import ImproperlyConfigured
from django.core.management.base import BaseCommand, CommandError

from core.exceptions import DiamondSimError
from experiments.runner import resolve_run, run_scenario
from experiments.scenarios import REGISTRY

logger = logging.getLogger('diamondsim.experiments')


class Command(BaseCommand):
    help = "Запускает сценарий и записывает результат в CSV с JSON-заголовком"

    def add_arguments(self, parser):
        parser.add_argument(
            "scenario",
            nargs="?",
            help=f"Идентификатор сценария: {', '.join(sorted(REGISTRY))}",
        )
        parser.add_argument("--config", help="Файл конфигурации key=value")
        parser.add_argument("--seed", type=int, help="Главный seed (64-битное беззнаковое)")
        parser.add_argument("--workers", type=int, help="Число процессов для точек свипа")
        parser.add_argument("--out", help="Путь к выходному CSV")
        parser.add_argument(
            "--from-header",
            help="Повторить запуск по заголовку ранее записанного CSV",
        )

    def handle(self, *args, **options):
        try:
            config = resolve_run(
                options["scenario"],
                config_path=options["config"],
                from_header=options["from_header"],
                seed=options["seed"],
                workers=options["workers"],
                out=options["out"],
            )
            if options["verbosity"] > 1:
                self.stdout.write(f"Конфигурация: {config.canonical()}")
            result, path = run_scenario(config)
        except (DiamondSimError, ImproperlyConfigured) as e:
            raise CommandError(str(e), returncode=1) from e
        except Exception as e:
            logger.exception(f"Непредвиденная ошибка сценария {options['scenario']}")
            raise CommandError(f"{type(e).__name__}: {e}", returncode=1) from e

        self.stdout.write(
            self.style.SUCCESS(
                f"{config.scenario}: {len(result)} строк записано в {path} (хеш {config.config_hash[:12]})"
            )
        )
