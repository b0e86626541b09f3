"""
Management команда для запуска приемочных проверок.

Код возврата 2, если хотя бы одно измерение вне допуска, 1 при ошибке.
"""

import json

from django.core.management.base import BaseCommand, CommandError

from experiments.acceptance import CHECKS, run_checks
from experiments.run_logger import RunAuditLogger


class Command(BaseCommand):
    help = "Запускает приемочные проверки и печатает измерения с допусками"

    def add_arguments(self, parser):
        parser.add_argument(
            "--only",
            nargs="+",
            metavar="NAME",
            help=f"Запустить только указанные проверки: {', '.join(CHECKS)}",
        )
        parser.add_argument(
            "--skip-slow",
            action="store_true",
            help="Пропустить долгие проверки",
        )
        parser.add_argument(
            "--format",
            choices=("table", "json"),
            default="table",
            help="Формат вывода",
        )

    def handle(self, *args, **options):
        unknown = [name for name in options["only"] or () if name not in CHECKS]
        if unknown:
            raise CommandError(
                f"Неизвестные проверки: {', '.join(unknown)}; доступны: {', '.join(CHECKS)}",
                returncode=1,
            )

        results = run_checks(options["only"], skip_slow=options["skip_slow"])
        if options["format"] == "json":
            self.stdout.write(json.dumps([result.to_dict() for result in results], indent=2, ensure_ascii=False))
        else:
            self.show_table(results)

        errors = [result for result in results if result.error]
        failed = [result for result in results if not result.passed and not result.error]
        for result in failed:
            RunAuditLogger.log_tolerance_failure(result.name, result.failed_count, len(result.measurements))
        if errors:
            raise CommandError(
                f"Проверки прерваны ошибкой: {', '.join(result.name for result in errors)}", returncode=1
            )
        if failed:
            raise CommandError(
                f"Вне допуска: {', '.join(result.name for result in failed)}", returncode=2
            )
        self.stdout.write(self.style.SUCCESS(f"Все проверки пройдены ({len(results)})"))

    def show_table(self, results):
        """Печатает измерения каждой проверки"""
        for result in results:
            style = self.style.SUCCESS if result.passed else self.style.ERROR
            self.stdout.write(style(f"\n{result.name}: {result.title} ({result.duration:.1f} с)"))
            if result.error:
                self.stdout.write(self.style.ERROR(f"  ошибка: {result.error}"))
            for m in result.measurements:
                mark = "OK " if m.passed else "!! "
                self.stdout.write(
                    f"  {mark}{m.name:<36} {m.value:<24.10g} ожидание {m.expected:.10g} ± {m.tolerance:.3g}"
                )
