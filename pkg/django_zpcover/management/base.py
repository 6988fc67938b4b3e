"""
Shared base class of the zpcover management commands.

Every command accepts the global flags ``--seed``, ``--threads``, ``--budget``
and ``--format`` and runs its body under a RunConfig built from them (on top
of ``ZPCOVER_CONFIG``).

Exit codes:
    0: success; every produced artefact was verified
    1: usage, parse or domain error
    2: a verification failed; the failing report is printed
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Optional

from django.core.management.base import BaseCommand, CommandError

from django_zpcover.constants import constants
from django_zpcover.exceptions import CertificateError, CoverageError, ZpCoverError
from django_zpcover.families import CoverSet, CoveringFamily, read_family, write_family
from django_zpcover.run_context import RunConfig, RunContext
from django_zpcover.utils import dump_json, to_json

VERIFICATION_FAILED = 2
USAGE_ERROR = 1


class BaseZpCommand(BaseCommand):
    """
    Subclasses implement ``add_command_arguments`` and ``run``.

    ``run`` may return nothing; library errors are turned into CommandError
    with the exit code of their class.
    """

    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        default_error = parser.error

        def error(message):
            if parser.called_from_command_line:
                parser.print_usage(sys.stderr)
                parser.exit(USAGE_ERROR, f"{parser.prog}: error: {message}\n")
            default_error(message)

        parser.error = error
        return parser

    def add_arguments(self, parser):
        parser.add_argument("--seed", type=int, help="Seed for every randomised step (default: ZPCOVER_CONFIG SEED)")
        parser.add_argument("--threads", type=int, help="Worker threads for verification and sampling")
        parser.add_argument("--budget", type=int, help="Memory budget in bytes for materialised families")
        parser.add_argument(
            "--format",
            choices=constants.OUTPUT_FORMATS,
            help="Output format (default: ZPCOVER_CONFIG OUTPUT_FORMAT)",
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        try:
            config = RunConfig.from_settings().replace(
                seed=options.get("seed"),
                threads=options.get("threads"),
                memory_budget=options.get("budget"),
                output_format=options.get("format"),
            )
            with RunContext.use_config(config):
                self.config = config
                self.run(**options)
        except CoverageError as exc:
            self.stderr.write(exc.report.describe())
            raise CommandError(str(exc), returncode=VERIFICATION_FAILED) from exc
        except CertificateError as exc:
            code = VERIFICATION_FAILED if exc.verdict is not None else USAGE_ERROR
            raise CommandError(str(exc), returncode=code) from exc
        except ZpCoverError as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR) from exc
        except OSError as exc:
            raise CommandError(f"{exc.filename or ''}: {exc.strerror or exc}", returncode=USAGE_ERROR) from exc

    def run(self, **options):
        raise NotImplementedError

    def usage_error(self, message: str):
        raise CommandError(message, returncode=USAGE_ERROR)

    # Output helpers
    # ==============

    @property
    def as_json(self) -> bool:
        return self.config.output_format == "json"

    def emit(self, data: dict, text: str) -> None:
        """Write ``data`` as JSON or ``text`` as a success line, per ``--format``."""
        if self.as_json:
            self.stdout.write(to_json(data), ending="")
        else:
            self.stdout.write(self.style.SUCCESS(text))

    def fail(self, data: dict, text: str) -> None:
        """Report a failed verification and exit with code 2."""
        if self.as_json:
            self.stdout.write(to_json(data), ending="")
        else:
            self.stdout.write(self.style.ERROR(text))
        raise CommandError(text, returncode=VERIFICATION_FAILED)

    # File helpers
    # ============

    def load_family(self, path: str) -> CoveringFamily:
        return read_family(path)

    def save_family(self, family: CoveringFamily, out: str, sidecar: Optional[dict] = None, comments=()) -> Path:
        """Write ``out`` and, when given, the JSON sidecar next to it (``.json`` suffix)."""
        path = write_family(family, out, comments=comments)
        if sidecar is not None:
            dump_json(sidecar, path.with_suffix(".json"))
        return path

    @staticmethod
    def parse_cover(spec: Optional[str], p: int) -> Optional[CoverSet]:
        return CoverSet.parse(spec, p) if spec is not None else None
