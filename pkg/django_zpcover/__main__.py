"""
Standalone entry point: ``zpcover <command> [options]`` or ``python -m django_zpcover``.

Runs the management commands without a Django project. Unless
``DJANGO_SETTINGS_MODULE`` names one, a minimal settings object is set up with
only this app installed.
"""

import os
import sys

import django
from django.conf import settings
from django.core.management import execute_from_command_line

ALIASES = {"scale-set": "scaleset"}


def main(argv=None) -> None:
    argv = list(sys.argv if argv is None else argv)
    if not settings.configured and "DJANGO_SETTINGS_MODULE" not in os.environ:
        settings.configure(INSTALLED_APPS=["django_zpcover"])
        django.setup()
    if len(argv) > 1:
        argv[1] = ALIASES.get(argv[1], argv[1])
    execute_from_command_line(argv)


if __name__ == "__main__":
    main()
