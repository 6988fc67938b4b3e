"""
Z_p-covering family built only from scaling and concatenation boosts.

Usage:
    ```bash
    python manage.py double --p 5 --n 100 --seed 2 --out doubled.zpcf
    ```
"""

from django_zpcover.constructions import double_boost_family
from django_zpcover.families import verify_or_raise
from django_zpcover.management.base import BaseZpCommand


class Command(BaseZpCommand):
    help = "Build a Z_p-covering family by alternating scaling and squaring boosts"

    def add_command_arguments(self, parser):
        parser.add_argument("--p", type=int, required=True, help="Odd prime modulus")
        parser.add_argument("--n", type=int, required=True, help="Target family size")
        parser.add_argument("--out", required=True, help="Output zpcf path")

    def run(self, **options):
        family, trace = double_boost_family(options["p"], options["n"])
        report = verify_or_raise(family, stage="double")
        stats = {**trace.to_dict(), "report": report.to_dict()}
        path = self.save_family(family, options["out"], sidecar=stats, comments=[f"double seed={trace.seed}"])
        self.emit({"path": str(path), "steps": len(trace.steps), "size": family.size, "ell": family.ell}, f"Wrote {family} to {path} in {len(trace.steps)} steps")
