"""
Bit-lift a Z_k-covering zpcf family into a [0, k−1]-covering family over Z_p.

Usage:
    ```bash
    python manage.py lift --family base3.zpcf --p 7 --out lifted.zpcf
    ```
"""

from django_zpcover.constructions import bit_lift
from django_zpcover.families import verify_or_raise
from django_zpcover.management.base import BaseZpCommand


class Command(BaseZpCommand):
    help = "Bit-lift a Z_k-covering family into Z_p"

    def add_command_arguments(self, parser):
        parser.add_argument("--family", required=True, help="Z_k-covering zpcf source")
        parser.add_argument("--p", type=int, required=True, help="Target prime with 2k − 1 ≤ p − 1")
        parser.add_argument("--out", required=True, help="Output zpcf path")
        parser.add_argument("--minimal", action="store_true", help="Emit ceil(log2 k)+1 copies instead of 2·ceil(log2 k)")

    def run(self, **options):
        source = self.load_family(options["family"])
        lifted = bit_lift(source, options["p"], minimal=options["minimal"])
        report = verify_or_raise(lifted, stage="lift")
        stats = {
            "k": source.p,
            "p": lifted.p,
            "ell1": source.ell,
            "ell2": lifted.ell,
            "minimal": options["minimal"],
            "report": report.to_dict(),
        }
        path = self.save_family(lifted, options["out"], sidecar=stats, comments=[f"lift k={source.p}"])
        self.emit({"path": str(path), **stats}, f"Wrote {lifted} to {path} (verified [0, {source.p - 1}])")
