"""
Export the partition matroids of a verified certificate and check that their
intersection is exactly the family of within-clique vertex sets.

Usage:
    ```bash
    python manage.py matroids --certificate cert.json --out matroids.json
    python manage.py matroids --certificate cert.json --r 2 --mode exhaustive
    ```
"""

from django_zpcover.certificates import (
    ColoringCertificate,
    export_partition_matroids,
    verify_matroid_intersection_equals_cliques,
)
from django_zpcover.management.base import BaseZpCommand
from django_zpcover.utils import dump_json, load_json


class Command(BaseZpCommand):
    help = "Export partition matroids from a certificate and check the clique intersection"

    def add_command_arguments(self, parser):
        parser.add_argument("--certificate", required=True, help="Certificate JSON from certify")
        parser.add_argument("--r", type=int, help="Restrict to the first r cliques")
        parser.add_argument("--mode", choices=("auto", "exhaustive", "sampled"), default="auto")
        parser.add_argument("--out", help="Matroid export JSON path")

    def run(self, **options):
        try:
            certificate = ColoringCertificate.from_dict(load_json(options["certificate"]))
        except ValueError as exc:
            self.usage_error(f"{options['certificate']}: {exc}")
        r = options["r"]
        if r is not None:
            if not 1 <= r <= certificate.r:
                self.usage_error(f"--r must lie in [1, {certificate.r}]")
            certificate = ColoringCertificate(certificate.p, r, certificate.colorings[:, :r, :])

        export = export_partition_matroids(certificate)
        check = verify_matroid_intersection_equals_cliques(export, mode=options["mode"])
        data = {"q": export.q, "elements": export.elements, "mode": check.mode, "checked": check.checked, "ok": check.ok}
        if not check.ok:
            data["counterexample"] = list(check.counterexample)
            self.fail(data, f"vertex set {list(check.counterexample)} breaks the clique intersection")
        if options["out"]:
            dump_json(export.to_dict(), options["out"])
        self.emit(data, f"{export.q} partition matroids over {export.elements} elements; intersection = cliques ({check.mode}, {check.checked} subsets)")
