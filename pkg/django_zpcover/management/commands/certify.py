"""
Turn a Z_p-covering family into a product-dimension certificate for Q(p, r).

Usage:
    ```bash
    python manage.py certify --family f.zpcf --r 9 --out cert.json
    python manage.py certify --check cert.json
    ```

``--check`` verifies an existing certificate and exits 2 with the first
violating vertex pair when it fails.
"""

from django_zpcover.certificates import ColoringCertificate, family_to_colorings, verify_certificate
from django_zpcover.management.base import BaseZpCommand
from django_zpcover.utils import dump_json, load_json


class Command(BaseZpCommand):
    help = "Write (or check) a coloring certificate for r disjoint p-cliques"

    def add_command_arguments(self, parser):
        parser.add_argument("--family", help="Z_p-covering zpcf source")
        parser.add_argument("--r", type=int, help="Number of cliques, at most the family size")
        parser.add_argument("--out", help="Certificate JSON path")
        parser.add_argument("--check", metavar="CERTIFICATE", help="Verify an existing certificate instead")

    def run(self, **options):
        if options["check"]:
            try:
                certificate = ColoringCertificate.from_dict(load_json(options["check"]))
            except ValueError as exc:
                self.usage_error(f"{options['check']}: {exc}")
        else:
            if not (options["family"] and options["r"] and options["out"]):
                self.usage_error("certify requires --family, --r and --out (or --check)")
            certificate = family_to_colorings(self.load_family(options["family"]), options["r"])

        verdict = verify_certificate(certificate)
        data = {"p": certificate.p, "r": certificate.r, "q": certificate.q, "ok": verdict.ok, "witness": verdict.witness}
        if not verdict.ok:
            self.fail(data, verdict.describe())
        if not options["check"]:
            dump_json(certificate.to_dict(), options["out"])
        self.emit(data, f"PD({certificate.p}, {certificate.r}) ≤ {certificate.q}: {verdict.describe()}")
