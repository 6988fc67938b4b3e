"""
Lower and upper bounds on AAM(p, N), with an optional agnostic concatenation witness.

Usage:
    ```bash
    python manage.py bounds --p 101 --log2n 1000
    python manage.py bounds --p 7 --n 5000 --out bounds.json
    python manage.py bounds --p 7 --n 10 --family v.zpcf --k 2 --alphas 1,3 --sprime 1,2,3
    ```
"""

from django_zpcover.bounds import agnostic_witness, bound_report
from django_zpcover.families import CoverSet
from django_zpcover.management.base import BaseZpCommand
from django_zpcover.utils import dump_json


def _int_list(text: str) -> list[int]:
    return [int(token) for token in text.split(",") if token]


class Command(BaseZpCommand):
    help = "Print the lower, trivial and pipeline bounds on AAM(p, N)"

    def add_command_arguments(self, parser):
        parser.add_argument("--p", type=int, required=True, help="Odd prime modulus")
        size = parser.add_mutually_exclusive_group(required=True)
        size.add_argument("--log2n", type=float, help="log2 of the family size")
        size.add_argument("--n", type=int, help="Exact family size")
        parser.add_argument("--family", help="zpcf family V for the agnostic witness")
        parser.add_argument("--k", type=int, help="V has entries in [0, 2k-1]")
        parser.add_argument("--alphas", type=_int_list, help="Comma-separated slot multipliers")
        parser.add_argument("--sprime", help="Target set S′ of the concatenation")
        parser.add_argument("--out", help="Report JSON path")

    def run(self, **options):
        report = bound_report(options["p"], log2N=options["log2n"], N=options["n"])
        data = report.to_dict()
        text = report.table()

        if options["family"]:
            if not (options["k"] and options["alphas"] and options["sprime"]):
                self.usage_error("the agnostic witness needs --family, --k, --alphas and --sprime")
            family = self.load_family(options["family"])
            sprime = CoverSet.parse(options["sprime"], family.p)
            if sprime is None:
                self.usage_error("--sprime must not be 'none'")
            witness = agnostic_witness(family, options["k"], options["alphas"], sprime)
            data["agnostic"] = witness.to_dict()
            text += (
                f"\nagnostic        h={witness.h} in {witness.certified_exponent} slots; "
                f"size exponent bound {witness.bound:.3f}"
            )

        if not report.consistent:
            self.fail(data, text)
        if options["out"]:
            dump_json(data, options["out"])
        self.emit(data, text)
