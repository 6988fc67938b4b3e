"""
Prophet versus optimal gambler on r disjoint p-cliques of Bernoulli(1/p) values.

Usage:
    ```bash
    python manage.py prophet --p 3 --r 27
    python manage.py prophet --p 3 --r 27 --mc-samples 100000 --seed 7
    python manage.py prophet --p 5 --r 3125 --mc-only --mc-samples 20000
    ```

Prints the table p, r, prophet, gambler, ratio, bound, pass/fail. When
r = p^p the ratio must reach (1−1/e)·p/2; a failed check exits with 2.
"""

from django_zpcover.management.base import BaseZpCommand
from django_zpcover.prophet import ProphetInstance, gap_report, simulate_mc
from django_zpcover.utils import dump_json


class Command(BaseZpCommand):
    help = "Exact prophet and gambler values, ratio and bound check for the clique instance"

    def add_command_arguments(self, parser):
        parser.add_argument("--p", type=int, required=True, help="Clique size, at least 2")
        parser.add_argument("--r", type=int, required=True, help="Number of cliques")
        parser.add_argument("--mc-samples", type=int, default=0, help="Also run a Monte Carlo cross-check")
        parser.add_argument("--mc-only", action="store_true", help="Skip the exact computations")
        parser.add_argument("--out", help="Report JSON path")

    def run(self, **options):
        p, r = options["p"], options["r"]
        if options["mc_only"]:
            prophet, gambler = simulate_mc(ProphetInstance(p, r), options["mc_samples"] or None)
            data = {"p": p, "r": r, "prophet_mc": prophet.to_dict(), "gambler_mc": gambler.to_dict()}
            text = (
                f"p={p} r={r} prophet ≈ {prophet.mean:.6f} ± {prophet.half_width:.6f}, "
                f"gambler ≈ {gambler.mean:.6f} ± {gambler.half_width:.6f} ({prophet.samples} samples)"
            )
        else:
            report = gap_report(p, r, mc_samples=options["mc_samples"])
            data = report.to_dict()
            text = report.table()
            if report.prophet_mc is not None:
                text += (
                    f"\nMonte Carlo: prophet {report.prophet_mc.mean:.6f} ± {report.prophet_mc.half_width:.6f}, "
                    f"gambler {report.gambler_mc.mean:.6f} ± {report.gambler_mc.half_width:.6f}"
                )
            if not report.passed:
                self.fail(data, text)

        if options["out"]:
            dump_json(data, options["out"])
        self.emit(data, text)
