"""
Find (or check) a scaling set S with [0, k−1]·S = Z_p.

Usage:
    ```bash
    python manage.py scaleset --p 7 --k 4 --seed 3
    python manage.py scaleset --p 7 --k 4 --check 2,5
    ```

The console script also accepts the spelling ``scale-set``.
"""

from django_zpcover.constructions import ScalingSet, find_scaling_set, is_scaling_set, scaling_set_bound
from django_zpcover.management.base import BaseZpCommand
from django_zpcover.utils import dump_json
from django_zpcover.validators import validate_prime


class Command(BaseZpCommand):
    help = "Find a scaling set for (p, k), or check a given one"

    def add_command_arguments(self, parser):
        parser.add_argument("--p", type=int, required=True, help="Prime modulus")
        parser.add_argument("--k", type=int, required=True, help="Interval width, 2 ≤ k ≤ p")
        parser.add_argument("--check", help="Comma-separated multipliers to check instead of searching")
        parser.add_argument("--out", help="Write the scaling set as JSON")

    def run(self, **options):
        p, k = validate_prime(options["p"]), options["k"]
        if not 2 <= k <= p:
            self.usage_error(f"k must satisfy 2 ≤ k ≤ p, got k={k}, p={p}")
        if options["check"] is not None:
            try:
                elements = tuple(sorted({int(token) % p for token in options["check"].split(",")}))
            except ValueError:
                self.usage_error(f"--check expects integers separated by commas, got {options['check']!r}")
            data = {"p": p, "k": k, "elements": list(elements), "valid": is_scaling_set(p, k, elements)}
            text = f"{list(elements)} scales [0, {k - 1}] onto Z_{p}"
            if not data["valid"]:
                self.fail(data, f"{list(elements)} does not scale [0, {k - 1}] onto Z_{p}")
            scaling = ScalingSet(p=p, k=k, elements=elements)
        else:
            scaling = find_scaling_set(p, k)
            data = scaling.to_dict()
            source = "greedy fallback" if scaling.greedy else f"attempt {scaling.attempts}"
            text = f"S = {list(scaling.elements)} (|S| = {len(scaling)}, bound {scaling_set_bound(p, k)}, {source})"

        if options["out"]:
            dump_json(scaling.to_dict(), options["out"])
        self.emit(data, text)
