"""
Apply one boost to a zpcf family, verify the result and write it.

Usage:
    ```bash
    python manage.py boost --family f.zpcf --op concat --z 2 --out f2.zpcf
    python manage.py boost --family f.zpcf --op scale --s 2 --out fs.zpcf
    python manage.py boost --family lifted.zpcf --op scale-set --k 3 --scaling 1,2 --out f3.zpcf
    ```

Without ``--scaling`` the scale-set boost draws a scaling set for (p, k).
"""

from django_zpcover.constructions import ScalingSet, concat_boost, find_scaling_set, scale_boost, scale_cover_boost
from django_zpcover.families import covered_set, verify_or_raise
from django_zpcover.management.base import BaseZpCommand

OPS = ("concat", "scale", "scale-set")


class Command(BaseZpCommand):
    help = "Concatenation, scaling or scaling-set boost of a family"

    def add_command_arguments(self, parser):
        parser.add_argument("--family", required=True, help="Source zpcf file")
        parser.add_argument("--op", choices=OPS, required=True, help="Boost to apply")
        parser.add_argument("--out", required=True, help="Output zpcf path")
        parser.add_argument("--z", type=int, default=2, help="Concatenation power (concat)")
        parser.add_argument("--s", type=int, help="Nonzero multiplier (scale)")
        parser.add_argument("--k", type=int, help="Interval width the source covers (scale-set)")
        parser.add_argument("--scaling", help="Comma-separated scaling set (scale-set)")

    def run(self, **options):
        family = self.load_family(options["family"])
        if family.claimed_cover is None:
            family = family.with_claim(covered_set(family))
        op = options["op"]

        if op == "concat":
            result = concat_boost(family, options["z"])
            arg = options["z"]
        elif op == "scale":
            if options["s"] is None:
                self.usage_error("--op scale requires --s")
            result = scale_boost(family, options["s"])
            arg = options["s"]
        else:
            if options["k"] is None:
                self.usage_error("--op scale-set requires --k")
            if options["scaling"]:
                try:
                    elements = tuple(sorted({int(x) % family.p for x in options["scaling"].split(",")} - {0}))
                except ValueError:
                    self.usage_error(f"--scaling expects integers separated by commas, got {options['scaling']!r}")
                scaling = ScalingSet(p=family.p, k=options["k"], elements=elements)
            else:
                scaling = find_scaling_set(family.p, options["k"])
            result = scale_cover_boost(family, scaling)
            arg = list(scaling.elements)

        report = verify_or_raise(result, stage=op)
        stats = {"op": op, "arg": arg, "size": result.size, "ell": result.ell, "report": report.to_dict()}
        path = self.save_family(result, options["out"], sidecar=stats, comments=[f"boost {op} {arg}"])
        self.emit({"path": str(path), **stats}, f"Wrote {result} to {path} (verified {result.claimed_cover.to_spec()})")
