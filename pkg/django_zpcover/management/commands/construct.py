"""
Build a covering family, verify it and write it as zpcf plus a JSON sidecar.

Usage:
    ```bash
    python manage.py construct base-p --p 3 --n 9 --out base3.zpcf
    python manage.py construct pipeline --p 7 --n 9 --seed 1 --out f3.zpcf
    python manage.py construct aa --p 3 --ell0 2 --m 2 --zmax 1 --out aa3.zpcf
    ```

The sidecar (``<out>.json``) holds the construction statistics: the
PipelineStats for ``pipeline``, the IterationTrace for ``aa`` and the
coverage report for ``base-p``.
"""

from django_zpcover.balanced import aa_iterate
from django_zpcover.constructions import BASES, base_p_family, build_upperbound_family
from django_zpcover.families import CoverSet, append_zeros, verify_or_raise
from django_zpcover.management.base import BaseZpCommand

KINDS = ("base-p", "pipeline", "aa")


class Command(BaseZpCommand):
    help = "Construct a covering family (base-p, pipeline or aa), verify it and write it"

    def add_command_arguments(self, parser):
        parser.add_argument("kind", choices=KINDS, help="Construction to run")
        parser.add_argument("--p", type=int, required=True, help="Prime modulus")
        parser.add_argument("--n", type=int, help="Target family size (base-p, pipeline)")
        parser.add_argument("--out", help="Output zpcf path (default: <kind>-p<p>.zpcf)")
        parser.add_argument("--base", choices=BASES, default="base_p", help="Pipeline first stage")
        parser.add_argument("--k", type=int, help="Override the pipeline's inner prime")
        parser.add_argument("--minimal", action="store_true", help="Short bit lift: ceil(log2 k)+1 copies")
        parser.add_argument("--ell0", type=int, help="Base length of the aa iteration")
        parser.add_argument("--m", type=int, default=2, help="Walk length of the aa step boost (default: 2)")
        parser.add_argument("--zmax", type=int, default=1, help="Number of aa steps (default: 1)")
        parser.add_argument(
            "--mode",
            choices=("exhaustive", "sampled", "auto"),
            default="auto",
            help="Star partition mode of the aa iteration",
        )

    def run(self, **options):
        kind, p = options["kind"], options["p"]
        if kind in ("base-p", "pipeline") and options["n"] is None:
            self.usage_error(f"construct {kind} requires --n")
        if kind == "aa" and options["ell0"] is None:
            self.usage_error("construct aa requires --ell0")

        if kind == "base-p":
            family = base_p_family(p, options["n"])
            report = verify_or_raise(family, stage="base-p")
            stats = {"kind": kind, "p": p, "N": options["n"], "ell": family.ell, "report": report.to_dict()}
        elif kind == "pipeline":
            family, pipeline = build_upperbound_family(
                p, options["n"], base=options["base"], k=options["k"], minimal=options["minimal"]
            )
            stats = {"kind": kind, **pipeline.to_dict()}
        else:
            family, trace = aa_iterate(p, options["ell0"], m=options["m"], z_max=options["zmax"], mode=options["mode"])
            if CoverSet.nonzero(p) <= family.claimed_cover:
                family = append_zeros(family, 1)
                trace.padded = True
            report = verify_or_raise(family, stage="aa")
            stats = {"kind": kind, **trace.to_dict(), "report": report.to_dict()}

        out = options["out"] or f"{kind}-p{p}.zpcf"
        path = self.save_family(family, out, sidecar=stats, comments=[f"construct {kind} seed={self.config.seed}"])
        self.emit(
            {"path": str(path), "p": family.p, "ell": family.ell, "size": family.size, "cover": family.claimed_cover.to_spec()},
            f"Wrote {family} to {path} (verified {family.claimed_cover.to_spec()})",
        )
