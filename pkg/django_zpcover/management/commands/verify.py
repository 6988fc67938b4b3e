"""
Verify a zpcf family against a cover set.

Usage:
    ```bash
    python manage.py verify family.zpcf --s Zp
    python manage.py verify family.zpcf --s 1,2 --format json
    python manage.py verify family.zpcf            # checks the header's claim
    ```

Exit status 0 when covering, 2 with the first failing pair otherwise.
"""

from django_zpcover.families import CoverSet, cover_deficit, is_covering
from django_zpcover.management.base import BaseZpCommand


class Command(BaseZpCommand):
    help = "Check that every ordered pair of a zpcf family realises every element of S"

    def add_command_arguments(self, parser):
        parser.add_argument("family", help="Path of the zpcf file")
        parser.add_argument("--s", dest="cover", help="Cover set: Zp, Zp*, or a list like 1,2 (default: the file's claim, else Zp)")
        parser.add_argument("--unordered", action="store_true", help="Check only the row-order orientation of each pair")
        parser.add_argument("--deficit", action="store_true", help="List every failing pair instead of the first")

    def run(self, **options):
        family = self.load_family(options["family"])
        cover = self.parse_cover(options["cover"], family.p) or family.claimed_cover or CoverSet.full(family.p)
        ordered = not options["unordered"]
        report = is_covering(family, cover, ordered=ordered)

        data = {"family": options["family"], "p": family.p, "ell": family.ell, "size": family.size, **report.to_dict()}
        if options["deficit"] and not report.is_covering:
            data["deficit"] = [
                {"v": entry.v_index, "w": entry.w_index, "missing": entry.missing.to_spec()}
                for entry in cover_deficit(family, cover, ordered=ordered)
            ]
            if not self.as_json:
                for entry in data["deficit"]:
                    self.stdout.write(f"  pair ({entry['v']}, {entry['w']}) misses {entry['missing']}")

        if report.is_covering:
            self.emit(data, report.describe())
        else:
            self.fail(data, report.describe())
