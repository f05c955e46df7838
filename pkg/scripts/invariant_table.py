"""Print formula and exact values of the graph invariants for a list of specs.

    python3 scripts/invariant_table.py monogenic:5,6 cyclic:6 rees:data/example.rees
"""

import argparse
import sys
from dataclasses import dataclass, field

from cyclicgraph.invariants import invariant_report
from cyclicgraph.specs import build_spec

DEFAULT_SPECS = [
    "monogenic:5,6",
    "monogenic:4,2",
    "cyclic:6",
    "leftzero:4",
    "product:(cyclic:2)x(cyclic:2)",
    "product:(leftzero:2)x(cyclic:2)",
    "product:(monogenic:3,2)x(cyclic:3)",
]


@dataclass
class TableConfig:
    specs: list = field(default_factory=lambda: list(DEFAULT_SPECS))


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("specs", nargs="*")
    args = p.parse_args(argv)
    cfg = TableConfig(args.specs) if args.specs else TableConfig()

    cols = {"n": "n", "omega_formula": "w_formula", "omega_oracle": "w_exact", "alpha_lower": "a_lower",
            "alpha_oracle": "a_exact", "alpha_upper": "a_upper", "gamma_oracle": "g_exact",
            "idempotent_count": "|E|"}
    print(f"{'spec':<36}" + "".join(f"{h:>10}" for h in cols.values()))
    mismatched = False
    for text in cfg.specs:
        report = invariant_report(build_spec(text)).to_dict()
        mismatched |= bool(report["mismatches"])
        print(f"{text:<36}" + "".join(f"{report[c]:>10}" for c in cols))
    return 1 if mismatched else 0


if __name__ == "__main__":
    sys.exit(main())
