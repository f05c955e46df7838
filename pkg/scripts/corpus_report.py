"""Run every theorem check over the fixed test corpus and tally by theorem.

    python3 scripts/corpus_report.py --seed 7 --rees-count 25 --jobs 4
"""

import argparse
import sys
from collections import Counter
from dataclasses import dataclass

from cyclicgraph.verify import acceptance_corpus, run


@dataclass
class CorpusConfig:
    seed: int = 7
    rees_count: int = 25
    jobs: int = 1
    show_failures: int = 5


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=CorpusConfig.seed)
    p.add_argument("--rees-count", type=int, default=CorpusConfig.rees_count)
    p.add_argument("--jobs", type=int, default=CorpusConfig.jobs)
    p.add_argument("--show-failures", type=int, default=CorpusConfig.show_failures)
    cfg = CorpusConfig(**vars(p.parse_args(argv)))

    corpus = acceptance_corpus(cfg.seed, cfg.rees_count)
    passed, failed, diag = Counter(), Counter(), Counter()
    examples = []
    for o in run(corpus, jobs=cfg.jobs):
        if o.passed:
            passed[o.theorem] += 1
        elif o.diagnostic:
            diag[o.theorem] += 1
        else:
            failed[o.theorem] += 1
            examples.append(o)

    print(f"corpus: {len(corpus)} semigroups")
    print(f"{'theorem':<28}{'pass':>6}{'fail':>6}{'diag':>6}")
    for name in sorted(set(passed) | set(failed) | set(diag)):
        print(f"{name:<28}{passed[name]:>6}{failed[name]:>6}{diag[name]:>6}")
    for o in examples[:cfg.show_failures]:
        print(o.to_json())
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
