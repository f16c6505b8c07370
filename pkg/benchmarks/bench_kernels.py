"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on the same inputs in both implementations; results are
checked for equality before timing.
"""

import argparse
import random
import sys
import timeit

from posbraid import _kernels_py as pure
from posbraid.braid import BraidWord
from posbraid.pattern import brick_diagram
from posbraid.seifert import seifert_matrix

try:
    from posbraid import _kernels as compiled
except ImportError:
    compiled = None


def workloads(rng):
    words = []
    while len(words) < 300:
        n = rng.randint(3, 6)
        letters = [rng.randint(1, n - 1) for _ in range(rng.randint(12, 18))]
        if all(letters.count(g) >= 2 for g in range(1, n)):
            words.append(BraidWord.from_letters(letters, n))
    mats = [seifert_matrix(w).as_lists() for w in words]
    syms = [[[A[i][j] + A[j][i] for j in range(len(A))] for i in range(len(A))] for A in mats]
    bricks = []
    for w in words:
        bd = brick_diagram(w)
        bricks.append(([b.column for b in bd], [b.top for b in bd], [b.bottom for b in bd]))
    pats = [[g for g in w.letters if rng.random() < 0.6] or [w.letters[0]] for w in words]
    return {
        "cycle_count": lambda m: [m.cycle_count(w.letters, w.strands) for w in words],
        "linking_edges": lambda m: [sorted(m.linking_edges(*b)) for b in bricks],
        "cyclic_subsequence": lambda m: [m.cyclic_subsequence(w.letters, p, w.crossings)
                                         for w, p in zip(words, pats)],
        "signature": lambda m: [m.signature(S) for S in syms],
        "alexander_det": lambda m: [list(m.alexander_det(A)) for A in mats],
        "census_words(3, 11)": lambda m: list(m.census_words(3, 11, True)),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if compiled is None:
        print("compiled extension not built; nothing to compare")
        return 1
    rng = random.Random(1)
    print(f"{'kernel':<22}{'python (ms)':>14}{'compiled (ms)':>16}{'speedup':>10}")
    for name, job in workloads(rng).items():
        if job(pure) != job(compiled):
            print(f"{name}: results differ")
            return 1
        tp = min(timeit.repeat(lambda: job(pure), number=1, repeat=args.repeat)) * 1e3
        tc = min(timeit.repeat(lambda: job(compiled), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<22}{tp:>14.2f}{tc:>16.2f}{tp / tc:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
