import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from dgroups.catalog import corpus_entries
from dgroups.perms import Perm

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def corpus():
    """Every shipped catalog entry, built and classified once."""
    return list(corpus_entries())


@pytest.fixture(scope="session")
def corpus_by_key(corpus):
    return {entry.key: entry for entry in corpus}


@pytest.fixture(scope="session")
def dihedral_corpus(corpus):
    """The corpus entries carrying a regular dihedral witness."""
    return [e for e in corpus if e.classification.dihedral is not None]


def random_transitive_groups(count: int, max_degree: int = 8):
    """Deterministic stream of (seed, degree, generators), transitive only."""
    out = []
    seed = 0
    while len(out) < count:
        rng = random.Random(10_000 + seed)
        seed += 1
        degree = rng.choice([4, 5, 5, 6, 6, 7, 7, max_degree])
        gens = []
        for _ in range(rng.randint(1, 3)):
            imgs = list(range(degree))
            rng.shuffle(imgs)
            gens.append(Perm(imgs))
        reach = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    if g.images[x] not in reach:
                        reach.add(g.images[x])
                        nxt.append(g.images[x])
            frontier = nxt
        if len(reach) == degree:
            out.append((seed - 1, degree, gens))
    return out
