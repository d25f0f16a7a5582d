"""Seeded random generators shared by the test modules."""

import random

from plspines.core import Complex, SimplicialMap, from_facets


def random_complex(rng: random.Random, max_vertices: int = 8, max_facets: int = 6,
                   max_facet_size: int = 4) -> Complex:
    """A small random complex: a few random facets on a small vertex pool."""
    n = rng.randint(1, max_vertices)
    pool = [f"w{i}" for i in range(n)]
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        k = rng.randint(1, min(max_facet_size, n))
        facets.append(rng.sample(pool, k))
    return from_facets(facets)


def random_pure_complex(rng: random.Random, dim: int, n_vertices: int,
                        n_facets: int) -> Complex:
    """A random pure complex of the given dimension."""
    pool = [f"w{i}" for i in range(n_vertices)]
    facets = set()
    guard = 0
    while len(facets) < n_facets and guard < 50 * n_facets:
        guard += 1
        facets.add(tuple(sorted(rng.sample(pool, dim + 1))))
    return from_facets(sorted(facets))


def random_simplicial_map(rng: random.Random, max_source_faces: int = 40) -> SimplicialMap:
    """A random valid simplicial map: target is generated from the image."""
    while True:
        src = random_complex(rng)
        if len(src) <= max_source_faces:
            break
    m = rng.randint(1, 5)
    labels = [f"z{i}" for i in range(m)]
    assign = {v: rng.choice(labels) for v in src.vertices}
    image_facets = [sorted({assign[v] for v in f}) for f in src.facets]
    tgt = from_facets(image_facets)
    return SimplicialMap(src, tgt, assign)


def random_partition_blocks(rng: random.Random, labels, max_classes: int | None = None):
    """Random set partition of the labels."""
    labels = list(labels)
    k = rng.randint(1, max_classes or len(labels))
    blocks: list[list[str]] = [[] for _ in range(k)]
    for v in labels:
        blocks[rng.randrange(k)].append(v)
    return [b for b in blocks if b]
