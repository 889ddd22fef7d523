import numpy as np

from widthlab.rng import DirectionStream


def sweep(dimension, n=10_000, seed=12345):
    """Seeded directions used by the equivalence sweeps."""
    return DirectionStream(dimension, seed).block(0, n)


def random_rotation(dimension, rng):
    q, r = np.linalg.qr(rng.normal(size=(dimension, dimension)))
    return q * np.sign(np.diag(r))


def exact_min_width(P):
    """Minimum raw width by enumerating every candidate critical direction.

    The minimum is attained normal to a facet or (3D) perpendicular to two
    edges; all vertex triples and all pairs of vertex segments cover both.
    """
    import itertools

    V = P.vertices
    cands = []
    if P.dimension == 2:
        for i, j in itertools.combinations(range(len(V)), 2):
            d = V[j] - V[i]
            cands.append([-d[1], d[0]])
    else:
        segs = [V[j] - V[i] for i, j in itertools.combinations(range(len(V)), 2)]
        for a, b in itertools.combinations(segs, 2):
            cands.append(np.cross(a, b))
    C = np.array(cands)
    norms = np.linalg.norm(C, axis=1)
    C = C[norms > 1e-9] / norms[norms > 1e-9, None]
    p = V @ C.T
    return float((p.max(axis=0) - p.min(axis=0)).min())
