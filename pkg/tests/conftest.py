import random

from hypothesis import HealthCheck, settings

from splitalg import MonicPoly, SplitAlgebra, construct_ring

settings.register_profile(
    "splitalg", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("splitalg")


def ring(spec):
    return construct_ring(spec)


def algebra(spec, poly):
    R = construct_ring(spec)
    return SplitAlgebra(R, MonicPoly.parse(R, poly))


def random_monic(R, n, rng):
    return MonicPoly(R, [R.random(rng) for _ in range(n)] + [R.one])


def random_element(alg, rng):
    return alg.wrap(alg.random(rng))


def seeded(seed):
    return random.Random(seed)
