import logging

from algebra import PrimeField
from forms import BinaryForm
from utils.cache import open_cache
from utils.helper_functions import seeded_rng, seed_tuple

LOGGER = logging.getLogger(__name__)


class PointSample(list):
    """The first ``len(self)`` forms of a point stream, tagged with the stream's origin."""

    origin = None


class PointStream:
    """Seeded random forms of order n over F_p; point i comes from default_rng((seed, 1, i))."""

    def __init__(self, n, ring, seed):
        self.n = n
        self.ring = ring
        self.seed = seed
        self.origin = (seed_tuple(seed), ring.p, n)
        self._forms = []

    def point(self, i):
        rng = seeded_rng(self.seed, 1, i)
        values = rng.integers(0, self.ring.p, self.n + 1)
        return BinaryForm(self.n, self.ring.vector(values), self.ring)

    def take(self, count, start=0):
        while len(self._forms) < start + count:
            self._forms.append(self.point(len(self._forms)))
        sample = PointSample(self._forms[start:start + count])
        if start == 0:
            sample.origin = self.origin
        return sample


def build_datablock(config, n=None):
    """Initial datablock of a campaign: configuration, point stream, cache and empty results."""
    n = config.n if n is None else n
    ring = PrimeField(config.prime)
    datablock = {}
    datablock["config"] = config
    datablock["n"] = n
    datablock["ring"] = ring
    datablock["points"] = PointStream(n, ring, config.seed)
    datablock["cache"] = open_cache(config, n)
    datablock["basis"] = []
    datablock["dm"] = {}
    datablock["hsop"] = {}
    LOGGER.debug("datablock for n=%d over GF(%d), seed %s", n, config.prime, config.seed)
    return datablock
