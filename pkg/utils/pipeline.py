import logging
import time

LOGGER = logging.getLogger(__name__)


class Pipeline():
    """Ordered list of steps, each a function ``func(datablock, **params) -> datablock``."""

    def __init__(self, dict=None) -> None:
        self.steps = []
        if dict is not None:
            self.datablock = dict
        else:
            self.datablock = {}

    def add_step(self, func, params=None):
        self.steps.append((func, params or {}))

    def run(self, verbose=False):
        level = logging.INFO if verbose else logging.DEBUG
        LOGGER.log(level, "Running pipeline with %d steps", len(self.steps))

        start = time.time()

        for func, params in self.steps:
            step_start = time.time()
            self.datablock = func(self.datablock, **params)
            LOGGER.debug("%s(%s) took %d ms", func.__name__,
                         ", ".join(f"{k}={v}" for k, v in params.items()),
                         round((time.time() - step_start) * 1000))
        end = time.time()

        LOGGER.log(level, "Total time: %d ms", round((end - start) * 1000))
        return self.datablock


def datablock_write(datablock, path, value):
    """Write ``value`` at the nested ``path`` of a plain datablock dictionary."""
    current = datablock
    for key in path[:-1]:
        current = current.setdefault(key, {})
    current[path[-1]] = value
    return datablock
