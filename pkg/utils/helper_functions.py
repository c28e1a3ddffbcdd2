import numpy as np

# Helper Functions


def default_values(settings):
    """Map each setting's key to its default value."""
    return {entry["key"]: entry["value"] for entry in settings.values()}


def check_range(settings, name, value):
    entry = settings[name]
    if not entry["min_value"] <= value <= entry["max_value"]:
        raise ValueError(f"{entry['label']} must lie in [{entry['min_value']}, {entry['max_value']}], got {value}")
    return value


def seed_tuple(seed):
    if isinstance(seed, (tuple, list)):
        return tuple(int(s) for s in seed)
    return (int(seed),)


# Every random stream is default_rng((seed..., purpose, index...)).
# Purposes: 1 evaluation points, 2 candidate trees, 3 nullforms,
# 4 generic forms, 5 jacobian points.
def seeded_rng(seed, purpose, *index):
    return np.random.default_rng((*seed_tuple(seed), purpose, *index))


def parse_int_list(text):
    """``"8,12,36"`` -> [8, 12, 36]; empty text gives an empty list."""
    if text is None:
        return []
    if isinstance(text, (list, tuple)):
        return [int(v) for v in text]
    return [int(v) for v in str(text).replace(" ", "").split(",") if v]
