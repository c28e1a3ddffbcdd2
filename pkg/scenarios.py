from dataclasses import dataclass

from catalog import catalog_for

# Named candidate systems of invariants, written in the expression grammar.
scenarios_dict = {
    "thm": {
        "n": 9,
        "exprs": ["@j_4", "@B_8", "@D_10", "@j_12", "@B_12", "@j_14", "@j_16"],
    },
    "thm_prime": {
        "n": 9,
        "exprs": ["@j_4", "@A_4", "@B_8", "@D_10", "@j_12", "@B_12", "@j_14", "@j_16"],
    },
    # common zeros of these are exactly the nullforms
    "nullsmall": {
        "n": 9,
        "exprs": ["@j_4", "@A_4", "@j_8", "@A_8", "@j_12", "@B_12", "@j_14", "@j_16", "@j_20", "@A_20"],
    },
    "nine_set": {
        "n": 9,
        "exprs": ["@j_4", "@B_8", "@D_8", "@C_10", "@D_10", "@j_12", "@B_12", "@j_14", "@j_16"],
    },
    "thm_minus_j16": {
        "n": 9,
        "exprs": ["@j_4", "@B_8", "@D_10", "@j_12", "@B_12", "@j_14"],
    },
    "thm_j4_power": {
        "n": 9,
        "exprs": ["@j_4", "@B_8", "@D_10", "@j_12", "@B_12", "@j_14", "(pow @j_4 4)"],
    },
    "small_2": {"n": 2, "exprs": ["@i_2"]},
    "small_3": {"n": 3, "exprs": ["@i_4"]},
    "small_6": {"n": 6, "exprs": ["@i_2", "@i_4", "@i_6", "@i_10"]},
    "small_7": {"n": 7, "exprs": ["@j_4", "@A_8", "@j_12", "@B_12", "@j_20"]},
}


@dataclass(frozen=True)
class Scenario:
    name: str
    n: int
    labels: tuple
    exprs: tuple

    @property
    def degrees(self):
        return tuple(e.degree for e in self.exprs)


def call_scenarios(name):
    """Parse a named candidate system against the catalog of its order."""
    if name not in scenarios_dict:
        raise KeyError(f"unknown candidate set {name!r}; known: {', '.join(scenarios_dict)}")
    entry = scenarios_dict[name]
    catalog = catalog_for(entry["n"])
    exprs = tuple(catalog.parse(text) for text in entry["exprs"])
    labels = tuple(text[1:] if text.startswith("@") else text for text in entry["exprs"])
    return Scenario(name, entry["n"], labels, exprs)


def custom_scenario(n, texts):
    """A candidate system from expression texts given on the command line."""
    catalog = catalog_for(n)
    exprs = tuple(catalog.parse(text) for text in texts)
    labels = tuple(text[1:] if text.startswith("@") else text for text in texts)
    return Scenario("custom", n, labels, exprs)
