"""Named covariants and invariants of binary forms of order 2, 3, 6, 7 and 9.

Each catalog is a dictionary of definitions in the grammar of ``forms``:
``name: (expression, order, degree)``. The declared order and degree are
checked against the metadata recomputed from the expression.
"""
import logging
from collections.abc import Mapping
from dataclasses import dataclass

from forms import CovariantExpr, expand, parse_expr

LOGGER = logging.getLogger(__name__)

# Forms of order 9. Covariants first, then invariants; later entries may
# refer to earlier ones with @name.
nonic_definitions = {
    "l": ("(tr f f 8)", 2, 2),
    "q": ("(tr f f 6)", 6, 2),
    "r": ("(tr @q f 6)", 3, 3),
    "p": ("(tr f @l 2)", 7, 3),
    "u": ("(tr f f 2)", 14, 2),
    "s": ("(tr f f 4)", 10, 2),
    "k_q": ("(tr @q @q 4)", 4, 4),
    "m_q": ("(tr @q @k_q 4)", 2, 6),
    "l_p": ("(tr @p @p 6)", 2, 6),
    "q_p": ("(tr @p @p 4)", 6, 6),
    "p_p": ("(tr @p @l_p 2)", 5, 9),
    "k_qp": ("(tr @q_p @q_p 4)", 4, 12),
    "m_qp": ("(tr @q_p @k_qp 4)", 2, 18),
    "j_4": ("(tr @l @l 2)", 0, 4),
    "A_4": ("(tr @q @q 6)", 0, 4),
    "j_8": ("(tr @k_q @k_q 4)", 0, 8),
    "A_8": ("(tr (tr @p @p 6) @l 2)", 0, 8),
    "B_8": ("(tr @q (pow @r 2) 6)", 0, 8),
    "C_8": ("(tr (tr @q @q 4) (pow @l 2) 4)", 0, 8),
    "D_8": ("(tr (tr @q @q 4) (tr @q @s 6) 4)", 0, 8),
    "j_10": ("(tr (tr @p (tr f @q 6) 3) (tr @q @q 4) 4)", 0, 10),
    "A_10": ("(tr (tr @p (tr f @q 6) 3) (pow @l 2) 4)", 0, 10),
    "B_10": ("(tr (tr (tr f @q 6) (tr f @s 6) 3) (tr @s @s 8) 4)", 0, 10),
    "C_10": ("(tr (tr (tr (tr @s @s 6) f 6) (tr @l f 2) 3) @q 6)", 0, 10),
    "D_10": ("(tr (tr (tr (tr @u @u 10) f 6) (tr @q f 2) 5) @q 6)", 0, 10),
    "j_12": ("(tr (tr @k_q @k_q 2) @k_q 4)", 0, 12),
    "A_12": ("(tr @l_p @l_p 2)", 0, 12),
    "B_12": ("(tr (tr @p @p 4) (pow @l 3) 6)", 0, 12),
    "C_12": ("(tr (tr @r @r 2) (tr @r @r 2) 2)", 0, 12),
    "D_12": ("(tr (tr (pow @q 2) @q 6) (pow @r 2) 6)", 0, 12),
    "j_14": ("(tr @q (tr (pow @r 3) @r 3) 6)", 0, 14),
    "j_16": ("(tr (tr @p @p 2) (pow @l 5) 10)", 0, 16),
    "j_18": ("(tr (tr (tr @q @q 2) @q 1) (pow @r 4) 12)", 0, 18),
    "j_20": ("(tr (pow @m_q 2) (tr @k_q @k_q 2) 4)", 0, 20),
    "A_20": ("(tr (pow @p 2) (pow @l 7) 14)", 0, 20),
    "B_20": ("(tr @q (pow (tr @r @r 2) 3) 6)", 0, 20),
    "C_20": ("(tr (tr (tr (pow @r 3) @r 3) @q 4) (tr (tr f @u 8) (tr f @s 8) 3) 4)", 0, 20),
    "j_24": ("(tr (tr @p_p @p_p 4) @l_p 2)", 0, 24),
    "j_36": ("(tr (tr @k_qp @k_qp 2) @k_qp 4)", 0, 36),
    "A_36": ("(tr (tr @p_p @p_p 2) (pow @l_p 3) 6)", 0, 36),
    "j_60": ("(tr (pow @m_qp 2) (tr @k_qp @k_qp 2) 4)", 0, 60),
}

septic_definitions = {
    "l": ("(tr f f 6)", 2, 2),
    "p": ("(tr f @l 2)", 5, 3),
    "q": ("(tr f f 4)", 6, 2),
    "k_q": ("(tr @q @q 4)", 4, 4),
    "m_q": ("(tr @q @k_q 4)", 2, 6),
    "j_4": ("(tr @l @l 2)", 0, 4),
    "A_8": ("(tr (tr @p @p 4) @l 2)", 0, 8),
    "j_12": ("(tr (tr @k_q @k_q 2) @k_q 4)", 0, 12),
    "B_12": ("(tr (tr @p @p 2) (pow @l 3) 6)", 0, 12),
    "j_20": ("(tr (pow @m_q 2) (tr @k_q @k_q 2) 4)", 0, 20),
}

sextic_definitions = {
    "k": ("(tr f f 4)", 4, 2),
    "m": ("(tr f @k 4)", 2, 3),
    "i_2": ("(tr f f 6)", 0, 2),
    "i_4": ("(tr @k @k 4)", 0, 4),
    "i_6": ("(tr (tr @k @k 2) @k 4)", 0, 6),
    "i_10": ("(tr (pow @m 2) (tr @k @k 2) 4)", 0, 10),
}

cubic_definitions = {
    "h": ("(tr f f 2)", 2, 2),
    "i_4": ("(tr @h @h 2)", 0, 4),
}

quadratic_definitions = {
    "i_2": ("(tr f f 2)", 0, 2),
}

# Homogeneous systems of parameters recorded for each order.
hsop_names = {
    2: ("i_2",),
    3: ("i_4",),
    6: ("i_2", "i_4", "i_6", "i_10"),
    7: ("j_4", "A_8", "j_12", "B_12", "j_20"),
    9: ("j_4", "B_8", "D_10", "j_12", "B_12", "j_14", "j_16"),
}

definitions_by_order = {
    2: quadratic_definitions,
    3: cubic_definitions,
    6: sextic_definitions,
    7: septic_definitions,
    9: nonic_definitions,
}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    expr: CovariantExpr
    order: int
    degree: int
    hsop: bool = False

    @property
    def is_invariant(self):
        return self.order == 0


class Catalog(Mapping):
    """Read-only mapping from names to ``CatalogEntry`` for forms of order ``n``."""

    def __init__(self, n, definitions, hsop=()):
        self.n = n
        self._entries = {}
        for name, (text, order, degree) in definitions.items():
            # Entries are parsed in order so that @refs resolve against earlier names.
            expr = parse_expr(text, n, self)
            self._entries[name] = CatalogEntry(name, expr, order, degree, name in hsop)
        missing = set(hsop) - set(self._entries)
        if missing:
            raise KeyError(f"hsop names not in catalog: {sorted(missing)}")

    def __getitem__(self, name):
        return self._entries[name]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __repr__(self):
        return f"Catalog(n={self.n}, {len(self)} entries)"

    def invariants(self):
        return [e for e in self._entries.values() if e.is_invariant]

    def covariants(self):
        return [e for e in self._entries.values() if not e.is_invariant]

    @property
    def hsop(self):
        return [e for e in self._entries.values() if e.hsop]

    def ref(self, name):
        """Expression ``@name`` for use in larger trees."""
        return parse_expr(f"@{name}", self.n, self)

    def parse(self, text):
        return parse_expr(text, self.n, self)

    def expanded(self, name):
        return expand(self[name].expr, self)

    def metadata_mismatches(self):
        """(name, declared, recomputed) for entries whose metadata disagree."""
        mismatches = []
        for entry in self._entries.values():
            recomputed = (entry.expr.order, entry.expr.degree)
            if recomputed != (entry.order, entry.degree):
                mismatches.append((entry.name, (entry.order, entry.degree), recomputed))
        return mismatches


_catalogs = {}


def catalog_for(n):
    """The named catalog for forms of order ``n`` in {2, 3, 6, 7, 9}."""
    if n not in definitions_by_order:
        raise ValueError(f"no catalog for forms of order {n}; supported: {sorted(definitions_by_order)}")
    if n not in _catalogs:
        _catalogs[n] = Catalog(n, definitions_by_order[n], hsop_names[n])
        LOGGER.debug("built catalog for n=%d with %d entries", n, len(_catalogs[n]))
    return _catalogs[n]
