"""Symbolic checks of the expansions used in the nullcone proofs for nonics.

Every check computes transvectants over polynomial coefficients (a0..a9 for a
nonic f = sum C(9,i) a_i x^(9-i) y^i, b1..b4 for the pair lemmas) and compares
the displayed coefficients with a written transcription. A failed comparison
becomes a report entry; nothing here raises on a mismatch.
"""
import logging
import re
from dataclasses import dataclass

import pandas as pd

from algebra import PolynomialRing, format_poly
from catalog import catalog_for
from forms import BinaryForm, evaluate_expr, transvectant

LOGGER = logging.getLogger(__name__)

A_NAMES = tuple(f"a{i}" for i in range(10))

_TERM = re.compile(r"^(x(?:\^(\d+))?)?(y(?:\^(\d+))?)?$")


@dataclass(frozen=True)
class Mismatch:
    term: str
    expected: str
    found: str


@dataclass(frozen=True)
class LemmaCheck:
    lemma: str
    name: str
    mismatches: tuple = ()

    @property
    def passed(self):
        return not self.mismatches

    def as_dict(self):
        return {
            "lemma": self.lemma,
            "name": self.name,
            "passed": self.passed,
            "mismatches": [vars(m) for m in self.mismatches],
        }


@dataclass(frozen=True)
class LemmaReport:
    checks: tuple

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def check(self, name):
        return next(c for c in self.checks if c.name == name)

    def as_dict(self):
        return {"passed": self.passed, "checks": [c.as_dict() for c in self.checks]}

    def to_dataframe(self):
        return pd.DataFrame([{"lemma": c.lemma, "check": c.name, "passed": c.passed,
                              "mismatches": len(c.mismatches)} for c in self.checks])


def _y_power(term, order):
    """Exponent of y in a monomial label such as ``x^2y^4``, ``xy`` or ``1``."""
    if term == "1":
        i, j = 0, 0
    else:
        match = _TERM.match(term)
        if not match or not term:
            raise ValueError(f"bad monomial label {term!r}")
        i = (int(match.group(2)) if match.group(2) else 1) if match.group(1) else 0
        j = (int(match.group(4)) if match.group(4) else 1) if match.group(3) else 0
    if i + j != order:
        raise ValueError(f"monomial {term} does not have degree {order}")
    return j


def _label(order, j):
    def power(var, e):
        return "" if e == 0 else var if e == 1 else f"{var}^{e}"
    return power("x", order - j) + power("y", j) or "1"


def compare(lemma, name, form, expected, complete=True):
    """Compare coefficients of ``form`` with the transcription ``expected``.

    ``expected`` maps monomial labels to coefficient texts. With ``complete``
    every coefficient not listed must vanish; displays elided with dots are
    compared with ``complete=False``.
    """
    ring = form.ring
    coeffs = form.coefficients()
    mismatches, seen = [], set()
    for term, text in expected.items():
        j = _y_power(term, form.order)
        seen.add(j)
        want = ring.coerce(text)
        if coeffs[j] != want:
            mismatches.append(Mismatch(term, format_poly(want), format_poly(coeffs[j])))
    if complete:
        for j, c in enumerate(coeffs):
            if j not in seen and c:
                mismatches.append(Mismatch(_label(form.order, j), "0", format_poly(c)))
    check = LemmaCheck(lemma, name, tuple(mismatches))
    if not check.passed:
        LOGGER.warning("%s / %s: %d coefficients differ", lemma, name, len(mismatches))
    return check


def _scalar(ring, value):
    return BinaryForm(0, ring.vector([value]), ring)


def nonic(ring, **fixed):
    """f = sum C(9,i) a_i x^(9-i) y^i with some a_i replaced by the given values."""
    values = [fixed.get(name, ring[name] if name in ring.names else 0) for name in A_NAMES]
    return BinaryForm.from_a_convention(values, ring)


def x_power_form(ring, coeffs):
    return BinaryForm.from_coeffs(coeffs, ring)


def nullform_checks():
    """Expansions in the three cases of the nonic nullform lemma."""
    lemma = "nullform"
    ring = PolynomialRing(A_NAMES)
    f = nonic(ring)
    x2 = x_power_form(ring, [1, 0, 0])
    checks = []

    checks.append(compare(lemma, "p = (f, x^2)_2", transvectant(f, x2, 2), {
        "x^7": "a2", "x^6y": "7*a3", "x^5y^2": "21*a4", "x^4y^3": "35*a5",
        "x^3y^4": "35*a6", "x^2y^5": "21*a7", "xy^6": "7*a8", "y^7": "a9",
    }))
    low = nonic(ring, a6=0, a7=0, a8=0, a9=0)
    checks.append(compare(lemma, "l with a6 = a7 = a8 = a9 = 0", transvectant(low, low, 8), {
        "y^2": "70*a5^2", "xy": "28*a4*a5", "x^2": "70*a4^2 - 112*a3*a5",
    }))

    # q = x^6
    x6 = x_power_form(ring, [1, 0, 0, 0, 0, 0, 0])
    checks.append(compare(lemma, "case 1: r = (f, x^6)_6", transvectant(f, x6, 6), {
        "y^3": "a9", "xy^2": "3*a8", "x^2y": "3*a7", "x^3": "a6",
    }))
    f1 = nonic(ring, a8=0, a9=0)
    checks.append(compare(lemma, "case 1: q with a8 = a9 = 0", transvectant(f1, f1, 6), {
        "y^6": "-20*a6^2 + 30*a5*a7",
        "xy^5": "-30*a5*a6 + 54*a4*a7",
        "x^2y^4": "-90*a5^2 + 114*a4*a6 - 12*a3*a7",
        "x^3y^3": "-72*a4*a5 + 124*a3*a6 - 60*a2*a7",
        "x^4y^2": "-90*a4^2 + 114*a3*a5 - 12*a2*a6 - 18*a1*a7",
        "x^5y": "-30*a3*a4 + 54*a2*a5 - 30*a1*a6 + 6*a0*a7",
        "x^6": "-20*a3^2 + 30*a2*a4 - 12*a1*a5 + 2*a0*a6",
    }))
    checks.append(compare(lemma, "case 1: l with a8 = a9 = 0", transvectant(f1, f1, 8), {
        "y^2": "70*a5^2 - 112*a4*a6 + 56*a3*a7",
        "xy": "28*a4*a5 - 56*a3*a6 + 40*a2*a7",
        "x^2": "70*a4^2 - 112*a3*a5 + 56*a2*a6 - 16*a1*a7",
    }))
    checks.append(_case1_substitution(lemma))

    # q = x^5 y
    x5y = x_power_form(ring, [0, 1, 0, 0, 0, 0, 0])
    checks.append(compare(lemma, "case 2: r = (f, x^5y)_6", transvectant(f, x5y, 6), {
        "y^3": "-a8", "xy^2": "-3*a7", "x^2y": "-3*a6", "x^3": "-a5",
    }))
    f2 = nonic(ring, a7=0, a8=0)
    q2, l2 = transvectant(f2, f2, 6), transvectant(f2, f2, 8)
    checks.append(compare(lemma, "case 2: q with a7 = a8 = 0", q2, {
        "y^6": "-20*a6^2 + 2*a3*a9",
        "xy^5": "-30*a5*a6 + 6*a2*a9",
        "x^2y^4": "-90*a5^2 + 114*a4*a6 + 6*a1*a9",
        "x^4y^2": "-90*a4^2 + 114*a3*a5 - 12*a2*a6",
        "x^5y": "-30*a3*a4 + 54*a2*a5 - 30*a1*a6",
    }, complete=False))
    checks.append(compare(lemma, "case 2: l with a7 = a8 = 0", l2, {
        "y^2": "70*a5^2 - 112*a4*a6 + 2*a1*a9",
    }, complete=False))
    checks.append(_case2_identity(lemma, ring, q2, l2))

    # q = x^4 y (x + y)
    x4y = x_power_form(ring, [0, 1, 1, 0, 0, 0, 0])
    checks.append(compare(lemma, "case 3: r = (f, x^4y(x+y))_6", transvectant(f, x4y, 6), {
        "y^3": "a7 - a8", "xy^2": "3*(a6 - a7)", "x^2y": "3*(a5 - a6)", "x^3": "a4 - a5",
    }))
    a6 = ring["a6"]
    f3 = nonic(ring, a7=a6, a8=a6)
    checks.append(compare(lemma, "case 3: q with a6 = a7 = a8", transvectant(f3, f3, 6), {
        "y^6": "-2*(6*a4*a6 - 15*a5*a6 + 10*a6^2 - a3*a9)",
        "xy^5": "-6*(5*a3*a6 - 9*a4*a6 + 5*a5*a6 - a2*a9)",
        "x^2y^4": "-6*(15*a5^2 + 3*a2*a6 + 2*a3*a6 - 19*a4*a6 - a1*a9)",
        "x^3y^3": "-2*(36*a4*a5 - 3*a1*a6 + 30*a2*a6 - 62*a3*a6 - a0*a9)",
        "x^4y^2": "-6*(15*a4^2 - 19*a3*a5 - a0*a6 + 3*a1*a6 + 2*a2*a6)",
        "x^5y": "-6*(5*a3*a4 - 9*a2*a5 - a0*a6 + 5*a1*a6)",
        "x^6": "-2*(10*a3^2 - 15*a2*a4 + 6*a1*a5 - a0*a6)",
    }))
    checks.append(compare(lemma, "case 3: l with a6 = a7 = a8", transvectant(f3, f3, 8), {
        "y^2": "2*(35*a5^2 - 8*a2*a6 + 28*a3*a6 - 56*a4*a6 + a1*a9)",
        "xy": "2*(14*a4*a5 - 7*a1*a6 + 20*a2*a6 - 28*a3*a6 + a0*a9)",
        "x^2": "2*(35*a4^2 - 56*a3*a5 + a0*a6 - 8*a1*a6 + 28*a2*a6)",
    }))

    # r is (q, f)_6 in the catalog and (f, q)_6 in the lemma; even index, same covariant
    q = transvectant(f, f, 6)
    difference = transvectant(q, f, 6) - transvectant(f, q, 6)
    checks.append(compare(lemma, "(q, f)_6 = (f, q)_6", difference, {}))
    return checks


def _case1_substitution(lemma):
    """With a7 = 1 and a0..a5 the displayed powers of a6, q vanishes identically."""
    ring = PolynomialRing(("a6",))
    values = {
        "a9": "0", "a8": "0", "a7": "1",
        "a5": "2/3*a6^2", "a4": "10/27*a6^3", "a3": "5/27*a6^4",
        "a2": "7/81*a6^5", "a1": "28/729*a6^6", "a0": "4/243*a6^7",
    }
    f = nonic(ring, **{name: ring.coerce(text) for name, text in values.items()})
    return compare(lemma, "case 1: substitution gives q = 0", transvectant(f, f, 6), {})


def _case2_identity(lemma, ring, q, l):
    """5 d5 a9 = -75 a4 d0 + 45 a5 d1 - a6 (9 c + 22 d2), d_i the x^i y^(6-i) coefficient of q."""
    coeffs = q.coefficients()
    d = {i: coeffs[6 - i] for i in range(7)}
    c = l.coefficients()[2]
    a4, a5, a6, a9 = (ring[name] for name in ("a4", "a5", "a6", "a9"))
    lhs = 5 * d[5] * a9
    rhs = -75 * a4 * d[0] + 45 * a5 * d[1] - a6 * (9 * c + 22 * d[2])
    return compare(lemma, "case 2: 5 d5 a9 identity", _scalar(ring, lhs - rhs), {})


def pair_2_7_checks():
    """g = x^2, h = y^4 (b1 x^3 + b2 x^2 y + b3 x y^2 + b4 y^3) in V_2 + V_7."""
    lemma = "V2+V7 pair"
    ring = PolynomialRing(("b1", "b2", "b3", "b4"))
    g = x_power_form(ring, [1, 0, 0])
    h = x_power_form(ring, [0, 0, 0, 0, ring["b1"], ring["b2"], ring["b3"], ring["b4"]])
    return [
        compare(lemma, "((h,h)_6, g)_2", transvectant(transvectant(h, h, 6), g, 2),
                {"1": "-4/245*b1^2"}),
        compare(lemma, "((h,h)_4, g^3)_6", transvectant(transvectant(h, h, 4), g.power(3), 6),
                {"1": "2/735*(5*b2^2 - 12*b1*b3)"}),
        compare(lemma, "((h,h)_2, g^5)_10", transvectant(transvectant(h, h, 2), g.power(5), 10),
                {"1": "-2/147*(3*b3^2 - 7*b2*b4)"}),
        compare(lemma, "(h^2, g^7)_14", transvectant(h.power(2), g.power(7), 14),
                {"1": "b4^2"}),
    ]


def pair_6_3_checks():
    """g = x^4 (b1 x^2 + b2 x y + b3 y^2) in V_6 against h = y^3 and h = x y^2 in V_3."""
    lemma = "V6+V3 pair"
    ring = PolynomialRing(("b1", "b2", "b3"))
    g = x_power_form(ring, [ring["b1"], ring["b2"], ring["b3"], 0, 0, 0, 0])
    h = x_power_form(ring, [0, 0, 0, 1])
    checks = [
        compare(lemma, "h = y^3: ((g^2,g)_6, h^2)_6",
                transvectant(transvectant(g.power(2), g, 6), h.power(2), 6), {"1": "1/495*b3^3"}),
        compare(lemma, "h = y^3: (((g,g)_2,g)_1, h^4)_12",
                transvectant(transvectant(transvectant(g, g, 2), g, 1), h.power(4), 12),
                {"1": "-1/540*b2*(5*b2^2 - 18*b1*b3)"}),
        compare(lemma, "h = y^3: (g, h^2)_6", transvectant(g, h.power(2), 6), {"1": "b1"}),
    ]
    h = x_power_form(ring, [0, 0, 1, 0])
    checks += [
        compare(lemma, "h = xy^2: (g, h^2)_6", transvectant(g, h.power(2), 6), {"1": "1/15*b3"}),
        compare(lemma, "h = xy^2: (g, (h,h)_2^3)_6",
                transvectant(g, transvectant(h, h, 2).power(3), 6), {"1": "-8/729*b1"}),
        compare(lemma, "h = xy^2: (g, (h^3,h)_3)_6",
                transvectant(g, transvectant(h.power(3), h, 3), 6), {"1": "1/84*b2"}),
    ]
    return checks


def zero_set_checks():
    """Catalog invariants of a nonic with the covariant l replaced by x^2."""
    lemma = "nonic zero set"
    ring = PolynomialRing(A_NAMES)
    catalog = catalog_for(9)
    f = nonic(ring)
    overrides = {"l": x_power_form(ring, [1, 0, 0])}
    memo = {}
    expected = {
        "A_20": "a9^2",
        "j_16": "-2*(a8^2 - a7*a9)",
        "B_12": "2*(3*a7^2 - 4*a6*a8 + a5*a9)",
        "A_8": "-2*(10*a6^2 - 15*a5*a7 + 6*a4*a8 - a3*a9)",
    }
    return [compare(lemma, f"{name} with l = x^2",
                    evaluate_expr(catalog.ref(name), f, catalog, memo, overrides), {"1": text})
            for name, text in expected.items()]


def verify_lemma_expansions():
    """Run every transcription check; the report lists each comparison."""
    checks = nullform_checks() + pair_2_7_checks() + pair_6_3_checks() + zero_set_checks()
    report = LemmaReport(tuple(checks))
    LOGGER.info("lemma expansions: %d of %d checks pass", len(checks) - len(report.failures), len(checks))
    return report
