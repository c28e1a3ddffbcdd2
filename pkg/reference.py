"""Published tables for binary forms, used as golden values.

Coefficients are keyed by degree; degrees that are absent have coefficient 0.
"""
from series import DegreeSequence

# dim I_m for forms of order 9, m <= 66
nonic_poincare = {
    0: 1, 4: 2, 8: 8, 10: 5, 12: 28, 14: 27, 16: 84, 18: 99, 20: 217,
    22: 273, 24: 506, 26: 647, 28: 1066, 30: 1367, 32: 2082, 34: 2649,
    36: 3811, 38: 4796, 40: 6612, 42: 8228, 44: 10960, 46: 13483,
    48: 17487, 50: 21274, 52: 26979, 54: 32490, 56: 40443, 58: 48242,
    60: 59107, 62: 69885, 64: 84470, 66: 99074,
}

# numerator over (1-t^4)(1-t^8)(1-t^10)(1-t^12)^2(1-t^14)(1-t^16)
nonic_numerator = {
    0: 1, 4: 1, 8: 5, 10: 4, 12: 17, 14: 20, 16: 47, 18: 61, 20: 97,
    22: 120, 24: 165, 26: 189, 28: 223, 30: 241, 32: 254, 34: 254,
    36: 241, 38: 223, 40: 189, 42: 165, 44: 120, 46: 97, 48: 61,
    50: 47, 52: 20, 54: 17, 56: 4, 58: 5, 62: 1, 66: 1,
}

nonic_hsop_degrees = (4, 8, 10, 12, 12, 14, 16)

# number of basic invariants of each degree; zero for every other degree
nonic_basic_counts = {4: 2, 8: 5, 10: 5, 12: 14, 14: 17, 16: 21, 18: 25, 20: 2, 22: 1}

# (numerator degree, denominator degrees) in the published row order
nonic_ecritures = [
    (66, (4, 8, 10, 12, 12, 14, 16)),
    (74, (4, 4, 10, 12, 14, 16, 24)),
    (78, (4, 4, 8, 12, 14, 16, 30)),
    (86, (4, 4, 8, 10, 12, 16, 42)),
    (90, (4, 4, 8, 10, 12, 14, 48)),
]

# degree sequences of known homogeneous systems of parameters
hsop_sequences = {
    3: [(4,)],
    4: [(2, 3)],
    5: [(4, 8, 12)],
    6: [(2, 4, 6, 10)],
    7: [(4, 8, 12, 12, 20), (4, 8, 8, 12, 30)],
    8: [(2, 3, 4, 5, 6, 7)],
    9: [degrees for _, degrees in nonic_ecritures],
}

# classical generator degrees of the sextic
sextic_basic_degrees = (2, 4, 6, 10, 15)

# catalog sets that span I_8 and I_10 for forms of order 9
nonic_degree8_span = ["@j_8", "@A_8", "@B_8", "@C_8", "@D_8",
                      "(pow @j_4 2)", "(pow @A_4 2)", "(tr @A_4 @j_4 0)"]
nonic_degree10_span = ["@j_10", "@A_10", "@B_10", "@C_10", "@D_10"]

# the extended system H' and the degrees where I_m lies in H'
nonic_membership_checks = {36: 3811}


def expand(coefficients, max_degree):
    return [coefficients.get(d, 0) for d in range(max_degree + 1)]


def minimal_seed(n):
    """The known hsop degree sequence of smallest product, or None."""
    sequences = hsop_sequences.get(n)
    if not sequences:
        return None
    return min((DegreeSequence(s) for s in sequences), key=lambda s: (s.product, s.degrees))
