glossary_dict = {
    "Binary form":"""A homogeneous polynomial in x and y of a fixed
    degree n, called its order""",

    "Covariant":"""An SL2-equivariant polynomial map from forms of order n
    to forms of order m, homogeneous of degree d in the coefficients""",

    "Invariant":"""A covariant of order 0: a polynomial in the coefficients
    unchanged by every det-1 change of variables""",

    "Transvectant":"""The bilinear differential operation (g,h)_p taking
    covariants of orders m and n to one of order m+n-2p""",

    "Basic invariants":"""A minimal homogeneous generating set of the algebra
    of invariants; d_m counts its elements of degree m""",

    "Poincare series":"""The generating function sum dim(I_m) t^m of the
    graded ring of invariants""",

    "Nullcone":"""The forms on which every invariant of positive degree
    vanishes, equivalently the forms with a root of multiplicity > n/2""",

    "Homogeneous system of parameters":"""n-2 algebraically independent
    homogeneous invariants whose common zeros are exactly the nullcone""",

    "Ecriture minimale":"""A way of writing the Poincare series as a(t) over
    prod (1 - t^d_i) with the smallest possible product of the degrees""",
}

# Help texts of the command-line front end
help_dict = {
    "poincare":"""Dimensions of the spaces of invariants up to a degree,
    optionally with the numerator over given denominator degrees""",

    "ecriture":"""All minimal ways of writing the Poincare series over n-2
    denominator factors""",

    "nullcone":"""Root multiplicities and nullcone membership of a form""",

    "catalog":"""Named covariants and invariants with their orders and
    degrees""",

    "eval":"""Value of a covariant expression at a form""",

    "basis":"""Number of basic invariants d_m in each degree, by rank at
    random points over F_p""",

    "hsop":"""Check a candidate homogeneous system of parameters at
    sampling level""",

    "verify-lemmas":"""Recompute the expansions used in the nullcone proofs
    and compare them with their transcriptions""",
}


def help_str(name):
    """A help text from either dictionary, on one line."""
    text = help_dict.get(name) or glossary_dict[name]
    return " ".join(text.split())
