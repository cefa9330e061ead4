"""Reference values the verification suite compares against.

Chart generators are written in the parameters ``a{i}{j}_{k}`` (the
coefficient of ``x_k xn`` in the generator with leading term ``x_i x_j``,
up to sign) and are compared after the linear relations are applied.  The
stratum equations use the symmetric variables ``a{i}{j}{k}``.
"""

DEGREES = {2: 1, 3: 5, 4: 310, 5: 395780}

TANGENT_DIMS = {3: 3, 4: 6, 5: 10, 6: 20, 7: 35, 8: 56}

CHART_GENERATORS = {
    3: (
        "a11_3 + a12_3*a22_2 - a12_2*a22_3",
    ),
    4: (
        "-a12_2 - a13_3 + a23_2*a22_3 - a22_2*a23_3 + a33_2*a23_3 - a23_2*a33_3",
        "-a11_2 + a12_3*a23_2 - a23_3*a12_2 + a13_3*a33_2 - a33_3*a13_2",
        "-a11_3 + a12_2*a22_3 - a22_2*a12_3 + a13_2*a23_3 - a23_2*a13_3",
        "a11_2*a22_3 - a12_2*a12_3 + a11_3*a23_3 - a12_3*a13_3",
        "a11_4 + a12_4*a22_2 - a22_4*a12_2 + a13_4*a23_2 - a23_4*a13_2",
        "a11_4 + a12_4*a23_3 - a23_4*a12_3 + a13_4*a33_3 - a33_4*a13_3",
    ),
}

SEC_EQUATIONS = {
    4: (
        "a223^2 - a222*a233 + a233^2 - a223*a333",
    ),
    5: (
        "a234^2 - a233*a244 + a334^2 - a333*a344 + a344^2 - a334*a444",
        "a224*a234 - a223*a244 + a234*a334 - a233*a344 + a244*a344 - a234*a444",
        "a224*a233 - a223*a234 + a234*a333 - a233*a334 + a244*a334 - a234*a344",
        "a234^2 + a224^2 - a222*a244 + a244^2 - a223*a344 - a224*a444",
        "a223*a224 - a222*a234 + a233*a234 + a234*a244 - a223*a334 - a224*a344",
        "a223^2 - a222*a233 + a233^2 - a223*a333 - a224*a334 + a234^2",
    ),
}

LOC_EQUATIONS = {
    3: ("a222",),
    4: ("a222 + a233", "a223 + a333", "a233^2 + a223^2"),
}

# codimension of the stratum through p at its smooth points (n = 5)
SEC_CODIM = 4

# rank of the local equations at curvilinear points of the length-5 local stratum
LOC_CURVILINEAR_RANK = 7

# point counts of the n = 5 stratum through p in F_p^10, computed by this package
SEC_POINT_COUNTS = {3: 963, 5: 18725}
