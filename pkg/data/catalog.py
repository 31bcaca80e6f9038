# data/catalog.py
# Named non-cyclic groups, each given by permutation generators on {0, ..., degree-1}.
# Cyclic groups and direct products are built directly in algebra/group.py.

GROUP_CATALOG = {
    "S3": {
        "description": "Symmetric group on three letters",
        "degree": 3,
        "generators": {"r": (1, 2, 0), "s": (1, 0, 2)},
    },
    "D4": {
        "description": "Dihedral group of the square, order 8",
        "degree": 4,
        "generators": {"r": (1, 2, 3, 0), "s": (0, 3, 2, 1)},
    },
    "Q8": {
        "description": "Quaternion group, order 8",
        "degree": 8,
        # i = (0 1 2 3)(4 5 6 7), j = (0 4 2 6)(1 7 3 5)
        "generators": {"i": (1, 2, 3, 0, 5, 6, 7, 4), "j": (4, 7, 6, 5, 2, 1, 0, 3)},
    },
}
