"""Hand-entered eigenfunctions of degree <= 3.

Keys are (lambda, s) with lambda written with decreasing parts; values map
(mu, l) to the coefficient of V_mu w^l. The w^0 part is the Jack polynomial.
"""

from nslax.exactalg import ParamPoly

E1, E2 = ParamPoly.e1(), ParamPoly.e2()

JACKS = {
    (): {(): 1},
    (1,): {(1,): 1},
    (2,): {(1, 1): 1, (2,): E1},
    (1, 1): {(1, 1): 1, (2,): E2},
    (3,): {(1, 1, 1): 1, (2, 1): 3 * E1, (3,): 2 * E1**2},
    (2, 1): {(1, 1, 1): 1, (2, 1): E1 + E2, (3,): E1 * E2},
    (1, 1, 1): {(1, 1, 1): 1, (2, 1): 3 * E2, (3,): 2 * E2**2},
}

W_TERMS = {
    ((), (0, 0)): {},
    ((1,), (0, 1)): {((), 1): E2},
    ((1,), (1, 0)): {((), 1): E1},
    ((2,), (0, 1)): {((1,), 1): E2, ((), 2): E1 * E2},
    ((2,), (2, 0)): {((1,), 1): 2 * E1, ((), 2): 2 * E1**2},
    ((1, 1), (0, 2)): {((1,), 1): 2 * E2, ((), 2): 2 * E2**2},
    ((1, 1), (1, 0)): {((1,), 1): E1, ((), 2): E1 * E2},
    ((3,), (0, 1)): {
        ((1, 1), 1): E2,
        ((2,), 1): E1 * E2,
        ((1,), 2): 2 * E1 * E2,
        ((), 3): 2 * E1**2 * E2,
    },
    ((3,), (3, 0)): {
        ((1, 1), 1): 3 * E1,
        ((2,), 1): 3 * E1**2,
        ((1,), 2): 6 * E1**2,
        ((), 3): 6 * E1**3,
    },
    ((2, 1), (0, 2)): {
        ((1, 1), 1): 2 * E2,
        ((2,), 1): E1 * E2,
        ((1,), 2): E2 * (E1 + 2 * E2),
        ((), 3): 2 * E1 * E2**2,
    },
    ((2, 1), (1, 1)): {
        ((1, 1), 1): E1 + E2,
        ((2,), 1): E1**2 - E1 * E2 + E2**2,
        ((1,), 2): 3 * E1 * E2,
        ((), 3): E1 * E2 * (E1 + E2),
    },
    ((2, 1), (2, 0)): {
        ((1, 1), 1): 2 * E1,
        ((2,), 1): E1 * E2,
        ((1,), 2): E1 * (E2 + 2 * E1),
        ((), 3): 2 * E1**2 * E2,
    },
    ((1, 1, 1), (0, 3)): {
        ((1, 1), 1): 3 * E2,
        ((2,), 1): 3 * E2**2,
        ((1,), 2): 6 * E2**2,
        ((), 3): 6 * E2**3,
    },
    ((1, 1, 1), (1, 0)): {
        ((1, 1), 1): E1,
        ((2,), 1): E1 * E2,
        ((1,), 2): 2 * E1 * E2,
        ((), 3): 2 * E1 * E2**2,
    },
}


def golden_coefficients(lam, s) -> dict:
    """Full coefficient map {(mu, l): ParamPoly} of psi_lambda^s."""
    out = {(mu, 0): ParamPoly.coerce(c) for mu, c in JACKS[lam].items()}
    out.update({k: ParamPoly.coerce(c) for k, c in W_TERMS[(lam, s)].items()})
    return out
