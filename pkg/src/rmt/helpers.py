"""Named helper polynomials appearing in the component tables.

Each helper is a Laurent polynomial in q whose exponents live on the lattice
c0 + ca*alpha + cu*u.  Conjugation (the ~ marker in table files) replaces q
by 1/q throughout, which is the same as negating every exponent.
"""


def _f(qp):
    # at u=0 this must reduce to Delta^2 [alpha][alpha+1]
    return (-2 * qp(1)
            + qp(0, 0, 2) * (qp(1) - qp(-1))
            + qp(1, 2) + qp(-1, -2))


def _f1(qp):
    return (-2 * qp(-1)
            + qp(1, 2) + qp(-1, -2)
            - qp(0, 0, -2) * (qp(1) - qp(-1)))


def _f2(qp):
    return (-2 * qp(1)
            + qp(-3, -2) + qp(3, 2)
            + qp(0, 0, 2) * (qp(1) - qp(-1)))


def _f3(qp):
    return -qp(0, 0, -1) * (2 * qp(-2)
                            - (qp(2, 2) + qp(-2, -2))
                            + qp(0, 0, -2) * (qp(2) - qp(-2)))


def _f4(qp):
    return qp(0, 0, -1) * (-2
                           + qp(2, 2) + qp(-2, -2)
                           - (qp(2, 0, -2) + qp(-2, 0, 2))
                           + qp(0, 0, 2) + qp(0, 0, -2))


def _f5(qp):
    return qp(0, 0, -1) * (-2 * qp(2)
                           + qp(2, 2) + qp(-2, -2)
                           + qp(0, 0, 2) * (qp(2) - qp(-2)))


def _f6(qp):
    return (qp(1) * (qp(1) + qp(-1))
            - (qp(2, 2) + qp(-2, -2))
            - qp(-1, 0, 2) * (qp(1) - qp(-1)))


def _g1(qp):
    return (-2 * qp(1)
            + qp(1, 2) + qp(-1, -2)
            + qp(0, 0, 2) * (qp(1) - qp(-1)))


def _g2(qp):
    return qp(0, 0, -1) * (-2
                           + qp(2, 2) + qp(-2, -2)
                           + qp(0, 0, 2) + qp(0, 0, -2)
                           - (qp(-2, 0, 2) + qp(2, 0, -2)))


def _g3(qp):
    return (-2 * qp(2)
            + qp(2, 2) + qp(-2, -2)
            + qp(0, 0, 2) * (qp(2) - qp(-2)))


def _g4(qp):
    return (-2 * qp(1)
            + qp(3, 2) + qp(-3, -2)
            + qp(0, 0, 2) * (qp(1) - qp(-1)))


def _g5(qp):
    return (-2 * qp(2)
            + qp(4, 2) + qp(-4, -2)
            + qp(0, 0, 2) * (qp(2) - qp(-2)))


def _g6(qp):
    return (-2 * qp(3)
            + qp(3, 2) + qp(-3, -2)
            + qp(0, 0, 2) * (qp(3) - qp(-3)))


def _g7(qp):
    return (-2 * qp(1)
            + qp(3, 2) + qp(-3, -2)
            + qp(1) * (qp(0, 0, 2) + qp(0, 0, -2))
            - (qp(-3, 0, 2) + qp(3, 0, -2)))


def _g8(qp):
    return qp(0, 0, 1) * (-2
                          + qp(4, 2) + qp(-4, -2)
                          + qp(0, 0, 2) + qp(0, 0, -2)
                          - (qp(-2, 0, 2) + qp(2, 0, -2)))


def _g9(qp):
    return (-2 * qp(1)
            + qp(5, 2) + qp(-5, -2)
            + qp(0, 0, 2) * (qp(1) - qp(-1)))


def _g10(qp):
    return (1
            + 2 * qp(2)
            + 3 * qp(4)
            - 2 * qp(-2, -2)
            - 2 * qp(0, -2)
            - 2 * qp(4, 2)
            - 2 * qp(6, 2)
            + qp(6, 4) + qp(-6, -4)
            + 2 * qp(0, 0, 2)
            - qp(0, 0, 4)
            - qp(0, 0, 2) * (qp(2) - qp(-2))
            - 2 * qp(4, 0, 2)
            + qp(-4, 0, 4)
            + qp(0, 0, 2) * (qp(4, 2) - qp(-4, -2))
            + qp(0, 0, 4) * (qp(2) - qp(-2))
            + qp(0, 0, 2) * (qp(6, 2) - qp(-6, -2))
            - qp(0, 0, 2) * (qp(0, 2) - qp(0, -2))
            - qp(0, 0, 2) * (qp(2, 2) - qp(-2, -2)))


def _g11(qp):
    return (3
            - qp(-2)
            + 5 * qp(2)
            - qp(4)
            + qp(6, 4) + qp(-6, -4)
            - 4 * qp(-2, -2)
            - 4 * qp(4, 2)
            + 2 * qp(-2, -2, 2)
            + 2 * qp(4, 2, 2)
            - (qp(0, 2, 2) + qp(0, -2, -2))
            - (qp(2, 2, 2) - qp(-2, -2, -2))
            + (qp(4, 2, -2) - qp(-4, -2, 2))
            - (qp(6, 2, -2) + qp(-6, -2, 2))
            - 2 * qp(2) * (qp(0, 0, 2) + qp(0, 0, -2))
            + 2 * qp(4, 0, -2)
            - 2 * qp(-2, 0, 4)
            - 2 * qp(0, 0, 2)
            + qp(0, 0, 4)
            + qp(-4, 0, 4)
            + 4 * qp(-2, 0, 2))


def _g12(qp):
    return (6
            + qp(2) + qp(-2)
            - (qp(4) + qp(-4))
            - 2 * (qp(2, 2) + qp(-2, -2))
            - 2 * (qp(4, 2) + qp(-4, -2))
            + qp(6, 4) + qp(-6, -4)
            + 2 * qp(4, 0, -2))


def _h1(qp):
    return (-qp(1) * (qp(1) + qp(-1))
            + qp(2, 2) + qp(-2, -2)
            + qp(-1, 0, 2) * (qp(1) - qp(-1)))


def _h2(qp):
    return (-(qp(3, 2) + qp(-3, -2))
            - qp(1, 0, 1) * (qp(0, 0, 1) - qp(0, 0, -1))
            + qp(0, 0, 1) * (qp(3, 0, 1) + qp(-3, 0, -1)))


def _h3(qp):
    return (qp(1) + qp(-1)
            - (qp(3, 2) + qp(-3, -2))
            - (qp(1, 0, -2) + qp(-1, 0, 2))
            + qp(3, 0, -2) + qp(-3, 0, 2))


def _h4(qp):
    return (-2 * qp(2)
            + qp(1) * (qp(-3, -2) + qp(3, 2))
            + qp(-1, 0, 2) * (qp(1) - qp(-1)))


def _h5(qp):
    return (qp(-1, 0, 2) * (qp(1) - qp(-1))
            - qp(2) * (qp(2) - qp(-2))
            + qp(1) * (qp(3, 2) + qp(-3, -2)))


def _h6(qp):
    return (-(qp(4, 2) + qp(-4, -2))
            - qp(0, 0, 1) * (qp(0, 0, 1) - qp(0, 0, -1))
            + qp(0, 0, 1) * (qp(2, 0, -1) + qp(-2, 0, 1)))


HELPERS = {
    "f": _f,
    "f1": _f1, "f2": _f2, "f3": _f3, "f4": _f4, "f5": _f5, "f6": _f6,
    "g1": _g1, "g2": _g2, "g3": _g3, "g4": _g4, "g5": _g5, "g6": _g6,
    "g7": _g7, "g8": _g8, "g9": _g9, "g10": _g10, "g11": _g11, "g12": _g12,
    "h1": _h1, "h2": _h2, "h3": _h3, "h4": _h4, "h5": _h5, "h6": _h6,
}


def eval_helper(name, p, conj=False):
    """Evaluate helper `name` at point p; conj=True replaces q by 1/q."""
    try:
        fn = HELPERS[name]
    except KeyError:
        raise KeyError(f"unknown helper {name!r}") from None
    if conj:
        def qp(c0=0, ca=0, cu=0):
            return p.qpow(-c0, -ca, -cu)
    else:
        qp = p.qpow
    with p.precision():
        return fn(qp)
