from fractions import Fraction

import pytest
from mpmath import mp, mpf

from szeta.numkernel import PrecisionContext

# Reference values computed independently with mpmath's own Airy, Bessel and
# Taylor routines at 60 digits.
AIRY_ZETA = {
    2: "0.531457231960999452867124932783597512879376261",
    3: "-0.112561761215114579430435115245981051950396117",
    4: "0.0394430784212385845438623155927318626955173714",
    5: "-0.0155336593766231596010532669860133820753319539",
    6: "0.00638926948029118308598503179719360317632586406",
}
AIRY_BERNOULLI = [
    "1",
    "0.7290111329472269814186362647039359759728",
    "1.062914463921998905734249865567195025759",
    "1.324629432709312523417389308524113688298",
    "2.404656148004179991889968103633436656638",
    "3.450533194415215376544857289514369279754",
]
AIRY_ZEROS = [
    "-2.33810741045976703848919725244673544063854015",
    "-4.0879494441309706166369887014573910602247647",
    "-5.52055982809555105912985551293129357379721428",
]
AIRY_PRIME_ZEROS = ["-1.01879297164747108901732478339974382421820544", "-3.24819758217983653787542377077584338415362304"]
AIRY_PRIME_MZV = {1: "1.37172116419844834727194023524703545648063187", 2: "0.470404738077486622966716478649489799308712383"}
BESSEL0_FIRST_ZERO = "2.40482555769577276862163187932645464312424491"

HALF = Fraction(1, 2)
NU_GRID = [Fraction(-1, 3), Fraction(1, 3), HALF, Fraction(5, 2)]
AB_GRID = [(Fraction(1), Fraction(1)), (Fraction(1), Fraction(2)), (Fraction(3, 2), Fraction(1, 2))]


# Closed rational functions of (a, b) for the hypergeometric family
def zeta22_rational(a, b):
    return a * (1 + a) * b * (1 + b) / (2 * (a + b) ** 2 * (1 + a + b) ** 2 * (2 + a + b) * (3 + a + b))


def zeta4_rational(a, b):
    num = -a * b * (a**3 + a**2 * (1 - 2 * b) + b**2 * (1 + b) - 2 * a * b * (2 + b))
    return num / ((a + b) ** 4 * (1 + a + b) ** 2 * (2 + a + b) * (3 + a + b))


def star22_rational(a, b):
    num = a * b * (-(a**2) - a**3 - b**2 - b**3 + a * b * (a + b + 5) * (a + b + 2))
    return num / (2 * (a + b) ** 4 * (1 + a + b) ** 2 * (2 + a + b) * (3 + a + b))


@pytest.fixture(autouse=True)
def _high_precision():
    """Comparisons run at 60 digits so that 50-digit reference strings are not the bottleneck."""
    with mp.workdps(60):
        yield


@pytest.fixture
def ctx():
    return PrecisionContext(digits=50)


def ref(text):
    return mpf(text)
