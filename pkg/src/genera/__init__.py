"""Exact computer algebra for elliptic-genus computations.

The package is organized in layers:

    series    truncated Laurent q-series with exact rational coefficients
    modular   classical level-one q-expansions (E4, E6, Delta)
    jacobi    weak Jacobi form generators and structural checks
    genus     characteristic-class elliptic genera from Chern numbers
    divis     Euler-number divisibility constants for four structure families
    cells     two-cell complex homotopy over graded coefficient tables
    hodge     hyperkaehler Hodge-number systems and Euler divisibility

Everything is computed over Fraction; no floats enter any advertised result.
"""

from genera.series import LaurentSeries

__all__ = ["LaurentSeries"]
__version__ = "0.1.0"
