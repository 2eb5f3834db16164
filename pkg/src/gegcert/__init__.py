"""Certified numerics for Gegenbauer-polynomial bounds on the 4-sphere.

The package has two arithmetic layers that check each other:

* an exact layer (arbitrary-precision rationals, polynomial algebra,
  certified real-root isolation), and
* a directed-rounded interval layer (enclosures of trigonometric values,
  Gamma-function ratios, and large-degree asymptotics).

On top of the two layers sit the verification suites: pointwise bounds for
the normalized derivative family, moment estimates for admissible
densities, and the convex-quadratic induction sweep that pins down the
admissible mass parameter.
"""

from gegcert.intervals import Interval
from gegcert.rational import Rat, RatPoly, RootEnclosure

__all__ = ["Interval", "Rat", "RatPoly", "RootEnclosure"]
__version__ = "0.1.0"
