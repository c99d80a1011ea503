"""frobforge: exact commutative algebra over F_p.

Groebner bases, free complexes and resolutions, Frobenius closure and
bracket powers, Serre-condition checkers, and a verifier that exercises
deformation statements on generated graded instances.
"""

__version__ = "0.1.0"

from frobforge.errors import BudgetExceeded, FrobforgeError  # noqa: F401
from frobforge.polycore import GREVLEX, LEX, ElimBlock, Polynomial, Ring  # noqa: F401
