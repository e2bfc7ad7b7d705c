"""Tour of the exact inverses of symmetric matrices.

The bordering recursion grows an inverse one leading block at a time; the
fraction-free elimination inverse is a completely independent oracle.
Both are exact, so they must agree to the last coefficient.
"""

import random

from wmpinv import PolyMatrix, RfMatrix, bordering_inverse
from wmpinv.matrixio import format_matrix, parse_matrix_file
from wmpinv.poly_greville import bordering_inverse as coeff_bordering_inverse

n = parse_matrix_file(
    """matrix 3 3
    s+1; s+1; s+1
    s+1; s+2; s
    s+1; s; s+3"""
)

inv = bordering_inverse(n)
print("bordering inverse:")
print(format_matrix(inv))
print("N * inv(N) == I:", n * inv == RfMatrix.identity(3))
print("matches elimination oracle:", inv == n.ff_inverse())

# the same inverse in numerator-over-scalar-denominator form
frac = coeff_bordering_inverse(PolyMatrix.from_rf_matrix(n))
print("coefficient form agrees:", frac.to_rf_matrix() == inv)

# random symmetric matrices B^T B + I (positive definite at every real
# point, hence symbolically nonsingular in every leading block)
from wmpinv.scalars import Poly, RatFun

rng = random.Random(1)
for size in (2, 3, 4, 5):
    b = RfMatrix.from_rows(
        [
            [RatFun(Poly([rng.randint(-2, 2), rng.randint(-2, 2)])) for _ in range(size)]
            for _ in range(size)
        ]
    )
    spd = b.transpose() * b + RfMatrix.identity(size)
    assert bordering_inverse(spd) == spd.ff_inverse()
    print(f"size {size}: bordering == elimination")
