"""
Arithmetic in the split octonions
=================================

Elements are eight exact coordinates over e11, e12, e21, e22, ve11, ve12,
ve21, ve22.  The algebra is alternative but not associative, and every
element satisfies a quadratic equation over the base field.
"""

from octorb import GF, Q, mul, octo, unit
from octorb.algebra import classical_bar, subalgebra, subalgebra_check, trace_norm

x = octo("e11 + 2*ve12")
y = octo("e21 - 1/2*ve22")
print("x y      =", mul(x, y))
print("y x      =", mul(y, x))

# associativity fails on some triples
a, b, c = octo("e12"), octo("ve11"), octo("ve22")
print("(ab)c    =", mul(mul(a, b), c))
print("a(bc)    =", mul(a, mul(b, c)))

# ...but every element obeys x^2 - t x + n = 0
t, n = trace_norm(x)
print("trace, norm of x:", t, n)
print("x^2 - t x + n 1 =", mul(x, x) - x.scale(t.value) + unit(Q).scale(n.value))

# the classical involution reverses products
print("bar(xy) == bar(y) bar(x):", classical_bar(mul(x, y)) == mul(classical_bar(y), classical_bar(x)))

# the same code runs over a prime field
z = octo("e11 + 3*ve21", GF(7))
print("over F7: z^2 =", mul(z, z))

# the seven non-unital subalgebras that occur as images
for name in ("N1", "I1", "I2", "N2", "N3", "I3", "S4"):
    spec = subalgebra(name)
    r = subalgebra_check(spec.basis(Q))
    print(f"{name:3} {' '.join(spec.basis_names):22} closed={r.closed} square_zero={r.square_zero}")
