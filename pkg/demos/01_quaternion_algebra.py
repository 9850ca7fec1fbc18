#!/usr/bin/env python3
"""Tour of the complexified quaternion algebra.

Multiplication table, the three conjugation flavours, the complex modulus
with its null cone, and the faithful 2x2 matrix view.
"""

import numpy as np

from qdirac import (
    I1,
    I2,
    I3,
    ONE,
    Quat,
    SingularQuaternion,
    dot,
    from_matrix,
    to_matrix,
)

print("= basis multiplication =")
print("i1 * i2 =", I1 * I2, " (i3)")
print("i2 * i1 =", I2 * I1, " (-i3)")
print("i1 * i1 =", I1 * I1, " (-1)")

q = Quat(1.0 + 0.5j, -0.3, 0.25j, 2.0)
print("\n= conjugation flavours of", q, "=")
print("spatial negation :", q.quat_conj())
print("component conj   :", q.complex_conj())
print("both (hermitian) :", q.herm_conj())

print("\n= dot product, two routes =")
a, b = Quat(1, 0, 1), Quat(2, 0, 3)
sandwich = (a.quat_conj() * b + b.quat_conj() * a) * 0.5
print("componentwise:", dot(a, b), "   sandwich:", sandwich.temporal)

print("\n= complex modulus and the null cone =")
print("|1 + i1|       =", Quat(1, 1).modulus(), "-> inverse", Quat(1, 1).inverse())
null = Quat(1, 0, 0, 1j)
print("|1 + i*i3|     =", null.modulus(), " (null: generates the ideal)")
try:
    null.inverse()
except SingularQuaternion as exc:
    print("inverse refused:", exc)

print("\n= 2x2 matrix view =")
print("i3 ->")
print(to_matrix(I3))
rng = np.random.default_rng(0)
x = Quat(*(rng.uniform(-1, 1, 4) + 1j * rng.uniform(-1, 1, 4)))
y = Quat(*(rng.uniform(-1, 1, 4) + 1j * rng.uniform(-1, 1, 4)))
hom = np.max(np.abs(to_matrix(x * y) - to_matrix(x) @ to_matrix(y)))
print("representation defect |M(xy) - M(x)M(y)| =", hom)
print("roundtrip defect =", (from_matrix(to_matrix(x)) - x).max_abs())
print("trace(M(x)) - 2*x0 =", abs(np.trace(to_matrix(x)) - 2 * x.temporal))
assert (ONE * x - x).max_abs() == 0.0
