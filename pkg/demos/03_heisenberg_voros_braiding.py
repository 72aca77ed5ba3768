#!/usr/bin/env python3
"""The 16x16 braiding matrix of the Heisenberg-Voros algebra, step by step.

The Heisenberg-Voros algebra is the 3-dimensional Leibniz algebra with

    [x,x] = z   [y,y] = z   [x,y] = z   [y,x] = -z.

Its squares ideal is the line through z, the quotient is the abelian Lie
algebra on (xbar, ybar), and the adjoint action lifts back to g.  On the
4-dimensional space k (+) g we then have

    coaction:  1 -> 1 (x) 1,   v -> v (x) 1 + 1 (x) pi(v)
    action:    m . wbar = [m, w]   (the adjoined scalar line acts to zero)

over the degree-2 window of the enveloping algebra of the quotient, and the
canonical map tau(u (x) v) = v_(0) (x) u v_(1) comes out as an integer
16x16 matrix in the second-factor-major basis order
(1(x)1, x(x)1, y(x)1, z(x)1, 1(x)x, ...).
"""

from rackyd import (
    braiding,
    check_braided_leibniz,
    check_yd,
    check_ybe,
    first_order_yd,
    heisenberg_voros,
    is_involutive,
    lie_quotient,
    unital_shelf,
)
from rackyd.linalg import mat_mul
from rackyd.yd import BraidedLeibnizData

hv = heisenberg_voros()
lq = lie_quotient(hv)
print(f"squares ideal: span{{{', '.join(str(r) for r in lq.ideal)}}}")
print(f"quotient: abelian on {lq.quotient.basis} -> "
      f"{'abelian' if all(not v for row in lq.quotient.brackets for v in row) else '??'}")

module = first_order_yd(hv)
print(f"module on k (+) g, basis {module.basis}, "
      f"Yetter-Drinfel'd: {check_yd(module).ok}")

bm = braiding(module)
print()
print("the braiding matrix (note the 13th row):")
width = max(len(str(v)) for row in bm.matrix.as_int_rows() for v in row)
for row in bm.matrix.as_int_rows():
    print(" ".join(str(v).rjust(width) for v in row))

print()
print(f"satisfies the Yang-Baxter equation: {check_ybe(bm).ok}")
print(f"squares to the identity: {is_involutive(bm)}")
sq = mat_mul(bm.matrix, bm.matrix)
diff = [(r, c) for r in range(16) for c in range(16)
        if sq[r, c] != (1 if r == c else 0)]
print(f"  (T*T differs from 1 at {len(diff)} entries, first {diff[0]})")

print()
print("the unital shelf (a+u) <| (a'+v) = aa' + a'u + [u,v]:")
shelf = unital_shelf(hv)
for (i, j) in ((1, 2), (2, 1), (1, 0), (0, 1)):
    out = shelf.table[i][j]
    pretty = " + ".join(f"{c}*{shelf.basis[k]}" for k, c in sorted(out.items())) or "0"
    print(f"  {shelf.basis[i]} <| {shelf.basis[j]} = {pretty}")

# the shelf operation is the module action against scalar-part + pi, but the
# pair (shelf, tau) is NOT a braided Leibniz algebra: the identity already
# fails on the triple (1, 1, 1).  The braided Leibniz bracket of the theory
# lives on the invariants of the enveloping tetramodule (see demo 04).
data = BraidedLeibnizData(shelf.basis, shelf.table, bm)
rep = check_braided_leibniz(data)
print()
print(f"braided Leibniz identity for (shelf, tau): {rep.ok} "
      f"(first failing triple {rep.witness})")
