"""Elliptic genera from Chern numbers: K3, the quintic, and products.

Run as:  python3 demos/02_k3_genus.py
"""

from genera import genus, jacobi
from genera._data import resolve_data

QMAX = 4

k3 = genus.ChernData.load(resolve_data("k3"))
quintic = genus.ChernData.load(resolve_data("quintic"))

print(f"{k3.label}: dimc={k3.dimc}, Euler={genus.euler_number(k3)}")
print(f"{quintic.label}: dimc={quintic.dimc}, Euler={genus.euler_number(quintic)}")
print()

gk3 = genus.elliptic_genus(k3, nvars=1, qmax=QMAX)
print(f"genus(K3) carries (weight2, index2) = ({gk3.weight2}, {gk3.index2})")

# the K3 genus is exactly twice the index-1 generator
double = jacobi.generator("phi01", QMAX).series * 2
print("genus(K3) == 2*phi01:", (gk3.series - double).is_zero)

gq = genus.elliptic_genus(quintic, nvars=1, qmax=QMAX)
want = jacobi.generator("phi032", QMAX).series * -100
print("genus(quintic) == -100*phi032:", (gq.series - want).is_zero)

# value at y = 1 recovers the Euler number
print("ev(genus(K3)) =", jacobi.ev_z0(gk3).series.coeff(0, ()))
print()

# multiplicativity: the genus of a product is the product of genera
k3sq = genus.chern_product(k3, k3)
print(f"K3 x K3 Chern numbers: {k3sq.numbers}")
lhs = genus.elliptic_genus(k3sq, nvars=1, qmax=3).series
rhs = (genus.elliptic_genus(k3, nvars=1, qmax=3) ** 2).series
print("genus(K3 x K3) == genus(K3)^2 through q^3:", (lhs - rhs).is_zero)
print()

# two elliptic variables: restricting to the diagonal z1 = z2 = z picks up
# a factor 2*a^2 against the one-variable genus
g2 = genus.elliptic_genus(k3, nvars=2, qmax=3)
diag = g2.series.diagonal()
a = jacobi.generator("a", 3)
p1 = jacobi.generator("phi01", 3)
want = (4 * (a * a * p1).series)
print("diag(genus_2(K3)) == 4*a^2*phi01:", (diag - want).is_zero)
print("genus(K3) even in y:", jacobi.is_even(gk3))
