"""A walk through hyperbolic (split-complex) arithmetic.

Hyperbolic numbers are a + b*k with k*k = +1.  Writing them over the
idempotent basis e1 = (1+k)/2, e2 = (1-k)/2 turns every ring operation into
two independent real operations, which is what makes the entropy theory on
top of them tractable.
"""

from hypentropy import (
    E1,
    E2,
    K,
    ONE,
    HyperbolicNumber,
    from_unit_k,
    hyp_log,
    hyp_pow,
    embed_real,
    metric_dk,
    modulus_k,
    partial_cmp,
)
from hypentropy.errors import DivisionByZeroDivisor

# ---------------------------------------------------------------------------
# Two views of the same number
# ---------------------------------------------------------------------------
xi = from_unit_k(2.0, 1.0)  # 2 + 1k
print("2 + 1k in idempotent coordinates:", xi)
print("and back in the {1, k} view:     ", xi.str_unit_k())

# k really does square to +1, and the idempotents annihilate each other.
print("k * k  =", K * K, "(the hyperbolic unit squares to one)")
print("e1 * e2 =", E1 * E2)
print("e1 + e2 =", E1 + E2)

# ---------------------------------------------------------------------------
# Zero divisors: the lines that make division partial
# ---------------------------------------------------------------------------
g = HyperbolicNumber(3.0, 0.0)  # 3*e1, a zero divisor
print("\n3*e1 is a zero divisor:", g.is_zero_divisor())
try:
    _ = ONE / g
except DivisionByZeroDivisor as exc:
    print("dividing by it fails: ", exc)

# Off the zero-divisor lines, division is exact componentwise division.
print("(6e1+10e2) / (3e1+5e2) =", HyperbolicNumber(6, 10) / HyperbolicNumber(3, 5))

# ---------------------------------------------------------------------------
# The partial order: some pairs just do not compare
# ---------------------------------------------------------------------------
a = HyperbolicNumber(1.0, 2.0)
b = HyperbolicNumber(3.0, 4.0)
c = HyperbolicNumber(3.0, 1.0)
print("\ncompare (1e1+2e2, 3e1+4e2):", partial_cmp(a, b).value)
print("compare (1e1+2e2, 3e1+1e2):", partial_cmp(a, c).value)

# ---------------------------------------------------------------------------
# Powers, logarithms, and the k-modulus
# ---------------------------------------------------------------------------
base = HyperbolicNumber(4.0, 9.0)
print("\n(4e1+9e2)^(1/2) =", hyp_pow(base, embed_real(0.5)))
print("log(e*e1 + e^2*e2) =", hyp_log(HyperbolicNumber(2.718281828459045, 7.38905609893065)))
print("|3e1 - 4e2|_k =", modulus_k(HyperbolicNumber(3.0, -4.0)))
print("D_k(1e1+5e2, 4e1+1e2) =", metric_dk(HyperbolicNumber(1, 5), HyperbolicNumber(4, 1)))
