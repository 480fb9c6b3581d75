"""Exact weights W[j][k] = int_0^j L_k(t) dt for the six-node Lagrange basis on 0..5."""
from fractions import Fraction as F


def lagrange_integral(k, upper):
    # expand L_k(t) = prod_{m != k} (t - m) / (k - m) into monomials
    coeffs = [F(1)]
    denom = F(1)
    for m in range(6):
        if m == k:
            continue
        coeffs = [F(0)] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= m * coeffs[i + 1]
        denom *= (k - m)
    return sum(c * F(upper) ** (i + 1) / (i + 1) for i, c in enumerate(coeffs)) / denom


if __name__ == "__main__":
    for j in range(1, 6):
        row = [lagrange_integral(k, j) for k in range(6)]
        den = 1440
        print(j, [str(r) for r in row], "x1440:", [r * den for r in row], "sum", sum(row))
