"""Generate frozen fractional-integral references with scipy.integrate.quad.

The library computes these values with a product-trapezoid rule; the
references here come from adaptive Gauss quadrature with the algebraic
endpoint weight handled analytically, so the two routes share no code.

Run from the repository root:

    python3 tests/oracles/gen_fracint_refs.py

and paste the printed constants into tests/test_fraccalc.py.
"""

import math

from scipy.integrate import quad


def left_integral(f, a, x, alpha):
    """I^alpha_{a+} f(x) via quad with weight (x-t)^(alpha-1)."""
    val, _ = quad(f, a, x, weight="alg", wvar=(0.0, alpha - 1.0))
    return val / math.gamma(alpha)


def right_integral(f, x, b, alpha):
    """I^alpha_{b-} f(x) via quad with weight (t-x)^(alpha-1)."""
    val, _ = quad(f, x, b, weight="alg", wvar=(alpha - 1.0, 0.0))
    return val / math.gamma(alpha)


def main():
    print("# I^0.3 of sin on [0, pi] at x = k*pi/8, k=1..7")
    left = [left_integral(math.sin, 0.0, k * math.pi / 8, 0.3)
            for k in range(1, 8)]
    print("LEFT_INT_SIN_03 =", [repr(v) for v in left])

    print("# right-sided I^0.3 of sin on [0, pi] at the same nodes")
    right = [right_integral(math.sin, k * math.pi / 8, math.pi, 0.3)
             for k in range(1, 8)]
    print("RIGHT_INT_SIN_03 =", [repr(v) for v in right])

    print("# Caputo D^0.75 of sin(2t) on [0, 1] = I^0.25 of 2cos(2t)")
    cap = [left_integral(lambda t: 2.0 * math.cos(2.0 * t), 0.0, k / 8, 0.25)
           for k in range(1, 8)]
    print("CAPUTO_SIN2_075 =", [repr(v) for v in cap])

    print("# right Caputo D^0.75 of sin(2t) on [0, 1] = -I^0.25_{b-} of 2cos(2t)")
    rcap = [-right_integral(lambda t: 2.0 * math.cos(2.0 * t), k / 8, 1.0, 0.25)
            for k in range(1, 8)]
    print("RCAPUTO_SIN2_075 =", [repr(v) for v in rcap])


if __name__ == "__main__":
    main()
