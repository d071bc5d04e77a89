"""Recompute reference values with sympy/mpmath and compare against the CLI."""

import json
import subprocess
import sys

import mpmath
import sympy as sp

t, x = sp.symbols("t x")
mpmath.mp.dps = 50


def cli(binary, *args):
    out = subprocess.run([binary, *args, "--format", "json"], check=True, capture_output=True, text=True).stdout
    return json.loads(out)["result"]


def poly_list(expr):
    coeffs = sp.Poly(sp.expand(expr), t).all_coeffs()[::-1]
    return [str(c) for c in coeffs]


def bundles_poincare(g):
    # Atiyah-Bott / Harder-Narasimhan closed form, odd degree.
    num = (1 + t**3) ** (2 * g) - t ** (2 * g) * (1 + t) ** (2 * g)
    return sp.cancel(num / ((1 - t**2) * (1 - t**4)))


def symprod_poincare(j, g):
    # Macdonald generating function.
    gen = (1 + t * x) ** (2 * g) / ((1 - x) * (1 - t**2 * x))
    return sp.series(gen, x, 0, j + 1).removeO().coeff(x, j)


def verlinde(g, k, odd):
    s = mpmath.mpf(0)
    for j in range(1, k + 2):
        term = mpmath.sin(j * mpmath.pi / (k + 2)) ** (2 - 2 * g)
        if odd:
            term *= (-1) ** (j + 1)
        s += term
    return int(mpmath.nint(((k + 2) / mpmath.mpf(2)) ** (g - 1) * s))


def main(binary):
    failures = []

    def check(label, got, want):
        if got != want:
            failures.append(f"{label}: got {got}, want {want}")

    for g in range(2, 5):
        check(f"N g={g}", cli(binary, "poincare", "--space", "N", "--g", str(g))["poly"], poly_list(bundles_poincare(g)))
    for g in range(0, 4):
        for j in range(0, 6):
            got = cli(binary, "poincare", "--space", "Xj", "--g", str(g), "--j", str(j))["poly"]
            check(f"Sym^{j} g={g}", got, poly_list(symprod_poincare(j, g)))
    for g in range(2, 5):
        for k in range(0, 9):
            for parity in ("even", "odd"):
                got = cli(binary, "verlinde", "--g", str(g), "--k", str(k), "--parity", parity)["value"]
                check(f"Z g={g} k={k} {parity}", got, verlinde(g, k, parity == "odd"))

    for f in failures:
        print("FAIL", f)
    print(f"{len(failures)} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
