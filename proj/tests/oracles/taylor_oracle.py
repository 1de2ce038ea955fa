"""Independent oracle: exact Taylor coefficients of the closed-form solutions,
printed in the library's canonical series text format.

Run: python3 tests/oracles/taylor_oracle.py I|II|III ORDER > tests/golden/<file>
Each closed form is first checked by substitution into its equation.
The frozen outputs live in tests/golden/ and are compared against the C++
implementation; this script does not share any code path with it.
"""
import sys
import sympy as sp

t, v = sp.symbols("t v")
S6 = sp.sqrt(6)


def scalar_str(c):
    c = sp.nsimplify(sp.expand(c), [S6])
    b = sp.expand(c).coeff(S6)
    a = sp.expand(c - b * S6)
    a, b = sp.Rational(a), sp.Rational(b)
    parts = []
    if a != 0:
        parts.append(str(a))
    if b != 0:
        parts.append(f"{b}*sqrt(6)")
    if not parts:
        return "0", True, True
    return " + ".join(parts), b == 0, a == 0


def poly_str(p):
    p = sp.Poly(sp.expand(p), v)
    if p.is_zero:
        return "0"
    out = []
    for j in range(p.degree() + 1):
        c = p.coeff_monomial(v**j)
        if sp.expand(c) == 0:
            continue
        s, rational, pure_surd = scalar_str(c)
        if j == 0:
            out.append(s)
            continue
        mono = "v" if j == 1 else f"v^{j}"
        if sp.expand(c - 1) == 0:
            out.append(mono)
        elif rational or pure_surd:
            out.append(f"{s}*{mono}")
        else:
            out.append(f"({s})*{mono}")
    return " + ".join(out)


def element_str(e):
    e = sp.cancel(sp.together(e), extension=S6) if e.has(S6) else sp.cancel(sp.together(e))
    num, den = sp.fraction(e)
    lc = sp.Poly(den, v).LC()
    num, den = sp.expand(num / lc), sp.expand(den / lc)
    s = f"({poly_str(num)})"
    if sp.expand(den - 1) != 0:
        s += f"/({poly_str(den)})"
    return s


def taylor(expr, order):
    ser = sp.series(expr, t, 0, order + 1).removeO()
    return [sp.simplify(ser.coeff(t, j)) for j in range(order + 1)]


def dump(expr, order):
    for j, c in enumerate(taylor(expr, order)):
        print(f"t^{j}: {element_str(c)}")


def check_solves(u, a, b, c, n, x_dependent):
    """Substitutes u into u_t = a*u_xx + b*u - c*u^n; aborts unless the residual is 0."""
    x = sp.Symbol("x")
    ux = u.subs(v, sp.exp(x)) if x_dependent else u
    res = sp.diff(ux, t) - a * sp.diff(ux, x, 2) - b * ux + c * ux**n
    if sp.simplify(res) != 0:
        sys.exit(f"closed form does not solve the equation: residual {res}")


which = sys.argv[1]
order = int(sys.argv[2])
E2 = sp.exp(2 * t)
if which == "I":
    u = 2 * E2 * v / (2 + (1 - E2) * v)
    check_solves(u, 5, 2, -1, 2, False)
    ic = v
elif which == "II":
    u = 2 * E2 * v / (2 + 3 * v * (E2 - 1))
    check_solves(u, 1, 2, 3, 2, False)
    ic = v
elif which == "III":
    w = v * sp.exp(3 * t)
    u = sp.sqrt(sp.Rational(2, 3)) * w / (1 + w)
    check_solves(u, 1, 2, 3, 3, True)
    ic = sp.sqrt(sp.Rational(2, 3)) * v / (1 + v)
else:
    sys.exit("usage: taylor_oracle.py I|II|III ORDER")
if sp.simplify(u.subs(t, 0) - ic) != 0:
    sys.exit("closed form does not match the initial condition")
dump(u, order)
