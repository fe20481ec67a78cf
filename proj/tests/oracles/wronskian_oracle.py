"""Independent computer-algebra oracle for the frozen test values.

Builds the denominator and multi-indexed polynomials directly from the
Wronskian definitions with sympy (symbolic powers, no prefactor
bookkeeping) and prints coefficient lists, lowest degree first.
"""
from sympy import (Rational as R, symbols, exp, simplify, Poly, wronskian, jacobi, assoc_laguerre,
                   diff, cancel, sqrt, cos, sin, N, log)

eta = symbols('eta')
x = symbols('x', positive=True)


def lag(n, a, z):
    return assoc_laguerre(n, a, z).expand()


def jac(n, a, b, z):
    return jacobi(n, a, b, z).expand()


def xi_L(t, v, g, z=eta):
    return lag(v, g - R(1, 2), -z) if t == 'I' else lag(v, R(1, 2) - g, z)


def xi_J(t, v, g, h, z=eta):
    return jac(v, g - R(1, 2), R(1, 2) - h, z) if t == 'I' else jac(v, R(1, 2) - g, h - R(1, 2), z)


def build_L(g, DI, DII, n=None):
    M, Nn = len(DI), len(DII)
    cols = [exp(eta) * xi_L('I', d, g) for d in DI] + [eta ** (R(1, 2) - g) * xi_L('II', d, g) for d in DII]
    off = R(1, 2) if n is not None else -R(1, 2)
    if n is not None:
        cols.append(lag(n, g - R(1, 2), eta))
    w = wronskian(cols, eta) if len(cols) > 1 else cols[0]
    out = cancel(simplify(w * exp(-M * eta) * eta ** ((M + g + off) * Nn)))
    return Poly(out, eta)


def build_J(g, h, DI, DII, n=None):
    M, Nn = len(DI), len(DII)
    C, D = (1 - eta) / 2, (1 + eta) / 2
    cols = [D ** (R(1, 2) - h) * xi_J('I', d, g, h) for d in DI] + \
           [C ** (R(1, 2) - g) * xi_J('II', d, g, h) for d in DII]
    off = R(1, 2) if n is not None else -R(1, 2)
    if n is not None:
        cols.append(jac(n, g - R(1, 2), h - R(1, 2), eta))
    w = wronskian(cols, eta) if len(cols) > 1 else cols[0]
    out = cancel(simplify(w * C ** ((M + g + off) * Nn) * D ** ((Nn + h + off) * M)))
    return Poly(out, eta)


def coeffs(p):
    return [str(c) for c in reversed(p.all_coeffs())]


def show(name, p):
    print(name, coeffs(p))


if __name__ == '__main__':
    show('L g=3 D={1^II} Xi', build_L(R(3), [], [1]))
    for n in range(3):
        show(f'L g=3 D={{1^II}} P{n}', build_L(R(3), [], [1], n))
    show('L g=4 D={1^II} P0', build_L(R(4), [], [1], 0))
    show('J g=7/3 h=4 D={1^I} Xi', build_J(R(7, 3), R(4), [1], []))
    show('J g=7/3 h=4 D={1^I} P2', build_J(R(7, 3), R(4), [1], [], 2))
    show('L g=5 D={1^I,2^I} Xi', build_L(R(5), [1, 2], []))
    show('L g=8 D={2^II} Xi', build_L(R(8), [], [2]))
    show('J g=35/6 h=8 D={1^I,2^I} Xi', build_J(R(41, 6) - 1, R(7) + 1, [1, 2], []))
    show('J g=53/6 h=5 D={2^II} Xi', build_J(R(41, 6) + 2, R(7) - 2, [], [2]))
    show('L g=4 D={1^I,1^II} Xi', build_L(R(4), [1], [1]))
    show('L g=4 D={1^I,1^II} P3', build_L(R(4), [1], [1], 3))
    show('J g=16/3 h=38/7 D={1^I,2^II} Xi', build_J(R(16, 3), R(38, 7), [1], [2]))
    show('J g=16/3 h=38/7 D={1^I,2^II} P1', build_J(R(16, 3), R(38, 7), [1], [2], 1))
    show('L g=31/5 D={2^I,1^II,3^II} Xi', build_L(R(31, 5), [2], [1, 3]))

    # Deformed potential for L, D={1^II}, g=3 at x=1 via phi_{D,0}''/phi_{D,0}.
    g = R(3)
    xi0 = build_L(g, [], [1]).as_expr()
    xi1 = build_L(g + 1, [], [1]).as_expr()
    gs = g - 1
    phi = exp(-x ** 2 / 2) * x ** gs * xi1.subs(eta, x ** 2) / xi0.subs(eta, x ** 2)
    U = simplify(diff(phi, x, 2) / phi)
    base = x ** 2 + gs * (gs - 1) / x ** 2 - (1 + 2 * gs)
    print('U L g=3 D={1^II} x=1', N(U.subs(x, 1), 30))
    print('U_base L g=2 x=1', N(base.subs(x, 1), 30))
    print('U L g=3 D={1^II} x=3', N(U.subs(x, 3), 30))
