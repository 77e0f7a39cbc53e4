"""Compiled inner loops: scaled Riccati-Bessel values, uniform-asymptotic
mode eigenvalues, and the multipole block sums.

Everything here is a pure function of scalars plus the polynomial
coefficient arrays, so the jitted code can be shared freely between
worker processes. Magnitudes are carried either as exponentially scaled
values (direct regime) or as an explicit exponent (asymptotic regime);
only *differences* of exponents are ever fed to ``exp``.
"""

import math

from numba import njit

LN2 = math.log(2.0)
_UP = 2.0 ** 512
_DOWN = 2.0 ** -512

# status codes returned by the block sums
OK = 0
CAPPED = 1
BAD_EIGENVALUE = 2


@njit(cache=True)
def _clamp_noise(lam):
    """Zero out sign noise from exact cancellations (e.g. n = 1)."""
    if -1e-12 < lam < 0.0:
        return 0.0
    return lam


@njit(cache=True)
def s_hat(l, x):
    """Scaled function s_l(x) e^{-x} of the exponentially growing solution.

    Ascending series (all terms positive, so no cancellation); the
    prefactor x^{l+1}/(2l+1)!! and the partial sum carry a separate
    base-two exponent so arguments up to ~1e4 stay representable.
    """
    p = 1.0
    e2 = 0
    for j in range(l + 1):
        p *= x / (2.0 * j + 1.0)
        if p > 1e300:
            p *= _DOWN
            e2 += 512
        elif p < 1e-300:
            p *= _UP
            e2 -= 512
    ssum = 1.0
    term = 1.0
    x2h = 0.5 * x * x
    k = 0
    while True:
        k += 1
        term *= x2h / (k * (2.0 * l + 2.0 * k + 1.0))
        ssum += term
        if term < 1e-17 * ssum:
            break
        if ssum > 1e300:
            ssum *= _DOWN
            term *= _DOWN
            e2 += 512
    # merge all exponents before the single exp so no intermediate
    # product can overflow
    pm, pe = math.frexp(p)
    sm, se = math.frexp(ssum)
    return pm * sm * math.exp((e2 + pe + se) * LN2 - x)


@njit(cache=True)
def e_hats(l, x):
    """Scaled e_l(x) e^{+x} and e_{l-1}(x) e^{+x} as (b, a, exp2).

    Upward recurrence in the order; stable because e_l grows with l.
    The shared power-of-two exponent exp2 absorbs the growth.
    """
    if l == 0:
        return 1.0, 1.0, 0  # e_{-1} = e_0 = e^{-x}
    a = 1.0
    b = 1.0 + 1.0 / x
    e2 = 0
    for j in range(1, l):
        a, b = b, a + ((2.0 * j + 1.0) / x) * b
        if b > 1e300:
            a *= _DOWN
            b *= _DOWN
            e2 += 512
    return b, a, e2


@njit(cache=True)
def riccati_direct(l, x):
    """Scaled quadruple (s e^{-x}, e e^{+x}, s' e^{-x}, e' e^{+x}).

    Derivatives use the half-integer order recurrences
    s_l' = s_{l-1} - (l/x) s_l and e_l' = -e_{l-1} - (l/x) e_l.
    Values whose true magnitude leaves double range come back as 0/inf.
    """
    if l == 0:
        em2x = math.exp(-2.0 * x)
        return 0.5 * (1.0 - em2x), 1.0, 0.5 * (1.0 + em2x), -1.0
    s = s_hat(l, x)
    sm1 = s_hat(l - 1, x)
    ds = sm1 - (l / x) * s
    eb, ea, e2 = e_hats(l, x)
    de = -ea - (l / x) * eb
    if e2 != 0:
        eb = math.ldexp(eb, e2)
        de = math.ldexp(de, e2)
    return s, eb, ds, de


@njit(cache=True)
def frame_vals(x, nu):
    """Asymptotic frame (z, theta, eta) for argument x at order nu."""
    z = x / nu
    th = 1.0 / math.sqrt(1.0 + z * z)
    eta = 1.0 / th + math.log(z / (1.0 + 1.0 / th))
    return z, th, eta


@njit(cache=True)
def eval_abcd(th, nu, U, CT):
    """The four order-unity factors at one (theta, nu).

    U[k] holds the coefficients of u_k, CT[k] those of the derivative-side
    polynomials (u-shifted); row k has degree 3k. The alternating-sign
    series give the decaying-solution factors.
    """
    kmax = U.shape[0] - 1
    A = 0.0
    B = 0.0
    C = 0.0
    D = 0.0
    p = 1.0
    for k in range(kmax + 1):
        uk = 0.0
        ck = 0.0
        for j in range(3 * k, -1, -1):
            uk = uk * th + U[k, j]
            ck = ck * th + CT[k, j]
        uk *= p
        ck *= p
        A += uk
        C += ck
        if k & 1:
            B -= uk
            D -= ck
        else:
            B += uk
            D += ck
        p /= nu
    return A, B, C, D


@njit(cache=True)
def logderiv_s(l, x, cx, cl, U, CT):
    """s_l'(x)/s_l(x), asymptotic form beyond the (cx, cl) crossover."""
    if x > cx or l > cl:
        nu = l + 0.5
        z, th, eta = frame_vals(x, nu)
        A, B, C, D = eval_abcd(th, nu, U, CT)
        return math.sqrt(1.0 + z * z) / z * (C / A)
    s, e, ds, de = riccati_direct(l, x)
    return ds / s


@njit(cache=True)
def logderiv_e(l, x, cx, cl, U, CT):
    """e_l'(x)/e_l(x), asymptotic form beyond the (cx, cl) crossover."""
    if x > cx or l > cl:
        nu = l + 0.5
        z, th, eta = frame_vals(x, nu)
        A, B, C, D = eval_abcd(th, nu, U, CT)
        return -math.sqrt(1.0 + z * z) / z * (D / B)
    s, e, ds, de = riccati_direct(l, x)
    return de / e


@njit(cache=True)
def lambda_pair(l, x, y, n, cx, cl, U, CT):
    """(lambda_TM, lambda_TE) for multipole l at inner/outer arguments x < y.

    n is the refractive index at this frequency; n = inf selects the
    perfectly conducting limit. The net exponential carries
    e^{-2 nu (eta(y)-eta(x))} (asymptotic branch) or e^{-2(y-x)} (direct
    branch); both are < 1 for y > x, so no overflow is possible.
    """
    nu = l + 0.5
    metal = math.isinf(n)
    if x > cx or l > cl:
        zx, thx, ex = frame_vals(x, nu)
        zy, thy, ey = frame_vals(y, nu)
        Ax, Bx, Cx, Dx = eval_abcd(thx, nu, U, CT)
        Ay, By, Cy, Dy = eval_abcd(thy, nu, U, CT)
        expo = math.exp(-2.0 * nu * (ey - ex))
        if metal:
            return expo * (Cx * Dy) / (Dx * Cy), expo * (Ax * By) / (Bx * Ay)
        n2 = n * n
        znx = n * zx
        zny = n * zy
        gam = math.sqrt((1.0 + zx * zx) / (1.0 + znx * znx))
        dlt = math.sqrt((1.0 + zy * zy) / (1.0 + zny * zny))
        # material data enters only through the C/A and D/B ratios
        rho_s = logderiv_s(l, n * x, cx, cl, U, CT) * znx / math.sqrt(1.0 + znx * znx)
        rho_e = -logderiv_e(l, n * y, cx, cl, U, CT) * zny / math.sqrt(1.0 + zny * zny)
        ltm = expo * ((n2 * gam * Cx - Ax * rho_s) * (n2 * dlt * Dy - By * rho_e)) / (
            (n2 * gam * Dx + Bx * rho_s) * (n2 * dlt * Cy + Ay * rho_e))
        lte = expo * ((gam * Cx - Ax * rho_s) * (dlt * Dy - By * rho_e)) / (
            (gam * Dx + Bx * rho_s) * (dlt * Cy + Ay * rho_e))
        return _clamp_noise(ltm), _clamp_noise(lte)
    sx, ehx, dsx, dex = riccati_direct(l, x)
    sy, ehy, dsy, dey = riccati_direct(l, y)
    expo = math.exp(-2.0 * (y - x))
    if metal:
        return expo * (dsx * dey) / (dex * dsy), expo * (sx * ehy) / (ehx * sy)
    rs = logderiv_s(l, n * x, cx, cl, U, CT)
    qe = logderiv_e(l, n * y, cx, cl, U, CT)
    ltm = expo * ((n * dsx - sx * rs) * (n * dey - ehy * qe)) / (
        (n * dex - ehx * rs) * (n * dsy - sy * qe))
    lte = expo * ((dsx - n * sx * rs) * (dey - n * ehy * qe)) / (
        (dex - n * ehx * rs) * (dsy - n * sy * qe))
    return _clamp_noise(ltm), _clamp_noise(lte)


@njit(cache=True)
def lambda_tm_static(l, alpha, n):
    """Zero-frequency TM eigenvalue for a constant index (analytic limit)."""
    n2 = n * n
    return alpha ** (2 * l + 1) * l * (l + 1.0) * (n2 - 1.0) ** 2 / (
        (n2 * l + l + 1.0) * (n2 * (l + 1.0) + l))


@njit(cache=True)
def lambda_te_static_plasma(l, alpha, x_p, cx, cl, U, CT):
    """Zero-frequency TE eigenvalue in the plasma model.

    Finite because n(i w) w stays at the plasma scale: the material-side
    arguments freeze at x_p and x_p/alpha while the vacuum side goes
    static. Interpolates between 0 (x_p -> 0) and alpha^{2l+1}
    (x_p -> inf).
    """
    y_p = x_p / alpha
    rs = logderiv_s(l, x_p, cx, cl, U, CT)
    qe = logderiv_e(l, y_p, cx, cl, U, CT)
    lam = alpha ** (2 * l + 1) * (
        ((l + 1.0) - x_p * rs) * (l + y_p * qe)) / (
        ((l + x_p * rs) * ((l + 1.0) - y_p * qe)))
    return _clamp_noise(lam)


@njit(cache=True)
def static_block(alpha, n, x_p, metal_te, rel_tol, l_cap, cx, cl, U, CT):
    """Multipole sum of the m = 0 term (no half weight applied here).

    n = inf selects the conducting TM limit alpha^{2l+1}; metal_te = 1
    additionally counts the TE mode at the same value (conventional
    choice), metal_te = 2 evaluates the plasma-model TE limit at x_p.
    Returns (tm, te, terms, status).
    """
    tm = 0.0
    ctm = 0.0
    te = 0.0
    cte = 0.0
    small = 0
    metal = math.isinf(n)
    for l in range(1, l_cap + 1):
        if metal:
            ltm = alpha ** (2 * l + 1)
            if metal_te == 1:
                lte = ltm
            elif metal_te == 2:
                lte = lambda_te_static_plasma(l, alpha, x_p, cx, cl, U, CT)
            else:
                lte = 0.0
        else:
            ltm = lambda_tm_static(l, alpha, n)
            lte = 0.0
        if ltm >= 1.0 or lte >= 1.0:
            return tm, te, l, BAD_EIGENVALUE
        w = 2.0 * l + 1.0
        t1 = w * math.log1p(-ltm)
        t2 = w * math.log1p(-lte)
        yk = t1 - ctm
        tk = tm + yk
        ctm = (tk - tm) - yk
        tm = tk
        yk = t2 - cte
        tk = te + yk
        cte = (tk - te) - yk
        te = tk
        if abs(t1 + t2) < rel_tol * abs(tm + te):
            small += 1
            if small >= 3:
                return tm, te, l, OK
        else:
            small = 0
    return tm, te, l_cap, CAPPED


@njit(cache=True)
def l_block(x, y, n, rel_tol, l_cap, s_ref, cx, cl, U, CT):
    """Multipole sum at one frequency, compensated accumulation.

    Stops after three consecutive non-increasing terms smaller than
    rel_tol times the larger of s_ref (magnitude of the running outer
    sum) and the local partial sum. Returns (tm, te, terms, status).
    """
    tm = 0.0
    ctm = 0.0
    te = 0.0
    cte = 0.0
    small = 0
    prev = math.inf
    for l in range(1, l_cap + 1):
        ltm, lte = lambda_pair(l, x, y, n, cx, cl, U, CT)
        if ltm >= 1.0 or lte >= 1.0 or ltm < 0.0 or lte < 0.0:
            return tm, te, l, BAD_EIGENVALUE
        w = 2.0 * l + 1.0
        t1 = w * math.log1p(-ltm)
        t2 = w * math.log1p(-lte)
        yk = t1 - ctm
        tk = tm + yk
        ctm = (tk - tm) - yk
        tm = tk
        yk = t2 - cte
        tk = te + yk
        cte = (tk - te) - yk
        te = tk
        a = abs(t1 + t2)
        ref = abs(tm + te)
        if s_ref > ref:
            ref = s_ref
        if a <= prev and a < rel_tol * ref:
            small += 1
            if small >= 3:
                return tm, te, l, OK
        else:
            small = 0
        prev = a
    return tm, te, l_cap, CAPPED
