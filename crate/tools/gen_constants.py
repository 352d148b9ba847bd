"""Regenerates crates/core/src/special/tables.rs from mpmath."""
import mpmath as mp

mp.mp.dps = 200


def dd(x):
    hi = float(x)
    lo = float(x - mp.mpf(hi))
    return hi, lo


def fmt_dd(x):
    hi, lo = dd(x)
    return f"DoubleDouble::from_parts({hi!r}, {lo!r})"


def psi_series(n):
    # Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p), expanded in q = p - 1/2:
    # Psi = -cos(2 pi q^2 - 5 pi / 8) / cos(2 pi q)
    a = 2 * mp.pi
    b = 5 * mp.pi / 8
    num = [mp.mpf(0)] * (n + 1)
    j = 0
    while 4 * j <= n:
        num[4 * j] += mp.cos(b) * (-1) ** j * a ** (2 * j) / mp.factorial(2 * j)
        if 4 * j + 2 <= n:
            num[4 * j + 2] += mp.sin(b) * (-1) ** j * a ** (2 * j + 1) / mp.factorial(2 * j + 1)
        j += 1
    num = [-c for c in num]
    den = [mp.mpf(0)] * (n + 1)
    for j in range(0, n // 2 + 1):
        den[2 * j] = (-1) ** j * (2 * mp.pi) ** (2 * j) / mp.factorial(2 * j)
    out = [mp.mpf(0)] * (n + 1)
    for k in range(n + 1):
        s = num[k]
        for i in range(1, k + 1):
            s -= den[i] * out[k - i]
        out[k] = s / den[0]
    return out


def deriv(series, m):
    out = []
    for k in range(m, len(series)):
        out.append(series[k] * mp.factorial(k) / mp.factorial(k - m))
    return out


def combine(terms, length):
    acc = [mp.mpf(0)] * length
    for coef, ser in terms:
        for i in range(min(length, len(ser))):
            acc[i] += coef * ser[i]
    return acc


def trim(ser, tol=mp.mpf("1e-22")):
    last = 0
    for i, c in enumerate(ser):
        if abs(c) > tol:
            last = i
    return ser[: last + 1]


def main():
    pi = mp.pi
    lines = []
    lines.append("// Generated by tools/gen_constants.py. Do not edit by hand.")
    lines.append("")
    lines.append("use crate::precision::DoubleDouble;")
    lines.append("")
    for name, val in [
        ("PI", pi),
        ("LN_2", mp.log(2)),
        ("LN_PI", mp.log(pi)),
        ("LN_2PI", mp.log(2 * pi)),
        ("EULER_GAMMA", mp.euler),
    ]:
        lines.append(f"pub const DD_{name}: DoubleDouble = {fmt_dd(val)};")
    lines.append("")

    n_em = 90
    lines.append("/// `B_{2k} / (2k)!` for `k = 1..`.")
    lines.append(f"pub const EM_BERNOULLI: [DoubleDouble; {n_em}] = [")
    for k in range(1, n_em + 1):
        v = mp.bernoulli(2 * k) / mp.factorial(2 * k)
        lines.append(f"    {fmt_dd(v)},")
    lines.append("];")
    lines.append("")

    n_st = 40
    lines.append("/// Stirling series coefficients `B_{2k} / (2k (2k - 1))` for `k = 1..`.")
    lines.append(f"pub const STIRLING: [DoubleDouble; {n_st}] = [")
    for k in range(1, n_st + 1):
        v = mp.bernoulli(2 * k) / (2 * k * (2 * k - 1))
        lines.append(f"    {fmt_dd(v)},")
    lines.append("];")
    lines.append("")

    length = 140
    psi = psi_series(length + 14)
    d = {m: deriv(psi, m) for m in range(0, 13)}
    c = [
        combine([(1, d[0])], length),
        combine([(-1 / (96 * pi**2), d[3])], length),
        combine([(1 / (64 * pi**2), d[2]), (1 / (18432 * pi**4), d[6])], length),
        combine(
            [
                (-1 / (64 * pi**2), d[1]),
                (-1 / (3840 * pi**4), d[5]),
                (-1 / (5308416 * pi**6), d[9]),
            ],
            length,
        ),
        combine(
            [
                (1 / (128 * pi**2), d[0]),
                (19 / (24576 * pi**4), d[4]),
                (11 / (5898240 * pi**6), d[8]),
                (1 / (2038431744 * pi**8), d[12]),
            ],
            length,
        ),
    ]
    lines.append("/// Riemann-Siegel correction polynomials `C_k` in powers of `p - 1/2`.")
    for k, ser in enumerate(c):
        ser = trim(ser)
        body = ", ".join(repr(float(x)) for x in ser)
        lines.append(f"pub const RS_C{k}: [f64; {len(ser)}] = [{body}];")
    lines.append("")
    print("\n".join(lines))


if __name__ == "__main__":
    main()
