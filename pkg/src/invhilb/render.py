"""LaTeX rendering of polynomials and factored series."""

from __future__ import annotations

from fractions import Fraction

from .molien import GammaSpec
from .partitions import Partition
from .series import DensePoly, FactoredSeries


def _t_power(d: int) -> str:
    if d == 0:
        return ""
    if d == 1:
        return "t"
    return f"t^{d}" if d < 10 else f"t^{{{d}}}"


def _coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"\\frac{{{c.numerator}}}{{{c.denominator}}}"


def latex_poly(p: DensePoly) -> str:
    if p.is_zero():
        return "0"
    out = ""
    for d, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mono = _t_power(d)
        mag = abs(c)
        body = mono if (mono and mag == 1) else _coeff(mag) + mono
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += ("-" if c < 0 else "+") + body
    return out


def latex_denominator(denom: dict[int, int]) -> str:
    out = ""
    for i, e in sorted(denom.items()):
        out += f"(1-{_t_power(i)})"
        if e != 1:
            out += f"^{e}" if e < 10 else f"^{{{e}}}"
    return out


def latex_factored(f: FactoredSeries) -> str:
    if not f.denom:
        return latex_poly(f.numerator)
    return f"\\dfrac{{{latex_poly(f.numerator)}}}{{{latex_denominator(f.denom)}}}"


def latex_hilbert(spec: GammaSpec, series: FactoredSeries) -> str:
    if spec.k == 1:
        n = spec.ns[0]
        group = f"S_{n}" if n < 10 else f"S_{{{n}}}"
        lhs = f"H(K[V\\oplus V]^{{{group}}},t)"
    else:
        group = "\\times ".join(f"S_{{{n}}}" for n in spec.ns)
        lhs = f"H(K[V_\\Gamma\\oplus V_\\Gamma]^{{{group}}},t)"
    return f"{lhs}={latex_factored(series)}"


def latex_schur(lam: Partition, series: FactoredSeries) -> str:
    return f"\\{{{','.join(map(str, lam.parts))}:t\\}}={latex_factored(series)}"
