"""Named self-check suites used by ``invhilb verify``."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Callable, Iterator

from . import molien, orbit, partitions, schur
from .series import DensePoly, FactoredSeries, expand, factored_equal, phi, phi_squared_denom


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _run(name: str, fn: Callable[[], bool | tuple[bool, str]]) -> Check:
    try:
        out = fn()
    except Exception as exc:  # a crashing check is a failed check
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    if isinstance(out, tuple):
        return Check(name, bool(out[0]), out[1])
    return Check(name, bool(out))


def identities_suite(n_max: int) -> Iterator[Check]:
    n_max = min(n_max, molien.MAX_SERIES_N)
    for n in range(1, n_max + 1):
        yield _run(f"three-route equality n={n}", lambda n=n: molien.three_route_equal(n))
        yield _run(
            f"hilbert_single n={n} equals 1/phi_n",
            lambda n=n: factored_equal(molien.hilbert_single(n), FactoredSeries([1], {i: 1 for i in range(1, n + 1)})),
        )

        def stats(n=n):
            f = molien.f_maj(n)
            return (
                f(1) == factorial(n) and f.degree == n * (n - 1) and f.is_palindromic(),
                f"f(1)={f(1)} deg={f.degree}",
            )

        yield _run(f"f_{n}(1) = n!, deg = n(n-1), palindromic", stats)
    for n in range(0, min(n_max, 6) + 1):
        def carlitz(n=n):
            num = molien.f_maj(n) if n else DensePoly([1])
            return molien.carlitz_coefficient(n, 40) == expand(FactoredSeries(num, phi_squared_denom([n] if n else [])), 40)

        yield _run(f"product coefficient x^{n} through t^40", carlitz)
    for n in range(1, min(n_max, 6) + 1):
        for lam in partitions.enumerate_partitions(n):
            yield _run(
                f"schur cross-route {lam}",
                lambda lam=lam: expand(schur.schur_q(lam), 30) == schur.schur_q_via_characters(lam, 30),
            )
    for n in range(1, min(n_max, 3) + 1):
        yield _run(f"Cauchy identity n={n}, k=l=3", lambda n=n: schur.cauchy_check(n, 3, 3))


def characters_suite(n_max: int) -> Iterator[Check]:
    for n in range(1, min(n_max, partitions.MAX_CHARACTER_N) + 1):
        table = partitions.character_table(n)
        ident = partitions.Partition((1,) * n)
        yield _run(f"column orthogonality n={n}", lambda t=table: partitions.orthogonality_check(t))
        yield _run(f"row orthogonality n={n}", lambda t=table: partitions.row_orthogonality_check(t))
        yield _run(
            f"hook-length dimensions n={n}",
            lambda t=table: all(t.value(lam, ident) == partitions.hook_dimension(lam) for lam in t.partitions),
        )
        yield _run(
            f"sign twist under conjugation n={n}",
            lambda t=table: all(
                t.value(partitions.conjugate(lam), rho) == partitions.sign(rho) * t.value(lam, rho)
                for lam in t.partitions
                for rho in t.partitions
            ),
        )


ORBIT_SPECS = [(2,), (3,), (4,), (2, 2), (2, 3)]


def orbit_suite(n_max: int) -> Iterator[Check]:
    for ns in ORBIT_SPECS:
        if max(ns) > n_max:
            continue
        spec = molien.GammaSpec(ns)

        def consistency(spec=spec):
            series = expand(molien.hilbert_gamma(spec), 6)
            dims = [orbit.invariant_dimension(spec, d) for d in range(7)]
            return dims == [int(c) for c in series.coeffs], f"dims={dims}"

        yield _run(f"ring/series consistency spec={spec}, d<=6", consistency)
    for n in range(2, min(n_max, 3) + 1):
        spec = molien.GammaSpec((n,))
        yield _run(f"generation spec=({n}), d<=6", lambda spec=spec: orbit.verify_generation(spec, 6))
    if n_max >= 2:
        spec2 = molien.GammaSpec((2,))
        yield _run(
            "mutant without P_11 fails at d<=2",
            lambda: not orbit.verify_generation(spec2, 2, orbit.fundamental_generators(spec2, exclude=[(1, 1, 1)])),
        )
    if n_max >= 3:
        spec3 = molien.GammaSpec((3,))
        yield _run(
            "degree-2 generators fail for spec=(3)",
            lambda: not orbit.verify_generation(spec3, 3, orbit.fundamental_generators(spec3, max_degree=2)),
        )
    for ns in [(2,), (3,), (2, 2)]:
        if max(ns) <= n_max:
            spec = molien.GammaSpec(ns)
            yield _run(f"algebraic independence spec={spec}", lambda spec=spec: orbit.verify_algebraic_independence(spec))
    for n in range(2, min(n_max, 4) + 1):
        spec = molien.GammaSpec((n,))
        yield _run(
            f"secondary independence n={n}", lambda spec=spec: orbit.verify_secondary_independence(spec)
        )


SUITES = {
    "identities": identities_suite,
    "characters": characters_suite,
    "orbit": orbit_suite,
}


def run_suite(name: str, n_max: int) -> list[Check]:
    if name == "all":
        return [c for suite in SUITES.values() for c in suite(n_max)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return list(SUITES[name](n_max))
