"""Identity sweeps shared by the ``verify`` subcommand.

Each suite yields :class:`Check` records; :func:`first_failure` stops at the
first one whose two sides disagree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from hkdet.closedforms import (
    corollary_lhs,
    corollary_rhs,
    hk_closed,
    hk_m2_reference,
    mq_closed,
    mq_closed_from_zero,
    nq_col_bounded_closed,
)
from hkdet.exactcomb import (
    CompositionSpec,
    count_bounded_compositions,
    count_bounded_compositions_oracle,
)
from hkdet.polyfit import interpolate_hk
from hkdet.staircase import INF, CountSpec, Kind, count_oracle


@dataclass(frozen=True)
class Check:
    identity: str
    params: dict = field(hash=False)
    left: object
    right: object

    @property
    def ok(self) -> bool:
        return self.left == self.right

    def describe(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.identity} ({args}): {self.left} != {self.right}"


@dataclass(frozen=True)
class Limits:
    max_m: int
    max_n: int
    max_q: int


# per-suite defaults; the CLI overrides individual fields
DEFAULT_LIMITS = {
    "oracle": Limits(3, 3, 5),
    "corollary": Limits(1, 10, 50),
    "m2": Limits(2, 8, 30),
    "symmetry": Limits(6, 6, 30),
    # max_m -> largest z, max_n -> largest b, max_q -> largest w
    "compositions": Limits(6, 5, 12),
    # max_q -> largest q compared against the fitted polynomial
    "polyfit": Limits(4, 4, 100),
}

SUITES = ("all",) + tuple(DEFAULT_LIMITS)


def oracle_checks(lim: Limits, work_budget: int | None = None) -> Iterator[Check]:
    for m in range(1, lim.max_m + 1):
        for n in range(1, lim.max_n + 1):
            for q in range(1, lim.max_q + 1):
                p = dict(m=m, n=n, q=q)
                nq = count_oracle(CountSpec.uniform(m, n, q, INF, q - 1), work_budget)
                yield Check("N_q(inf; q-1) closed vs enumeration", p,
                            nq_col_bounded_closed(m, n, q), nq)
                mq = count_oracle(
                    CountSpec.uniform(m, n, q, q - 1, q - 1, Kind.M_TYPE), work_budget
                )
                yield Check("M_q(q-1; q-1) closed vs enumeration", p, mq_closed(m, n, q), mq)
                hk = count_oracle(CountSpec.uniform(m, n, q), work_budget)
                yield Check("HK closed vs enumeration", p, hk_closed(m, n, q), hk)
                yield Check("N_q(inf; q-1) + M_q(q-1; q-1) vs HK enumeration", p,
                            nq + mq, hk)


def corollary_checks(lim: Limits) -> Iterator[Check]:
    for n in range(1, lim.max_n + 1):
        for q in range(0, lim.max_q + 1):
            yield Check("corollary lhs vs rhs", dict(n=n, q=q),
                        corollary_lhs(n, q), corollary_rhs(n, q))


def m2_checks(lim: Limits) -> Iterator[Check]:
    for n in range(1, lim.max_n + 1):
        for q in range(0, lim.max_q + 1):
            yield Check("hk_closed(2, n, q) vs m=2 reference", dict(n=n, q=q),
                        hk_closed(2, n, q), hk_m2_reference(n, q))


def symmetry_checks(lim: Limits) -> Iterator[Check]:
    for m in range(1, lim.max_m + 1):
        for n in range(1, lim.max_n + 1):
            for q in range(0, lim.max_q + 1):
                yield Check("hk_closed transpose symmetry", dict(m=m, n=n, q=q),
                            hk_closed(m, n, q), hk_closed(n, m, q))
                yield Check("M_q sum from j=1 vs j=0", dict(m=m, n=n, q=q),
                            mq_closed(m, n, q), mq_closed_from_zero(m, n, q))
                if q >= 1:
                    spec = CompositionSpec(n, m + n - 1, n * (q - 1), q)
                    yield Check("N_q(inf; q-1) vs bounded compositions", dict(m=m, n=n, q=q),
                                nq_col_bounded_closed(m, n, q),
                                count_bounded_compositions(spec))


def composition_checks(lim: Limits, work_budget: int | None = None) -> Iterator[Check]:
    for b in range(1, lim.max_n + 1):
        for a in range(0, b + 1):
            for w in range(-1, lim.max_q + 1):
                for z in range(1, lim.max_m + 1):
                    spec = CompositionSpec(a, b, w, z)
                    yield Check("bounded compositions closed vs enumeration",
                                dict(a=a, b=b, w=w, z=z),
                                count_bounded_compositions(spec),
                                count_bounded_compositions_oracle(spec, work_budget))


def polyfit_checks(lim: Limits) -> Iterator[Check]:
    for m in range(1, lim.max_m + 1):
        for n in range(1, lim.max_n + 1):
            poly = interpolate_hk(m, n)
            yield Check("fitted degree vs m+n-1", dict(m=m, n=n), poly.degree, m + n - 1)
            for q in range(1, lim.max_q + 1):
                yield Check("fitted polynomial vs hk_closed", dict(m=m, n=n, q=q),
                            poly(q), hk_closed(m, n, q))


def suite_checks(
    suite: str, lim: Limits, work_budget: int | None = None
) -> Iterator[Check]:
    builders: dict[str, Callable[[], Iterator[Check]]] = {
        "oracle": lambda: oracle_checks(lim, work_budget),
        "corollary": lambda: corollary_checks(lim),
        "m2": lambda: m2_checks(lim),
        "symmetry": lambda: symmetry_checks(lim),
        "compositions": lambda: composition_checks(lim, work_budget),
        "polyfit": lambda: polyfit_checks(lim),
    }
    return builders[suite]()


def first_failure(checks: Iterator[Check]) -> tuple[int, Check | None]:
    """Run checks until one fails; returns (number run, failing check or None)."""
    count = 0
    for check in checks:
        count += 1
        if not check.ok:
            return count, check
    return count, None
