"""Empirical validators for the stated identities on d_r(C_n, i).

Every check returns a :class:`CheckReport`.  Counterexamples are recorded as
``(n, i, expected, got)`` plus a short label naming the item that failed;
at most :data:`MAX_COUNTEREXAMPLES` are kept, but ``failures`` counts all.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, NamedTuple

from .fixtures import TABLE_1, TABLE_1_MAX_ORDER
from .genfunc import expand
from .graph_core import (
    CoefficientRow,
    complement_component_sizes,
    count_rds_by_cardinality,
    enumerate_rds,
    make_cycle,
    make_path,
)
from .rdp_recurrence import d_r, gamma_r, is_empty_class, rdp_table, term_count, total_rds_count
from .rds_construct import FamilyBuilder

MAX_COUNTEREXAMPLES = 20

ORACLE_MAX = 20
CONSTRUCT_MAX = 16
PATH_MAX = 18


class Counterexample(NamedTuple):
    n: int
    i: int | None
    expected: object
    got: object
    item: str = ""


@dataclass
class CheckReport:
    check_name: str
    range: str
    counterexamples: list[Counterexample] = field(default_factory=list)
    failures: int = 0
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def expect(self, ok: bool, n: int, i: int | None, expected: object, got: object, item: str = "") -> None:
        self.checked += 1
        if ok:
            return
        self.failures += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(Counterexample(n, i, expected, got, item))

    def equal(self, n: int, i: int | None, expected: object, got: object, item: str = "") -> None:
        self.expect(expected == got, n, i, expected, got, item)

    def to_dict(self) -> dict:
        return {
            "check": self.check_name,
            "range": self.range,
            "status": self.status,
            "checked": self.checked,
            "failures": self.failures,
            "counterexamples": [
                {"n": c.n, "i": c.i, "expected": str(c.expected), "got": str(c.got), "item": c.item}
                for c in self.counterexamples
            ],
        }

    def summary(self) -> str:
        line = f"{self.status.upper():4}  {self.check_name:<22} {self.range}  ({self.checked} checks)"
        if not self.passed:
            shown = ", ".join(
                f"{c.item + ' ' if c.item else ''}(n={c.n}, i={c.i}): expected {c.expected}, got {c.got}"
                for c in self.counterexamples[:3]
            )
            line += f"\n      {self.failures} failure(s): {shown}"
        return line


@lru_cache(maxsize=None)
def oracle_cycle_row(n: int) -> CoefficientRow:
    return count_rds_by_cardinality(make_cycle(n))


@lru_cache(maxsize=None)
def oracle_path_row(n: int) -> CoefficientRow:
    return count_rds_by_cardinality(make_path(n))


@lru_cache(maxsize=None)
def oracle_cycle_sets(n: int, i: int) -> tuple[tuple[int, ...], ...]:
    return tuple(enumerate_rds(make_cycle(n), i))


_DEFAULT_BUILDER = FamilyBuilder(check=True)


def verify_table(
    n_max: int = TABLE_1_MAX_ORDER,
    fixture: dict[tuple[int, int], int] | None = None,
    *,
    oracle_max: int = ORACLE_MAX,
    construct_max: int = CONSTRUCT_MAX,
) -> CheckReport:
    """Compare every method's row against the reference table.

    Counterexamples read ``(n, i, computed, fixture)``; identical
    discrepancies from several methods collapse into one entry.
    """
    if not 3 <= n_max <= TABLE_1_MAX_ORDER:
        raise ValueError(f"table check needs 3 <= n_max <= {TABLE_1_MAX_ORDER}")
    table = TABLE_1 if fixture is None else fixture
    report = CheckReport("table", f"1<=n<={n_max}")
    rec = rdp_table(n_max)
    series = expand(max(n_max, 4))
    seen: set[tuple] = set()
    for n in range(1, n_max + 1):
        methods: dict[str, CoefficientRow] = {"recurrence": rec[n]}
        if n >= 4:
            methods["genfunc"] = series.row(n)
        if 3 <= n <= oracle_max:
            methods["bruteforce"] = oracle_cycle_row(n)
        if 3 <= n <= construct_max:
            methods["construct"] = CoefficientRow(
                n, {i: len(_DEFAULT_BUILDER.masks(n, i)) for i in range(n + 1)}
            )
        for i in range(1, n + 1):
            published = table[(n, i)]
            for name, row in methods.items():
                key = (n, i, row[i], published)
                ok = row[i] == published
                if not ok and key in seen:
                    continue
                seen.add(key)
                report.expect(ok, n, i, row[i], published, name)
    return report


def verify_emptiness_lemmas(n_max: int = 18, *, oracle_max: int = 18) -> CheckReport:
    """Closed-form emptiness, the neighbour-class implications and the five pattern biconditionals.

    Emptiness is read from recurrence counts; for ``n <= oracle_max`` the
    closed form is also checked against brute-force counts.  The pattern
    biconditionals are swept from n = 4, where the recursive structure of
    C_n^i starts.
    """
    if n_max < 6:
        raise ValueError("emptiness check needs n_max >= 6")
    report = CheckReport("emptiness", f"3<=n<={n_max}")
    table = rdp_table(n_max + 2)

    def E(n: int, i: int) -> bool:
        return d_r(table, n, i) == 0

    def g(n: int) -> int:
        return n - 2 * (n // 3)

    for n in range(3, n_max + 1):
        oracle = oracle_cycle_row(n) if n <= oracle_max else None
        for i in range(-1, n + 3):
            closed = is_empty_class(n, i)
            report.equal(n, i, closed, E(n, i), "closed form")
            if oracle is not None:
                report.equal(n, i, closed, oracle[i] == 0, "closed form/oracle")
                if (n - i) % 2 == 1:
                    report.equal(n, i, 0, oracle[i], "parity/oracle")

            report.expect(
                E(n, i) or (E(n, i - 1) and E(n, i + 1) and E(n - 1, i) and E(n + 1, i)),
                n, i, True, False, "implication (i)",
            )
            report.expect(
                not (E(n - 1, i - 1) and E(n - 2, i - 2)) or E(n - 3, i - 3), n, i, True, False, "implication (ii)"
            )
            report.expect(
                not (E(n, i) and E(n + 2, i - 2)) or E(n + 1, i - 1), n, i, True, False, "implication (iii)"
            )
            report.expect(
                E(n, i) or E(n - 2, i) or E(n - 1, i), n, i, True, False, "implication (iv)"
            )

            if n < 4 or E(n, i):
                continue
            items = {
                "pattern (i)": (
                    E(n - 1, i - 1) and E(n - 2, i - 1) and not E(n - 3, i - 1),
                    n % 3 == 0 and i == n // 3,
                ),
                "pattern (ii)": (E(n - 2, i - 1) and E(n - 3, i - 1) and not E(n - 1, i - 1), i == n),
                "pattern (iii)": (
                    not E(n - 1, i - 1) and not E(n - 3, i - 1) and E(n - 2, i - 2),
                    n % 3 == 1 and i == n // 3 + 1,
                ),
                "pattern (iv)": (
                    not E(n - 1, i - 1) and not E(n - 3, i - 1) and E(n - 5, i - 1),
                    i == n - 2,
                ),
                "pattern (v)": (
                    not E(n - 1, i - 1) and not E(n - 3, i - 1),
                    n - 2 * ((n - 1) // 3) <= i <= n - 2,
                ),
            }
            for label, (lhs, rhs) in items.items():
                report.equal(n, i, rhs, lhs, label)
        report.expect(g(n) % 2 == n % 2, n, None, n % 2, g(n) % 2, "gamma parity")
    return report


def verify_theorem6(n_max: int = 40) -> CheckReport:
    """Items (i)-(vii) on recurrence values; item (i) is also compared with the series."""
    if n_max < 12:
        raise ValueError("coefficient identity check needs n_max >= 12")
    report = CheckReport("theorem6", f"n<={n_max}")
    table = rdp_table(n_max)
    series = expand(n_max)

    def d(n: int, i: int) -> int:
        return d_r(table, n, i)

    # (i)
    for n in range(4, n_max + 1):
        for i in range(gamma_r(n), n + 1):
            rhs = d(n - 3, i - 1) + d(n - 1, i - 1)
            report.equal(n, i, rhs, d(n, i), "(i)")
            if n - 3 >= 4:
                report.equal(
                    n, i, series.coeffs[n - 3].get(i - 1, 0) + series.coeffs[n - 1].get(i - 1, 0),
                    series.coeffs[n].get(i, 0), "(i)/genfunc",
                )
    # (ii)
    for k in range(1, (n_max - 1) // 3 + 1):
        report.equal(3 * k + 1, k + 1, 3 * k + 1, d(3 * k + 1, k + 1), "(ii)")
    # (iii)
    for k in range(2, (n_max + 1) // 3 + 1):
        report.equal(3 * k - 1, k + 1, k * (3 * k - 1) // 2, d(3 * k - 1, k + 1), "(iii)")
    # (iv)
    for n in range(5, n_max + 1):
        report.equal(n, n - 4, n * (n - 5) // 2, d(n, n - 4), "(iv)")
    # (v)
    for k in range(4, n_max // 3 + 1):
        col = sum(d(m, k) for m in range(k, 3 * k + 1))
        prev = sum(d(m, k - 1) for m in range(k - 1, 3 * (k - 1) + 1))
        report.equal(k, None, 2 * prev, col, "(v)")
    # (vi): entries off the parity class are 0 on both sides and are skipped
    for k in range(3, n_max // 3 + 1):
        if k % 2 == 0:
            rising, falling = range(k, 2 * k - 1), range(2 * k, 3 * k - 1)
        else:
            rising, falling = range(k, 2 * k), range(2 * k + 1, 3 * k - 1)
        for m in rising:
            if (m - k) % 2 == 0:
                report.expect(d(m, k) < d(m + 2, k), m, k, f"< {d(m + 2, k)}", d(m, k), "(vi)")
        for m in falling:
            if (m - k) % 2 == 0:
                report.expect(d(m, k) > d(m + 2, k), m, k, f"> {d(m + 2, k)}", d(m, k), "(vi)")
    # (vii)
    for n in range(1, n_max + 1):
        report.equal(n, None, table[n].total(), total_rds_count(n), "(vii)")
    return report


def verify_observation(n_max: int = 60) -> CheckReport:
    """The four closed forms d(3k,k)=3, d(n,n)=1, d(n,n-1)=0, d(n,n-2)=n."""
    report = CheckReport("observation", f"3<=n<={n_max}")
    table = rdp_table(n_max)
    for k in range(1, n_max // 3 + 1):
        report.equal(3 * k, k, 3, d_r(table, 3 * k, k), "(i)")
    for n in range(3, n_max + 1):
        report.equal(n, n, 1, d_r(table, n, n), "(ii)")
        report.equal(n, n - 1, 0, d_r(table, n, n - 1), "(iii)")
        report.equal(n, n - 2, n, d_r(table, n, n - 2), "(iv)")
    return report


def verify_term_count(n_max: int = 200) -> CheckReport:
    """Term count 1 + floor(n/3), extreme exponents and parity of every row."""
    report = CheckReport("term_count", f"3<=n<={n_max}")
    table = rdp_table(n_max)
    for n in range(3, n_max + 1):
        row = table[n]
        report.equal(n, None, term_count(n), len(row), "term count")
        report.equal(n, None, gamma_r(n), min(row), "min exponent")
        report.equal(n, None, n, max(row), "max exponent")
        odd = [i for i in row if (n - i) % 2]
        report.equal(n, None, [], odd, "parity")
    return report


def verify_lemma5(n_max: int = 16) -> CheckReport:
    """Every RDS from the oracle leaves only K_2 components, (n - k)/2 of them."""
    if not 3 <= n_max <= PATH_MAX:
        raise ValueError(f"complement structure check needs 3 <= n_max <= {PATH_MAX}")
    report = CheckReport("lemma5", f"3<=n<={n_max}")
    for n in range(3, n_max + 1):
        g = make_cycle(n)
        for k in range(n + 1):
            for s in oracle_cycle_sets(n, k):
                sizes = complement_component_sizes(g, s)
                expected = (2,) * ((n - k) // 2)
                report.equal(n, k, expected, sizes, f"S={set(s)}")
            report.equal(n, k, oracle_cycle_row(n)[k], len(oracle_cycle_sets(n, k)), "enumeration")
    return report


def verify_cycle_path_relation(n_max: int = PATH_MAX) -> CheckReport:
    """D_r(C_n) = D_r(P_n) + 3 D_r(P_{n-2}) with path rows from brute force."""
    if not 5 <= n_max <= PATH_MAX:
        raise ValueError(f"cycle-path check needs 5 <= n_max <= {PATH_MAX}")
    report = CheckReport("cyclepath", f"5<=n<={n_max}")
    table = rdp_table(n_max)
    for n in range(5, n_max + 1):
        p_n, p_n2 = oracle_path_row(n), oracle_path_row(n - 2)
        for i in range(n + 1):
            report.equal(n, i, table[n][i], p_n[i] + 3 * p_n2[i])
    return report


def verify_genfunc(n_max: int = 300) -> CheckReport:
    """Series coefficients equal recurrence rows for 4 <= n <= n_max, with the stated support."""
    report = CheckReport("genfunc", f"4<=n<={n_max}")
    series = expand(n_max)
    table = rdp_table(n_max)
    for n in range(4, n_max + 1):
        row = series.row(n)
        report.equal(n, None, table[n], row, "rows")
        for i, c in row.items():
            report.expect(gamma_r(n) <= i <= n and (n - i) % 2 == 0, n, i, "in support", c, "support")
        report.equal(n, n, 1, row[n], "top coefficient")
        report.equal(n, None, n, max(row), "degree")
    return report


def verify_oracle_agreement(n_max: int = 18) -> CheckReport:
    report = CheckReport("oracle", f"3<=n<={n_max}")
    table = rdp_table(n_max)
    for n in range(3, n_max + 1):
        report.equal(n, None, oracle_cycle_row(n), table[n], "recurrence vs bruteforce")
    return report


def verify_construct_sets(n_max: int = CONSTRUCT_MAX, builder: FamilyBuilder | None = None) -> CheckReport:
    """Constructed families equal oracle families set for set, and match the counts."""
    builder = builder or _DEFAULT_BUILDER
    report = CheckReport("construct", f"3<=n<={n_max}")
    table = rdp_table(n_max)
    for n in range(3, n_max + 1):
        for i in range(n + 1):
            try:
                built = builder.family(n, i).sets
            except Exception as exc:  # a broken rule set may raise mid-build
                report.expect(False, n, i, "family", f"{type(exc).__name__}: {exc}", "build")
                continue
            report.equal(n, i, oracle_cycle_sets(n, i), built, "sets")
            report.equal(n, i, table[n][i], len(built), "count")
    return report


Check = Callable[[int], CheckReport]

#: suite name -> [(check, default n_max, largest n_max the check accepts)]
SUITES: dict[str, list[tuple[Check, int, int | None]]] = {
    "table": [(verify_table, TABLE_1_MAX_ORDER, TABLE_1_MAX_ORDER)],
    "emptiness": [(verify_emptiness_lemmas, 18, None)],
    "theorem6": [(verify_theorem6, 40, None), (verify_observation, 60, None), (verify_term_count, 200, None)],
    "lemma5": [(verify_lemma5, 16, PATH_MAX)],
    "cyclepath": [(verify_cycle_path_relation, PATH_MAX, PATH_MAX)],
    "genfunc": [(verify_genfunc, 300, None)],
    "methods": [(verify_oracle_agreement, 18, ORACLE_MAX), (verify_construct_sets, CONSTRUCT_MAX, CONSTRUCT_MAX)],
}
SUITE_NAMES = ("all", *SUITES)


def run_suite(name: str = "all", n_max: int | None = None) -> list[CheckReport]:
    """Run one named suite (or all of them).

    For ``all`` a given ``n_max`` is capped at each check's own maximum; for
    a single suite an out-of-range ``n_max`` raises ``ValueError``.
    """
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    selected = [s for key in SUITES for s in SUITES[key]] if name == "all" else SUITES[name]
    reports = []
    for check, default, cap in selected:
        value = default if n_max is None else n_max
        if cap is not None and value > cap:
            if name != "all":
                raise ValueError(f"{check.__name__} accepts n_max <= {cap}, got {value}")
            value = cap
        reports.append(check(value))
    return reports
