"""Theorem-suite driver: runs every property check over a list of groups.

Each check yields one row ``(group, theorem, p, k, passed, detail, millis)``.
Checks that do not depend on a query leave ``p`` and ``k`` empty.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import gcd
from pathlib import Path

from .corpus import CorpusEntry
from .errors import GroupLabError
from .group import FiniteGroup
from .groupfile import parse_group_file
from .lattice import all_subgroups, iter_bits
from .msupp import (
    MClassQuery,
    corollary_b_rhs,
    corollary_c_rhs,
    in_m_class,
    is_complemented,
    is_m_supplemented,
    theorem_a_rhs,
    theorem_d_classify,
    valid_queries,
)
from .structure import (
    derived_subgroup,
    frattini_of,
    is_prime,
    o_p_prime,
    quotient,
    subgroup_as_group,
)

__all__ = ["Row", "SuiteConfig", "SuiteReport", "check_group", "run_suite", "CSV_COLUMNS"]

CSV_COLUMNS = ("group", "theorem", "p", "k", "passed", "detail", "millis")


@dataclass
class Row:
    group: str
    theorem: str
    p: int | None
    k: int | None
    passed: bool
    detail: str
    millis: float = 0.0

    def sort_key(self):
        return (self.group, self.theorem, self.p or 0, self.k or 0)


@dataclass(frozen=True)
class SuiteConfig:
    # groups above this order are skipped (group files are filtered after parsing)
    max_order: int | None = None
    # suites that loop over subgroup pairs run up to this order
    property_max_order: int = 48
    # p-group-only suites run up to this order
    pgroup_max_order: int = 64


@dataclass
class SuiteReport:
    rows: list[Row]
    group_millis: dict[str, float] = field(default_factory=dict)
    build_errors: list[str] = field(default_factory=list)

    @property
    def failed(self) -> list[Row]:
        return [r for r in self.rows if not r.passed]

    @property
    def totals(self) -> dict[str, int]:
        return {
            "groups": len({r.group for r in self.rows}),
            "rows": len(self.rows),
            "passed": sum(r.passed for r in self.rows),
            "failed": len(self.failed),
            "build_errors": len(self.build_errors),
        }

    def exit_code(self) -> int:
        if self.build_errors:
            return 3
        return 1 if self.failed else 0

    def to_csv(self, timing: bool = True) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        cols = CSV_COLUMNS if timing else CSV_COLUMNS[:-1]
        w.writerow(cols)
        for r in self.rows:
            rec = [r.group, r.theorem, "" if r.p is None else r.p, "" if r.k is None else r.k,
                   "true" if r.passed else "false", r.detail]
            if timing:
                rec.append(f"{r.millis:.1f}")
            w.writerow(rec)
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {"totals": self.totals, "rows": [asdict(r) for r in self.rows]},
            indent=1,
            sort_keys=True,
        )


class _Checker:
    def __init__(self, G: FiniteGroup, config: SuiteConfig):
        self.G = G
        self.name = G.name
        self.config = config
        self.L = all_subgroups(G)
        self.rows: list[Row] = []
        self._quotients = {}

    def emit(self, theorem, p, k, fn):
        t0 = time.perf_counter()
        passed, detail = fn()
        ms = (time.perf_counter() - t0) * 1000
        if not passed and not detail:
            detail = "failed"
        self.rows.append(Row(self.name, theorem, p, k, bool(passed), detail, ms))

    def quotient_by(self, i):
        if i not in self._quotients:
            self._quotients[i] = quotient(self.G, self.L.subgroups[i])
        return self._quotients[i]

    def run(self):
        G, cfg = self.G, self.config
        queries = valid_queries(G.order)
        self.emit("prime_order_remark", None, None, self.prime_order_remark)
        if G.order <= cfg.property_max_order:
            self.emit("L2.1.1", None, None, self.overgroup_inheritance)
            self.emit("L2.1.2", None, None, self.quotient_inheritance)
            self.emit("L2.1.3", None, None, self.coprime_quotient_equivalence)
        for p in sorted({q.p for q in queries}):
            self.emit("L2.4", p, None, lambda p=p: self.sylow_frattini(p))
        for q in queries:
            p, k = q.p, q.k
            self.emit("C2.2.3", p, k, lambda q=q: self.class_mod_o_p_prime(q))
            if G.order <= cfg.property_max_order:
                self.emit("C2.2.1", p, k, lambda q=q: self.class_subgroup_inheritance(q))
                self.emit("C2.2.2", p, k, lambda q=q: self.class_p_quotients(q))
            if G.is_p_group(p):
                self.emit("C", p, k, lambda q=q: self.p_group_criterion(q))
                if G.order <= cfg.pgroup_max_order:
                    self.emit("P2.6.1", p, k, lambda q=q: self.derived_is_frattini(q))
                    self.emit("P2.6.2", p, k, lambda q=q: self.frattini_below(q))
            if k >= 2:
                self.emit("A_forward", p, k, lambda q=q: self.characterization(q, forward=True))
                self.emit("A_backward", p, k, lambda q=q: self.characterization(q, forward=False))
                self.emit("B", p, k, lambda q=q: self.quotient_shape(q))
                self.emit("D", p, k, lambda q=q: self.critical_type(q))
        return self.rows

    # --- inheritance properties

    def prime_order_remark(self):
        G, L = self.G, self.L
        n = 0
        for h in range(len(L)):
            if not is_prime(L.orders[h]) or h == L.whole:
                continue
            H = L.subgroups[h]
            comp = is_complemented(G, H) is not None
            msup = is_m_supplemented(G, H) is not None
            n += 1
            if comp != msup:
                return False, f"H={L.describe(h)}: complemented={comp} M-supplemented={msup}"
        return True, f"{n} subgroups of prime order"

    def overgroup_inheritance(self):
        G, L = self.G, self.L
        n = 0
        for h in range(len(L)):
            H = L.subgroups[h]
            if is_m_supplemented(G, H) is None:
                continue
            for m in L.containing(h):
                n += 1
                if is_m_supplemented(G, H, within=L.subgroups[m]) is None:
                    return False, f"H={L.describe(h)} not M-supplemented in M={L.describe(m)}"
        return True, f"{n} pairs H <= M"

    def quotient_inheritance(self):
        G, L = self.G, self.L
        n = 0
        for h in range(len(L)):
            H = L.subgroups[h]
            if is_m_supplemented(G, H) is None:
                continue
            for v in L.contained_in(h):
                if not L.normal_flags[v]:
                    continue
                qm = self.quotient_by(v)
                n += 1
                if is_m_supplemented(qm.group, qm.image(H)) is None:
                    return False, f"H={L.describe(h)} N={L.describe(v)}: H/N not M-supplemented"
        return True, f"{n} pairs N <= H"

    def coprime_quotient_equivalence(self):
        G, L = self.G, self.L
        n = 0
        normals = [v for v in range(len(L)) if L.normal_flags[v]]
        for h in range(len(L)):
            H = L.subgroups[h]
            for v in normals:
                if gcd(L.orders[h], L.orders[v]) != 1:
                    continue
                qm = self.quotient_by(v)
                left = is_m_supplemented(G, H) is not None
                right = is_m_supplemented(qm.group, qm.image(H)) is not None
                n += 1
                if left != right:
                    return False, (
                        f"H={L.describe(h)} N={L.describe(v)}: in G {left}, in G/N {right}"
                    )
        return True, f"{n} coprime pairs"

    def sylow_frattini(self, p):
        G, L = self.G, self.L
        P = L.subgroups[L.of_order(G.p_part(p))[0]]
        i = L.pos(P)
        if not L.normal_flags[i]:
            return True, "vacuous: Sylow subgroup not normal"
        phi_g = frattini_of(L, L.whole)
        if P.is_whole():
            ok = frattini_of(L, i) == phi_g
            return ok, "P = G" if ok else "Phi(P) != Phi(G) with P = G"
        own, to_parent = subgroup_as_group(P)
        LP = all_subgroups(own)
        phi_p = 0
        for e in iter_bits(frattini_of(LP, LP.whole)):
            phi_p |= 1 << to_parent[e]
        if phi_p != P.members & phi_g:
            return False, f"|Phi(P)|={phi_p.bit_count()} but |P ∩ Phi(G)|={(P.members & phi_g).bit_count()}"
        return True, f"|Phi(P)|={phi_p.bit_count()}"

    def class_subgroup_inheritance(self, q):
        G, L = self.G, self.L
        if not in_m_class(G, q).holds:
            return True, f"vacuous: G not in M({q.pk})"
        n = 0
        for h in range(len(L)):
            if L.orders[h] % q.pk:
                continue
            n += 1
            if not in_m_class(G, q, within=L.subgroups[h]).holds:
                return False, f"H={L.describe(h)} not in M({q.pk})"
        return True, f"{n} subgroups"

    def class_p_quotients(self, q):
        G, L = self.G, self.L
        if not in_m_class(G, q).holds:
            return True, f"vacuous: G not in M({q.pk})"
        n = 0
        for s in range(1, q.k):
            for v in L.of_order(q.p**s):
                if not L.normal_flags[v]:
                    continue
                qm = self.quotient_by(v)
                n += 1
                if not in_m_class(qm.group, MClassQuery(q.p, q.k - s)).holds:
                    return False, f"N={L.describe(v)}: G/N not in M({q.p ** (q.k - s)})"
        return True, f"{n} normal p-subgroups"

    def class_mod_o_p_prime(self, q):
        G, L = self.G, self.L
        O = o_p_prime(L, q.p)
        if O.is_trivial():
            return True, f"O_{q.p}'(G)=1"
        mine = in_m_class(G, q).holds
        theirs = in_m_class(self.quotient_by(L.pos(O)).group, q).holds
        return mine == theirs, f"G: {mine}, G/O_{q.p}'(G): {theirs}"

    def derived_is_frattini(self, q):
        G, L = self.G, self.L
        if not in_m_class(G, q).holds:
            return True, f"vacuous: G not in M({q.pk})"
        if G.order == q.pk:
            return True, "vacuous: |G| = p^k"
        d = derived_subgroup(G).members
        phi = frattini_of(L, L.whole)
        return d == phi, f"|G'|={d.bit_count()} |Phi(G)|={phi.bit_count()}"

    def frattini_below(self, q):
        G, L = self.G, self.L
        if not in_m_class(G, q).holds:
            return True, f"vacuous: G not in M({q.pk})"
        phi = frattini_of(L, L.whole)
        below = L.of_order(q.pk // q.p)
        for u in below:
            if phi & ~L.bits[u]:
                return False, f"Phi(G) not in {L.describe(u)}"
        return True, f"Phi(G) in all {len(below)} subgroups of order {q.pk // q.p}"

    # --- main results

    def p_group_criterion(self, q):
        lhs = in_m_class(self.G, q).holds
        rhs = corollary_c_rhs(self.G, q)
        return lhs == rhs.passed, f"in M: {lhs}; rhs: {rhs.passed} ({rhs.detail})"

    def characterization(self, q, forward):
        G, L = self.G, self.L
        lhs = in_m_class(G, q).holds
        O = o_p_prime(L, q.p)
        if O.is_trivial():
            rhs = theorem_a_rhs(G, q)
            via = ""
        else:
            rhs = theorem_a_rhs(self.quotient_by(L.pos(O)).group, q)
            via = f" via G/O_{q.p}'(G)"
        ok = (not lhs or rhs.passed) if forward else (not rhs.passed or lhs)
        return ok, f"in M: {lhs}; rhs{via}: {rhs.passed} ({rhs.detail})"

    def quotient_shape(self, q):
        if not in_m_class(self.G, q).holds:
            return True, f"vacuous: G not in M({q.pk})"
        v = corollary_b_rhs(self.G, q)
        return v.passed, v.detail

    def critical_type(self, q):
        res = theorem_d_classify(self.G, q)
        return res.tag != "CONTRADICTION", f"{res.tag}: {res.detail}"


def check_group(G: FiniteGroup, config: SuiteConfig | None = None) -> list[Row]:
    """All applicable rows for one group."""
    return _Checker(G, config or SuiteConfig()).run()


def _work(item):
    """Worker: item is a CorpusEntry or a path to a group file."""
    source, config = item
    t0 = time.perf_counter()
    try:
        if isinstance(source, CorpusEntry):
            label = source.name
            G = source.build()
        else:
            label = Path(source).stem
            name, G = parse_group_file(Path(source).read_text(encoding="utf-8"))
            G.name = name or label
            label = G.name
    except (GroupLabError, OSError) as exc:
        return label, [Row(label, "build", None, None, False, f"build error: {exc}")], True, 0.0
    if config.max_order is not None and G.order > config.max_order:
        return label, [], False, 0.0
    rows = check_group(G, config)
    return label, rows, False, (time.perf_counter() - t0) * 1000


def run_suite(sources, config: SuiteConfig | None = None, jobs: int = 1) -> SuiteReport:
    """Check every source (CorpusEntry or group-file path) and collect a report.

    Rows are sorted by group, theorem, p, k so output is independent of
    scheduling.
    """
    config = config or SuiteConfig()
    items = [(s, config) for s in sources]
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_work, items))
    else:
        results = [_work(it) for it in items]
    rows, millis, errors = [], {}, []
    for label, group_rows, failed_build, ms in results:
        if not group_rows:
            continue
        rows.extend(group_rows)
        millis[label] = ms
        if failed_build:
            errors.append(label)
    rows.sort(key=Row.sort_key)
    return SuiteReport(rows, millis, errors)
