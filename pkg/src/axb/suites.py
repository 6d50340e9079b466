"""Named verification suites with machine-readable reports.

Each suite sweeps one cluster of exact identities at configurable windows
and returns a Report; the CLI renders reports as text or JSON and converts
them into exit codes.  Windows actually used are recorded in every report so
that sampled checks are reproducible.

Brute-force oracles used by the suites live here too, kept independent of
the code paths they check: the least-upper-bound oracle enumerates windows
of candidates directly from the order definition.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from axb.arithmetic import INF, NABLA, ProfiniteResidue, Supernatural, primes_up_to
from axb.kms import (
    FACES,
    GROUND,
    GROUND_FACTORS_IFF_KMS_LIMIT,
    KMS_INFINITY,
    ExactValue,
    cube_face_check,
    factors_through,
    kms_value,
    prime_projection_sum,
    projection_expr,
    quotient_monotonicity_check,
)
from axb.modules import (
    ModuleOperator,
    absorb_adjoint_check,
    absorb_projection_check,
    embed,
    extend_to_multiple,
    inner,
    iterated_transfer_collapse_check,
    left_action,
    module_mult,
    nica_pair,
    rank_one,
    representative,
    symbol_map_operator,
    symbol_map_vector,
    unit_rank_one,
)
from axb.operators import (
    BilateralBackend,
    ToeplitzBackend,
    additive_presentation_names,
    apply,
    defect_decomposition,
    defect_terms_expr,
    faithfulness_witness,
    toeplitz_presentation_names,
    unit_defect_expr,
    verify_relations,
)
from axb.semigroup import GroupElement, SemigroupElement, leq, lub
from axb.spectrum import (
    PointA,
    PointB,
    Undefined,
    Window,
    boundary_relation_check,
    closure_image,
    closure_mismatch,
    converges,
    default_generators,
    is_hereditary_directed_on,
    partial_act,
    violates_multiplicative,
)
from axb.transfer import (
    Compress,
    LaurentPoly,
    ToeplitzElement,
    endo,
    matrix_oracle,
    oracles_agree,
    spanning_elements,
    symbol_map,
    transfer,
)

SCHEMA_VERSION = 1


@dataclass
class CheckRecord:
    id: str
    status: str  # "pass" | "fail" | "skip"
    witness: str | None = None
    window: str | None = None


@dataclass
class Report:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)
    windows: dict[str, str] = field(default_factory=dict)

    def add(self, cid: str, ok: bool, witness=None, window=None):
        self.records.append(
            CheckRecord(
                cid,
                "pass" if ok else "fail",
                None if ok else (str(witness) if witness is not None else None),
                str(window) if window is not None else None,
            )
        )

    @property
    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skip": 0}
        for r in self.records:
            out[r.status] += 1
        return out

    @property
    def passed(self) -> bool:
        return self.counts["fail"] == 0

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "windows": self.windows,
            "records": [
                {
                    "id": r.id,
                    "status": r.status,
                    "witness": r.witness,
                    "window": r.window,
                }
                for r in self.records
            ],
            "summary": self.counts,
        }

    def render_text(self) -> str:
        lines = [f"suite {self.suite}"]
        for key, value in self.windows.items():
            lines.append(f"  window {key}: {value}")
        for r in self.records:
            line = f"  [{r.status.upper():4s}] {r.id}"
            if r.witness:
                line += f"  witness: {r.witness}"
            if r.window:
                line += f"  (window {r.window})"
            lines.append(line)
        c = self.counts
        lines.append(f"  summary: {c['pass']} passed, {c['fail']} failed, {c['skip']} skipped")
        return "\n".join(lines)


@dataclass
class SuiteOptions:
    window: int | None = None
    primes: list[int] | None = None
    seed: int = 0

    def prime_list(self, default_bound: int) -> list[int]:
        if self.primes:
            return list(self.primes)
        return primes_up_to(default_bound)


# --- brute-force oracles -----------------------------------------------------


def brute_lub(x: SemigroupElement, y: SemigroupElement) -> SemigroupElement | None:
    """Windowed brute-force least common upper bound, straight from the order.

    Enumerates candidates (l, c) with l <= max(m, n) + 2ab and c <= 2ab,
    keeps those above both inputs, and returns the one below all others
    (None when there are no candidates in the window).
    """
    span = 2 * x.a * y.a
    candidates = [
        SemigroupElement(l, c)
        for c in range(1, span + 1)
        if c % x.a == 0 and c % y.a == 0
        for l in range(max(x.m, y.m), max(x.m, y.m) + span + 1)
        if (l - x.m) % x.a == 0 and (l - y.m) % y.a == 0
    ]
    if not candidates:
        return None
    best = min(candidates, key=lambda z: (z.a, z.m))
    assert all(leq(best, z) for z in candidates)
    return best


def _lub_grid_check(bound: int, report: Report) -> None:
    """Exhaustive CRT-vs-enumeration comparison for all m, n, a, b <= bound.

    The enumeration is vectorised but uses only the unfolded order
    definition: l = m (mod a), l = n (mod b), l >= max(m, n).
    """
    ms = np.arange(bound + 1)
    for a in range(1, bound + 1):
        for b in range(a, bound + 1):
            span = bound + 2 * a * b
            ls = np.arange(span + 1)
            mask_a = (ls[None, :] % a) == (ms[:, None] % a)  # (m, l)
            mask_b = (ls[None, :] % b) == (ms[:, None] % b)  # (n, l)
            lo = np.maximum(ms[:, None], ms[None, :])  # (m, n)
            valid = (
                mask_a[:, None, :]
                & mask_b[None, :, :]
                & (ls[None, None, :] >= lo[:, :, None])
            )
            has = valid.any(axis=2)
            first = np.where(has, valid.argmax(axis=2), -1)
            # least multiplicative part in the window
            cs = [c for c in range(1, 2 * a * b + 1) if c % a == 0 and c % b == 0]
            c0 = cs[0]
            cs_ok = all(c % c0 == 0 for c in cs)
            # minimality of the first additive part against every window candidate
            rel = (ls[None, None, :] - first[:, :, None]) % c0 == 0
            minimal = np.where(has, (rel | ~valid).all(axis=2), True)
            bad = []
            for m in range(bound + 1):
                for n in range(bound + 1):
                    z = lub(SemigroupElement(m, a), SemigroupElement(n, b))
                    if has[m, n]:
                        ok = (
                            z is not None
                            and z.m == int(first[m, n])
                            and z.a == c0
                            and cs_ok
                            and bool(minimal[m, n])
                        )
                    else:
                        ok = z is None
                    if not ok:
                        bad.append(((m, a), (n, b), z))
            report.add(
                f"lub-oracle[a={a},b={b}]",
                not bad,
                witness=bad[:3] if bad else None,
            )


# --- individual suites --------------------------------------------------------


def suite_lub_oracle(options: SuiteOptions) -> Report:
    bound = options.window or 30
    report = Report("lub-oracle", windows={"bound": str(bound)})
    _lub_grid_check(bound, report)
    report.add(
        "lub-oracle[pinned]",
        lub(SemigroupElement(1, 2), SemigroupElement(0, 3)) == SemigroupElement(3, 6)
        and lub(SemigroupElement(0, 2), SemigroupElement(1, 2)) is None
        and brute_lub(SemigroupElement(1, 2), SemigroupElement(0, 3)) == SemigroupElement(3, 6)
        and brute_lub(SemigroupElement(0, 2), SemigroupElement(1, 2)) is None,
    )
    return report


def _sample_points() -> list:
    pts = []
    for n, r in [(3, 0), (4, 1), (6, 5), (12, 7), (36, 11)]:
        pts.append(PointB(ProfiniteResidue.from_integer(r, n), n))
    pts.append(PointB(ProfiniteResidue.from_integer(3, NABLA), NABLA))
    pts.append(PointB(ProfiniteResidue.from_integer(7, Supernatural(0, {2: 100})), Supernatural(0, {2: 100})))
    for m, n in [(5, 12), (0, 6), (9, 36)]:
        pts.append(PointA(m, n))
    pts.append(PointA(4, NABLA))
    pts.append(PointA(0, NABLA))
    return pts


def suite_spectrum_hereditary(options: SuiteOptions) -> Report:
    window = Window(options.window or 40, 24)
    report = Report("spectrum-hereditary", windows={"points": str(window)})
    for point in _sample_points():
        report.add(
            f"hereditary-directed[{point}]",
            is_hereditary_directed_on(point, window),
            window=window,
        )
    return report


def _action_cases():
    gs = [
        GroupElement(1, 2),
        GroupElement(0, 2),
        GroupElement(2, 3),
        GroupElement(3, 1),
        GroupElement(0, Fraction(1, 2)),
        GroupElement(Fraction(1, 2), Fraction(1, 2)),
        GroupElement(1, 3),
        GroupElement(Fraction(-1), 2),
        GroupElement(0, 6),
        GroupElement(Fraction(1, 3), Fraction(2, 3)),
    ]
    points = [
        PointB(ProfiniteResidue.from_integer(r, n), n)
        for n, r in [(3, 0), (4, 1), (6, 5), (9, 2), (12, 7), (36, 11)]
    ] + [PointA(3, 6), PointA(5, 12)]
    return [(g, p) for g in gs for p in points]


def suite_action_closed_forms(options: SuiteOptions) -> Report:
    src = Window(options.window or 100, 40)
    cmp_w = Window(24, 12)
    report = Report(
        "action-closed-forms", windows={"source": str(src), "compare": str(cmp_w)}
    )
    pinned = partial_act(GroupElement(1, 2), PointB(ProfiniteResidue.from_integer(0, 3), 3))
    report.add(
        "action[pinned (1,2).B(0;3)]",
        pinned == PointB(ProfiniteResidue.from_integer(1, 6), 6),
        witness=pinned,
    )
    for g, point in _action_cases():
        cid = f"action[{g}.{point}]"
        try:
            img = partial_act(g, point, window=src)
        except Exception as exc:  # identification failures are check failures
            report.add(cid, False, witness=exc, window=src)
            continue
        if isinstance(img, Undefined):
            ok = not closure_image(g, point, src)
            report.add(cid, ok, witness=img.reason, window=src)
        else:
            mm = closure_mismatch(g, point, img, src_window=src, cmp_window=cmp_w)
            report.add(cid, mm is None, witness=mm, window=src)
    return report


def suite_topological_freeness(options: SuiteOptions) -> Report:
    window = Window(options.window or 120, 40)
    report = Report("topological-freeness", windows={"witness-search": str(window)})
    rng = random.Random(options.seed)
    # group elements with non-unit multiplicative part never fix a finite-modulus B-point
    ys = [Fraction(2), Fraction(3), Fraction(1, 2), Fraction(3, 2), Fraction(5), Fraction(2, 3)]
    ws = [Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2)]
    elements = [GroupElement(w, y) for y in ys for w in ws][:20]
    points = [
        PointB(ProfiniteResidue.from_integer(r, n), n)
        for n, r in [(2, 1), (3, 0), (6, 5), (12, 7), (30, 11)]
    ]
    for g in elements:
        fixed = []
        for point in points:
            img = partial_act(g, point, window=window)
            if not isinstance(img, Undefined) and img == point:
                fixed.append((g, point))
        report.add(f"no-fixed-b-point[{g}]", not fixed, witness=fixed, window=window)
    # scaling elements fix the expected boundary A-point
    for s, t in [(-3, 2), (-4, 3), (Fraction(1), Fraction(1, 2)), (2, Fraction(1, 3)), (-8, 5)]:
        s, t = Fraction(s), Fraction(t)
        m = s / (1 - t)
        assert m.denominator == 1 and m >= 0
        g = GroupElement(s, t)
        img = partial_act(g, PointA(int(m), NABLA), window=window)
        report.add(
            f"fixed-a-point[{g}]",
            img == PointA(int(m), NABLA),
            witness=img,
            window=window,
        )
    # convergence constructions
    gens = default_generators(30)
    m0, s0 = 4, 3
    ps = [p for p in primes_up_to(200) if p > 31][:8]
    seq = [PointB(ProfiniteResidue.from_integer(s0, p * m0), p * m0) for p in ps]
    limit = PointB(ProfiniteResidue.from_integer(s0, m0), m0)
    report.add("convergence[growing-prime-moduli]", converges(seq, limit, gens))
    big = Supernatural(0, {2: INF})
    seq2 = [
        PointB(ProfiniteResidue.from_integer(s0, 2**k), 2**k) for k in range(1, 10)
    ]
    limit2 = PointB(ProfiniteResidue.from_integer(s0, big), big)
    report.add("convergence[exhausting-divisors]", converges(seq2, limit2, gens))
    report.add(
        "convergence[constant]",
        converges([limit] * 4, limit, gens),
    )
    return report


def suite_boundary_criteria(options: SuiteOptions) -> Report:
    window = Window(options.window or 40, 24)
    report = Report("boundary-criteria", windows={"points": str(window)})
    b_points = [
        PointB(ProfiniteResidue.from_integer(r, n), n)
        for n, r in [(3, 0), (12, 7), (36, 11)]
    ] + [PointB(ProfiniteResidue.from_integer(5, NABLA), NABLA)]
    for point in b_points:
        ok, wit = boundary_relation_check(point, "add", window)
        report.add(f"additive-criterion[{point}]", ok, witness=wit, window=window)
    for m, n in [(5, 12), (0, 6), (9, 36)]:
        point = PointA(m, n)
        ok, wit = boundary_relation_check(point, "add", window)
        report.add(
            f"additive-criterion-fails[{point}]",
            (not ok) and wit == SemigroupElement(m, 1),
            witness=wit,
            window=window,
        )
    # the multiplicative criterion passes exactly at full modulus
    mult_sample = [
        (PointA(4, NABLA), True),
        (PointB(ProfiniteResidue.from_integer(5, NABLA), NABLA), True),
        (PointA(5, 12), False),
        (PointB(ProfiniteResidue.from_integer(7, 12), 12), False),
        (PointB(ProfiniteResidue.from_integer(1, Supernatural(0, {2: INF})), Supernatural(0, {2: INF})), False),
    ]
    for point, expected in mult_sample:
        ok, wit = boundary_relation_check(point, "mult", window, prime_bound=13)
        report.add(
            f"multiplicative-criterion[{point}]",
            ok == expected,
            witness=wit,
            window=window,
        )
    report.add(
        "multiplicative-witness[A(5;12),(5,12),p=5]",
        violates_multiplicative(PointA(5, 12), SemigroupElement(5, 12), 5),
    )
    return report


def suite_relations_toeplitz(options: SuiteOptions) -> Report:
    backend = ToeplitzBackend()
    window = backend.window(24, 20)
    primes = options.prime_list(13)
    report = Report(
        "relations-toeplitz",
        windows={"indices": f"{len(window)} basis indices", "primes": str(primes)},
    )
    rep = verify_relations(backend, toeplitz_presentation_names(), primes, window, s_power_max=13)
    report.add("toeplitz-satisfies-T1..T5", rep.ok, witness=rep.failures[:2])
    rep_q6 = verify_relations(backend, ["Q6"], [], window)
    report.add("toeplitz-fails-Q6", not rep_q6.ok, witness="Q6 held unexpectedly")
    return report


def suite_relations_bilateral(options: SuiteOptions) -> Report:
    backend = BilateralBackend()
    window = backend.window(12, 20)
    primes = options.prime_list(13)
    report = Report(
        "relations-bilateral",
        windows={"indices": f"{len(window)} basis indices", "primes": str(primes)},
    )
    rep = verify_relations(backend, additive_presentation_names(), primes, window, s_power_max=13)
    report.add("bilateral-satisfies-T1-T3,T5,Q6", rep.ok, witness=rep.failures[:2])
    rep4 = verify_relations(backend, ["T4"], primes, window)
    report.add("bilateral-satisfies-T4-derived", rep4.ok, witness=rep4.failures[:2])
    rep_q5 = verify_relations(backend, ["Q5"], primes, window)
    found = {f[1] for f in rep_q5.failures}
    report.add(
        "bilateral-fails-Q5-at-(0,1)",
        (not rep_q5.ok) and (0, 1) in found,
        witness=sorted(found)[:3],
    )
    return report


def suite_faithfulness(options: SuiteOptions) -> Report:
    toeplitz, bilateral = ToeplitzBackend(), BilateralBackend()
    report = Report("faithfulness", windows={"search": "backend default windows"})
    base = [2, 3, 5, 7]
    for k in range(len(base) + 1):
        for f_set in itertools.combinations(base, k):
            f = list(f_set)
            report.add(
                f"unit-defect-condition[toeplitz,F={f}]",
                faithfulness_witness(toeplitz, f, include_unit_defect=True) == (0, 1),
            )
            report.add(
                f"projection-condition[bilateral,F={f}]",
                faithfulness_witness(bilateral, f, include_unit_defect=False) == (0, 1),
            )
            report.add(
                f"projection-condition[toeplitz,F={f}]",
                faithfulness_witness(toeplitz, f, include_unit_defect=False) == (0, 1),
            )
    report.add(
        "unit-defect-condition[bilateral,empty-product-vanishes]",
        faithfulness_witness(bilateral, [2], include_unit_defect=True) is None,
    )
    return report


def suite_defect_decomposition(options: SuiteOptions) -> Report:
    backend = ToeplitzBackend()
    bound = options.window or 30
    report = Report("defect-decomposition", windows={"a": f"2..{bound}"})
    for a in range(2, bound + 1):
        terms = defect_decomposition(a)
        lhs = unit_defect_expr(a)
        rhs = defect_terms_expr(terms)
        symbolic = lhs == rhs
        window = backend.window(2 * a, max(12, a + 1))
        backend_ok = all(apply(backend, lhs, idx) == apply(backend, rhs, idx) for idx in window)
        report.add(
            f"defect-decomposition[a={a}]",
            symbolic and backend_ok,
            witness=f"symbolic={symbolic} backend={backend_ok}",
            window=f"m<={2 * a},a<={max(12, a + 1)}",
        )
    return report


def _random_laurent(rng, degree=6, terms=3) -> LaurentPoly:
    out = LaurentPoly.zero()
    for _ in range(terms):
        out = out + LaurentPoly.iota(rng.randrange(-degree, degree + 1), rng.randrange(1, 5))
    return out


def _random_toeplitz(rng, degree=6, terms=3) -> ToeplitzElement:
    out = ToeplitzElement.zero()
    for _ in range(terms):
        out = out + ToeplitzElement.shift(
            rng.randrange(degree + 1), rng.randrange(degree + 1), rng.randrange(1, 5)
        )
    return out


def suite_transfer_identities(options: SuiteOptions) -> Report:
    rng = random.Random(options.seed)
    report = Report("transfer-identities", windows={"levels": "a<=12", "samples": "8 per level"})
    ok_identity = ok_section = True
    for a in range(1, 13):
        for _ in range(8):
            f, g = _random_laurent(rng), _random_laurent(rng)
            ok_identity &= transfer(a, endo(a, f) * g) == f * transfer(a, g)
            x, y = _random_toeplitz(rng), _random_toeplitz(rng)
            ok_identity &= transfer(a, endo(a, x) * y) == x * transfer(a, y)
            ok_section &= transfer(a, endo(a, x)) == x and transfer(a, endo(a, f)) == f
    report.add("transfer-identity[both systems]", ok_identity)
    report.add("transfer-after-endo-is-identity", ok_section)
    ok_semigroup = True
    for a in range(1, 7):
        for b in range(1, 7):
            f, x = _random_laurent(rng), _random_toeplitz(rng)
            ok_semigroup &= transfer(b, transfer(a, f)) == transfer(a * b, f)
            ok_semigroup &= transfer(b, transfer(a, x)) == transfer(a * b, x)
            ok_semigroup &= endo(a, endo(b, x)) == endo(a * b, x)
    report.add("semigroup-laws", ok_semigroup)
    ok_commute = True
    for p in primes_up_to(11):
        for r in primes_up_to(11):
            if p != r:
                for _ in range(4):
                    f = _random_laurent(rng)
                    ok_commute &= transfer(p, endo(r, f)) == endo(r, transfer(p, f))
    report.add("polynomial-transfer-commutes-with-coprime-endo", ok_commute)
    ss = ToeplitzElement.shift(1, 1)
    report.add(
        "span-transfer-does-not-commute[witness SS*]",
        transfer(2, endo(3, ss)) != endo(3, transfer(2, ss)),
    )
    ok_faithful = True
    for a in (2, 3, 4):
        for x in spanning_elements(8):
            if x.is_zero:
                continue
            found = False
            for n in range(6):
                y = ToeplitzElement.shift(0, (a - 1) * n)
                prod = x * y
                if not transfer(a, prod.star() * prod).is_zero:
                    found = True
                    break
            ok_faithful &= found
    report.add("transfer-almost-faithful[degrees<=8]", ok_faithful)
    return report


def suite_k_oracle(options: SuiteOptions) -> Report:
    size = options.window or 64
    report = Report("k-oracle", windows={"matrix": str(size), "degrees": "<=10", "a": "<=6"})
    for a in range(1, 7):
        bad = []
        for elem in spanning_elements(10):
            direct = matrix_oracle(transfer(a, elem), size)
            compressed = matrix_oracle(Compress(a, elem), size)
            if not oracles_agree(direct, compressed):
                bad.append(elem)
        report.add(f"transfer-matches-oracle[a={a}]", not bad, witness=bad[:2], window=size)
    nested_ok = True
    for a, b in [(2, 3), (3, 2), (2, 2)]:
        for elem in spanning_elements(6):
            direct = matrix_oracle(transfer(a * b, elem), size)
            nested = matrix_oracle(Compress(b, Compress(a, elem)), size)
            nested_ok &= oracles_agree(direct, nested)
    report.add("nested-compressions-compose", nested_ok, window=size)
    report.add(
        "oracle-confirms-unitality",
        oracles_agree(matrix_oracle(Compress(5, ToeplitzElement.one()), size), matrix_oracle(ToeplitzElement.one(), size)),
        window=size,
    )
    return report


def suite_modules_orthonormal(options: SuiteOptions) -> Report:
    rng = random.Random(options.seed)
    bound = options.window or 12
    report = Report("modules-orthonormal", windows={"levels": f"a<={bound}"})
    for kind, gen in ((LaurentPoly, LaurentPoly.iota), (ToeplitzElement, lambda k: ToeplitzElement.shift(k, 0))):
        ok_orth = True
        ok_recon = True
        for a in range(1, bound + 1):
            basis = [embed(a, gen(k)) for k in range(a)]
            for j in range(a):
                for k in range(a):
                    expected = kind.one() if j == k else kind.zero()
                    ok_orth &= inner(basis[j], basis[k]) == expected
            for _ in range(4):
                x = _random_laurent(rng) if kind is LaurentPoly else _random_toeplitz(rng)
                v = embed(a, x)
                ok_recon &= embed(a, representative(v)) == v
        report.add(f"orthonormal-basis[{kind.__name__}]", ok_orth)
        report.add(f"reconstruction[{kind.__name__}]", ok_recon)
        ok_unit = True
        for p in primes_up_to(13):
            total = ModuleOperator.zero(p, kind)
            for k in range(p):
                bk = embed(p, gen(k))
                total = total + rank_one(bk, bk)
            ok_unit &= total == left_action(p, kind.one()) == ModuleOperator.identity(p, kind)
        report.add(f"unit-left-action-is-basis-sum[{kind.__name__}]", ok_unit)
    return report


def suite_module_collapse(options: SuiteOptions) -> Report:
    report = Report("module-collapse", windows={"n,j": "<=12", "a": "<=6"})
    ok_a = all(
        absorb_projection_check(a, n, j)
        for a in range(1, 7)
        for n in range(13)
        for j in range(13)
    )
    report.add("projection-absorption", ok_a)
    ok_b = True
    count = 0
    for a in range(1, 7):
        for m in range(1, 13):
            i = -(-m // a)
            for j in range(13):
                if m + j <= a * i:
                    ok_b &= absorb_adjoint_check(a, m, j)
                    count += 1
    report.add(f"adjoint-absorption[{count} cases]", ok_b)
    ok_c = True
    for p, r in [(2, 3), (2, 5), (3, 5)]:
        for t in spanning_elements(6):
            ok_c &= iterated_transfer_collapse_check(p, r, t)
    report.add("iterated-transfer-collapse", ok_c)
    ss = ToeplitzElement.shift(1, 1)
    report.add(
        "collapse-needed[witness SS*]",
        endo(2, transfer(2, endo(3, transfer(3, ss)))) != endo(6, transfer(6, ss)),
    )
    return report


def suite_nica_pair(options: SuiteOptions) -> Report:
    report = Report("nica-pair", windows={"pairs": "(2,3),(2,5),(3,5)"})
    for kind in (LaurentPoly, ToeplitzElement):
        for p, r in [(2, 3), (2, 5), (3, 5)]:
            report.add(
                f"nica-pair[{kind.__name__},p={p},r={r}]",
                nica_pair(p, r, kind) == unit_rank_one(p * r, kind),
            )
    for kind in (LaurentPoly, ToeplitzElement):
        ident = ModuleOperator.identity(2, kind)
        report.add(
            f"extension-of-identity[{kind.__name__}]",
            extend_to_multiple(ident, 6) == ModuleOperator.identity(6, kind),
        )
    return report


def suite_morphism_rho(options: SuiteOptions) -> Report:
    rng = random.Random(options.seed)
    report = Report("morphism-rho", windows={"levels": "a<=12", "pairs": "a,b<=6"})
    ok_endo = ok_transfer = True
    for a in range(1, 13):
        for x in spanning_elements(6):
            ok_endo &= symbol_map(endo(a, x)) == endo(a, symbol_map(x))
            ok_transfer &= symbol_map(transfer(a, x)) == transfer(a, symbol_map(x))
    report.add("symbol-intertwines-endo", ok_endo)
    report.add("symbol-intertwines-transfer", ok_transfer)
    ok_mult = ok_inner = ok_left = True
    for a in range(1, 7):
        for b in range(1, 7):
            x = embed(a, _random_toeplitz(rng, degree=4))
            y = embed(b, _random_toeplitz(rng, degree=4))
            ok_mult &= symbol_map_vector(module_mult(x, y)) == module_mult(
                symbol_map_vector(x), symbol_map_vector(y)
            )
        v = embed(a, _random_toeplitz(rng, degree=4))
        w = embed(a, _random_toeplitz(rng, degree=4))
        ok_inner &= inner(symbol_map_vector(v), symbol_map_vector(w)) == symbol_map(inner(v, w))
        t = _random_toeplitz(rng, degree=4)
        ok_left &= symbol_map_operator(left_action(a, t)) == left_action(a, symbol_map(t))
    report.add("induced-map-multiplicative", ok_mult)
    report.add("induced-map-inner-compatible", ok_inner)
    report.add("induced-map-intertwines-left-action", ok_left)
    return report


def suite_kms_phase(options: SuiteOptions) -> Report:
    prime_bound = 100
    report = Report("kms-phase", windows={"primes": f"<={prime_bound}", "grid": "1.0..10.0 step 0.1"})
    ok_values = True
    for p in primes_up_to(20):
        for beta in (Fraction(1), Fraction(2), Fraction(3, 2), Fraction(7, 3)):
            ok_values &= kms_value(beta, projection_expr(1, p)) == ExactValue.power(p, -beta)
            ok_values &= kms_value(beta, prime_projection_sum(p)) == ExactValue.power(p, 1 - beta)
    report.add("projection-values[p^-beta and p^(1-beta)]", ok_values)
    grid = [Fraction(k, 10) for k in range(10, 101)]
    hits = [b for b in grid if factors_through(b, "multiplicative", prime_bound=prime_bound)]
    report.add("phase-transition[multiplicative iff beta=1]", hits == [Fraction(1)], witness=hits)
    report.add(
        "additive-factoring[all beta and kms-infinity]",
        all(factors_through(b, "additive") is True for b in grid)
        and factors_through(KMS_INFINITY, "additive") is True,
    )
    report.add(
        "ground-state[multiplicative=never, additive=iff-limit]",
        factors_through(GROUND, "multiplicative") is False
        and factors_through(GROUND, "additive") == GROUND_FACTORS_IFF_KMS_LIMIT
        and factors_through(KMS_INFINITY, "multiplicative") is False,
    )
    ok_ground = True
    for p in primes_up_to(prime_bound):
        for k in range(0, p, max(1, p // 5)):
            ok_ground &= kms_value(GROUND, projection_expr(k, p)) == 0
    report.add("ground-values-vanish", ok_ground)
    return report


def suite_cube(options: SuiteOptions) -> Report:
    primes = options.prime_list(13)
    report = Report("cube", windows={"primes": str(primes)})
    for face in FACES:
        ok, details = cube_face_check(face, primes)
        bad = [d[0] for d in details if not d[3]]
        report.add(f"face[{face}]", ok, witness=bad)
    report.add("relation-monotonicity", quotient_monotonicity_check())
    return report


SUITES = {
    "lub-oracle": suite_lub_oracle,
    "spectrum-hereditary": suite_spectrum_hereditary,
    "action-closed-forms": suite_action_closed_forms,
    "topological-freeness": suite_topological_freeness,
    "boundary-criteria": suite_boundary_criteria,
    "relations-toeplitz": suite_relations_toeplitz,
    "relations-bilateral": suite_relations_bilateral,
    "faithfulness": suite_faithfulness,
    "defect-decomposition": suite_defect_decomposition,
    "transfer-identities": suite_transfer_identities,
    "k-oracle": suite_k_oracle,
    "modules-orthonormal": suite_modules_orthonormal,
    "module-collapse": suite_module_collapse,
    "nica-pair": suite_nica_pair,
    "morphism-rho": suite_morphism_rho,
    "kms-phase": suite_kms_phase,
    "cube": suite_cube,
}


def run_suite(name: str, options: SuiteOptions | None = None) -> Report:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    return SUITES[name](options or SuiteOptions())


def run_all(options: SuiteOptions | None = None) -> list[Report]:
    return [run_suite(name, options) for name in SUITES]


def reports_to_json(reports: list[Report]) -> str:
    return json.dumps(
        {"schema_version": SCHEMA_VERSION, "reports": [r.to_json_dict() for r in reports]},
        indent=2,
    )
