"""Re-derivation checks: every computational claim gets recomputed from
scratch and compared against the transcribed reference forms.

Each verifier returns a VerificationResult whose details serialize to the
versioned JSON report schema ({"schema": 1, "lemma", "status", "cases",
"witnesses", ...}).  Failures always carry a concrete witness.  The
reference providers are injectable keyword arguments so the test suite can
prove that single-coefficient faults in any transcription are detected
with a localized witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import forms
from .exactpoly import (
    ExactDivisionError,
    IntPoly,
    MPoly,
    bareiss_det,
    charpoly_exact,
    root_multiplicity,
    sign_at_rational,
)
from .graphs import distance_matrix, named_graph
from .spectra import PAPER_TOL, Spectrum, eigenvalues_sym

# index bounds every principal submatrix of the target's distance matrix
# must satisfy: lambda2 < 0, lambda3 < -0.4226, lambda4 < -1.5774, and an
# exact -2 run at positions 5..m-1
BOUND2, BOUND3, BOUND4 = 0.0, -0.4226, -1.5774

T11_VALUES = (8.2882, -0.5578, -0.7639, -1.7304, -5.2361)

EXPECTED_EXCEPTIONS = {
    "H1": (),
    "H2": (),
    "H3": ({"a": 3, "b": 4, "c": 3},),
    "H4": (),
    "H5": (),
    "H6": (),
    "H7": ({"a": 3, "b": 4, "c": 2, "d": 3, "e": 2},),
    "P6": ({"a": 2, "b": 3, "c": 4, "d": 3, "e": 3, "f": 2},),
    "F1": (),
    "F2": (),  # see the F3-style a=2 structural escape; sweep disagrees
    "F3": ({"a": 2, "b": 2},),
    "K4": (),
    "F4": (),
}


@dataclass
class VerificationResult:
    lemma: str
    status: str
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        out = {"schema": 1, "lemma": self.lemma, "status": self.status}
        out.update(self.details)
        out.setdefault("witnesses", [])
        return out


def _result(lemma: str, witnesses: list, details: dict | None = None
            ) -> VerificationResult:
    d = dict(details or {})
    d["witnesses"] = witnesses
    return VerificationResult(lemma, "fail" if witnesses else "pass", d)


# ---------------------------------------------------------------------------
# closed charpoly identity

def verify_lemma22(max_ab: int = 8, closed_form=None) -> VerificationResult:
    """(-L-2)^(a+b-2) * p_ab expands to the exact BFS charpoly for every
    1 <= a,b <= max_ab (integer-exact)."""
    if max_ab < 1:
        raise ValueError("max_ab must be >= 1")
    closed_form = closed_form or forms.tab_charpoly_closed
    witnesses = []
    for a in range(1, max_ab + 1):
        for b in range(1, max_ab + 1):
            exponent, reduced = closed_form(a, b)
            expanded = IntPoly([-2, -1]) ** exponent * reduced
            derived = charpoly_exact(distance_matrix(named_graph("T", a, b)))
            if expanded != derived:
                diff = [
                    {"power": i, "closed": x, "derived": y}
                    for i, (x, y) in enumerate(
                        zip(list(expanded.coeffs) + [0] * 30,
                            list(derived.coeffs) + [0] * 30))
                    if x != y
                ]
                witnesses.append({"a": a, "b": b, "coefficient_diff": diff[:5]})
    return _result("lemma22", witnesses, {"pairs_checked": max_ab * max_ab})


# ---------------------------------------------------------------------------
# interlacing bounds

def verify_interlacing_bounds(max_ab: int = 8) -> VerificationResult:
    """The five bounds inherited from T(1,1) below and the three bounds
    inherited from T(c,c) above, for all 1 <= a,b <= max_ab."""
    witnesses = []
    tcc_cache: dict[int, Spectrum] = {}
    for a in range(1, max_ab + 1):
        for b in range(1, max_ab + 1):
            s = eigenvalues_sym(distance_matrix(named_graph("T", a, b)))
            checks = [
                ("lambda1 >= 8.2882", s.nth(1) >= T11_VALUES[0] - PAPER_TOL),
                ("lambda2 >= -0.5578", s.nth(2) >= T11_VALUES[1] - PAPER_TOL),
                ("lambda3 >= -0.7639", s.nth(3) >= T11_VALUES[2] - PAPER_TOL),
                ("lambda4 >= -1.7304", s.nth(4) >= T11_VALUES[3] - PAPER_TOL),
                ("lambda_n <= -5.2361", s.nth(s.n) <= T11_VALUES[4] + PAPER_TOL),
            ]
            c = max(a, b)
            if c not in tcc_cache:
                tcc_cache[c] = eigenvalues_sym(
                    distance_matrix(named_graph("T", c, c)))
            t = tcc_cache[c]
            checks += [
                ("lambda2 <= lambda2(Tcc) < 0",
                 s.nth(2) <= t.nth(2) + 1e-9 and t.nth(2) < BOUND2),
                ("lambda3 <= lambda3(Tcc) < -0.4226",
                 s.nth(3) <= t.nth(3) + 1e-9 and t.nth(3) < BOUND3),
                ("lambda4 <= lambda4(Tcc) < -1.5774",
                 s.nth(4) <= t.nth(4) + 1e-9 and t.nth(4) < BOUND4),
            ]
            for name, ok in checks:
                if not ok:
                    witnesses.append({"a": a, "b": b, "bound": name,
                                      "spectrum": list(s.values)})
    return _result("interlacing", witnesses, {"pairs_checked": max_ab * max_ab})


# ---------------------------------------------------------------------------
# cycle spectra

def verify_cycle_lemmas(max_n: int = 12) -> VerificationResult:
    """Closed cycle spectra vs numeric, the small-cycle eigenvalue facts,
    the capped-matrix facts, and the exact -2 multiplicity cap for n >= 8."""
    if max_n < 8:
        raise ValueError("max_n must be >= 8")
    witnesses = []
    for n in range(3, max_n + 1):
        closed = forms.cycle_spectrum_closed(n)
        numeric = eigenvalues_sym(distance_matrix(named_graph("C", n)))
        if closed.n != numeric.n or any(
                abs(x - y) > 1e-9 for x, y in zip(closed.values, numeric.values)):
            witnesses.append({"n": n, "closed": list(closed.values),
                              "numeric": list(numeric.values)})

    spectra = {n: eigenvalues_sym(distance_matrix(named_graph("C", n)))
               for n in (4, 5, 6, 7)}
    if abs(spectra[4].nth(2)) > 1e-9:
        witnesses.append({"fact": "lambda2(C4)=0", "got": spectra[4].nth(2)})
    if abs(spectra[5].nth(3) - (-0.3820)) > PAPER_TOL:
        witnesses.append({"fact": "lambda3(C5)=-0.3820",
                          "got": spectra[5].nth(3)})
    for n in (6, 7):
        if abs(spectra[n].nth(5) + 2.0) < 1e-6:
            witnesses.append({"fact": f"lambda5(C{n}) != -2",
                              "got": spectra[n].nth(5)})

    for n in range(8, max_n + 1):
        mult = root_multiplicity(
            charpoly_exact(distance_matrix(named_graph("C", n))), -2)
        if mult > 2:
            witnesses.append({"fact": f"mult(-2) of C{n} <= 2", "got": mult})

    capped = {n: eigenvalues_sym(forms.capped_cycle_matrix(n)) for n in (6, 7)}
    if abs(capped[6].nth(5) + 3.0) > 1e-9:
        witnesses.append({"fact": "capped C6 lambda5 = -3",
                          "got": capped[6].nth(5)})
    if abs(capped[7].nth(5) - (-1.5550)) > PAPER_TOL:
        witnesses.append({"fact": "capped C7 lambda5 = -1.5550",
                          "got": capped[7].nth(5)})
    return _result("cycles", witnesses,
                   {"max_n": max_n,
                    "minus2_requirement_if_submatrix": {
                        str(n): n - 5 for n in range(8, max_n + 1)}})


# ---------------------------------------------------------------------------
# forbidden-subgraph case tables

@dataclass
class CaseReport:
    family: str
    rows: list[dict]
    exceptions: list[dict]
    enumerated: int
    feasible: int
    note: str | None = None

    def to_json_dict(self) -> dict:
        out = {
            "family": self.family,
            "enumerated": self.enumerated,
            "feasible": self.feasible,
            "cases": self.rows,
            "exceptions": self.exceptions,
        }
        if self.note:
            out["note"] = self.note
        return out


def _minus_two_position(values, p: IntPoly) -> tuple[int, int]:
    """(k, mult): k eigenvalues exceed -2 and the next mult equal -2 exactly.

    Numeric positions are trusted only because the exact multiplicity is
    compared against the count of numerically -2-close eigenvalues; any
    eigenvalue within 1e-6 of -2 that is not exactly -2 would be a fault.
    """
    mult = root_multiplicity(p, -2)
    near = sum(1 for v in values if abs(v + 2.0) < 1e-6)
    if near != mult:
        raise AssertionError(
            f"eigenvalue within 1e-6 of -2 is not exactly -2 (mult={mult}, "
            f"near={near}); margin assumption violated")
    k = sum(1 for v in values if v > -2.0 + 1e-6)
    return k, mult


def _lambda_is_minus_two(i: int, k: int, mult: int) -> bool:
    return mult >= 1 and k + 1 <= i <= k + mult


def run_case_table(family: str) -> CaseReport:
    """Enumerate every parameter assignment of a family's matrix template,
    classify each row, and collect the exceptional assignments.

    Verdicts: "contradiction-confirmed" when the spectral test rules the
    row out, "exception" when it does not and the row is metric-feasible,
    "infeasible-excluded" when only the triangle inequality rules it out.
    """
    template = forms.forbidden_template(family)
    m = template.n
    rows = []
    exceptions = []
    feasible_count = 0
    for assignment in template.assignments():
        matrix = template.instantiate(assignment)
        feasible = forms.metric_feasible(matrix)
        feasible_count += feasible
        s = eigenvalues_sym(matrix)
        p = charpoly_exact(matrix)
        k, mult = _minus_two_position(s.values, p)

        if m >= 10:
            # -2 run required at positions 5..m-1; inspect lambda_{m-1}
            # first, then lambda2 once the run is intact
            run_ok = all(_lambda_is_minus_two(i, k, mult)
                         for i in range(5, m))
            if not run_ok:
                verdict = "contradiction-confirmed"
                interest = (m - 1, s.nth(m - 1))
            elif s.nth(2) >= BOUND2 - 1e-9:
                verdict = "contradiction-confirmed"
                interest = (2, s.nth(2))
            else:
                verdict = "exception" if feasible else "infeasible-excluded"
                interest = (m - 1, s.nth(m - 1))
        elif m >= 6:
            # lambda5 must equal -2 exactly
            interest = (5, s.nth(5))
            if not _lambda_is_minus_two(5, k, mult):
                verdict = "contradiction-confirmed"
            else:
                verdict = "exception" if feasible else "infeasible-excluded"
        else:
            # 4- and 5-vertex families: the three submatrix bounds; the
            # violated index is lambda4 in every refuted case
            interest = (4, s.nth(4))
            violated = (s.nth(2) >= BOUND2 or s.nth(3) >= BOUND3
                        or s.nth(4) >= BOUND4)
            if violated:
                verdict = "contradiction-confirmed"
            else:
                verdict = "exception" if feasible else "infeasible-excluded"

        row = {
            "assignment": dict(assignment),
            "eigenvalue": {"index": interest[0], "value": interest[1]},
            "verdict": verdict,
            "feasible": feasible,
        }
        if verdict == "exception":
            detail = dict(assignment)
            row["lambda4"] = s.nth(4)
            if m >= 5:
                row["lambda5"] = s.nth(5)
            exceptions.append(detail)
        rows.append(row)

    note = None
    if family == "H6":
        note = ("sweep sentence names parameters a,b,c,d but the template "
                "carries e as well (presumed typo); all five enumerated")
    return CaseReport(family, rows, exceptions,
                      template.assignment_count(), feasible_count, note)


def verify_case(family: str) -> VerificationResult:
    """Case table against the expected exceptional tuples, plus per-family
    pinned eigenvalue facts."""
    report = run_case_table(family)
    witnesses = []
    if family == "F3":
        # every exception must sit at a=2
        bad = [e for e in report.exceptions if e.get("a") != 2]
        if bad or not report.exceptions:
            witnesses.append({"check": "exceptions only at a=2",
                              "exceptions": report.exceptions})
    else:
        expected = [dict(e) for e in EXPECTED_EXCEPTIONS[family]]
        if report.exceptions != expected:
            witnesses.append({"check": "exceptional tuples",
                              "expected": expected,
                              "got": report.exceptions})

    if family == "H3":
        exc = [r for r in report.rows if r["verdict"] == "exception"]
        if not any(abs(r["lambda4"] + 1.0) <= 1e-9 for r in exc):
            witnesses.append({"check": "lambda4 = -1 at the H3 exception",
                              "rows": exc})
    if family == "K4":
        lam4 = report.rows[0]["eigenvalue"]["value"]
        if abs(lam4 + 1.0) > 1e-9:
            witnesses.append({"check": "lambda4(K4) = -1", "got": lam4})
    if family == "F4":
        by_a = {r["assignment"]["a"]: r for r in report.rows}
        s2 = eigenvalues_sym(
            forms.forbidden_template("F4").instantiate({"a": 2}))
        if abs(s2.nth(9) + 2.0) < 1e-6:
            witnesses.append({"check": "a=2 fails the -2 run",
                              "lambda9": s2.nth(9)})
        if by_a[2]["eigenvalue"]["index"] != 9:
            witnesses.append({"check": "a=2 inspected at lambda9",
                              "row": by_a[2]})
        s3 = eigenvalues_sym(
            forms.forbidden_template("F4").instantiate({"a": 3}))
        if abs(s3.nth(2)) > 1e-9:
            witnesses.append({"check": "a=3 gives lambda2 = 0",
                              "lambda2": s3.nth(2)})
        if by_a[3]["eigenvalue"]["index"] != 2:
            witnesses.append({"check": "a=3 inspected at lambda2",
                              "row": by_a[3]})

    return _result(f"case:{family}", witnesses, report.to_json_dict())


# ---------------------------------------------------------------------------
# hat determinants

def verify_hats(k: int, ref_p=None, ref_q=None,
                matrix_builder=None) -> VerificationResult:
    """Symbolic determinant of the k-hat matrix against the reference p_k,
    its exact (-L-2)-divisibility down to q_k, the k=1 evaluation at -2,
    and the constant-term reduction to a'+b' = -4."""
    if not 1 <= k <= 5:
        raise ValueError("k in 1..5")
    ref_p = ref_p or forms.appendix_p
    ref_q = ref_q or forms.appendix_q
    matrix_builder = matrix_builder or forms.hat_matrix
    witnesses = []
    lam = MPoly.var("L")
    neg = -lam - 2

    det = bareiss_det(matrix_builder(k))
    pk = ref_p(k)
    if det != pk:
        diff = {exp: (det.terms.get(exp, 0), pk.terms.get(exp, 0))
                for exp in set(det.terms) | set(pk.terms)
                if det.terms.get(exp, 0) != pk.terms.get(exp, 0)}
        witnesses.append({"check": f"det(hat matrix {k}) == p{k}",
                          "term_diffs": {str(e): list(v)
                                         for e, v in sorted(diff.items())[:5]}})

    if k == 1:
        at_minus2 = pk.substitute("L", -2)
        target = 28 * MPoly.var("a'") * MPoly.var("b'") * MPoly.var("c'")
        if at_minus2 != target:
            witnesses.append({"check": "p1(-2) = 28*a'*b'*c'",
                              "got": at_minus2.text()})
        reduced_src = pk.substitute("c'", 0)
        divisor = neg
        exponent = 1
    else:
        reduced_src = pk
        divisor = neg ** (k - 1)
        exponent = k - 1
    try:
        quotient = reduced_src.divexact(divisor)
        if quotient != ref_q(k):
            witnesses.append({"check": f"p{k} / (-L-2)^{exponent} == q{k}",
                              "got": quotient.text(),
                              "expected": ref_q(k).text()})
    except ExactDivisionError:
        witnesses.append(
            {"check": f"p{k} divisible by (-L-2)^{exponent}",
             "result": "remainder nonzero"})

    # vertex-count identity a+b = a'+b'+k-1, then
    # const(q_k) = const(p_ab) = 16 + 8(a+b) must force a'+b' = -4
    ap, bp = MPoly.var("a'"), MPoly.var("b'")
    const_q = ref_q(k).coeff_of("L", 0)
    equation = const_q - (16 + 8 * (ap + bp + (k - 1)))
    alpha = equation.coeff_of("a'", 1)
    reduced = equation - (alpha.constant_term() * (ap + bp + 4)
                          if not alpha.is_zero() else MPoly())
    if alpha.is_zero() or alpha.variables() or not reduced.is_zero():
        witnesses.append({"check": "constant terms force a'+b' = -4",
                          "equation": equation.text()})
    return _result(f"hats:{k}", witnesses,
                   {"p_terms": len(ref_p(k).terms),
                    "p1_at_minus2": "28*a'*b'*c'" if k == 1 else None})


# ---------------------------------------------------------------------------
# sum/product determination

def verify_theorem31(max_ab: int = 8) -> VerificationResult:
    """(a+b, a*b) is injective on unordered pairs, and the full expanded
    charpolys are pairwise distinct as exact coefficient vectors."""
    if max_ab < 2:
        raise ValueError("max_ab must be >= 2")
    witnesses = []
    pairs = [(a, b) for a in range(1, max_ab + 1)
             for b in range(a, max_ab + 1)]
    seen_sig: dict[tuple[int, int], tuple[int, int]] = {}
    for a, b in pairs:
        sig = (a + b, a * b)
        if sig in seen_sig:
            witnesses.append({"check": "(sum, product) injective",
                              "pairs": [seen_sig[sig], (a, b)]})
        seen_sig[sig] = (a, b)
    seen_poly: dict[tuple[int, ...], tuple[int, int]] = {}
    for a, b in pairs:
        coeffs = forms.tab_charpoly_expanded(a, b).coeffs
        if coeffs in seen_poly:
            witnesses.append({"check": "expanded charpolys distinct",
                              "pairs": [seen_poly[coeffs], (a, b)]})
        seen_poly[coeffs] = (a, b)
    return _result("theorem31", witnesses, {"unordered_pairs": len(pairs)})


# ---------------------------------------------------------------------------
# f/g root intervals and the T(c,c) factorization

_F_ENDPOINTS = (Fraction(-17304, 10000), Fraction(-15774, 10000),
                Fraction(-5578, 10000), Fraction(-4226, 10000),
                Fraction(82882, 10000))


def _cubic_roots(p: IntPoly) -> list[float]:
    """Real roots located by an integer scan for exact sign changes, then
    bisection; assumes all roots real and separated by more than 1 (true
    for the f cubics)."""
    bound = 1 + max(abs(c) for c in p.coeffs)
    xs = []
    prev_x, prev_s = -bound, sign_at_rational(p, -bound)
    x = -bound
    while x <= bound:
        x += 1
        s = sign_at_rational(p, x)
        if s == 0:
            xs.append(float(x))
            prev_x, prev_s = x, s
            continue
        if prev_s != 0 and s != prev_s:
            a, b = float(prev_x), float(x)
            for _ in range(200):
                mid = (a + b) / 2
                fm = p(mid)
                if fm == 0:
                    break
                if (fm > 0) == (p(a) > 0):
                    a = mid
                else:
                    b = mid
            xs.append((a + b) / 2)
        prev_x, prev_s = x, s
    return sorted(xs)


def verify_fg_roots(max_c: int = 100) -> VerificationResult:
    """One f-root per printed interval certified by exact sign changes
    (c >= 2), the c=1 base case at 5e-5, radical-root bounds for g, and the
    T(c,c) factorization identity for c = 1..6."""
    if max_c < 1:
        raise ValueError("max_c must be >= 1")
    witnesses = []

    # c = 1: the printed endpoints are 4-decimal truncations of the roots
    # themselves, so certify by root proximity plus a sign change on a
    # widened first interval (the true root sits ~1.9e-5 left of -1.7304)
    f1 = forms.f_poly(1)
    roots = _cubic_roots(f1)
    for root, ref in zip(roots, (-1.7304, -0.5578, 8.2882)):
        if abs(root - ref) > PAPER_TOL:
            witnesses.append({"check": "c=1 root proximity",
                              "root": root, "reference": ref})
    c1_signs = [
        ("f1(-1.7305) > 0",
         sign_at_rational(f1, Fraction(-17305, 10000)) == 1),
        ("f1(-1.5774) < 0",
         sign_at_rational(f1, Fraction(-15774, 10000)) == -1),
        ("f1(-0.5578) < 0", sign_at_rational(f1, _F_ENDPOINTS[2]) == -1),
        ("f1(-0.4226) > 0", sign_at_rational(f1, _F_ENDPOINTS[3]) == 1),
        ("f1(8.2882) > 0", sign_at_rational(f1, _F_ENDPOINTS[4]) == 1),
    ]
    for name, ok in c1_signs:
        if not ok:
            witnesses.append({"check": name, "c": 1})

    for c in range(2, max_c + 1):
        f = forms.f_poly(c)
        signs = [sign_at_rational(f, e) for e in _F_ENDPOINTS]
        # +,-,-,+,+ with leading coefficient -1 puts exactly one root in
        # each of [-1.7304,-1.5774), [-0.5578,-0.4226), [8.2882, inf)
        if signs != [1, -1, -1, 1, 1]:
            witnesses.append({"check": "exact sign pattern", "c": c,
                              "signs": signs})

    for c in range(1, max_c + 1):
        rad = math.sqrt(c * c + 4 * c)
        lo, hi = -(c + 2) - rad, -(c + 2) + rad
        if lo > -5.2361 + PAPER_TOL:
            witnesses.append({"check": "g lower root <= -5.2361",
                              "c": c, "root": lo})
        if not (-0.7639 - PAPER_TOL <= hi < 0):
            witnesses.append({"check": "g upper root in [-0.7639, 0)",
                              "c": c, "root": hi})

    # factorization: (-L-2)^(2c-2) * g * f == charpoly(D(T(c,c))), and the
    # symbolic quintic identity g*f == p_{c,c}
    fg = forms.g_poly_sym() * forms.f_poly_sym()
    if fg != forms.p_cc_sym():
        witnesses.append({"check": "g*f == p_cc symbolically",
                          "got": fg.text()})
    for c in range(1, 7):
        quintic = (forms.g_poly(c) * forms.f_poly(c))
        closed = IntPoly([-2, -1]) ** (2 * c - 2) * quintic
        derived = charpoly_exact(distance_matrix(named_graph("T", c, c)))
        if closed != derived:
            witnesses.append({"check": "T(c,c) factorization", "c": c})
    return _result("fg-roots", witnesses, {"max_c": max_c})


# ---------------------------------------------------------------------------
# aggregate

VERIFIER_IDS = ("lemma22", "interlacing", "cycles",
                *(f"case:{f}" for f in forms.CASE_FAMILIES),
                *(f"hats:{k}" for k in range(1, 6)),
                "theorem31", "fg-roots")


def run_verifier(lemma_id: str, max_ab: int = 8, max_n: int = 12,
                 max_c: int = 100) -> VerificationResult:
    if lemma_id == "lemma22":
        return verify_lemma22(max_ab)
    if lemma_id == "interlacing":
        return verify_interlacing_bounds(max_ab)
    if lemma_id == "cycles":
        return verify_cycle_lemmas(max_n)
    if lemma_id.startswith("case:"):
        family = lemma_id.split(":", 1)[1]
        if family not in forms.CASE_FAMILIES:
            raise ValueError(f"unknown case family {family!r}")
        return verify_case(family)
    if lemma_id.startswith("hats:"):
        return verify_hats(int(lemma_id.split(":", 1)[1]))
    if lemma_id == "theorem31":
        return verify_theorem31(max_ab)
    if lemma_id == "fg-roots":
        return verify_fg_roots(max_c)
    raise ValueError(f"unknown lemma id {lemma_id!r}")
